#pragma once

#include "milnorkit/diagram.hpp"

#include <optional>
#include <string>

namespace milnorkit {

// Content-addressed result cache: one immutable file per key under a
// directory; writes are atomic (temporary file then rename). The key hashes
// the canonical diagram bytes, the degree bound and the tool version, so
// algorithm fixes invalidate stale tables.
class ResultCache {
public:
    explicit ResultCache(std::string directory);

    static std::string key_for(const LinkDiagram& d, int degree);

    std::optional<std::string> load(const std::string& key) const;
    void store(const std::string& key, const std::string& payload) const;

private:
    std::string directory_;
};

// Atomic file write helper, shared with the corpus runner.
void write_file_atomic(const std::string& path, const std::string& payload);
std::optional<std::string> read_file(const std::string& path);

} // namespace milnorkit
