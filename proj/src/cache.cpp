#include "milnorkit/cache.hpp"

#include "milnorkit/config.hpp"
#include "milnorkit/errors.hpp"
#include "milnorkit/sha256.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace milnorkit {

namespace fs = std::filesystem;

ResultCache::ResultCache(std::string directory) : directory_(std::move(directory)) {
    std::error_code ec;
    fs::create_directories(directory_, ec);
    if (ec) throw Error("cannot create cache directory " + directory_ + ": " + ec.message());
}

std::string ResultCache::key_for(const LinkDiagram& d, int degree) {
    Sha256 h;
    h.update(d.canonical_bytes());
    h.update("\ndegree=" + std::to_string(degree));
    h.update("\nversion=" + std::string(kToolVersion));
    return h.hex_digest();
}

std::optional<std::string> ResultCache::load(const std::string& key) const {
    return read_file((fs::path(directory_) / (key + ".json")).string());
}

void ResultCache::store(const std::string& key, const std::string& payload) const {
    write_file_atomic((fs::path(directory_) / (key + ".json")).string(), payload);
}

void write_file_atomic(const std::string& path, const std::string& payload) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write " + tmp);
        out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
        if (!out) throw Error("short write to " + tmp);
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        std::remove(tmp.c_str());
        throw Error("cannot rename " + tmp + " to " + path + ": " + ec.message());
    }
}

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace milnorkit
