#pragma once

#include "milnorkit/errors.hpp"

#include <string>
#include <vector>

namespace milnorkit {

// Freely reduced word in the free group F(m). Letters are signed generator
// indices: +g means x_g, -g means x_g^-1, with 1 <= g <= rank. The constructor
// reduces, so every FreeWord in circulation is in canonical form.
class FreeWord {
public:
    FreeWord() : rank_(1) {}
    explicit FreeWord(int rank) : rank_(check_rank(rank)) {}
    FreeWord(int rank, std::vector<int> letters);

    int rank() const { return rank_; }
    const std::vector<int>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    std::size_t length() const { return letters_.size(); }

    bool operator==(const FreeWord& other) const {
        return rank_ == other.rank_ && letters_ == other.letters_;
    }
    bool operator!=(const FreeWord& other) const { return !(*this == other); }

    // Signed exponent sum per generator (abelianization), index 0 <-> x_1.
    std::vector<long long> exponent_sums() const;

private:
    static int check_rank(int rank) {
        if (rank < 1) throw IndexError("free group rank must be >= 1");
        return rank;
    }

    int rank_;
    std::vector<int> letters_;
};

FreeWord reduce(int rank, const std::vector<int>& letters);
FreeWord concat(const FreeWord& a, const FreeWord& b);
FreeWord inverse(const FreeWord& w);
FreeWord power(const FreeWord& w, long long e);

// [a, b] = a b a^-1 b^-1, the project-wide commutator convention.
FreeWord commutator(const FreeWord& a, const FreeWord& b);

// Text form: "x1 x2^-1 x1"; the empty word prints as "1".
std::string to_string(const FreeWord& w);
FreeWord parse_word(const std::string& text, int rank);

} // namespace milnorkit
