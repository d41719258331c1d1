#include "milnorkit/words.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace milnorkit {

FreeWord::FreeWord(int rank, std::vector<int> letters) : rank_(check_rank(rank)) {
    letters_.reserve(letters.size());
    for (int letter : letters) {
        int g = std::abs(letter);
        if (g < 1 || g > rank_)
            throw IndexError("generator x" + std::to_string(g) + " out of range 1.." +
                             std::to_string(rank_));
        if (!letters_.empty() && letters_.back() == -letter)
            letters_.pop_back();
        else
            letters_.push_back(letter);
    }
}

std::vector<long long> FreeWord::exponent_sums() const {
    std::vector<long long> sums(static_cast<std::size_t>(rank_), 0);
    for (int letter : letters_)
        sums[static_cast<std::size_t>(std::abs(letter)) - 1] += letter > 0 ? 1 : -1;
    return sums;
}

FreeWord reduce(int rank, const std::vector<int>& letters) {
    return FreeWord(rank, letters);
}

FreeWord concat(const FreeWord& a, const FreeWord& b) {
    if (a.rank() != b.rank())
        throw RankMismatch("cannot concatenate words of rank " + std::to_string(a.rank()) +
                           " and " + std::to_string(b.rank()));
    std::vector<int> letters = a.letters();
    letters.insert(letters.end(), b.letters().begin(), b.letters().end());
    return FreeWord(a.rank(), std::move(letters));
}

FreeWord inverse(const FreeWord& w) {
    std::vector<int> letters(w.letters().rbegin(), w.letters().rend());
    for (int& letter : letters) letter = -letter;
    return FreeWord(w.rank(), std::move(letters));
}

FreeWord power(const FreeWord& w, long long e) {
    FreeWord base = e >= 0 ? w : inverse(w);
    long long count = e >= 0 ? e : -e;
    std::vector<int> letters;
    letters.reserve(base.letters().size() * static_cast<std::size_t>(count));
    for (long long i = 0; i < count; ++i)
        letters.insert(letters.end(), base.letters().begin(), base.letters().end());
    return FreeWord(w.rank(), std::move(letters));
}

FreeWord commutator(const FreeWord& a, const FreeWord& b) {
    if (a.rank() != b.rank())
        throw RankMismatch("commutator of words with ranks " + std::to_string(a.rank()) +
                           " and " + std::to_string(b.rank()));
    return concat(concat(a, b), concat(inverse(a), inverse(b)));
}

std::string to_string(const FreeWord& w) {
    if (w.empty()) return "1";
    std::ostringstream out;
    bool first = true;
    for (int letter : w.letters()) {
        if (!first) out << ' ';
        first = false;
        out << 'x' << std::abs(letter);
        if (letter < 0) out << "^-1";
    }
    return out.str();
}

FreeWord parse_word(const std::string& text, int rank) {
    std::istringstream in(text);
    std::vector<int> letters;
    std::string token;
    while (in >> token) {
        if (token == "1") continue;
        if (token.size() < 2 || token[0] != 'x')
            throw ParseError("bad word token '" + token + "'");
        std::size_t pos = 1;
        while (pos < token.size() && std::isdigit(static_cast<unsigned char>(token[pos]))) ++pos;
        if (pos == 1) throw ParseError("bad word token '" + token + "'");
        int g = std::stoi(token.substr(1, pos - 1));
        int sign = 1;
        if (pos != token.size()) {
            if (token.substr(pos) != "^-1")
                throw ParseError("bad word token '" + token + "'");
            sign = -1;
        }
        if (g < 1 || g > rank)
            throw IndexError("generator x" + std::to_string(g) + " out of range 1.." +
                             std::to_string(rank));
        letters.push_back(sign * g);
    }
    return FreeWord(rank, std::move(letters));
}

} // namespace milnorkit
