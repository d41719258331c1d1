#include "milnorkit/words.hpp"

#include "doctest.h"

#include <cstdlib>
#include <vector>

using namespace milnorkit;

namespace {

// Small deterministic generator for property checks.
struct Rng {
    unsigned long long state;
    explicit Rng(unsigned long long seed) : state(seed) {}
    unsigned long long next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    int range(int lo, int hi) { // inclusive
        return lo + static_cast<int>(next() % static_cast<unsigned long long>(hi - lo + 1));
    }
};

FreeWord random_word(Rng& rng, int rank, int max_len) {
    std::vector<int> letters;
    const int len = rng.range(0, max_len);
    for (int i = 0; i < len; ++i) {
        int g = rng.range(1, rank);
        letters.push_back(rng.range(0, 1) ? g : -g);
    }
    return FreeWord(rank, letters);
}

} // namespace

TEST_SUITE_BEGIN("words");

TEST_CASE("reduction") {
    CHECK(FreeWord(2, {1, -1}).empty());
    CHECK(FreeWord(2, {1, 2, -2, 1}) == FreeWord(2, {1, 1}));
    CHECK(FreeWord(2, {1, 2}) == FreeWord(2, {1, 2}));
    // nested cancellation
    CHECK(FreeWord(2, {1, 2, -2, -1}).empty());
}

TEST_CASE("out-of-range generators") {
    CHECK_THROWS_AS(FreeWord(2, {3}), IndexError);
    CHECK_THROWS_AS(FreeWord(1, {-2}), IndexError);
    CHECK_THROWS_AS(parse_word("x9", 3), IndexError);
}

TEST_CASE("commutator convention") {
    const FreeWord x1(2, {1});
    const FreeWord x2(2, {2});
    CHECK(commutator(x1, x2) == FreeWord(2, {1, 2, -1, -2}));
    CHECK(commutator(x1, x1).empty());
    CHECK(commutator(FreeWord(2), x2).empty());
    CHECK_THROWS_AS(commutator(FreeWord(2, {1}), FreeWord(3, {1})), RankMismatch);
}

TEST_CASE("text round trip") {
    const FreeWord w(3, {1, -2, 1});
    CHECK(to_string(w) == "x1 x2^-1 x1");
    CHECK(parse_word(to_string(w), 3) == w);
    CHECK(to_string(FreeWord(2)) == "1");
    CHECK_THROWS_AS(parse_word("y1", 2), ParseError);
    CHECK_THROWS_AS(parse_word("x1^2", 2), ParseError);
}

TEST_CASE("properties: reduce is idempotent, inverse cancels") {
    Rng rng(0x5eed0001ULL);
    for (int trial = 0; trial < 300; ++trial) {
        const FreeWord w = random_word(rng, 3, 14);
        CHECK(FreeWord(w.rank(), w.letters()) == w); // already reduced
        CHECK(concat(w, inverse(w)).empty());
        CHECK(concat(inverse(w), w).empty());
        const FreeWord v = random_word(rng, 3, 14);
        CHECK(concat(w, v).length() <= w.length() + v.length());
    }
}

TEST_CASE("exponent sums") {
    const FreeWord w(3, {1, 1, -2, 3, -1});
    const auto sums = w.exponent_sums();
    CHECK(sums == std::vector<long long>{1, -1, 1});
    CHECK(commutator(FreeWord(2, {1}), FreeWord(2, {2})).exponent_sums() ==
          std::vector<long long>{0, 0});
}

TEST_SUITE_END();
