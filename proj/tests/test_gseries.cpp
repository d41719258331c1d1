#include "milnorkit/gseries.hpp"

#include "doctest.h"

#include <numeric>
#include <vector>

using namespace milnorkit;

namespace {

struct Rng {
    unsigned long long state;
    explicit Rng(unsigned long long seed) : state(seed) {}
    unsigned long long next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    int range(int lo, int hi) {
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

// x1 maps to the nontrivial element of C2, x2 to the identity.
FiniteQuotientMap c2_example() {
    return FiniteQuotientMap(2, {{1, 0}, {0, 1}});
}

// Cyclic group of order n with each generator sent to a chosen power.
FiniteQuotientMap cyclic_map(int rank, int order, const std::vector<int>& powers) {
    std::vector<std::vector<int>> images;
    for (int g = 0; g < rank; ++g) {
        std::vector<int> perm(static_cast<std::size_t>(order));
        for (int e = 0; e < order; ++e)
            perm[static_cast<std::size_t>(e)] =
                ((e + powers[static_cast<std::size_t>(g)]) % order + order) % order;
        images.push_back(perm);
    }
    return FiniteQuotientMap(rank, images);
}

} // namespace

TEST_SUITE_BEGIN("gseries");

TEST_CASE("quotient map validation") {
    CHECK_THROWS_AS(FiniteQuotientMap(2, {{1, 1}, {0, 1}}), ParseError);
    CHECK_THROWS_AS(FiniteQuotientMap(2, {{1, 0}}), ParseError);
    // both generators to the identity of C2: not surjective
    CHECK_THROWS_AS(FiniteQuotientMap(2, {{0, 1}, {0, 1}}), NotSurjective);
    Limits tight;
    tight.max_group_order = 3;
    CHECK_THROWS_AS(FiniteQuotientMap(1, {{1, 2, 3, 0}}, tight), DegreeOverflow);
}

TEST_CASE("json form") {
    const FiniteQuotientMap q =
        FiniteQuotientMap::from_json(R"({"order":2,"images":[[1,0],[0,1]]})");
    CHECK(q.order() == 2);
    CHECK(q.rank() == 2);
    CHECK(q.image_of(FreeWord(2, {1})) == 1);
    CHECK(q.image_of(FreeWord(2, {2})) == 0);
    CHECK(q.image_of(FreeWord(2, {1, 1})) == 0);
    CHECK_THROWS_AS(FiniteQuotientMap::from_json("{}"), ParseError);
    CHECK_THROWS_AS(FiniteQuotientMap::from_json("[1,2]"), ParseError);
}

TEST_CASE("schreier basis of the c2 example") {
    const SchreierData s = schreier_basis(c2_example());
    REQUIRE(s.basis_rank() == 3);
    CHECK(s.basis()[0] == FreeWord(2, {2}));           // x2
    CHECK(s.basis()[1] == FreeWord(2, {1, 1}));        // x1^2
    CHECK(s.basis()[2] == FreeWord(2, {1, 2, -1}));    // x1 x2 x1^-1
    CHECK(s.transversal(0).empty());
    CHECK(s.transversal(1) == FreeWord(2, {1}));
}

TEST_CASE("trivial quotient gives the generators back") {
    const FiniteQuotientMap q(3, {{0}, {0}, {0}});
    const SchreierData s = schreier_basis(q);
    REQUIRE(s.basis_rank() == 3);
    for (int g = 1; g <= 3; ++g)
        CHECK(s.basis()[static_cast<std::size_t>(g - 1)] == FreeWord(3, {g}));
}

TEST_CASE("rank-one cyclic quotient") {
    const SchreierData s = schreier_basis(cyclic_map(1, 3, {1}));
    REQUIRE(s.basis_rank() == 1);
    CHECK(s.basis()[0] == FreeWord(1, {1, 1, 1})); // x1^3
}

TEST_CASE("rewriting in the c2 example") {
    const SchreierData s = schreier_basis(c2_example());
    CHECK(s.rewrite(FreeWord(2, {1, 1})) == FreeWord(3, {2}));
    CHECK(s.rewrite(FreeWord(2)) == FreeWord(3));
    CHECK(s.rewrite(FreeWord(2, {2})) == FreeWord(3, {1}));
    CHECK_THROWS_WITH_AS(s.rewrite(FreeWord(2, {1})), doctest::Contains("element 1"),
                         NotInKernel);
}

TEST_CASE("nielsen-schreier rank for random cyclic quotients") {
    Rng rng(0x5eed0031ULL);
    for (int trial = 0; trial < 40; ++trial) {
        const int rank = rng.range(1, 3);
        const int order = rng.range(1, 6);
        std::vector<int> powers(static_cast<std::size_t>(rank));
        // ensure surjectivity: one generator maps to a unit of Z/order
        for (auto& p : powers) p = rng.range(0, order - 1);
        powers[static_cast<std::size_t>(rng.range(0, rank - 1))] = 1;
        const SchreierData s = schreier_basis(cyclic_map(rank, order, powers));
        CHECK(s.basis_rank() == 1 + order * (rank - 1));
    }
}

TEST_CASE("property: rewriting round-trips through the basis") {
    Rng rng(0x5eed0032ULL);
    const SchreierData tables[] = {schreier_basis(c2_example()),
                                   schreier_basis(cyclic_map(2, 3, {1, 2})),
                                   schreier_basis(cyclic_map(3, 4, {1, 2, 0}))};
    int checked = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const SchreierData& s = tables[trial % 3];
        const int rank = s.quotient().rank();
        FreeWord w = random_word(rng, rank, 10);
        // close up into the kernel with the coset representative
        w = concat(w, inverse(s.transversal(s.quotient().image_of(w))));
        const FreeWord rewritten = s.rewrite(w);
        CHECK(s.expand(rewritten) == w);
        ++checked;
    }
    CHECK(checked == 120);
}

TEST_CASE("gamma membership") {
    const SchreierData s = schreier_basis(c2_example());
    // commutator of two basis elements: in Gamma_2 but not Gamma_3
    const FreeWord c = commutator(FreeWord(2, {2}), FreeWord(2, {1, 1}));
    CHECK(gamma_n_member(s, c, 1));
    CHECK(gamma_n_member(s, c, 2));
    CHECK_FALSE(gamma_n_member(s, c, 3));

    CHECK(gamma_n_member(s, FreeWord(2, {2}), 1));
    CHECK_FALSE(gamma_n_member(s, FreeWord(2, {2}), 2));
    CHECK_THROWS_AS(gamma_n_member(s, FreeWord(2, {1}), 2), NotInKernel);
    CHECK_THROWS_AS(gamma_n_member(s, c, 99), DegreeOverflow);
}

TEST_CASE("property: gamma series is nested") {
    Rng rng(0x5eed0033ULL);
    const SchreierData s = schreier_basis(cyclic_map(2, 4, {1, 2}));
    for (int trial = 0; trial < 60; ++trial) {
        FreeWord w = random_word(rng, 2, 8);
        w = concat(w, inverse(s.transversal(s.quotient().image_of(w))));
        for (int k = 1; k <= 3; ++k)
            if (gamma_n_member(s, w, k + 1)) CHECK(gamma_n_member(s, w, k));
    }
}

TEST_SUITE_END();
