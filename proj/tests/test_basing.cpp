#include "milnorkit/basing.hpp"

#include "doctest.h"

#include <string>

using namespace milnorkit;

namespace {

LinkDiagram hopf() { return parse_braid("s1 s1", 2); }
LinkDiagram borromean() { return parse_braid("s1 s2^-1 s1 s2^-1 s1 s2^-1", 3); }
LinkDiagram whitehead() { return parse_braid("s1 s2^-1 s1 s2^-1 s1", 3); }
LinkDiagram unlink(int m) { return parse_braid("", m); }

} // namespace

TEST_SUITE_BEGIN("basing");

TEST_CASE("max basing relative to the unlink") {
    const BasingReport h = max_basing_rel_unlink(hopf(), 6, "hopf");
    CHECK(h.max_basing == 1);
    CHECK_FALSE(h.capped);
    REQUIRE(h.obstruction);
    CHECK(*h.obstruction == MultiIndex{1, 2});

    const BasingReport b = max_basing_rel_unlink(borromean(), 6, "borromean");
    CHECK(b.max_basing == 2);
    REQUIRE(b.obstruction);
    CHECK(*b.obstruction == MultiIndex{1, 2, 3});

    const BasingReport w = max_basing_rel_unlink(whitehead(), 6, "whitehead");
    CHECK(w.max_basing == 3);

    const BasingReport u = max_basing_rel_unlink(unlink(3), 8, "unlink3");
    CHECK(u.capped);
    CHECK(u.max_basing == 8);
    CHECK_FALSE(u.obstruction);

    CHECK_THROWS_AS(max_basing_rel_unlink(hopf(), 1), DegreeOverflow);
}

TEST_CASE("free quotient depth") {
    CHECK(free_quotient_depth(hopf(), 6).depth == 2);
    CHECK(free_quotient_depth(borromean(), 6).depth == 3);
    const DepthReport u = free_quotient_depth(unlink(2), 8);
    CHECK(u.capped);
    CHECK(u.to_string() == ">=8");
}

TEST_CASE("depth equals max basing plus one when finite") {
    for (const char* braid : {"s1 s1", "s1 s2^-1 s1 s2^-1 s1 s2^-1", "s1 s2^-1 s1 s2^-1 s1"}) {
        const LinkDiagram d = parse_braid(braid, 3);
        const BasingReport basing = max_basing_rel_unlink(d, 6, braid);
        const DepthReport depth = free_quotient_depth(d, 6);
        if (!basing.capped && !depth.capped) CHECK(depth.depth == basing.max_basing + 1);
    }
}

TEST_CASE("relative max basing") {
    const BasingReport uu = relative_max_basing(unlink(3), unlink(3), 8);
    CHECK(uu.capped);
    CHECK(uu.hypothesis_met);

    const BasingReport bu = relative_max_basing(borromean(), unlink(3), 6);
    CHECK(bu.max_basing == 2);
    REQUIRE(bu.obstruction);
    CHECK(*bu.obstruction == MultiIndex{1, 2, 3});
    CHECK(bu.hypothesis_met);

    const BasingReport hu = relative_max_basing(hopf(), unlink(2), 6);
    CHECK(hu.max_basing == 1);
    REQUIRE(hu.obstruction);
    CHECK(*hu.obstruction == MultiIndex{1, 2});

    CHECK_THROWS_AS(relative_max_basing(hopf(), unlink(3), 6), ComponentMismatch);
}

TEST_CASE("relative basing is reflexive and symmetric") {
    const LinkDiagram links[] = {hopf(), borromean(), whitehead()};
    for (const LinkDiagram& d : links) {
        const BasingReport self = relative_max_basing(d, d, 5);
        CHECK(self.capped);
    }
    const BasingReport ab = relative_max_basing(borromean(), unlink(3), 5);
    const BasingReport ba = relative_max_basing(unlink(3), borromean(), 5);
    CHECK(ab.max_basing == ba.max_basing);
    CHECK(ab.capped == ba.capped);
}

TEST_CASE("relative basing flags an unmet hypothesis") {
    // two hopf diagrams: tables agree everywhere but never vanish
    const BasingReport hh = relative_max_basing(hopf(), parse_braid("s1 s1 s1 s1^-1", 2), 4);
    CHECK(hh.capped);
    CHECK_FALSE(hh.hypothesis_met);
}

TEST_CASE("mu_n_equal") {
    CHECK(mu_n_equal(whitehead(), unlink(2), 2));
    CHECK_FALSE(mu_n_equal(borromean(), unlink(3), 2));
    CHECK_THROWS_WITH_AS(mu_n_equal(hopf(), unlink(2), 2), doctest::Contains("12"),
                         HypothesisUnmet);
    CHECK_THROWS_AS(mu_n_equal(hopf(), unlink(3), 2), ComponentMismatch);
    CHECK_THROWS_AS(mu_n_equal(hopf(), unlink(2), 1), DegreeOverflow);
}

TEST_CASE("mu_n_equal is consistent with max basing") {
    // mu_n_equal(a, unlink, n) holds iff max_basing_rel_unlink(a) >= n+1
    const LinkDiagram links[] = {borromean(), whitehead(), unlink(3)};
    for (const LinkDiagram& d : links) {
        const BasingReport basing = max_basing_rel_unlink(d, 6, "x");
        for (int n = 2; n <= 4; ++n) {
            if (basing.max_basing < n && !basing.capped) {
                CHECK_THROWS_AS(mu_n_equal(d, unlink(d.component_count()), n),
                                HypothesisUnmet);
            } else {
                const bool equal = mu_n_equal(d, unlink(d.component_count()), n);
                const bool deep = basing.capped || basing.max_basing >= n + 1;
                CHECK(equal == deep);
            }
        }
    }
}

TEST_CASE("report json") {
    const BasingReport b = max_basing_rel_unlink(borromean(), 6, "borromean");
    const std::string json = b.to_json(3);
    CHECK(json.find("\"max_basing\":2") != std::string::npos);
    CHECK(json.find("\"capped\":false") != std::string::npos);
    CHECK(json.find("\"obstruction\":\"123\"") != std::string::npos);
    CHECK(json.find("\"links\":[\"borromean\"]") != std::string::npos);

    const BasingReport u = max_basing_rel_unlink(unlink(2), 4, "unlink2");
    const std::string capped = u.to_json(2);
    CHECK(capped.find("\"capped\":true") != std::string::npos);
    CHECK(capped.find("obstruction") == std::string::npos);
}

TEST_SUITE_END();
