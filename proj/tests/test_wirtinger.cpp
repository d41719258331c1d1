#include "milnorkit/wirtinger.hpp"

#include "doctest.h"

#include <string>

using namespace milnorkit;

TEST_SUITE_BEGIN("wirtinger");

TEST_CASE("hopf presentation") {
    const LinkDiagram d = parse_braid("s1 s1", 2);
    const GroupPresentation p = presentation(d);
    CHECK(p.generator_count == 4);
    CHECK(p.relators.size() == 2);
    CHECK(p.meridians.size() == 2);
    CHECK(p.meridians[0] == d.base_arc(0) + 1);
    CHECK(p.meridians[1] == d.base_arc(1) + 1);
    // each longitude of the hopf link is one over generator of the other component
    for (int c = 0; c < 2; ++c) {
        REQUIRE(p.longitudes[static_cast<std::size_t>(c)].length() == 1);
        const int letter = p.longitudes[static_cast<std::size_t>(c)].letters()[0];
        CHECK(letter > 0);
        CHECK(p.generator_component[static_cast<std::size_t>(letter - 1)] == 1 - c);
    }
}

TEST_CASE("unknot with no crossings") {
    const LinkDiagram d = parse_braid("", 1);
    const GroupPresentation p = presentation(d);
    CHECK(p.generator_count == 1);
    CHECK(p.relators.empty());
    CHECK(p.longitudes[0].empty());
}

TEST_CASE("relator count and abelianized relators") {
    for (const char* braid : {"s1 s1", "s1 s1 s1", "s1 s2^-1 s1 s2^-1 s1 s2^-1"}) {
        const LinkDiagram d = parse_braid(braid, 3);
        const GroupPresentation p = presentation(d);
        CHECK(p.relators.size() == d.crossings().size());
        // abelianizing the presentation identifies all arcs of one component
        for (const FreeWord& r : p.relators) {
            const auto sums = r.exponent_sums();
            std::vector<long long> per_component(
                static_cast<std::size_t>(d.component_count()), 0);
            for (int g = 1; g <= p.generator_count; ++g)
                per_component[static_cast<std::size_t>(
                    p.generator_component[static_cast<std::size_t>(g - 1)])] +=
                    sums[static_cast<std::size_t>(g - 1)];
            for (long long s : per_component) CHECK(s == 0);
        }
    }
}

TEST_CASE("writhe and the longitude correction") {
    // closure of s1^3: one component, three positive self-crossings
    const LinkDiagram trefoil = parse_braid("s1 s1 s1", 2);
    CHECK(trefoil.component_count() == 1);
    CHECK(writhe(trefoil, 0) == 3);
    const FreeWord lon = longitude(trefoil, 0);
    // three over letters followed by meridian^-3; exponent sums cancel
    long long total = 0;
    for (long long s : lon.exponent_sums()) total += s;
    CHECK(total == 0);

    const LinkDiagram mirror = parse_braid("s1^-1 s1^-1 s1^-1", 2);
    CHECK(writhe(mirror, 0) == -3);
}

TEST_CASE("abelianized longitudes reproduce the linking matrix") {
    for (const char* braid :
         {"s1 s1", "s1 s1 s1 s1^-1", "s1 s2^-1 s1 s2^-1 s1 s2^-1", "s1 s2^-1 s1 s2^-1 s1",
          "s1 s1 s2 s2 s1^-1 s2"}) {
        const LinkDiagram d = parse_braid(braid, 3);
        const GroupPresentation p = presentation(d);
        const LinkingMatrix lk = linking_matrix(d);
        for (int i = 0; i < d.component_count(); ++i) {
            const auto sums = p.longitudes[static_cast<std::size_t>(i)].exponent_sums();
            std::vector<long long> per_component(
                static_cast<std::size_t>(d.component_count()), 0);
            for (int g = 1; g <= p.generator_count; ++g)
                per_component[static_cast<std::size_t>(
                    p.generator_component[static_cast<std::size_t>(g - 1)])] +=
                    sums[static_cast<std::size_t>(g - 1)];
            for (int j = 0; j < d.component_count(); ++j)
                CHECK(per_component[static_cast<std::size_t>(j)] ==
                      lk[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        }
    }
}

TEST_CASE("conjugator chains start empty at base arcs") {
    const LinkDiagram d = parse_braid("s1 s2^-1 s1 s2^-1 s1", 3);
    const GroupPresentation p = presentation(d);
    for (int c = 0; c < d.component_count(); ++c)
        CHECK(p.conjugators[static_cast<std::size_t>(d.base_arc(c))].empty());
}

TEST_CASE("dump format") {
    const GroupPresentation p = presentation(parse_braid("s1 s1", 2));
    const std::string text = p.dump();
    CHECK(text.find("gens: 4") != std::string::npos);
    CHECK(text.find("rel: ") != std::string::npos);
    CHECK(text.find("mer[0]: g0") != std::string::npos);
    CHECK(text.find("lon[0]: ") != std::string::npos);
}

TEST_SUITE_END();
