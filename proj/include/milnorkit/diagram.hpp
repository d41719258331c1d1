#pragma once

#include "milnorkit/errors.hpp"

#include <string>
#include <vector>

namespace milnorkit {

// One crossing of an oriented diagram. Arcs break at every strand passage,
// so over_in/over_out (and under_in/under_out) are consecutive arcs of the
// same component. sign is +1 for a right-handed crossing, -1 for left-handed;
// handedness is input data, never inferred.
struct Crossing {
    int over_in = 0;
    int over_out = 0;
    int under_in = 0;
    int under_out = 0;
    int sign = 1;
};

// Oriented ordered link diagram. Arc ids are canonicalized on construction to
// 0..A-1 in component order; the base arc of each component is its first
// listed arc. Immutable after construction.
class LinkDiagram {
public:
    LinkDiagram(std::vector<std::vector<int>> components, std::vector<Crossing> crossings);

    int component_count() const { return static_cast<int>(components_.size()); }
    int arc_count() const { return arc_count_; }
    const std::vector<std::vector<int>>& components() const { return components_; }
    const std::vector<Crossing>& crossings() const { return crossings_; }

    int component_of(int arc) const;
    int base_arc(int component) const;

    // Same link, with component i's cyclic arc sequence rotated so a new base
    // arc comes first. Used by the re-basing invariance checks.
    LinkDiagram with_rotated_base(int component, int steps) const;

    // Canonical byte form: keys sorted, no whitespace. This exact string is
    // the cache hash input.
    std::string canonical_bytes() const;

private:
    void validate() const;

    std::vector<std::vector<int>> components_;
    std::vector<Crossing> crossings_;
    std::vector<int> arc_component_;
    int arc_count_ = 0;
};

using LinkingMatrix = std::vector<std::vector<long long>>;

// Parse the PD JSON document described in the README. Arc ids in the input
// may be arbitrary distinct nonnegative integers.
LinkDiagram parse_pd(const std::string& text);

// Diagram of the closure of a braid word ("s1 s2^-1 ...") on `strands`
// strands. Components are ordered by the smallest strand position they touch.
LinkDiagram parse_braid(const std::string& word, int strands);

// Entry (i,j), i != j: half the signed count of crossings between components
// i and j. Symmetric with zero diagonal.
LinkingMatrix linking_matrix(const LinkDiagram& d);

} // namespace milnorkit
