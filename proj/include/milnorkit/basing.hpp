#pragma once

#include "milnorkit/milnor.hpp"

#include <optional>
#include <string>
#include <vector>

namespace milnorkit {

// Result of a maximal-basing search. max_basing is the largest n <= cap for
// which the relevant length <= n table data vanishes (absolute mode) or
// agrees (relative mode); capped reports mean nothing obstructed below cap.
struct BasingReport {
    std::vector<std::string> links; // subject id(s), as given by the caller
    int cap = 0;
    int max_basing = 0;
    bool capped = false;
    std::optional<MultiIndex> obstruction; // lex-least failing index, absent when capped
    bool relative = false;
    // Relative mode only: whether both lower tables vanish, i.e. whether the
    // agreement certifies a basing rather than mere table agreement.
    bool hypothesis_met = true;

    std::string to_json(int component_count) const;
};

// Largest n <= cap with all mu_bar of length <= n vanishing; by the
// basing/vanishing equivalence for links relative to the unlink.
BasingReport max_basing_rel_unlink(const LinkDiagram& d, int cap,
                                   const std::string& id = "link",
                                   const Limits& limits = default_limits());

// Largest k <= cap with pi/pi_k guaranteed free-nilpotent, i.e.
// max_basing + 1; the classical-case analogue of a relative Dwyer number.
struct DepthReport {
    int cap = 0;
    int depth = 0;
    bool capped = false;

    std::string to_string() const {
        return capped ? ">=" + std::to_string(cap) : std::to_string(depth);
    }
};

DepthReport free_quotient_depth(const LinkDiagram& d, int cap,
                                const Limits& limits = default_limits());

// Largest n <= cap with the two tables agreeing entrywise (mod the gcd of
// their deltas) through length n. When the lower tables do not vanish the
// report still states agreement but flags the basing hypothesis unmet.
BasingReport relative_max_basing(const LinkDiagram& a, const LinkDiagram& b, int cap,
                                 const std::string& id_a = "a",
                                 const std::string& id_b = "b",
                                 const Limits& limits = default_limits());

// True iff all length-(n+1) mu_bar entries of a and b agree. Requires both
// links to have vanishing mu_bar through length n (HypothesisUnmet names the
// first violating index otherwise), which forces delta = 0 at length n+1, so
// the comparison is exact.
bool mu_n_equal(const LinkDiagram& a, const LinkDiagram& b, int n,
                const Limits& limits = default_limits());

} // namespace milnorkit
