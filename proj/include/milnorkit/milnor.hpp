#pragma once

#include "milnorkit/config.hpp"
#include "milnorkit/diagram.hpp"
#include "milnorkit/magnus.hpp"
#include "milnorkit/wirtinger.hpp"

#include <map>
#include <string>
#include <vector>

namespace milnorkit {

// Multi-index over components, 1-based entries, length >= 2.
using MultiIndex = std::vector<int>;

std::string multi_index_key(const MultiIndex& index, int component_count);

// Longitudes rewritten in meridian variables modulo pi_n: one series per
// component, rank = component count, degree bound n-1, constant term 1.
struct ReducedLongitudes {
    int component_count = 0;
    int length_bound = 0; // the n the reduction was run for
    std::vector<MagnusSeries> series;
};

// Milnor's iterative rewriting. Stage 1 sends every arc generator to its
// component's meridian series; stage q+1 re-evaluates each generator's
// conjugating chain with stage-q series. Series composition throughout, never
// word substitution. After n-1 stages all degrees < n are exact; this is
// verified by one extra stage (NonConvergence if it still moves).
ReducedLongitudes reduce_longitudes(const GroupPresentation& p, int n,
                                    const Limits& limits = default_limits());

// Magnus coefficient of X_{i1}...X_{i(k-1)} in the reduced longitude of
// component i_k, for I = (i1,...,ik).
long long mu(const ReducedLongitudes& rl, const MultiIndex& index);

struct TableEntry {
    long long mu = 0;
    long long delta = 0;
    long long mu_bar = 0;
};

struct MilnorTable {
    std::string diagram_hash;
    int component_count = 0;
    int length_bound = 0;
    std::map<MultiIndex, TableEntry> entries;

    const TableEntry& at(const MultiIndex& index) const;

    // Least length with a nonzero mu_bar, or 0 when the whole table vanishes.
    int first_nonvanishing_length() const;
    // Lexicographically least index of that length with nonzero mu_bar.
    MultiIndex first_obstruction() const;

    // Canonical JSON: {"entries":{...},"hash":"...","n":...}, keys sorted,
    // no whitespace.
    std::string to_json() const;
    // Human-readable columns; no stability promise.
    std::string to_text() const;
};

// gcd of mu(J) over subsequences J of I (at least one index deleted) and
// their cyclic rotations; 0 when that set is empty or all zero.
long long delta_from(const std::map<MultiIndex, TableEntry>& shorter, const MultiIndex& index);

// mu when delta = 0, otherwise mu normalized into [0, delta).
long long mu_bar(long long mu, long long delta);

// Full (mu, delta, mu_bar) table for every multi-index of length 2..n.
MilnorTable table(const LinkDiagram& d, int n, const Limits& limits = default_limits());

} // namespace milnorkit
