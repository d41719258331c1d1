#pragma once

#include "milnorkit/config.hpp"
#include "milnorkit/errors.hpp"
#include "milnorkit/words.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace milnorkit {

// Noncommutative monomial X_{i1}...X_{ik}, variable indices 1-based.
using Monomial = std::vector<std::uint8_t>;

// Graded ordering: degree first, then lexicographic. Gives a canonical
// iteration (and JSON key) order for series.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

// Integer noncommutative power series truncated above degree_bound.
// Zero coefficients are never stored.
class MagnusSeries {
public:
    using CoeffMap = std::map<Monomial, long long, MonomialOrder>;

    MagnusSeries(int rank, int degree_bound);

    static MagnusSeries one(int rank, int degree_bound);
    static MagnusSeries constant(int rank, int degree_bound, long long c);

    int rank() const { return rank_; }
    int degree_bound() const { return degree_bound_; }
    const CoeffMap& coefficients() const { return coeffs_; }

    long long coefficient(const Monomial& mono) const;
    long long constant_term() const { return coefficient({}); }
    void set_coefficient(const Monomial& mono, long long value);

    // Least degree in 1..degree_bound with a nonzero coefficient; 0 if none.
    int min_positive_degree() const;

    bool operator==(const MagnusSeries& other) const;
    bool operator!=(const MagnusSeries& other) const { return !(*this == other); }

    // Truncated copy at a (not larger) degree bound.
    MagnusSeries truncated(int degree_bound) const;

    // Text form of a monomial: "X1.X2.X1"; the empty monomial is "1".
    static std::string monomial_key(const Monomial& mono);
    // Canonical JSON object {"1":c0,"X1":c1,...} in graded key order.
    std::string to_json() const;

private:
    int rank_;
    int degree_bound_;
    CoeffMap coeffs_;
};

MagnusSeries multiply(const MagnusSeries& a, const MagnusSeries& b);
MagnusSeries add(const MagnusSeries& a, const MagnusSeries& b);
MagnusSeries invert(const MagnusSeries& a);

// Magnus embedding x_i -> 1 + X_i, x_i^-1 -> 1 - X_i + X_i^2 - ...
MagnusSeries expand(const FreeWord& w, int degree_bound,
                    const Limits& limits = default_limits());

// Least k >= 1 such that expand(w) has a nonzero degree-k term, i.e.
// w lies in F_k \ F_{k+1}. Degrees are examined strictly below cap;
// if they all vanish the result is reported as ">=cap".
struct LcsDegree {
    int value = 0;   // the degree, or cap when capped
    bool capped = false;

    bool at_least(int k) const { return capped || value >= k; }
    std::string to_string() const {
        return capped ? ">=" + std::to_string(value) : std::to_string(value);
    }
};

LcsDegree lcs_degree(const FreeWord& w, int cap,
                     const Limits& limits = default_limits());

} // namespace milnorkit
