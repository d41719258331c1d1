#include "milnorkit/magnus.hpp"

#include <cstdlib>
#include <sstream>

namespace milnorkit {

MagnusSeries::MagnusSeries(int rank, int degree_bound)
    : rank_(rank), degree_bound_(degree_bound) {
    if (rank < 1) throw ShapeMismatch("series rank must be >= 1");
    if (degree_bound < 1) throw ShapeMismatch("series degree bound must be >= 1");
}

MagnusSeries MagnusSeries::one(int rank, int degree_bound) {
    return constant(rank, degree_bound, 1);
}

MagnusSeries MagnusSeries::constant(int rank, int degree_bound, long long c) {
    MagnusSeries s(rank, degree_bound);
    s.set_coefficient({}, c);
    return s;
}

long long MagnusSeries::coefficient(const Monomial& mono) const {
    auto it = coeffs_.find(mono);
    return it == coeffs_.end() ? 0 : it->second;
}

void MagnusSeries::set_coefficient(const Monomial& mono, long long value) {
    if (static_cast<int>(mono.size()) > degree_bound_)
        throw ShapeMismatch("monomial degree exceeds series bound");
    for (auto v : mono)
        if (v < 1 || v > rank_) throw ShapeMismatch("monomial variable out of range");
    if (value == 0)
        coeffs_.erase(mono);
    else
        coeffs_[mono] = value;
}

int MagnusSeries::min_positive_degree() const {
    for (const auto& [mono, c] : coeffs_)
        if (!mono.empty()) return static_cast<int>(mono.size());
    return 0;
}

bool MagnusSeries::operator==(const MagnusSeries& other) const {
    return rank_ == other.rank_ && degree_bound_ == other.degree_bound_ &&
           coeffs_ == other.coeffs_;
}

MagnusSeries MagnusSeries::truncated(int degree_bound) const {
    if (degree_bound > degree_bound_)
        throw ShapeMismatch("cannot raise a truncation bound");
    MagnusSeries out(rank_, degree_bound);
    for (const auto& [mono, c] : coeffs_)
        if (static_cast<int>(mono.size()) <= degree_bound) out.coeffs_[mono] = c;
    return out;
}

std::string MagnusSeries::monomial_key(const Monomial& mono) {
    if (mono.empty()) return "1";
    std::ostringstream out;
    bool first = true;
    for (auto v : mono) {
        if (!first) out << '.';
        first = false;
        out << 'X' << static_cast<int>(v);
    }
    return out.str();
}

std::string MagnusSeries::to_json() const {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (const auto& [mono, c] : coeffs_) {
        if (!first) out << ',';
        first = false;
        out << '"' << monomial_key(mono) << "\":" << c;
    }
    out << '}';
    return out.str();
}

MagnusSeries multiply(const MagnusSeries& a, const MagnusSeries& b) {
    if (a.rank() != b.rank() || a.degree_bound() != b.degree_bound())
        throw ShapeMismatch("series shapes differ: rank " + std::to_string(a.rank()) + "/" +
                            std::to_string(b.rank()) + ", degree " +
                            std::to_string(a.degree_bound()) + "/" +
                            std::to_string(b.degree_bound()));
    const int bound = a.degree_bound();
    MagnusSeries out(a.rank(), bound);
    for (const auto& [ma, ca] : a.coefficients()) {
        const int room = bound - static_cast<int>(ma.size());
        for (const auto& [mb, cb] : b.coefficients()) {
            if (static_cast<int>(mb.size()) > room) break; // graded order: rest is too long
            Monomial mono = ma;
            mono.insert(mono.end(), mb.begin(), mb.end());
            long long c = out.coefficient(mono) + ca * cb;
            out.set_coefficient(mono, c);
        }
    }
    return out;
}

MagnusSeries add(const MagnusSeries& a, const MagnusSeries& b) {
    if (a.rank() != b.rank() || a.degree_bound() != b.degree_bound())
        throw ShapeMismatch("series shapes differ");
    MagnusSeries out = a;
    for (const auto& [mono, c] : b.coefficients())
        out.set_coefficient(mono, out.coefficient(mono) + c);
    return out;
}

MagnusSeries invert(const MagnusSeries& a) {
    const long long c0 = a.constant_term();
    if (c0 != 1 && c0 != -1)
        throw NotAUnit("series constant term " + std::to_string(c0) + " is not a unit");
    // a = c0 (1 + M) with M of positive order, so a^-1 = c0 (1 - M + M^2 - ...).
    MagnusSeries m(a.rank(), a.degree_bound());
    for (const auto& [mono, c] : a.coefficients())
        if (!mono.empty()) m.set_coefficient(mono, c0 * c);
    MagnusSeries out = MagnusSeries::one(a.rank(), a.degree_bound());
    MagnusSeries power = MagnusSeries::one(a.rank(), a.degree_bound());
    for (int k = 1; k <= a.degree_bound(); ++k) {
        power = multiply(power, m);
        if (power.coefficients().empty()) break;
        if (k % 2 == 1) {
            MagnusSeries neg(a.rank(), a.degree_bound());
            for (const auto& [mono, c] : power.coefficients()) neg.set_coefficient(mono, -c);
            out = add(out, neg);
        } else {
            out = add(out, power);
        }
    }
    if (c0 == -1) {
        MagnusSeries neg(a.rank(), a.degree_bound());
        for (const auto& [mono, c] : out.coefficients()) neg.set_coefficient(mono, -c);
        out = neg;
    }
    return out;
}

namespace {

MagnusSeries generator_series(int rank, int bound, int letter) {
    MagnusSeries s = MagnusSeries::one(rank, bound);
    const auto var = static_cast<std::uint8_t>(std::abs(letter));
    if (letter > 0) {
        s.set_coefficient({var}, 1);
    } else {
        // truncated geometric series 1 - X + X^2 - ...
        Monomial mono;
        long long sign = -1;
        for (int k = 1; k <= bound; ++k) {
            mono.push_back(var);
            s.set_coefficient(mono, sign);
            sign = -sign;
        }
    }
    return s;
}

} // namespace

MagnusSeries expand(const FreeWord& w, int degree_bound, const Limits& limits) {
    check_degree(degree_bound, limits);
    MagnusSeries out = MagnusSeries::one(w.rank(), degree_bound);
    for (int letter : w.letters())
        out = multiply(out, generator_series(w.rank(), degree_bound, letter));
    return out;
}

LcsDegree lcs_degree(const FreeWord& w, int cap, const Limits& limits) {
    check_degree(cap, limits);
    MagnusSeries s = expand(w, cap, limits);
    const int k = s.min_positive_degree();
    if (k == 0 || k >= cap) return LcsDegree{cap, true};
    return LcsDegree{k, false};
}

} // namespace milnorkit
