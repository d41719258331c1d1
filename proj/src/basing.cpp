#include "milnorkit/basing.hpp"

#include <numeric>
#include <sstream>

namespace milnorkit {

namespace {

void check_cap(int cap) {
    if (cap < 2) throw DegreeOverflow("basing cap must be >= 2");
}

// mu_bar values agree modulo the gcd of the two deltas; gcd 0 means exact.
bool entries_agree(const TableEntry& x, const TableEntry& y) {
    const long long g = std::gcd(x.delta, y.delta);
    if (g == 0) return x.mu_bar == y.mu_bar;
    return (x.mu_bar - y.mu_bar) % g == 0;
}

} // namespace

std::string BasingReport::to_json(int component_count) const {
    std::ostringstream out;
    out << "{\"capped\":" << (capped ? "true" : "false");
    if (relative)
        out << ",\"hypothesis_met\":" << (hypothesis_met ? "true" : "false");
    out << ",\"links\":[";
    for (std::size_t i = 0; i < links.size(); ++i) {
        if (i) out << ',';
        out << '"' << links[i] << '"';
    }
    out << "],\"max_basing\":" << max_basing;
    if (obstruction)
        out << ",\"obstruction\":\"" << multi_index_key(*obstruction, component_count)
            << '"';
    out << '}';
    return out.str();
}

BasingReport max_basing_rel_unlink(const LinkDiagram& d, int cap, const std::string& id,
                                   const Limits& limits) {
    check_cap(cap);
    const MilnorTable t = table(d, cap, limits);

    BasingReport report;
    report.links = {id};
    report.cap = cap;
    const int first = t.first_nonvanishing_length();
    if (first == 0) {
        report.max_basing = cap;
        report.capped = true;
    } else {
        report.max_basing = first - 1;
        report.obstruction = t.first_obstruction();
    }
    return report;
}

DepthReport free_quotient_depth(const LinkDiagram& d, int cap, const Limits& limits) {
    const BasingReport basing = max_basing_rel_unlink(d, cap, "link", limits);
    DepthReport depth;
    depth.cap = cap;
    if (basing.capped) {
        depth.depth = cap;
        depth.capped = true;
    } else {
        depth.depth = basing.max_basing + 1;
        depth.capped = depth.depth >= cap;
    }
    return depth;
}

BasingReport relative_max_basing(const LinkDiagram& a, const LinkDiagram& b, int cap,
                                 const std::string& id_a, const std::string& id_b,
                                 const Limits& limits) {
    check_cap(cap);
    if (a.component_count() != b.component_count())
        throw ComponentMismatch("links have " + std::to_string(a.component_count()) +
                                " and " + std::to_string(b.component_count()) +
                                " components");
    const MilnorTable ta = table(a, cap, limits);
    const MilnorTable tb = table(b, cap, limits);

    BasingReport report;
    report.links = {id_a, id_b};
    report.cap = cap;
    report.relative = true;

    int min_bad_length = 0;
    for (const auto& [index, ea] : ta.entries) {
        if (entries_agree(ea, tb.at(index))) continue;
        const int len = static_cast<int>(index.size());
        if (min_bad_length == 0 || len < min_bad_length) min_bad_length = len;
    }
    if (min_bad_length == 0) {
        report.max_basing = cap;
        report.capped = true;
    } else {
        report.max_basing = min_bad_length - 1;
        // Among indices of one length, map order is lexicographic.
        for (const auto& [index, ea] : ta.entries)
            if (static_cast<int>(index.size()) == min_bad_length &&
                !entries_agree(ea, tb.at(index))) {
                report.obstruction = index;
                break;
            }
    }

    // The relative basing lemma needs both links' lower invariants to vanish.
    report.hypothesis_met = true;
    for (const auto& [index, ea] : ta.entries) {
        if (static_cast<int>(index.size()) > report.max_basing) continue;
        if (ea.mu_bar != 0 || tb.at(index).mu_bar != 0) {
            report.hypothesis_met = false;
            break;
        }
    }
    return report;
}

bool mu_n_equal(const LinkDiagram& a, const LinkDiagram& b, int n, const Limits& limits) {
    if (n < 2) throw DegreeOverflow("comparison length must be >= 2");
    if (a.component_count() != b.component_count())
        throw ComponentMismatch("links have " + std::to_string(a.component_count()) +
                                " and " + std::to_string(b.component_count()) +
                                " components");
    const MilnorTable ta = table(a, n + 1, limits);
    const MilnorTable tb = table(b, n + 1, limits);
    for (const auto& [index, ea] : ta.entries) {
        if (static_cast<int>(index.size()) > n) continue;
        if (ea.mu_bar != 0)
            throw HypothesisUnmet("mu_bar(" + multi_index_key(index, ta.component_count) +
                                  ") of the first link is nonzero");
        if (tb.at(index).mu_bar != 0)
            throw HypothesisUnmet("mu_bar(" + multi_index_key(index, tb.component_count) +
                                  ") of the second link is nonzero");
    }
    // Vanishing through length n forces delta = 0 at length n+1: exact compare.
    for (const auto& [index, ea] : ta.entries) {
        if (static_cast<int>(index.size()) != n + 1) continue;
        if (ea.mu_bar != tb.at(index).mu_bar) return false;
    }
    return true;
}

} // namespace milnorkit
