#include "milnorkit/milnor.hpp"

#include "milnorkit/sha256.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace milnorkit {

namespace {

std::vector<MagnusSeries> stage_step(const GroupPresentation& p,
                                     const std::vector<MagnusSeries>& prev,
                                     int rank, int bound) {
    // Inverses of the previous stage, computed once.
    std::vector<MagnusSeries> prev_inv;
    prev_inv.reserve(prev.size());
    for (const MagnusSeries& s : prev) prev_inv.push_back(invert(s));

    auto evaluate = [&](const FreeWord& w) {
        MagnusSeries out = MagnusSeries::one(rank, bound);
        for (int letter : w.letters()) {
            const std::size_t arc = static_cast<std::size_t>(std::abs(letter)) - 1;
            out = multiply(out, letter > 0 ? prev[arc] : prev_inv[arc]);
        }
        return out;
    };

    std::vector<MagnusSeries> next;
    next.reserve(prev.size());
    for (int arc = 0; arc < p.generator_count; ++arc) {
        const int comp = p.generator_component[static_cast<std::size_t>(arc)];
        MagnusSeries meridian = MagnusSeries::one(rank, bound);
        meridian.set_coefficient({static_cast<std::uint8_t>(comp + 1)}, 1);
        const MagnusSeries w = evaluate(p.conjugators[static_cast<std::size_t>(arc)]);
        next.push_back(multiply(multiply(w, meridian), invert(w)));
    }
    return next;
}

} // namespace

ReducedLongitudes reduce_longitudes(const GroupPresentation& p, int n, const Limits& limits) {
    if (n < 2) throw DegreeOverflow("length bound must be >= 2");
    const int bound = n - 1;
    check_degree(bound, limits);
    const int m = static_cast<int>(p.meridians.size());

    // Stage 1: every generator is its component's meridian.
    std::vector<MagnusSeries> series;
    series.reserve(static_cast<std::size_t>(p.generator_count));
    for (int arc = 0; arc < p.generator_count; ++arc) {
        MagnusSeries s = MagnusSeries::one(m, bound);
        const int comp = p.generator_component[static_cast<std::size_t>(arc)];
        s.set_coefficient({static_cast<std::uint8_t>(comp + 1)}, 1);
        series.push_back(std::move(s));
    }

    for (int stage = 2; stage <= n - 1; ++stage)
        series = stage_step(p, series, m, bound);

    // One more stage must not move anything below degree n.
    const std::vector<MagnusSeries> settled = stage_step(p, series, m, bound);
    for (std::size_t arc = 0; arc < series.size(); ++arc)
        if (settled[arc] != series[arc])
            throw NonConvergence("longitude reduction did not stabilize at stage " +
                                 std::to_string(n - 1));

    ReducedLongitudes rl;
    rl.component_count = m;
    rl.length_bound = n;

    std::vector<MagnusSeries> inv;
    inv.reserve(series.size());
    for (const MagnusSeries& s : series) inv.push_back(invert(s));
    for (int c = 0; c < m; ++c) {
        MagnusSeries out = MagnusSeries::one(m, bound);
        for (int letter : p.longitudes[static_cast<std::size_t>(c)].letters()) {
            const std::size_t arc = static_cast<std::size_t>(std::abs(letter)) - 1;
            out = multiply(out, letter > 0 ? series[arc] : inv[arc]);
        }
        rl.series.push_back(std::move(out));
    }
    return rl;
}

long long mu(const ReducedLongitudes& rl, const MultiIndex& index) {
    const int k = static_cast<int>(index.size());
    if (k < 2) return 0;
    if (k > rl.length_bound)
        throw LengthOverflow("multi-index of length " + std::to_string(k) +
                             " exceeds table bound " + std::to_string(rl.length_bound));
    for (int c : index)
        if (c < 1 || c > rl.component_count)
            throw IndexError("component " + std::to_string(c) + " out of range");
    Monomial mono;
    for (int i = 0; i + 1 < k; ++i) mono.push_back(static_cast<std::uint8_t>(index[static_cast<std::size_t>(i)]));
    return rl.series[static_cast<std::size_t>(index.back()) - 1].coefficient(mono);
}

long long delta_from(const std::map<MultiIndex, TableEntry>& shorter, const MultiIndex& index) {
    const int k = static_cast<int>(index.size());
    long long g = 0;
    // Keep any proper nonempty subset of positions, in order, then rotate.
    for (unsigned mask = 1; mask + 1 < (1u << k); ++mask) {
        MultiIndex base;
        for (int i = 0; i < k; ++i)
            if (mask & (1u << i)) base.push_back(index[static_cast<std::size_t>(i)]);
        if (base.size() < 2) continue; // length-1 mu is 0 by convention
        MultiIndex rotated = base;
        for (std::size_t r = 0; r < base.size(); ++r) {
            std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
            auto it = shorter.find(rotated);
            if (it == shorter.end())
                throw InternalError("delta requested before shorter indices were tabled");
            g = std::gcd(g, it->second.mu);
        }
    }
    return g;
}

long long mu_bar(long long mu_value, long long delta_value) {
    if (delta_value == 0) return mu_value;
    const long long r = mu_value % delta_value;
    return r < 0 ? r + delta_value : r;
}

const TableEntry& MilnorTable::at(const MultiIndex& index) const {
    auto it = entries.find(index);
    if (it == entries.end())
        throw LengthOverflow("multi-index not present in table of bound " +
                             std::to_string(length_bound));
    return it->second;
}

int MilnorTable::first_nonvanishing_length() const {
    int best = 0;
    for (const auto& [index, entry] : entries)
        if (entry.mu_bar != 0) {
            const int len = static_cast<int>(index.size());
            if (best == 0 || len < best) best = len;
        }
    return best;
}

MultiIndex MilnorTable::first_obstruction() const {
    const int len = first_nonvanishing_length();
    if (len == 0) return {};
    // Among indices of one length, map order is lexicographic.
    for (const auto& [index, entry] : entries)
        if (static_cast<int>(index.size()) == len && entry.mu_bar != 0)
            return index;
    return {};
}

std::string multi_index_key(const MultiIndex& index, int component_count) {
    std::ostringstream out;
    bool comma = component_count > 9;
    bool first = true;
    for (int c : index) {
        if (comma && !first) out << ',';
        first = false;
        out << c;
    }
    return out.str();
}

std::string MilnorTable::to_json() const {
    // Keys sorted as strings, matching the canonical-bytes rule.
    std::map<std::string, const TableEntry*> keyed;
    for (const auto& [index, entry] : entries)
        keyed.emplace(multi_index_key(index, component_count), &entry);
    std::ostringstream out;
    out << "{\"entries\":{";
    bool first = true;
    for (const auto& [key, entry] : keyed) {
        if (!first) out << ',';
        first = false;
        out << '"' << key << "\":{\"delta\":" << entry->delta << ",\"mu\":" << entry->mu
            << ",\"mu_bar\":" << entry->mu_bar << '}';
    }
    out << "},\"hash\":\"" << diagram_hash << "\",\"n\":" << length_bound << '}';
    return out.str();
}

std::string MilnorTable::to_text() const {
    std::ostringstream out;
    out << "# length bound " << length_bound << ", diagram " << diagram_hash.substr(0, 12)
        << "\n";
    out << "index  mu  delta  mu_bar\n";
    for (const auto& [index, entry] : entries)
        out << multi_index_key(index, component_count) << "  " << entry.mu << "  "
            << entry.delta << "  " << entry.mu_bar << '\n';
    return out.str();
}

MilnorTable table(const LinkDiagram& d, int n, const Limits& limits) {
    if (n < 2) throw DegreeOverflow("table length bound must be >= 2");
    const GroupPresentation p = presentation(d);
    const ReducedLongitudes rl = reduce_longitudes(p, n, limits);
    const int m = d.component_count();

    MilnorTable t;
    t.diagram_hash = Sha256::hash_hex(d.canonical_bytes());
    t.component_count = m;
    t.length_bound = n;

    for (int k = 2; k <= n; ++k) {
        MultiIndex index(static_cast<std::size_t>(k), 1);
        while (true) {
            TableEntry entry;
            entry.mu = mu(rl, index);
            entry.delta = delta_from(t.entries, index);
            entry.mu_bar = mu_bar(entry.mu, entry.delta);
            t.entries.emplace(index, entry);
            // next multi-index in lexicographic order
            int pos = k - 1;
            while (pos >= 0 && index[static_cast<std::size_t>(pos)] == m) {
                index[static_cast<std::size_t>(pos)] = 1;
                --pos;
            }
            if (pos < 0) break;
            ++index[static_cast<std::size_t>(pos)];
        }
    }
    return t;
}

} // namespace milnorkit
