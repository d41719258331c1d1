#include "milnorkit/wirtinger.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace milnorkit {

namespace {

// Arc id -> 1-based free group generator index.
int gen_of(int arc) { return arc + 1; }

} // namespace

long long writhe(const LinkDiagram& d, int component) {
    if (component < 0 || component >= d.component_count())
        throw IndexError("component " + std::to_string(component) + " out of range");
    long long w = 0;
    for (const Crossing& x : d.crossings())
        if (d.component_of(x.over_in) == component &&
            d.component_of(x.under_in) == component)
            w += x.sign;
    return w;
}

FreeWord longitude(const LinkDiagram& d, int component) {
    if (component < 0 || component >= d.component_count())
        throw IndexError("component " + std::to_string(component) + " out of range");
    const int rank = d.arc_count();

    // Under-passages keyed by the incoming under arc.
    std::map<int, const Crossing*> under_at;
    for (const Crossing& x : d.crossings()) under_at[x.under_in] = &x;

    // Accumulate the over letters in total-conjugator order: the longitude is
    // the full conjugation chain around the component, i.e. the g_over^sign
    // letters compose right-to-left along the traversal. (Traversal-order
    // accumulation is not compatible with the relator convention: it breaks
    // cyclic symmetry of the first non-vanishing mu-bar values.)
    std::vector<int> letters;
    for (int arc : d.components()[static_cast<std::size_t>(component)]) {
        auto it = under_at.find(arc);
        if (it == under_at.end()) continue; // arc ends by passing over
        const Crossing& x = *it->second;
        letters.push_back(x.sign > 0 ? gen_of(x.over_in) : -gen_of(x.over_in));
    }
    std::reverse(letters.begin(), letters.end());
    const long long w = writhe(d, component);
    const int meridian = gen_of(d.base_arc(component));
    for (long long i = 0; i < (w > 0 ? w : -w); ++i)
        letters.push_back(w > 0 ? -meridian : meridian);
    return FreeWord(rank, std::move(letters));
}

GroupPresentation presentation(const LinkDiagram& d) {
    GroupPresentation p;
    p.generator_count = d.arc_count();
    p.generator_component.resize(static_cast<std::size_t>(d.arc_count()));
    for (int arc = 0; arc < d.arc_count(); ++arc)
        p.generator_component[static_cast<std::size_t>(arc)] = d.component_of(arc);

    // Relator per crossing: g_under_out (g_over^e g_under_in g_over^-e)^-1.
    for (const Crossing& x : d.crossings()) {
        const int o = gen_of(x.over_in);
        const int e = x.sign;
        std::vector<int> letters{gen_of(x.under_out), e * o, -gen_of(x.under_in), -e * o};
        p.relators.emplace_back(d.arc_count(), std::move(letters));
    }

    for (int c = 0; c < d.component_count(); ++c) {
        p.meridians.push_back(gen_of(d.base_arc(c)));
        p.longitudes.push_back(longitude(d, c));
    }

    // Conjugator chains, walked along each component from its base arc.
    std::map<int, const Crossing*> under_at;
    for (const Crossing& x : d.crossings()) under_at[x.under_in] = &x;
    p.conjugators.assign(static_cast<std::size_t>(d.arc_count()), FreeWord(d.arc_count()));
    for (int c = 0; c < d.component_count(); ++c) {
        const auto& arcs = d.components()[static_cast<std::size_t>(c)];
        for (std::size_t t = 0; t + 1 < arcs.size(); ++t) {
            const int cur = arcs[t];
            const int nxt = arcs[t + 1];
            auto it = under_at.find(cur);
            if (it == under_at.end()) {
                p.conjugators[static_cast<std::size_t>(nxt)] =
                    p.conjugators[static_cast<std::size_t>(cur)];
            } else {
                const Crossing& x = *it->second;
                const int o = x.sign * gen_of(x.over_in);
                p.conjugators[static_cast<std::size_t>(nxt)] =
                    concat(FreeWord(d.arc_count(), {o}),
                           p.conjugators[static_cast<std::size_t>(cur)]);
            }
        }
    }
    return p;
}

std::string GroupPresentation::dump() const {
    std::ostringstream out;
    out << "gens: " << generator_count << '\n';
    auto word_text = [](const FreeWord& w) {
        if (w.empty()) return std::string("1");
        std::ostringstream s;
        bool first = true;
        for (int letter : w.letters()) {
            if (!first) s << ' ';
            first = false;
            s << 'g' << std::abs(letter) - 1;
            if (letter < 0) s << "^-1";
        }
        return s.str();
    };
    for (const FreeWord& r : relators) out << "rel: " << word_text(r) << '\n';
    for (std::size_t i = 0; i < meridians.size(); ++i)
        out << "mer[" << i << "]: g" << meridians[i] - 1 << '\n';
    for (std::size_t i = 0; i < longitudes.size(); ++i)
        out << "lon[" << i << "]: " << word_text(longitudes[i]) << '\n';
    return out.str();
}

} // namespace milnorkit
