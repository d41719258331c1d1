#include "milnorkit/diagram.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace milnorkit {

namespace {

using nlohmann::json;

std::string arc_name(int arc) { return "arc " + std::to_string(arc); }

} // namespace

LinkDiagram::LinkDiagram(std::vector<std::vector<int>> components,
                         std::vector<Crossing> crossings) {
    if (components.empty()) throw ParseError("diagram has no components");

    // Canonicalize arc ids to 0..A-1 in component order.
    std::map<int, int> remap;
    for (const auto& component : components) {
        if (component.empty())
            throw InvalidDiagram("component with no arcs");
        for (int arc : component) {
            if (arc < 0) throw InvalidDiagram("negative arc id " + std::to_string(arc));
            if (!remap.emplace(arc, arc_count_).second)
                throw InvalidDiagram(arc_name(arc) + " listed twice");
            ++arc_count_;
        }
    }
    auto mapped = [&](int arc, const char* where) {
        auto it = remap.find(arc);
        if (it == remap.end())
            throw InvalidDiagram(arc_name(arc) + " referenced as " + where +
                                 " but absent from all components");
        return it->second;
    };

    components_.reserve(components.size());
    arc_component_.assign(static_cast<std::size_t>(arc_count_), -1);
    int next = 0;
    for (std::size_t c = 0; c < components.size(); ++c) {
        std::vector<int> arcs;
        arcs.reserve(components[c].size());
        for (std::size_t i = 0; i < components[c].size(); ++i) {
            arcs.push_back(next);
            arc_component_[static_cast<std::size_t>(next)] = static_cast<int>(c);
            ++next;
        }
        components_.push_back(std::move(arcs));
    }

    crossings_.reserve(crossings.size());
    for (const Crossing& x : crossings) {
        Crossing mapped_x;
        mapped_x.over_in = mapped(x.over_in, "over_in");
        mapped_x.over_out = mapped(x.over_out, "over_out");
        mapped_x.under_in = mapped(x.under_in, "under_in");
        mapped_x.under_out = mapped(x.under_out, "under_out");
        if (x.sign != 1 && x.sign != -1)
            throw InvalidDiagram("crossing sign must be 1 or -1");
        mapped_x.sign = x.sign;
        crossings_.push_back(mapped_x);
    }

    validate();
}

void LinkDiagram::validate() const {
    // Successor of each arc within its component's cyclic sequence.
    std::vector<int> successor(static_cast<std::size_t>(arc_count_));
    for (const auto& component : components_)
        for (std::size_t i = 0; i < component.size(); ++i)
            successor[static_cast<std::size_t>(component[i])] =
                component[(i + 1) % component.size()];

    std::vector<int> in_role(static_cast<std::size_t>(arc_count_), 0);
    std::vector<int> out_role(static_cast<std::size_t>(arc_count_), 0);
    for (std::size_t k = 0; k < crossings_.size(); ++k) {
        const Crossing& x = crossings_[k];
        const std::string where = "crossing " + std::to_string(k);
        if (component_of(x.over_in) != component_of(x.over_out))
            throw InvalidDiagram(where + ": over strand spans two components");
        if (component_of(x.under_in) != component_of(x.under_out))
            throw InvalidDiagram(where + ": under strand spans two components");
        if (successor[static_cast<std::size_t>(x.over_in)] != x.over_out)
            throw InvalidDiagram(where + ": " + arc_name(x.over_out) +
                                 " does not follow " + arc_name(x.over_in));
        if (successor[static_cast<std::size_t>(x.under_in)] != x.under_out)
            throw InvalidDiagram(where + ": " + arc_name(x.under_out) +
                                 " does not follow " + arc_name(x.under_in));
        ++in_role[static_cast<std::size_t>(x.over_in)];
        ++in_role[static_cast<std::size_t>(x.under_in)];
        ++out_role[static_cast<std::size_t>(x.over_out)];
        ++out_role[static_cast<std::size_t>(x.under_out)];
    }

    for (const auto& component : components_) {
        bool touched = false;
        for (int arc : component)
            if (in_role[static_cast<std::size_t>(arc)] != 0 ||
                out_role[static_cast<std::size_t>(arc)] != 0)
                touched = true;
        if (!touched) {
            if (component.size() != 1)
                throw InvalidDiagram("component with no crossings must have exactly one arc");
            continue;
        }
        for (int arc : component) {
            if (in_role[static_cast<std::size_t>(arc)] != 1)
                throw InvalidDiagram(arc_name(arc) + " ends at " +
                                     std::to_string(in_role[static_cast<std::size_t>(arc)]) +
                                     " crossings, expected 1");
            if (out_role[static_cast<std::size_t>(arc)] != 1)
                throw InvalidDiagram(arc_name(arc) + " starts at " +
                                     std::to_string(out_role[static_cast<std::size_t>(arc)]) +
                                     " crossings, expected 1");
        }
    }
}

int LinkDiagram::component_of(int arc) const {
    if (arc < 0 || arc >= arc_count_)
        throw IndexError(arc_name(arc) + " out of range");
    return arc_component_[static_cast<std::size_t>(arc)];
}

int LinkDiagram::base_arc(int component) const {
    if (component < 0 || component >= component_count())
        throw IndexError("component " + std::to_string(component) + " out of range");
    return components_[static_cast<std::size_t>(component)].front();
}

LinkDiagram LinkDiagram::with_rotated_base(int component, int steps) const {
    if (component < 0 || component >= component_count())
        throw IndexError("component " + std::to_string(component) + " out of range");
    std::vector<std::vector<int>> components = components_;
    auto& arcs = components[static_cast<std::size_t>(component)];
    const int n = static_cast<int>(arcs.size());
    const int shift = ((steps % n) + n) % n;
    std::rotate(arcs.begin(), arcs.begin() + shift, arcs.end());
    return LinkDiagram(std::move(components), crossings_);
}

std::string LinkDiagram::canonical_bytes() const {
    json doc;
    doc["components"] = components_;
    doc["crossings"] = json::array();
    for (const Crossing& x : crossings_) {
        json jx;
        jx["over_in"] = x.over_in;
        jx["over_out"] = x.over_out;
        jx["sign"] = x.sign;
        jx["under_in"] = x.under_in;
        jx["under_out"] = x.under_out;
        doc["crossings"].push_back(jx);
    }
    return doc.dump();
}

LinkDiagram parse_pd(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("components") || !doc.contains("crossings"))
        throw ParseError("expected an object with 'components' and 'crossings'");
    if (!doc["components"].is_array() || !doc["crossings"].is_array())
        throw ParseError("'components' and 'crossings' must be arrays");
    if (doc["components"].empty()) throw ParseError("no components");

    std::vector<std::vector<int>> components;
    for (const auto& jc : doc["components"]) {
        if (!jc.is_array() || jc.empty())
            throw ParseError("each component must be a nonempty array of arc ids");
        std::vector<int> arcs;
        for (const auto& ja : jc) {
            if (!ja.is_number_integer() || ja.get<long long>() < 0)
                throw ParseError("arc ids must be nonnegative integers");
            arcs.push_back(ja.get<int>());
        }
        components.push_back(std::move(arcs));
    }

    std::vector<Crossing> crossings;
    for (const auto& jx : doc["crossings"]) {
        if (!jx.is_object())
            throw ParseError("each crossing must be an object");
        for (const char* key : {"over_in", "over_out", "under_in", "under_out", "sign"})
            if (!jx.contains(key) || !jx[key].is_number_integer())
                throw ParseError(std::string("crossing is missing integer field '") + key + "'");
        Crossing x;
        x.over_in = jx["over_in"].get<int>();
        x.over_out = jx["over_out"].get<int>();
        x.under_in = jx["under_in"].get<int>();
        x.under_out = jx["under_out"].get<int>();
        x.sign = jx["sign"].get<int>();
        crossings.push_back(x);
    }
    return LinkDiagram(std::move(components), std::move(crossings));
}

namespace {

struct BraidLetter {
    int position = 1; // k in s<k>, 1-based; crosses strands k and k+1
    int sign = 1;
};

std::vector<BraidLetter> tokenize_braid(const std::string& word, int strands) {
    std::vector<BraidLetter> letters;
    std::istringstream in(word);
    std::string token;
    while (in >> token) {
        if (token.size() < 2 || token[0] != 's')
            throw ParseError("bad braid token '" + token + "'");
        std::size_t pos = 1;
        while (pos < token.size() && std::isdigit(static_cast<unsigned char>(token[pos]))) ++pos;
        if (pos == 1) throw ParseError("bad braid token '" + token + "'");
        BraidLetter letter;
        letter.position = std::stoi(token.substr(1, pos - 1));
        if (pos != token.size()) {
            if (token.substr(pos) != "^-1")
                throw ParseError("bad braid token '" + token + "'");
            letter.sign = -1;
        }
        if (letter.position < 1 || letter.position >= strands)
            throw IndexError("braid generator s" + std::to_string(letter.position) +
                             " needs at least " + std::to_string(letter.position + 1) +
                             " strands");
        letters.push_back(letter);
    }
    return letters;
}

} // namespace

LinkDiagram parse_braid(const std::string& word, int strands) {
    if (strands < 1) throw ParseError("strand count must be >= 1");
    const auto letters = tokenize_braid(word, strands);

    // Provisional arc names; the LinkDiagram constructor renumbers densely.
    int next_arc = 0;
    std::vector<int> top(static_cast<std::size_t>(strands));      // arc entering at top
    std::vector<int> current(static_cast<std::size_t>(strands));  // arc flowing at each position
    for (int p = 0; p < strands; ++p) top[static_cast<std::size_t>(p)] = current[static_cast<std::size_t>(p)] = next_arc++;

    // Arc bookkeeping: per provisional arc, its successor once known.
    std::vector<Crossing> crossings;
    std::vector<std::pair<int, int>> splices; // (old arc, continuation arc)
    for (const BraidLetter& letter : letters) {
        const std::size_t k = static_cast<std::size_t>(letter.position - 1);
        const int a = current[k];      // strand entering at position k
        const int b = current[k + 1];  // strand entering at position k+1
        const int a_out = next_arc++;  // a continues at position k+1
        const int b_out = next_arc++;  // b continues at position k
        Crossing x;
        if (letter.sign > 0) {
            x = Crossing{a, a_out, b, b_out, 1};
        } else {
            x = Crossing{b, b_out, a, a_out, -1};
        }
        crossings.push_back(x);
        splices.emplace_back(a, a_out);
        splices.emplace_back(b, b_out);
        current[k] = b_out;
        current[k + 1] = a_out;
    }

    // Closure: the arc leaving the bottom of position p is the arc entering
    // the top of position p. Identify them.
    std::vector<int> alias(static_cast<std::size_t>(next_arc));
    std::iota(alias.begin(), alias.end(), 0);
    std::vector<int> succ(static_cast<std::size_t>(next_arc), -1);
    for (auto [from, to] : splices) succ[static_cast<std::size_t>(from)] = to;
    for (int p = 0; p < strands; ++p) {
        const int last = current[static_cast<std::size_t>(p)];
        const int first = top[static_cast<std::size_t>(p)];
        if (last == first) continue; // untouched strand: a single closed arc
        alias[static_cast<std::size_t>(last)] = first;
    }
    auto resolve = [&](int arc) {
        while (alias[static_cast<std::size_t>(arc)] != arc) arc = alias[static_cast<std::size_t>(arc)];
        return arc;
    };

    // Where does the strand entering top position p exit at the bottom?
    std::vector<int> strand_exit(static_cast<std::size_t>(strands), -1);
    {
        std::vector<int> who(static_cast<std::size_t>(strands));
        std::iota(who.begin(), who.end(), 0);
        for (const BraidLetter& letter : letters) {
            const std::size_t k = static_cast<std::size_t>(letter.position - 1);
            std::swap(who[k], who[k + 1]);
        }
        for (int q = 0; q < strands; ++q)
            strand_exit[static_cast<std::size_t>(who[static_cast<std::size_t>(q)])] = q;
    }

    // Components are the cycles of the closure permutation, each started at
    // its smallest strand position. Within a segment the final arc is the
    // next segment's top arc, so it is only listed once.
    std::vector<bool> seen(static_cast<std::size_t>(strands), false);
    std::vector<std::vector<int>> components;
    for (int start = 0; start < strands; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        std::vector<int> arcs;
        int p = start;
        do {
            seen[static_cast<std::size_t>(p)] = true;
            int arc = top[static_cast<std::size_t>(p)];
            while (succ[static_cast<std::size_t>(arc)] >= 0) {
                arcs.push_back(arc);
                arc = succ[static_cast<std::size_t>(arc)];
            }
            if (alias[static_cast<std::size_t>(arc)] == arc) arcs.push_back(arc);
            p = strand_exit[static_cast<std::size_t>(p)];
        } while (p != start);
        components.push_back(std::move(arcs));
    }

    // Rewrite crossing arc ids through the closure identification.
    for (Crossing& x : crossings) {
        x.over_in = resolve(x.over_in);
        x.over_out = resolve(x.over_out);
        x.under_in = resolve(x.under_in);
        x.under_out = resolve(x.under_out);
    }
    return LinkDiagram(std::move(components), std::move(crossings));
}

LinkingMatrix linking_matrix(const LinkDiagram& d) {
    const int m = d.component_count();
    LinkingMatrix lk(static_cast<std::size_t>(m),
                     std::vector<long long>(static_cast<std::size_t>(m), 0));
    for (const Crossing& x : d.crossings()) {
        const int ci = d.component_of(x.over_in);
        const int cj = d.component_of(x.under_in);
        if (ci == cj) continue;
        lk[static_cast<std::size_t>(ci)][static_cast<std::size_t>(cj)] += x.sign;
        lk[static_cast<std::size_t>(cj)][static_cast<std::size_t>(ci)] += x.sign;
    }
    for (auto& row : lk)
        for (auto& entry : row) {
            if (entry % 2 != 0)
                throw InvalidDiagram("odd signed crossing count between two components");
            entry /= 2;
        }
    return lk;
}

} // namespace milnorkit
