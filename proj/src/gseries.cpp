#include "milnorkit/gseries.hpp"

#include "milnorkit/magnus.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>

namespace milnorkit {

FiniteQuotientMap::FiniteQuotientMap(int rank, std::vector<std::vector<int>> images,
                                     const Limits& limits)
    : rank_(rank), order_(static_cast<int>(images.empty() ? 0 : images[0].size())),
      images_(std::move(images)) {
    if (rank_ < 1) throw IndexError("quotient map rank must be >= 1");
    if (static_cast<int>(images_.size()) != rank_)
        throw ParseError("expected one permutation per generator");
    if (order_ < 1) throw ParseError("group order must be >= 1");
    if (order_ > limits.max_group_order)
        throw DegreeOverflow("group order " + std::to_string(order_) + " above bound " +
                             std::to_string(limits.max_group_order));

    inverse_images_.assign(images_.size(),
                           std::vector<int>(static_cast<std::size_t>(order_), -1));
    for (std::size_t g = 0; g < images_.size(); ++g) {
        const auto& perm = images_[g];
        if (static_cast<int>(perm.size()) != order_)
            throw ParseError("permutation length differs from group order");
        std::vector<bool> hit(static_cast<std::size_t>(order_), false);
        for (int from = 0; from < order_; ++from) {
            const int to = perm[static_cast<std::size_t>(from)];
            if (to < 0 || to >= order_ || hit[static_cast<std::size_t>(to)])
                throw ParseError("generator image is not a permutation");
            hit[static_cast<std::size_t>(to)] = true;
            inverse_images_[g][static_cast<std::size_t>(to)] = from;
        }
    }

    // Surjectivity: in the right-regular representation a subgroup reaches
    // every element iff it is the whole group, so check transitivity from 0.
    std::vector<bool> reached(static_cast<std::size_t>(order_), false);
    std::deque<int> queue{0};
    reached[0] = true;
    int count = 1;
    while (!queue.empty()) {
        const int at = queue.front();
        queue.pop_front();
        for (int g = 1; g <= rank_; ++g)
            for (int letter : {g, -g}) {
                const int to = apply(at, letter);
                if (!reached[static_cast<std::size_t>(to)]) {
                    reached[static_cast<std::size_t>(to)] = true;
                    ++count;
                    queue.push_back(to);
                }
            }
    }
    if (count != order_)
        throw NotSurjective("generator images reach only " + std::to_string(count) +
                            " of " + std::to_string(order_) + " elements");
}

FiniteQuotientMap FiniteQuotientMap::from_json(const std::string& text,
                                               const Limits& limits) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("order") || !doc.contains("images") ||
        !doc["order"].is_number_integer() || !doc["images"].is_array())
        throw ParseError("expected {\"order\":N,\"images\":[[...],...]}");
    std::vector<std::vector<int>> images;
    for (const auto& jp : doc["images"]) {
        if (!jp.is_array()) throw ParseError("each image must be a permutation array");
        images.push_back(jp.get<std::vector<int>>());
        if (static_cast<int>(images.back().size()) != doc["order"].get<int>())
            throw ParseError("permutation length differs from group order");
    }
    if (images.empty()) throw ParseError("no generator images");
    const int rank = static_cast<int>(images.size());
    return FiniteQuotientMap(rank, std::move(images), limits);
}

int FiniteQuotientMap::apply(int element, int letter) const {
    const std::size_t g = static_cast<std::size_t>(std::abs(letter)) - 1;
    if (g >= images_.size()) throw IndexError("generator out of range");
    return letter > 0 ? images_[g][static_cast<std::size_t>(element)]
                      : inverse_images_[g][static_cast<std::size_t>(element)];
}

int FiniteQuotientMap::image_of(const FreeWord& w) const {
    int at = 0;
    for (int letter : w.letters()) at = apply(at, letter);
    return at;
}

SchreierData::SchreierData(const FiniteQuotientMap& map) : map_(map) {
    const int order = map_.order();
    const int rank = map_.rank();

    // Shortlex Schreier transversal over the alphabet x1 < ... < xm < x1^-1 < ...
    transversal_.assign(static_cast<std::size_t>(order), FreeWord(rank));
    std::vector<int> alphabet;
    for (int g = 1; g <= rank; ++g) alphabet.push_back(g);
    for (int g = 1; g <= rank; ++g) alphabet.push_back(-g);
    std::vector<bool> have(static_cast<std::size_t>(order), false);
    have[0] = true;
    std::deque<int> queue{0};
    while (!queue.empty()) {
        const int at = queue.front();
        queue.pop_front();
        for (int letter : alphabet) {
            const int to = map_.apply(at, letter);
            if (have[static_cast<std::size_t>(to)]) continue;
            have[static_cast<std::size_t>(to)] = true;
            transversal_[static_cast<std::size_t>(to)] =
                concat(transversal_[static_cast<std::size_t>(at)], FreeWord(rank, {letter}));
            queue.push_back(to);
        }
    }

    // Schreier generators s(t,x) = t x rep(t x)^-1, nontrivial ones in
    // (coset, generator) order.
    basis_letter_.assign(static_cast<std::size_t>(order),
                         std::vector<int>(static_cast<std::size_t>(rank), 0));
    for (int t = 0; t < order; ++t) {
        for (int g = 1; g <= rank; ++g) {
            const int to = map_.apply(t, g);
            const FreeWord candidate =
                concat(concat(transversal_[static_cast<std::size_t>(t)], FreeWord(rank, {g})),
                       inverse(transversal_[static_cast<std::size_t>(to)]));
            if (candidate.empty()) continue;
            basis_.push_back(candidate);
            basis_letter_[static_cast<std::size_t>(t)][static_cast<std::size_t>(g - 1)] =
                static_cast<int>(basis_.size());
        }
    }

    const long long expected = 1 + static_cast<long long>(order) * (rank - 1);
    if (static_cast<long long>(basis_.size()) != expected)
        throw InternalError("schreier basis rank " + std::to_string(basis_.size()) +
                            " disagrees with Nielsen-Schreier count " +
                            std::to_string(expected));
}

SchreierData schreier_basis(const FiniteQuotientMap& map) { return SchreierData(map); }

FreeWord SchreierData::rewrite(const FreeWord& w) const {
    const int image = map_.image_of(w);
    if (image != 0)
        throw NotInKernel("word maps to element " + std::to_string(image) +
                          ", not the identity");
    std::vector<int> letters;
    int at = 0;
    for (int letter : w.letters()) {
        if (letter > 0) {
            const int b = basis_letter_[static_cast<std::size_t>(at)]
                                       [static_cast<std::size_t>(letter - 1)];
            if (b != 0) letters.push_back(b);
            at = map_.apply(at, letter);
        } else {
            const int from = map_.apply(at, letter);
            const int b = basis_letter_[static_cast<std::size_t>(from)]
                                       [static_cast<std::size_t>(-letter - 1)];
            if (b != 0) letters.push_back(-b);
            at = from;
        }
    }
    return FreeWord(basis_rank() == 0 ? 1 : basis_rank(), std::move(letters));
}

FreeWord SchreierData::expand(const FreeWord& rewritten) const {
    FreeWord out(map_.rank());
    for (int letter : rewritten.letters()) {
        const FreeWord& b = basis_[static_cast<std::size_t>(std::abs(letter)) - 1];
        out = concat(out, letter > 0 ? b : inverse(b));
    }
    return out;
}

bool gamma_n_member(const SchreierData& s, const FreeWord& w, int n, const Limits& limits) {
    check_class(n, limits);
    const FreeWord rewritten = s.rewrite(w);
    if (n == 1) return true; // Gamma_1 = Gamma, and rewrite() checked membership
    return lcs_degree(rewritten, n, limits).at_least(n);
}

} // namespace milnorkit
