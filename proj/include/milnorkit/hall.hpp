#pragma once

#include "milnorkit/config.hpp"
#include "milnorkit/words.hpp"

#include <string>
#include <vector>

namespace milnorkit {

// One basic commutator. Weight-1 entries are the generators (generator >= 1);
// compound entries hold indices of earlier entries as children, in the
// display orientation used throughout: [x1,x2], [[x1,x2],x1], ...
struct HallEntry {
    int weight = 1;
    int left = -1;
    int right = -1;
    int generator = 0;
};

// Basic commutators of F(rank) through weight klass, in a fixed deterministic
// order: weight ascending, then construction order (classical-left child
// ascending, then classical-right child ascending). The number of weight-k
// entries equals the Witt number W(rank, k).
class HallBasis {
public:
    static const HallBasis& get(int rank, int klass,
                                const Limits& limits = default_limits());

    int rank() const { return rank_; }
    int klass() const { return klass_; }
    int size() const { return static_cast<int>(entries_.size()); }
    const HallEntry& entry(int i) const { return entries_[static_cast<std::size_t>(i)]; }
    int weight_of(int i) const { return entries_[static_cast<std::size_t>(i)].weight; }

    // Defining free word, expanded with [a,b] = a b a^-1 b^-1.
    const FreeWord& word(int i) const { return words_[static_cast<std::size_t>(i)]; }
    std::string label(int i) const;

    // One entry per line: "w=2 [x1,x2]".
    std::string dump() const;

    static long long witt_number(int rank, int weight);

private:
    HallBasis(int rank, int klass);

    int rank_;
    int klass_;
    std::vector<HallEntry> entries_;
    std::vector<FreeWord> words_;
};

// Exponent vector of a word's normal form in F/F_{klass+1}, indexed by the
// entries of HallBasis::get(rank, klass).
struct NilpotentCoordinates {
    int rank = 1;
    int klass = 1;
    std::vector<long long> exponents;

    bool vanishes_below(int weight) const;
};

NilpotentCoordinates collect(const FreeWord& w, int klass,
                             const Limits& limits = default_limits());

// The word c_1^{e_1} ... c_N^{e_N} realizing the coordinates.
FreeWord normal_form_word(const NilpotentCoordinates& coords);

// w in F_k, decided by collection weights.
bool in_lcs(const FreeWord& w, int k, const Limits& limits = default_limits());

} // namespace milnorkit
