#pragma once

#include "milnorkit/config.hpp"
#include "milnorkit/words.hpp"

#include <string>
#include <vector>

namespace milnorkit {

// Surjection F(rank) ->> G for a finite group G given by its right-regular
// permutation representation: images[g-1] is the permutation of {0..order-1}
// induced by right multiplication with the image of x_g. Element 0 is the
// identity.
class FiniteQuotientMap {
public:
    FiniteQuotientMap(int rank, std::vector<std::vector<int>> images,
                      const Limits& limits = default_limits());

    // JSON form: {"order":2,"images":[[1,0],[0,1]]}.
    static FiniteQuotientMap from_json(const std::string& text,
                                       const Limits& limits = default_limits());

    int rank() const { return rank_; }
    int order() const { return order_; }

    // Image of an element index under one generator (or its inverse).
    int apply(int element, int letter) const;
    // Image of the identity under a whole word.
    int image_of(const FreeWord& w) const;

private:
    int rank_;
    int order_;
    std::vector<std::vector<int>> images_;
    std::vector<std::vector<int>> inverse_images_;
};

// Schreier transversal and free basis of Gamma = ker(F(m) ->> G), with the
// rewriting table from (coset, generator) to basis letters.
class SchreierData {
public:
    explicit SchreierData(const FiniteQuotientMap& map);

    const FiniteQuotientMap& quotient() const { return map_; }
    int basis_rank() const { return static_cast<int>(basis_.size()); }
    const std::vector<FreeWord>& basis() const { return basis_; }
    const FreeWord& transversal(int element) const {
        return transversal_[static_cast<std::size_t>(element)];
    }

    // Rewrite a kernel word as a word in the Gamma basis (rank = basis_rank).
    FreeWord rewrite(const FreeWord& w) const;
    // Substitute basis words back in; freely equal to the original input.
    FreeWord expand(const FreeWord& rewritten) const;

private:
    FiniteQuotientMap map_;
    std::vector<FreeWord> transversal_;
    // basis_letter_[coset][gen-1]: 1-based basis index, or 0 when the Schreier
    // generator is trivial.
    std::vector<std::vector<int>> basis_letter_;
    std::vector<FreeWord> basis_;
};

SchreierData schreier_basis(const FiniteQuotientMap& map);

// w in Gamma_n, decided by the Magnus degree of the rewritten word in the
// free group on the Gamma basis.
bool gamma_n_member(const SchreierData& s, const FreeWord& w, int n,
                    const Limits& limits = default_limits());

} // namespace milnorkit
