#pragma once

#include "cyc/freealg.hpp"

#include <array>

namespace cyc {

// Permutation of slots 0..k-1 as its image list.
using Perm = std::vector<int>;

// Arity-truncated cyclic operad given by structure tensors. Slots of P(m)
// are the inputs 0..m-1 and the output m. A slot permutation π acts on
// P(m) by a linear map act(π) with μ⊗w ≡ act(π)μ ⊗ π·w in the coinvariants,
// where (π·w)[π(k)] = w[k] with the Koszul sign. Only generators are
// stored: the adjacent input swaps and τ: k ↦ k+1 (mod m+1), which turns
// the last input into the output and the output into the first input.
struct CyclicOperadData {
    std::string name;
    int max_arity = 0;
    std::vector<std::vector<std::string>> basis;       // [m], m = 0..max_arity
    std::vector<std::vector<std::vector<Vec>>> swaps;  // [m][k]: inputs k, k+1 exchanged (columns)
    std::vector<std::vector<Vec>> tau;                 // [m] (columns)
    // (m, i, l) ↦ entry a * dim(l) + b holds μ_a ∘_i ν_b in P(m + l - 1), i 0-based
    std::map<std::array<int, 3>, std::vector<Vec>> compositions;
    // optional map of operads into Ass: columns in the Ass(m) word basis
    std::vector<std::vector<Vec>> ass_embedding;

    int dim(int m) const { return m >= 0 && m < static_cast<int>(basis.size()) ? static_cast<int>(basis[m].size()) : 0; }
    Vec compose(int m, const Vec& mu, int i, int l, const Vec& nu) const;
};

// Ass(m) basis: permutations a of 0..m-1 in lexicographic order, a ≙ x_{a0}⋯x_{a(m-1)}.
const std::vector<Perm>& ass_words(int m);

// "Ass", "Com", "Lie"; max arity ≤ 5. Lie(m) has the right-nested basis
// [x_σ0,[x_σ1,…,[x_σ(m-2), x_(m-1)]…]] and all its structure is computed
// inside Ass and solved back.
CyclicOperadData builtin_operad(const std::string& name, int max_arity);

// Group action (well defined on S_{m+1}), τ relations with compositions,
// unit, associativity and equivariance of ∘_i on basis elements.
ValidationReport validate_operad(const CyclicOperadData& op);

Vec apply_columns(const std::vector<Vec>& columns, const Vec& v);

struct OperadActionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The free 𝒫-algebra T_𝒫 V (arity ≥ 1), its cyclic space
// R♮ = ⊕ P(m)⊗_{S_{m+1}} V^{⊗(m+1)}, the cyclic derivative, the bracket
// and the action of R♮ on R by derivations. Elements are stored on
// canonical keys (basis index, sorted letters).
class OperadAlgebra {
public:
    using Key = std::pair<int, Word>;
    using FreeElem = LinComb<Key>;                             // letters.size() = arity
    using CycElem = LinComb<Key>;                              // letters.size() = arity + 1
    using FreeOneForm = LinComb<std::tuple<int, Word, int>>;   // (μ⊗w) ⊗ v

    OperadAlgebra(const CyclicOperadData& op, VSpace V);

    const CyclicOperadData& operad() const { return op_; }
    const VSpace& V() const { return V_; }
    int shift() const { return V_.shift; }
    int degree(const Word& w) const;
    std::optional<int> degree(const LinComb<Key>& x) const;

    // act(π) on P(m) for π ∈ S_{m+1}; OperadActionError if the generators
    // do not define a group action
    const std::vector<Vec>& action(int m, const Perm& pi) const;
    int group_order(int m) const;

    FreeElem free_element(const Vec& mu, const Word& w) const;
    CycElem cyclic_element(const Vec& mu, const Word& w) const;
    std::vector<Key> free_basis(int weight) const;
    std::vector<Key> cyclic_basis(int weight) const;

    FreeOneForm cyclic_derivative(const CycElem& a) const;
    // derivative of an arbitrary (not necessarily canonical) representative
    FreeOneForm cyclic_derivative(const Vec& mu, const Word& w) const;
    CycElem cyclic_project(const FreeOneForm& x) const;  // (μ⊗w)⊗v ↦ [μ⊗(w,v)]
    // p(x⊗y) = ±[((τ⁻¹μ')∘_last μ'') ⊗ (w₂…w_m, u, w₁)]
    CycElem project(const FreeElem& x, const FreeElem& y) const;
    CycElem bracket(const CycElem& a, const CycElem& b) const;
    FreeElem act(const CycElem& a, const FreeElem& x) const;

    // Through the map into Ass (requires ass_embedding).
    TensorElement to_tensor(const FreeElem& x) const;
    TensorElement to_cyclic_words(const CycElem& x, const TruncatedAlgebra& R) const;
    OneForm to_oneform(const FreeOneForm& x) const;

    std::string show(const LinComb<Key>& x, bool cyclic) const;

private:
    struct Block {
        Echelon relations;
        std::vector<int> free_columns;
    };
    const Block& block(bool cyclic, const Word& sorted) const;
    LinComb<Key> canonical(bool cyclic, const Vec& mu, const Word& w) const;
    void build_action(int m) const;

    const CyclicOperadData& op_;
    VSpace V_;
    mutable std::recursive_mutex mu_;
    mutable std::map<int, std::map<Perm, std::vector<Vec>>> actions_;
    mutable std::map<std::pair<bool, Word>, std::unique_ptr<Block>> blocks_;
};

// Sign and image of π·w: (π·w)[π(k)] = w[k].
std::pair<int, Word> permute_letters(const Perm& pi, const Word& w, const std::vector<int>& degrees);

// dim (P(m) ⊗ V^{⊗(m+1)})_{S_{m+1}} restricted to the arrangements of the
// letter multiset `content`, by averaging over the group (trace of the
// averaging idempotent).
Scalar coinvariant_dimension_by_averaging(const OperadAlgebra& A, int m, const Word& content);

}  // namespace cyc
