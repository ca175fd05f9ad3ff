#pragma once

#include "cyc/freealg.hpp"

#include <tuple>

namespace cyc {

using DoubleValue = LinComb<std::pair<Word, Word>>;     // R⊗R
using BimodForm = LinComb<std::tuple<Word, int, Word>>;  // Ω¹R = R⊗V⊗R, b⊗v⊗c ≙ b·dv·c

// The double bracket of degree s = n + 2 on T(V) induced by the V pairing,
// together with the brackets and actions it induces on R, R♮ = R/(k+[R,R])
// and Ω¹R. Cyclic classes are TensorElements on canonical words; any
// representative is accepted as input.
class DoublePoisson {
public:
    explicit DoublePoisson(const TruncatedAlgebra& R) : R_(R) {}

    const TruncatedAlgebra& algebra() const { return R_; }
    int shift() const { return R_.V().shift; }

    DoubleValue double_bracket(const Word& a, const Word& b) const;
    DoubleValue double_bracket(const TensorElement& a, const TensorElement& b) const;
    TensorElement multiply(const DoubleValue& x) const;

    TensorElement bracket_R(const TensorElement& a, const TensorElement& b) const;
    // With `check_representatives` the result is recomputed after adding a
    // commutator to each argument and compared.
    TensorElement bracket_cyclic(const TensorElement& a, const TensorElement& b,
                                 bool check_representatives = false) const;
    // The derivation {α, -} of R of degree |α| + s.
    TensorElement act_on_R(const TensorElement& alpha, const TensorElement& r) const;

    OneForm cyclic_derivative(const TensorElement& alpha) const;
    BimodForm de_rham(const TensorElement& r) const;
    OneForm descend(const BimodForm& w) const;
    BimodForm lift(const OneForm& w) const;  // r⊗v ↦ r·dv
    BimodForm act_on_omega1(const TensorElement& alpha, const BimodForm& w) const;
    OneForm act_on_oneform(const TensorElement& alpha, const OneForm& w) const;
    TensorElement beta(const OneForm& w) const;  // r⊗v ↦ [r, v]

    BimodForm bimod_differential(const BimodForm& w) const;
    OneForm oneform_differential(const OneForm& w) const;

    // Cone of β: θ^(p) → Sym^p, in cone degree k: θ_{k-1} ⊕ Sym^p_k, with
    // D(t, s) = (-d t, β t + d s); weights up to W. Needs a cocommutative coalgebra.
    ChainComplex hochschild_cone(int p) const;

    // pairing-degree bookkeeping helpers
    int degree(const Word& w) const { return R_.degree(w); }
    std::optional<int> degree(const TensorElement& t) const { return R_.degree(t); }

    std::string show(const DoubleValue& x) const;
    std::string show(const BimodForm& x) const;

private:
    const TruncatedAlgebra& R_;
};

// Commutator perturbation used to test representative independence:
// w ↦ w + (w - sign · rotation(w)) applied to the first term.
TensorElement perturb_representative(const TruncatedAlgebra& R, const TensorElement& a);

}  // namespace cyc
