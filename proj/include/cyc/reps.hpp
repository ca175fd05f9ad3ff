#pragma once

#include "cyc/dpois.hpp"
#include "cyc/gca.hpp"

namespace cyc {

using GCMatrix = std::vector<std::vector<GCElement>>;

// R_n: the Chevalley–Eilenberg algebra of gl_n*⊗C̄, generated by x(v)_ij of
// degree |v|. Its differential is the one making π_n a chain map; the
// bracket is {x(u)_ab, x(w)_cd} = δ_bc δ_ad ⟨u,w⟩.
class MatrixRep {
public:
    MatrixRep(const TruncatedAlgebra& R, int n);

    const GCAlgebra& algebra() const { return A_; }
    const TruncatedAlgebra& source() const { return R_; }
    int n() const { return n_; }
    int generator(int letter, int i, int j) const { return (letter * n_ + i) * n_ + j; }

    GCMatrix pi(const TensorElement& r) const;
    GCMatrix multiply(const GCMatrix& a, const GCMatrix& b) const;
    // trace of π_n; kills commutators, so any representative of a class works
    GCElement trace(const TensorElement& r) const;
    // r⊗v ↦ Σ_ij π(r)_ij · d x(v)_ji
    KahlerForm omega1_trace(const OneForm& w) const;

private:
    const TruncatedAlgebra& R_;
    int n_;
    GCAlgebra A_;
};

// 𝓛_𝔤: the Chevalley–Eilenberg algebra of 𝔤*⊗C̄ for cocommutative C. The
// generator x_α(v) is the α-coordinate of π_𝔤(v) = Σ_α x_α(v) ξ_α, so no
// orthonormal frame is needed; the bracket is {x_α(u), x_β(w)} = κ⁻¹_αβ ⟨u,w⟩.
class LieRep {
public:
    // element of 𝓛_𝔤⊗𝔤 as its 𝔤-coordinates
    using Valued = std::vector<GCElement>;

    LieRep(const TruncatedAlgebra& R, LieAlgebraData g);

    const GCAlgebra& algebra() const { return A_; }
    const LieAlgebraData& lie() const { return g_; }
    const TruncatedAlgebra& source() const { return R_; }
    int generator(int letter, int alpha) const { return letter * g_.dim() + alpha; }

    // Throws std::invalid_argument outside the free Lie span.
    Valued pi(const TensorElement& l) const;
    Valued bracket(const Valued& a, const Valued& b) const;  // [f⊗ξ, h⊗η] = fh⊗[ξ,η]
    Valued act(const GCElement& f, const Valued& x) const;   // {f, -} on coordinates
    Valued differential(const Valued& x) const;

    // P evaluated on Sym^p(π_𝔤)(s) for s in the symmetrized Lie span
    GCElement drinfeld_sym(const SymPoly& P, const TensorElement& s) const;
    // Drinfeld trace on a cyclic class in λ^(p), p = degree of P
    GCElement drinfeld_trace(const SymPoly& P, const TensorElement& cls) const;
    // θ^(p) → Ω¹(𝓛_𝔤) for P of degree p + 1
    KahlerForm theta_trace(const SymPoly& P, const OneForm& t) const;

private:
    const Valued& pi_basis(const LieRef& r) const;
    void require_invariant(const SymPoly& P) const;
    // Σ_α P(α₁,…,α_p, extra…) Π π(l_i)_{α_i}, with the trailing indices free
    std::map<std::vector<int>, GCElement> contract(const std::vector<LieRef>& tuple) const;

    const TruncatedAlgebra& R_;
    LieAlgebraData g_;
    GCAlgebra A_;
    mutable std::recursive_mutex mu_;
    mutable std::map<LieRef, Valued> pi_cache_;
};

// ad-invariance: Σ_k P(…,[ξ_a, ξ_{i_k}],…) = 0 for all a and all index tuples
std::optional<std::string> check_ad_invariant(const LieAlgebraData& g, const SymPoly& P);

}  // namespace cyc
