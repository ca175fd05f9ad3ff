#pragma once

#include "cyc/exactlin.hpp"

#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace cyc {

using ScalarMatrix = std::vector<std::vector<Scalar>>;

// Conilpotent dg coalgebra on the reduced part C̄ together with a bilinear
// pairing of degree n. The counit and coaugmentation are implicit.
struct CyclicCoalgebra {
    std::string name;
    GradedSpace reduced;
    LinearMap coproduct;     // C̄ → C̄⊗C̄, index i * dim + j
    LinearMap differential;  // C̄ → C̄, degree -1
    ScalarMatrix pairing;    // pairing[i][j] = ⟨c_i, c_j⟩
    int pairing_degree = 0;  // ⟨a, b⟩ ≠ 0 only if |a| + |b| = -n
    bool cocommutative = false;

    int dim() const { return reduced.dim(); }
    int degree(int i) const { return reduced.degrees.at(i); }

    struct CoproductTerm {
        Scalar coeff;
        int left, right;
    };
    std::vector<CoproductTerm> coproduct_terms(int i) const;
};

// An empty coalgebra skeleton on the given generators (zero structure maps).
CyclicCoalgebra make_coalgebra(std::string name, const std::vector<std::pair<std::string, int>>& generators,
                               int pairing_degree);
void add_coproduct_term(CyclicCoalgebra& c, int source, const Scalar& coeff, int left, int right);
void add_differential_term(CyclicCoalgebra& c, int source, const Scalar& coeff, int target);

// How the cyclicity and d-compatibility identities are signed. Koszul is the
// rule obtained by moving symbols past each other; Plus and Minus force a
// fixed relative sign.
enum class SignRule { Koszul, Plus, Minus };

struct ValidationOptions {
    SignRule cyclicity = SignRule::Koszul;
    SignRule dcompat = SignRule::Koszul;
};

struct IdentityResult {
    std::string name;
    bool holds = true;
    bool applicable = true;
    std::string witness;
};

struct ValidationReport {
    std::vector<IdentityResult> identities;
    bool ok() const;
    const IdentityResult& find(const std::string& name) const;
};

// The eight structural identities, in this order: coassociativity,
// conilpotence, co-Leibniz, graded symmetry, homogeneity, cyclicity,
// d-compatibility, cocommutativity (vacuous unless flagged).
ValidationReport validate(const CyclicCoalgebra& c, const ValidationOptions& opts = {});

// Basis of the space of pairings of degree n satisfying graded symmetry,
// homogeneity, cyclicity and d-compatibility (nondegeneracy not imposed).
std::vector<ScalarMatrix> solve_cyclic_pairings(const CyclicCoalgebra& c, int n,
                                                const ValidationOptions& opts = {});

// Builtins: "E1" (= E1_symplectic_pair(1)), "E1_symplectic_pair(g)", "E2" / "E2_two_stage".
CyclicCoalgebra builtin_coalgebra(const std::string& name);
CyclicCoalgebra e1_symplectic_pair(int g);
CyclicCoalgebra e2_two_stage();

// The desuspension V = s⁻¹C̄ with its induced pairing. Letter i has degree
// |c_i| - 1, and ⟨s⁻¹a, s⁻¹b⟩_V = (-1)^{|a|-1} ⟨a, b⟩, a graded
// antisymmetric pairing of degree s = n + 2.
struct VSpace {
    std::vector<std::string> names;
    std::vector<int> degrees;
    ScalarMatrix pairing;
    int shift = 0;

    int size() const { return static_cast<int>(names.size()); }
    const Scalar& pair(int i, int j) const { return pairing[i][j]; }
};

VSpace shifted_space(const CyclicCoalgebra& c);

// Finite-dimensional Lie algebra with an invariant form and invariant
// symmetric polynomials.
struct SymPoly {
    int degree = 0;
    // values on sorted index tuples: P(ξ_{i1},…,ξ_{ip}) for i1 ≤ … ≤ ip
    std::map<std::vector<int>, Scalar> values;
    std::string name;

    Scalar operator()(std::vector<int> idx) const;
};

struct LieAlgebraData {
    std::string name;
    std::vector<std::string> basis;
    // bracket[i][j] = [ξ_i, ξ_j] as a vector in the basis
    std::vector<std::vector<Vec>> bracket;
    ScalarMatrix kappa;           // invariant nondegenerate form
    ScalarMatrix kappa_inverse;
    std::vector<SymPoly> invariants;

    int dim() const { return static_cast<int>(basis.size()); }
    Scalar structure(int i, int j, int k) const { return bracket[i][j].coeff(k); }
    const SymPoly& invariant(int p) const;  // first invariant of degree p
    bool has_invariant(int p) const;
};

LieAlgebraData builtin_lie(const std::string& name);  // "sl2", "gl2"

// Antisymmetry, Jacobi, invariance and nondegeneracy of κ, ad-invariance of
// the listed polynomials.
ValidationReport validate_lie(const LieAlgebraData& g);

ScalarMatrix invert(const ScalarMatrix& m);  // throws on singular input

}  // namespace cyc
