#pragma once

#include "cyc/exactlin.hpp"

#include <functional>
#include <optional>
#include <string>
#include <tuple>

namespace cyc {

// Sorted generator indices; an odd generator occurs at most once.
using Monomial = std::vector<int>;
using GCElement = LinComb<Monomial>;
// f·dg with g a generator
using KahlerForm = LinComb<std::pair<Monomial, int>>;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Free graded-commutative algebra on finitely many generators, with an
// optional differential and an optional shifted Poisson bracket given by
// scalars on generator pairs (degree `shift`).
class GCAlgebra {
public:
    GCAlgebra() = default;
    explicit GCAlgebra(GradedSpace generators, int shift = 0);

    const GradedSpace& generators() const { return gens_; }
    int size() const { return gens_.dim(); }
    int shift() const { return shift_; }
    int gen_degree(int i) const { return gens_.degrees[i]; }

    int degree(const Monomial& m) const;
    std::optional<int> degree(const GCElement& f) const;

    GCElement one() const { return GCElement(Monomial{}); }
    GCElement gen(int i) const { return GCElement(Monomial{i}); }

    // signed product of monomials; nullopt when an odd generator repeats
    std::optional<std::pair<int, Monomial>> multiply(const Monomial& a, const Monomial& b) const;
    GCElement multiply(const GCElement& a, const GCElement& b) const;

    void set_differential(int gen, GCElement value);
    const GCElement& generator_differential(int gen) const { return d_.at(gen); }
    GCElement d(const GCElement& f) const;
    // extends a degree-k derivation given on generators
    GCElement derivation(const GCElement& f, const std::function<GCElement(int)>& on_gen, int k) const;

    void set_bracket(int i, int j, const Scalar& c) { bracket_.at(i).at(j) = c; }
    const Scalar& generator_bracket(int i, int j) const { return bracket_.at(i).at(j); }
    GCElement bracket(const GCElement& f, const GCElement& g) const;

    KahlerForm kahler_d(const GCElement& f) const;
    KahlerForm multiply(const GCElement& f, const KahlerForm& w) const;
    KahlerForm form_differential(const KahlerForm& w) const;
    // {η, f·dg} = {η,f}·dg + (-1)^{(|η|+s)|f|} f·d{η,g}
    KahlerForm act_on_form(const GCElement& eta, const KahlerForm& w) const;

    // monomials of polynomial degree exactly k
    std::vector<Monomial> monomials(int k) const;
    // complex on monomials of polynomial degree ≤ D
    ChainComplex complex(int D) const;

    std::optional<std::string> check_d_squared() const;          // on generators
    std::optional<std::string> check_bracket_antisymmetry() const;
    // d{a,b} = (-1)^s ({da,b} + (-1)^{|a|}{a,db}) on generator pairs
    std::optional<std::string> check_bracket_compatibility() const;

    std::string show(const Monomial& m) const;
    std::string show(const GCElement& f) const;
    std::string show(const KahlerForm& w) const;

private:
    GradedSpace gens_;
    int shift_ = 0;
    std::vector<GCElement> d_;
    std::vector<std::vector<Scalar>> bracket_;
};

// Chevalley–Eilenberg algebra of a dg Lie coalgebra G: generators s⁻¹g of
// degree |g| - 1, d(s⁻¹g) = -s⁻¹(d_G g) + ½ Σ (-1)^{|g'|} s⁻¹g'·s⁻¹g''.
// `cobracket[i]` lists (coeff, left, right). Throws InputError with a witness
// if d² ≠ 0 (a failure of co-Jacobi or of compatibility with d_G). `shift`
// is the degree of a bracket installed later.
GCAlgebra ce_algebra(const GradedSpace& g, const LinearMap& dg,
                     const std::vector<std::vector<std::tuple<Scalar, int, int>>>& cobracket,
                     const std::vector<std::string>& labels = {}, int shift = 0);

// Installs a generator-level bracket table; throws InputError unless it is
// graded antisymmetric and compatible with the differential.
void poisson_from_pairing(GCAlgebra& a, const std::function<Scalar(int, int)>& table);

}  // namespace cyc
