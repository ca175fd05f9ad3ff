#include <doctest.h>

#include "cyc/dpois.hpp"

using namespace cyc;

namespace {

// Oracle: letters pair to scalars, the second argument is expanded as an
// outer derivation and the first through skew-symmetry.
DoubleValue recursive_bracket(const TruncatedAlgebra& R, const Word& a, const Word& b)
{
    const VSpace& V = R.V();
    int s = V.shift;
    DoubleValue out;
    if (a.empty() || b.empty())
        return out;
    if (b.size() > 1) {
        Word b1{b[0]}, rest(b.begin() + 1, b.end());
        // {{a, b1·rest}} = {{a,b1}}·rest + (-1)^{(|a|+s)|b1|} b1·{{a,rest}}
        for (const auto& [k, c] : recursive_bracket(R, a, b1)) {
            Word r = k.second;
            r.insert(r.end(), rest.begin(), rest.end());
            out.add({k.first, r}, c);
        }
        int sign = sign_of((R.degree(a) + s) * R.degree(b1));
        for (const auto& [k, c] : recursive_bracket(R, a, rest)) {
            Word l = b1;
            l.insert(l.end(), k.first.begin(), k.first.end());
            out.add({l, k.second}, c * sign);
        }
        return out;
    }
    if (a.size() == 1) {
        out.add({Word{}, Word{}}, V.pair(a[0], b[0]));
        return out;
    }
    // {{a,b}} = -(-1)^{(|a|+s)(|b|+s)} τ{{b,a}},  τ(x⊗y) = (-1)^{|x||y|} y⊗x
    int sign = -sign_of((R.degree(a) + s) * (R.degree(b) + s));
    for (const auto& [k, c] : recursive_bracket(R, b, a))
        out.add({k.second, k.first}, c * sign * sign_of(R.degree(k.first) * R.degree(k.second)));
    return out;
}

// Necklace bracket for even generators, signs all +1:
// {♮v, ♮w} = Σ_{i,j} ⟨v_i, w_j⟩ ♮(w_<j v_>i v_<i w_>j)
TensorElement necklace_bracket(const TruncatedAlgebra& R, const Word& v, const Word& w)
{
    TensorElement out;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < w.size(); ++j) {
            Word x(w.begin(), w.begin() + j);
            x.insert(x.end(), v.begin() + i + 1, v.end());
            x.insert(x.end(), v.begin(), v.begin() + i);
            x.insert(x.end(), w.begin() + j + 1, w.end());
            out.add(x, R.V().pair(v[i], w[j]));
        }
    return R.project_cyclic(out);
}

std::vector<TensorElement> classes(const TruncatedAlgebra& R, int max_weight)
{
    std::vector<TensorElement> out;
    for (int w = 1; w <= max_weight; ++w)
        for (const auto& word : R.cyclic_basis(w))
            out.emplace_back(word);
    return out;
}

int deg(const TruncatedAlgebra& R, const TensorElement& t) { return *R.degree(t); }

int weight(const TensorElement& t) { return static_cast<int>(t.begin()->first.size()); }

}  // namespace

TEST_SUITE("dpois")
{
    TEST_CASE("closed double bracket formula matches the recursive expansion")
    {
        for (const char* name : {"E1", "E2", "E1_symplectic_pair(2)"}) {
            TruncatedAlgebra R(builtin_coalgebra(name), 4);
            DoublePoisson P(R);
            int maxw = std::string(name) == "E1_symplectic_pair(2)" ? 3 : 4;
            for (int wa = 1; wa <= maxw; ++wa)
                for (int wb = 1; wb <= maxw; ++wb)
                    for (const auto& a : R.words(wa))
                        for (const auto& b : R.words(wb)) {
                            CAPTURE(R.show(a));
                            CAPTURE(R.show(b));
                            CHECK(P.double_bracket(a, b) == recursive_bracket(R, a, b));
                        }
        }
    }

    TEST_CASE("reference values on E1")
    {
        TruncatedAlgebra R(builtin_coalgebra("E1"), 4);
        DoublePoisson P(R);
        Word x{0}, y{1}, xy{0, 1};
        DoubleValue one;
        one.add({Word{}, Word{}}, 1);
        CHECK(P.double_bracket(x, y) == one);
        DoubleValue e;
        e.add({Word{}, x}, -1);
        CHECK(P.double_bracket(xy, x) == e);
        CHECK(P.bracket_cyclic(TensorElement(xy), TensorElement(x)) == TensorElement(x, -1));
        CHECK(P.act_on_R(TensorElement(xy), TensorElement(x)) == TensorElement(x, -1));
        BimodForm dx, minus_dx;
        dx.add({Word{}, 0, Word{}}, 1);
        minus_dx.add({Word{}, 0, Word{}}, -1);
        CHECK(P.act_on_omega1(TensorElement(xy), dx) == minus_dx);
        CHECK(P.double_bracket(Word{}, xy).is_zero());
        CHECK(P.double_bracket(xy, Word{}).is_zero());
    }

    TEST_CASE("necklace bracket oracle for even generators")
    {
        for (const char* name : {"E1", "E1_symplectic_pair(2)"}) {
            TruncatedAlgebra R(builtin_coalgebra(name), 5);
            DoublePoisson P(R);
            int maxw = std::string(name) == "E1" ? 5 : 3;
            for (int wa = 1; wa <= maxw; ++wa)
                for (int wb = 1; wb <= maxw; ++wb)
                    for (const auto& a : R.words(wa))
                        for (const auto& b : R.words(wb))
                            CHECK(P.bracket_cyclic(TensorElement(a), TensorElement(b)) ==
                                  necklace_bracket(R, a, b));
        }
    }

    TEST_CASE("skew symmetry, weight ≤ 5")
    {
        for (const char* name : {"E1", "E2"}) {
            TruncatedAlgebra R(builtin_coalgebra(name), 5);
            DoublePoisson P(R);
            int s = P.shift();
            auto cl = classes(R, 5);
            for (const auto& a : cl)
                for (const auto& b : cl) {
                    auto ab = P.bracket_cyclic(a, b);
                    auto ba = P.bracket_cyclic(b, a);
                    int sign = -sign_of((deg(R, a) + s) * (deg(R, b) + s));
                    CHECK(ab == ba * Scalar(sign));
                }
        }
    }

    TEST_CASE("Jacobi identity, weight ≤ 4")
    {
        for (const char* name : {"E1", "E2"}) {
            TruncatedAlgebra R(builtin_coalgebra(name), 4);
            DoublePoisson P(R);
            int s = P.shift();
            auto cl = classes(R, 4);
            for (const auto& a : cl)
                for (const auto& b : cl)
                    for (const auto& c : cl) {
                        auto lhs = P.bracket_cyclic(a, P.bracket_cyclic(b, c));
                        auto rhs = P.bracket_cyclic(P.bracket_cyclic(a, b), c) +
                                   P.bracket_cyclic(b, P.bracket_cyclic(a, c)) *
                                       Scalar(sign_of((deg(R, a) + s) * (deg(R, b) + s)));
                        CHECK(lhs == rhs);
                    }
        }
    }

    TEST_CASE("action on R is a Lie action by derivations")
    {
        for (const char* name : {"E1", "E2"}) {
            TruncatedAlgebra R(builtin_coalgebra(name), 5);
            DoublePoisson P(R);
            int s = P.shift();
            auto cl = classes(R, 4);
            for (const auto& a : cl)
                for (const auto& b : cl)
                    for (int wr = 1; wr <= 5 - std::max(weight(a), weight(b)); ++wr)
                        for (const auto& w : R.words(wr)) {
                            TensorElement r(w);
                            auto lhs = P.act_on_R(P.bracket_cyclic(a, b), r);
                            auto rhs = P.act_on_R(a, P.act_on_R(b, r)) -
                                       P.act_on_R(b, P.act_on_R(a, r)) *
                                           Scalar(sign_of((deg(R, a) + s) * (deg(R, b) + s)));
                            CHECK(lhs == rhs);
                        }
            // derivation rule and independence of the representative
            for (const auto& a : cl)
                for (const auto& u : R.words(2))
                    for (const auto& v : R.words(1)) {
                        TensorElement U(u), V(v);
                        auto lhs = P.act_on_R(a, R.multiply(U, V));
                        auto rhs = R.multiply(P.act_on_R(a, U), V) +
                                   R.multiply(U, P.act_on_R(a, V)) *
                                       Scalar(sign_of((deg(R, a) + s) * R.degree(u)));
                        CHECK(lhs == rhs);
                        CHECK(P.act_on_R(perturb_representative(R, a), U) == P.act_on_R(a, U));
                    }
        }
    }

    TEST_CASE("bracket does not depend on representatives")
    {
        TruncatedAlgebra R(builtin_coalgebra("E2"), 5);
        DoublePoisson P(R);
        for (int wa = 2; wa <= 3; ++wa)
            for (const auto& a : R.words(wa))
                for (const auto& b : R.words(2))
                    CHECK_NOTHROW(P.bracket_cyclic(TensorElement(a), TensorElement(b), true));
    }

    TEST_CASE("de Rham differential descends to the cyclic derivative")
    {
        for (const char* name : {"E1", "E2"}) {
            TruncatedAlgebra R(builtin_coalgebra(name), 5);
            DoublePoisson P(R);
            for (int w = 1; w <= 4; ++w)
                for (const auto& word : R.words(w)) {
                    TensorElement t(word);
                    CHECK(P.descend(P.de_rham(t)) == P.cyclic_derivative(t));
                    // ∂̄ vanishes on commutators
                    CHECK(P.cyclic_derivative(perturb_representative(R, t) - t).is_zero());
                    // act(α, v) = (id⊗⟨,⟩)(∂̄α ⊗ v)
                    for (int v = 0; v < R.letters(); ++v) {
                        TensorElement contracted;
                        for (const auto& [k, c] : P.cyclic_derivative(t))
                            contracted.add(k.first, c * R.V().pair(k.second, v));
                        CHECK(P.act_on_R(t, R.letter(v)) == contracted);
                    }
                }
        }
    }

    TEST_CASE("bracket is compatible with the differential (E2)")
    {
        TruncatedAlgebra R(builtin_coalgebra("E2"), 6);
        DoublePoisson P(R);
        int s = P.shift();
        auto cl = classes(R, 4);
        auto d = [&](const TensorElement& x) { return R.project_cyclic(R.cobar_differential(x)); };
        int nonzero = 0;
        for (const auto& a : cl)
            for (const auto& b : cl) {
                auto lhs = d(P.bracket_cyclic(a, b));
                auto rhs = (P.bracket_cyclic(d(a), b) + P.bracket_cyclic(a, d(b)) * Scalar(sign_of(deg(R, a)))) *
                           Scalar(sign_of(s));
                CHECK(lhs == rhs);
                nonzero += !lhs.is_zero();
            }
        CHECK(nonzero > 0);
    }

    TEST_CASE("λ^(2) is closed under the bracket and ∂̄ is equivariant")
    {
        for (const char* name : {"E1", "E2"}) {
            TruncatedAlgebra R(builtin_coalgebra(name), 6);
            DoublePoisson P(R);
            for (int wa = 2; wa <= 4; ++wa)
                for (int wb = 2; wb <= 4; ++wb)
                    for (const auto& a : R.lambda_basis(2, wa).classes)
                        for (const auto& b : R.lambda_basis(2, wb).classes) {
                            auto ab = P.bracket_cyclic(a, b);
                            CHECK((ab.is_zero() || R.in_lambda_span(ab, 2)));
                            CHECK(P.cyclic_derivative(ab) == P.act_on_oneform(a, P.cyclic_derivative(b)));
                        }
        }
    }

    TEST_CASE("β is a chain map and the cone squares to zero")
    {
        TruncatedAlgebra R(builtin_coalgebra("E2"), 5);
        DoublePoisson P(R);
        for (int p = 1; p <= 3; ++p)
            for (int w = 1; w <= 4; ++w)
                for (const auto& t : R.theta_basis(p, w)) {
                    CHECK(P.beta(P.oneform_differential(t)) == R.cobar_differential(P.beta(t)));
                    CHECK(R.in_theta_span(P.oneform_differential(t), p));
                }
        for (int p = 1; p <= 2; ++p) {
            auto cone = P.hochschild_cone(p);
            CHECK(cone.d.compose(cone.d).is_zero());
            auto h = homology(cone, 0, 4);
            CHECK(h.euler_consistent);
        }
    }
}
