#include <doctest.h>

#include "cyc/reps.hpp"

using namespace cyc;

namespace {

std::vector<TensorElement> classes(const TruncatedAlgebra& R, int max_weight)
{
    std::vector<TensorElement> out;
    for (int w = 1; w <= max_weight; ++w)
        for (const auto& c : R.cyclic_basis(w))
            out.emplace_back(c);
    return out;
}

std::vector<TensorElement> lambda_classes(const TruncatedAlgebra& R, int p, int lo, int hi)
{
    std::vector<TensorElement> out;
    for (int w = lo; w <= hi; ++w)
        for (const auto& c : R.lambda_basis(p, w).classes)
            out.push_back(c);
    return out;
}

int deg(const TruncatedAlgebra& R, const TensorElement& t) { return *R.degree(t); }

// Algebra automorphism of R_n induced by X ↦ gXg⁻¹ for g a signed permutation.
GCElement conjugate(const MatrixRep& M, const GCElement& f, const std::vector<int>& perm,
                    const std::vector<int>& signs)
{
    const GCAlgebra& A = M.algebra();
    int n = M.n();
    auto image = [&](int g) {
        int v = g / (n * n), i = (g / n) % n, j = g % n;
        return A.gen(M.generator(v, perm[i], perm[j])) * Scalar(signs[i] * signs[j]);
    };
    GCElement out;
    for (const auto& [m, c] : f) {
        GCElement t = A.one();
        for (int g : m)
            t = A.multiply(t, image(g));
        out.add(t, c);
    }
    return out;
}

}  // namespace

TEST_SUITE("reps")
{
    TEST_CASE("universal matrix representation")
    {
        TruncatedAlgebra R(builtin_coalgebra("E1"), 4);
        MatrixRep M1(R, 1), M2(R, 2);
        const GCAlgebra& A1 = M1.algebra();
        const GCAlgebra& A2 = M2.algebra();
        CHECK(M1.pi(R.letter(0))[0][0] == A1.gen(M1.generator(0, 0, 0)));
        GCElement expect = A2.multiply(A2.gen(M2.generator(0, 0, 0)), A2.gen(M2.generator(1, 0, 0))) +
                           A2.multiply(A2.gen(M2.generator(0, 0, 1)), A2.gen(M2.generator(1, 1, 0)));
        CHECK(M2.pi(TensorElement(Word{0, 1}))[0][0] == expect);
        GCMatrix id = M2.pi(R.one());
        CHECK(id[0][0] == A2.one());
        CHECK(id[0][1].is_zero());
        CHECK(M2.trace(R.letter(0)) == A2.gen(M2.generator(0, 0, 0)) + A2.gen(M2.generator(0, 1, 1)));
        CHECK(M1.trace(TensorElement(Word{0, 1})) ==
              A1.multiply(A1.gen(M1.generator(0, 0, 0)), A1.gen(M1.generator(1, 0, 0))));
        CHECK(M2.trace(TensorElement()).is_zero());
        CHECK(A2.gen_degree(M2.generator(1, 1, 0)) == 0);
    }

    TEST_CASE("π_n is a multiplicative chain map and the trace kills commutators")
    {
        for (const char* name : {"E1", "E2"}) {
            TruncatedAlgebra R(builtin_coalgebra(name), 4);
            for (int n : {1, 2}) {
                MatrixRep M(R, n);
                const GCAlgebra& A = M.algebra();
                CHECK_FALSE(A.check_d_squared());
                for (int w = 1; w <= 3; ++w)
                    for (const auto& word : R.words(w)) {
                        TensorElement t(word);
                        GCMatrix lhs = M.pi(t), rhs = M.pi(R.cobar_differential(t));
                        for (int i = 0; i < n; ++i)
                            for (int j = 0; j < n; ++j)
                                CHECK(A.d(lhs[i][j]) == rhs[i][j]);
                        CHECK(M.trace(perturb_representative(R, t)) == M.trace(t));
                        for (const auto& other : R.words(1))
                            CHECK(M.pi(R.multiply(t, TensorElement(other))) ==
                                  M.multiply(M.pi(t), M.pi(TensorElement(other))));
                    }
            }
        }
    }

    TEST_CASE("trace images are invariant under signed permutations")
    {
        TruncatedAlgebra R(builtin_coalgebra("E2"), 4);
        MatrixRep M(R, 2);
        for (const auto& c : classes(R, 4)) {
            GCElement t = M.trace(c);
            CHECK(conjugate(M, t, {1, 0}, {1, 1}) == t);
            CHECK(conjugate(M, t, {0, 1}, {1, -1}) == t);
        }
    }

    TEST_CASE("matrix bracket reproduces the cyclic bracket")
    {
        TruncatedAlgebra E1(builtin_coalgebra("E1"), 6);
        MatrixRep M(E1, 2);
        DoublePoisson P(E1);
        const GCAlgebra& A = M.algebra();
        GCElement tx = M.trace(E1.letter(0)), ty = M.trace(E1.letter(1));
        CHECK(A.bracket(tx, ty) == A.one() * Scalar(2));
        CHECK(M.trace(P.bracket_R(E1.letter(0), E1.letter(1))) == A.one() * Scalar(2));
        CHECK(A.generator_bracket(M.generator(0, 1, 0), M.generator(1, 0, 1)) == 1);
        CHECK(A.generator_bracket(M.generator(0, 1, 0), M.generator(1, 1, 0)) == 0);
        CHECK(A.generator_bracket(M.generator(0, 0, 0), M.generator(0, 0, 0)) == 0);

        for (const char* name : {"E1", "E2"}) {
            TruncatedAlgebra R(builtin_coalgebra(name), 6);
            DoublePoisson D(R);
            for (int n : {1, 2}) {
                MatrixRep Mn(R, n);
                auto cl = classes(R, 4);
                int nonzero = 0;
                for (const auto& a : cl)
                    for (const auto& b : cl) {
                        GCElement lhs = Mn.trace(D.bracket_R(a, b));
                        CHECK(lhs == Mn.algebra().bracket(Mn.trace(a), Mn.trace(b)));
                        nonzero += !lhs.is_zero();
                    }
                CHECK(nonzero > 0);
            }
        }
    }

    TEST_CASE("Ω¹ trace: de Rham square, chain map and equivariance")
    {
        for (const char* name : {"E1", "E2"}) {
            TruncatedAlgebra R(builtin_coalgebra(name), 6);
            DoublePoisson D(R);
            for (int n : {1, 2}) {
                MatrixRep M(R, n);
                const GCAlgebra& A = M.algebra();
                for (const auto& a : classes(R, 3)) {
                    OneForm da = D.cyclic_derivative(a);
                    CHECK(M.omega1_trace(da) == A.kahler_d(M.trace(a)));
                    CHECK(M.omega1_trace(D.oneform_differential(da)) == A.form_differential(M.omega1_trace(da)));
                }
                for (int w = 1; w <= 3; ++w)
                    for (const auto& r : R.words(w - 1))
                        for (int v = 0; v < R.letters(); ++v) {
                            OneForm f;
                            f.add({r, v}, 1);
                            KahlerForm tf = M.omega1_trace(f);
                            CHECK(M.omega1_trace(D.oneform_differential(f)) == A.form_differential(tf));
                            for (const auto& a : classes(R, 3))
                                CHECK(M.omega1_trace(D.act_on_oneform(a, f)) == A.act_on_form(M.trace(a), tf));
                        }
            }
        }
        TruncatedAlgebra R(builtin_coalgebra("E1"), 3);
        MatrixRep M1(R, 1);
        OneForm f;
        f.add({Word{0}, 1}, 1);
        KahlerForm e;
        e.add({Monomial{M1.generator(0, 0, 0)}, M1.generator(1, 0, 0)}, 1);
        CHECK(M1.omega1_trace(f) == e);
    }

    TEST_CASE("𝓛_𝔤: π_𝔤 is a dg Lie map")
    {
        for (const char* name : {"E1", "E2"})
            for (const char* lie : {"sl2", "gl2"}) {
                TruncatedAlgebra R(builtin_coalgebra(name), 5);
                LieRep L(R, builtin_lie(lie));
                CHECK_FALSE(L.algebra().check_d_squared());
                for (int w = 1; w <= 3; ++w)
                    for (const auto& l : R.lie_basis(w).elements) {
                        CHECK(L.differential(L.pi(l)) == L.pi(R.cobar_differential(l)));
                        for (int v = 0; v < R.letters(); ++v)
                            CHECK(L.pi(R.commutator(R.letter(v), l)) == L.bracket(L.pi(R.letter(v)), L.pi(l)));
                    }
                CHECK_THROWS_AS(L.pi(TensorElement(Word{0, 1})), std::invalid_argument);
            }
        TruncatedAlgebra R(builtin_coalgebra("E1"), 3);
        LieRep L(R, builtin_lie("sl2"));
        auto p = L.pi(R.letter(0));
        CHECK(p[1] == L.algebra().gen(L.generator(0, 1)));
        CHECK(L.pi(TensorElement()) == LieRep::Valued(3));
    }

    TEST_CASE("Drinfeld traces")
    {
        for (const char* name : {"E1", "E2"}) {
            TruncatedAlgebra R(builtin_coalgebra(name), 6);
            DoublePoisson D(R);
            for (const char* lie : {"sl2", "gl2"}) {
                LieRep L(R, builtin_lie(lie));
                const GCAlgebra& A = L.algebra();
                const SymPoly& K = L.lie().invariant(2);
                auto lam2 = lambda_classes(R, 2, 2, 4);

                // the λ^(2)-action on 𝓛 is intertwined by π_𝔤
                for (const auto& a : lambda_classes(R, 2, 2, 3))
                    for (int w = 1; w <= 3; ++w)
                        for (const auto& l : R.lie_basis(w).elements)
                            CHECK(L.pi(D.act_on_R(a, l)) == L.act(L.drinfeld_trace(K, a), L.pi(l)));

                // Lie homomorphism on λ^(2)
                for (const auto& a : lam2)
                    for (const auto& b : lam2) {
                        auto ab = D.bracket_cyclic(a, b);
                        GCElement lhs = ab.is_zero() ? GCElement() : L.drinfeld_trace(K, ab);
                        CHECK(lhs == A.bracket(L.drinfeld_trace(K, a), L.drinfeld_trace(K, b)));
                    }

                // module homomorphism for every listed invariant
                for (const auto& P : L.lie().invariants) {
                    int p = P.degree;
                    for (const auto& a : lambda_classes(R, 2, 2, 3))
                        for (const auto& s : lambda_classes(R, p, std::max(1, p), std::min(4, p + 2))) {
                            auto as = D.bracket_cyclic(a, s);
                            GCElement lhs = as.is_zero() ? GCElement() : L.drinfeld_trace(P, as);
                            CHECK(lhs == A.bracket(L.drinfeld_trace(K, a), L.drinfeld_trace(P, s)));
                        }
                    // factors through λ^(p): Sym^p elements with zero cyclic image have zero trace
                    for (int w = p; w <= p + 2; ++w) {
                        const SymBasis& sb = R.sym_basis(p, w);
                        GradedSpace src, tgt;
                        for (std::size_t i = 0; i < sb.elements.size(); ++i)
                            src.add(std::to_string(i), 0);
                        auto cyc = R.cyclic_basis(w);
                        for (std::size_t i = 0; i < cyc.size(); ++i)
                            tgt.add(std::to_string(i), 0);
                        LinearMap proj(src, tgt, 0);
                        std::map<Word, int> pos;
                        for (std::size_t i = 0; i < cyc.size(); ++i)
                            pos[cyc[i]] = static_cast<int>(i);
                        for (std::size_t i = 0; i < sb.elements.size(); ++i)
                            for (const auto& [word, c] : R.project_cyclic(sb.elements[i]))
                                proj.add_entry(pos.at(word), static_cast<int>(i), c);
                        for (const auto& k : kernel(proj)) {
                            TensorElement s;
                            for (const auto& [i, c] : k)
                                s.add(sb.elements[i], c);
                            CHECK(L.drinfeld_sym(P, s).is_zero());
                        }
                    }
                }
            }
        }
    }

    TEST_CASE("Drinfeld trace reference values")
    {
        TruncatedAlgebra R(builtin_coalgebra("E1"), 4);
        LieRep L(R, builtin_lie("sl2"));
        const GCAlgebra& A = L.algebra();
        const auto& g = L.lie();
        // tr_κ(♮(xy)) = Σ κ_ab x_a(x) x_b(y)
        GCElement expect;
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                expect += A.multiply(A.gen(L.generator(0, a)), A.gen(L.generator(1, b))) * g.kappa[a][b];
        CHECK(L.drinfeld_trace(g.invariant(2), TensorElement(Word{0, 1})) == expect);
        SymPoly zero;
        zero.degree = 2;
        CHECK(L.drinfeld_trace(zero, TensorElement(Word{0, 1})).is_zero());
        SymPoly bad;
        bad.degree = 2;
        bad.name = "bad";
        bad.values[{0, 0}] = 1;
        CHECK(check_ad_invariant(g, bad));
        CHECK_THROWS_AS(L.drinfeld_trace(bad, TensorElement(Word{0, 1})), std::invalid_argument);
        CHECK_THROWS_AS(L.drinfeld_trace(g.invariant(2), TensorElement(Word{0, 0, 1})), std::invalid_argument);
        for (const auto& P : builtin_lie("gl2").invariants)
            CHECK_FALSE(check_ad_invariant(builtin_lie("gl2"), P));

        // θ-trace of 1⊗v with the trace on gl2: dx_e11(v) + dx_e22(v)
        LieRep G(R, builtin_lie("gl2"));
        OneForm t;
        t.add({Word{}, 0}, 1);
        KahlerForm e;
        e.add({Monomial{}, G.generator(0, 0)}, 1);
        e.add({Monomial{}, G.generator(0, 3)}, 1);
        CHECK(G.theta_trace(G.lie().invariant(1), t) == e);
        CHECK(G.theta_trace(G.lie().invariant(1), OneForm()).is_zero());
    }

    TEST_CASE("θ-traces: de Rham square, β square, chain map and equivariance")
    {
        for (const char* name : {"E1", "E2"}) {
            TruncatedAlgebra R(builtin_coalgebra(name), 6);
            DoublePoisson D(R);
            for (const char* lie : {"sl2", "gl2"}) {
                LieRep L(R, builtin_lie(lie));
                const GCAlgebra& A = L.algebra();
                const SymPoly& K = L.lie().invariant(2);
                for (const auto& P : L.lie().invariants) {
                    int p = P.degree - 1;
                    // λ^(p+1) --∂̄--> θ^(p) commutes with d after the traces
                    for (const auto& a : lambda_classes(R, p + 1, std::max(1, p + 1), std::min(4, p + 3))) {
                        OneForm da = D.cyclic_derivative(a);
                        REQUIRE(R.in_theta_span(da, p));
                        CHECK(L.theta_trace(P, da) == A.kahler_d(L.drinfeld_trace(P, a)));
                    }
                    for (int w = 1; w <= 3; ++w)
                        for (const auto& t : R.theta_basis(p, w)) {
                            KahlerForm tt = L.theta_trace(P, t);
                            CHECK(L.theta_trace(P, D.oneform_differential(t)) == A.form_differential(tt));
                            for (const auto& Q : L.lie().invariants)
                                if (Q.degree == p)
                                    CHECK(L.drinfeld_sym(Q, D.beta(t)).is_zero());
                            for (const auto& a : lambda_classes(R, 2, 2, 3))
                                CHECK(L.theta_trace(P, D.act_on_oneform(a, t)) ==
                                      A.act_on_form(L.drinfeld_trace(K, a), tt));
                        }
                }
            }
        }
    }
}
