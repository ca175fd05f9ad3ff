#include <doctest.h>

#include "cyc/gca.hpp"

#include <random>

using namespace cyc;

namespace {

// Oracle: bubble sort a generator sequence, one adjacent swap at a time.
std::pair<int, Monomial> bubble_canonical(const GCAlgebra& A, Monomial seq)
{
    int sign = 1;
    for (std::size_t pass = 0; pass < seq.size(); ++pass)
        for (std::size_t i = 0; i + 1 < seq.size(); ++i)
            if (seq[i] > seq[i + 1]) {
                sign *= sign_of(A.gen_degree(seq[i]) * A.gen_degree(seq[i + 1]));
                std::swap(seq[i], seq[i + 1]);
            }
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        if (seq[i] == seq[i + 1] && odd(A.gen_degree(seq[i])))
            return {0, {}};
    return {sign, seq};
}

GCAlgebra mixed_symplectic()
{
    // p (1), q (-1), r (0), t (0); {p,q} = 1, {r,t} = 1
    GradedSpace g;
    g.add("p", 1);
    g.add("q", -1);
    g.add("r", 0);
    g.add("t", 0);
    GCAlgebra A(g, 0);
    poisson_from_pairing(A, [](int i, int j) -> Scalar {
        if (i == 0 && j == 1) return 1;
        if (i == 1 && j == 0) return 1;
        if (i == 2 && j == 3) return 1;
        if (i == 3 && j == 2) return -1;
        return 0;
    });
    return A;
}

GCElement random_element(const GCAlgebra& A, std::mt19937& rng, int max_len)
{
    std::uniform_int_distribution<int> len(0, max_len), gen(0, A.size() - 1), coef(-2, 2);
    GCElement out;
    Monomial seq;
    int l = len(rng);
    for (int i = 0; i < l; ++i)
        seq.push_back(gen(rng));
    auto [s, m] = bubble_canonical(A, seq);
    if (s != 0)
        out.add(m, coef(rng) + 3);
    return out;
}

// generators A = s⁻¹a (0), B = s⁻¹b (1) of the coalgebra a (1), b (2), δb = a⊗a
GCAlgebra two_step()
{
    GradedSpace g;
    g.add("a", 1);
    g.add("b", 2);
    LinearMap d(g, g, -1);
    return ce_algebra(g, d, {{}, {{Scalar(1), 0, 0}}}, {"A", "B"});
}

}  // namespace

TEST_SUITE("gca")
{
    TEST_CASE("monomial canonicalization agrees with adjacent transpositions")
    {
        GradedSpace g;
        g.add("e0", 0);
        g.add("o1", 1);
        g.add("e2", 2);
        g.add("o3", -1);
        g.add("o4", 3);
        GCAlgebra A(g);
        std::mt19937 rng(7);
        std::uniform_int_distribution<int> pick(0, 4), len(0, 6);
        for (int trial = 0; trial < 400; ++trial) {
            Monomial seq;
            int l = len(rng);
            for (int i = 0; i < l; ++i)
                seq.push_back(pick(rng));
            GCElement prod = A.one();
            for (int x : seq)
                prod = A.multiply(prod, A.gen(x));
            auto [s, m] = bubble_canonical(A, seq);
            if (s == 0) {
                CHECK(prod.is_zero());
            } else {
                CHECK(prod == GCElement(m, s));
            }
            // any permutation of the input reaches the same monomial up to its own sign
            Monomial perm = seq;
            std::shuffle(perm.begin(), perm.end(), rng);
            GCElement p2 = A.one();
            for (int x : perm)
                p2 = A.multiply(p2, A.gen(x));
            auto [s2, m2] = bubble_canonical(A, perm);
            CHECK(m2 == m);
            if (s != 0)
                CHECK(p2 == GCElement(m, s2));
        }
    }

    TEST_CASE("symplectic bracket on two even generators")
    {
        GradedSpace g;
        g.add("g1", 0);
        g.add("g2", 0);
        GCAlgebra A(g);
        poisson_from_pairing(A, [](int i, int j) -> Scalar { return i == j ? 0 : (i == 0 ? 1 : -1); });
        GCElement g1sq = A.multiply(A.gen(0), A.gen(0));
        CHECK(A.bracket(g1sq, A.gen(1)) == A.gen(0) * Scalar(2));
        CHECK(A.bracket(A.gen(1), g1sq) == A.gen(0) * Scalar(-2));
        CHECK(A.bracket(A.one(), A.gen(1)).is_zero());

        GCAlgebra Z(g);
        poisson_from_pairing(Z, [](int, int) -> Scalar { return 0; });
        CHECK(Z.bracket(g1sq, Z.gen(1)).is_zero());
    }

    TEST_CASE("skew symmetry, Leibniz and Jacobi on random monomials")
    {
        GCAlgebra A = mixed_symplectic();
        int s = A.shift();
        std::mt19937 rng(11);
        for (int trial = 0; trial < 300; ++trial) {
            GCElement a = random_element(A, rng, 3), b = random_element(A, rng, 3), c = random_element(A, rng, 3);
            if (a.is_zero() || b.is_zero() || c.is_zero())
                continue;
            int da = *A.degree(a), db = *A.degree(b);
            CHECK(A.bracket(a, b) == A.bracket(b, a) * Scalar(-sign_of((da + s) * (db + s))));
            CHECK(A.bracket(a, A.multiply(b, c)) ==
                  A.multiply(A.bracket(a, b), c) + A.multiply(b, A.bracket(a, c)) * Scalar(sign_of((da + s) * db)));
            CHECK(A.bracket(a, A.bracket(b, c)) ==
                  A.bracket(A.bracket(a, b), c) + A.bracket(b, A.bracket(a, c)) * Scalar(sign_of((da + s) * (db + s))));
        }
    }

    TEST_CASE("Chevalley–Eilenberg algebras")
    {
        GCAlgebra A = two_step();
        CHECK(A.gen_degree(0) == 0);
        CHECK(A.gen_degree(1) == 1);
        CHECK(A.generator_differential(1) == A.multiply(A.gen(0), A.gen(0)) * frac(-1, 2));
        CHECK_FALSE(A.check_d_squared());

        // d² on random quadratic monomials
        std::mt19937 rng(3);
        for (int trial = 0; trial < 50; ++trial) {
            GCElement f = random_element(A, rng, 4);
            CHECK(A.d(A.d(f)).is_zero());
        }

        // zero cobracket and zero differential
        GradedSpace g;
        g.add("u", 1);
        g.add("w", 3);
        GCAlgebra Z = ce_algebra(g, LinearMap(g, g, -1), {{}, {}});
        CHECK(Z.generator_differential(0).is_zero());
        CHECK(Z.generator_differential(1).is_zero());

        // internal differential enters with a minus sign
        g.degrees[1] = 2;
        LinearMap dg2(g, g, -1);
        dg2.add_entry(0, 1, 1);
        GCAlgebra I = ce_algebra(g, dg2, {{}, {}});
        CHECK(I.generator_differential(1) == I.gen(0) * Scalar(-1));
    }

    TEST_CASE("co-Jacobi failure is rejected")
    {
        GradedSpace g;
        g.add("a", 1);
        g.add("b", 2);
        g.add("c", 3);
        std::vector<std::vector<std::tuple<Scalar, int, int>>> cob = {
            {}, {{Scalar(1), 0, 0}}, {{Scalar(1), 0, 1}, {Scalar(-1), 1, 0}}};
        CHECK_THROWS_AS(ce_algebra(g, LinearMap(g, g, -1), cob), InputError);
    }

    TEST_CASE("bracket compatibility with the differential")
    {
        // {A,B} = 1 with shift -1 is not compatible with dB = -½A²
        GCAlgebra A = two_step();
        GCAlgebra bad(A.generators(), -1);
        bad.set_differential(1, A.generator_differential(1));
        try {
            poisson_from_pairing(bad, [](int i, int j) -> Scalar { return i == j ? 0 : (i == 0 ? 1 : -1); });
            FAIL("expected an error");
        } catch (const InputError& e) {
            CHECK(std::string(e.what()).find("{B,B}") != std::string::npos);
        }
        // wrong degree
        GCAlgebra wrong(A.generators(), 0);
        CHECK_THROWS_AS(poisson_from_pairing(wrong, [](int i, int j) -> Scalar { return i != j ? 1 : 0; }),
                        InputError);
    }

    TEST_CASE("Kähler forms")
    {
        GCAlgebra A = mixed_symplectic();
        CHECK(A.kahler_d(A.one()).is_zero());
        GCElement pr = A.multiply(A.gen(0), A.gen(2));
        KahlerForm expect;
        expect.add({Monomial{2}, 0}, 1);
        expect.add({Monomial{0}, 2}, 1);
        CHECK(A.kahler_d(pr) == expect);
        GCElement pq = A.multiply(A.gen(0), A.gen(1));
        KahlerForm e2;
        e2.add({Monomial{1}, 0}, -1);  // dp moved past q: (-1)^{1·(-1)}
        e2.add({Monomial{0}, 1}, 1);
        CHECK(A.kahler_d(pq) == e2);

        // d is a derivation into forms and commutes with Hamiltonian actions
        std::mt19937 rng(5);
        for (int trial = 0; trial < 200; ++trial) {
            GCElement f = random_element(A, rng, 3), h = random_element(A, rng, 3), eta = random_element(A, rng, 2);
            if (f.is_zero() || h.is_zero() || eta.is_zero())
                continue;
            int df = *A.degree(f);
            KahlerForm lhs = A.kahler_d(A.multiply(f, h));
            KahlerForm rhs = A.multiply(f, A.kahler_d(h)) + A.multiply(h, A.kahler_d(f)) *
                                                                 Scalar(sign_of(df * *A.degree(h)));
            CHECK(lhs == rhs);
            CHECK(A.act_on_form(eta, A.kahler_d(f)) == A.kahler_d(A.bracket(eta, f)));
        }

        // d commutes with the differential on a CE algebra
        GCAlgebra C = two_step();
        for (int k = 0; k <= 4; ++k)
            for (const auto& m : C.monomials(k))
                CHECK(C.form_differential(C.kahler_d(GCElement(m))) == C.kahler_d(C.d(GCElement(m))));
    }

    TEST_CASE("truncated complex and its soundness")
    {
        GCAlgebra C = two_step();
        ChainComplex cx = C.complex(4);
        CHECK(cx.d.compose(cx.d).is_zero());
        // degree-0 generator with a non-linear differential: nothing is sound
        CHECK(cx.sound_lo > cx.sound_hi);
        CHECK_THROWS_AS(homology(cx, 0, 1), BoundaryUnsound);

        GradedSpace g;
        g.add("a", 2);
        g.add("b", 2);
        g.add("c", 4);
        GCAlgebra E = ce_algebra(g, LinearMap(g, g, -1), {{}, {}, {{Scalar(1), 0, 1}, {Scalar(-1), 1, 0}}});
        CHECK(E.generator_differential(2) == E.multiply(E.gen(0), E.gen(1)));
        ChainComplex ex = E.complex(3);
        CHECK(ex.sound_hi == 3);
        HomologyReport h = homology(ex, 0, 2);
        CHECK(h.at(0).dim == 1);
        CHECK(h.at(1).dim == 2);
        CHECK(h.at(2).dim == 0);
        CHECK(h.euler_consistent);
        CHECK(homology_dims_dense(ex, 0, 2) == std::vector<int>{1, 2, 0});
    }
}
