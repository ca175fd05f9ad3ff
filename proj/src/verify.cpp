#include "cyc/verify.hpp"

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <sstream>
#include <thread>

namespace cyc {

namespace {

// First failure wins; enumeration order is fixed, so witnesses are stable.
struct Tally {
    long count = 0;
    std::optional<std::string> witness;
    bool minimized = false;

    bool failed() const { return witness.has_value(); }
    void fail(const std::string& w, bool shrunk = false)
    {
        if (!witness) {
            witness = w;
            minimized = shrunk;
        }
    }
    CheckOutcome outcome() const { return {count, witness, minimized}; }
};

std::vector<CyclicCoalgebra> coalgebras(const RunConfig& cfg, std::vector<std::string> defaults)
{
    if (cfg.coalgebra)
        return {*cfg.coalgebra};
    std::vector<CyclicCoalgebra> out;
    for (const auto& n : defaults)
        out.push_back(builtin_coalgebra(n));
    return out;
}

std::string where(const TruncatedAlgebra& R)
{
    return R.coalgebra().name + ": ";
}

std::vector<TensorElement> classes(const TruncatedAlgebra& R, int lo, int hi)
{
    std::vector<TensorElement> out;
    for (int w = lo; w <= hi; ++w)
        for (const auto& c : R.cyclic_basis(w))
            out.emplace_back(c);
    return out;
}

std::vector<TensorElement> lambda_classes(const TruncatedAlgebra& R, int p, int lo, int hi)
{
    std::vector<TensorElement> out;
    for (int w = std::max(lo, 1); w <= hi; ++w)
        for (const auto& c : R.lambda_basis(p, w).classes)
            out.push_back(c);
    return out;
}

int deg(const TruncatedAlgebra& R, const TensorElement& t) { return *R.degree(t); }

int weight_of(const TensorElement& t) { return static_cast<int>(t.begin()->first.size()); }

std::string shown(const TruncatedAlgebra& R, const std::vector<Word>& args, const char* names = "abc")
{
    std::string s;
    for (std::size_t i = 0; i < args.size(); ++i)
        s += std::string(i ? ", " : "") + names[i] + " = " + R.show(args[i]);
    return s;
}

void require_W(const RunConfig& cfg, int lo, int hi, const std::string& what)
{
    if (cfg.W < lo || cfg.W > hi)
        throw CheckRefused(what + " needs a weight bound between " + std::to_string(lo) + " and " +
                           std::to_string(hi) + " (got " + std::to_string(cfg.W) + ")");
}

// ---- freealg ------------------------------------------------------------------

CheckOutcome freealg_d_squared(const RunConfig& cfg)
{
    Tally t;
    for (auto& c : coalgebras(cfg, {"E1", "E2", "E1_symplectic_pair(2)"})) {
        TruncatedAlgebra R(c, cfg.W);
        for (int w = 0; w <= cfg.W; ++w)
            for (const auto& word : R.words(w)) {
                ++t.count;
                auto dd = R.cobar_differential(R.cobar_differential(TensorElement(word)));
                if (!dd.is_zero())
                    t.fail(where(R) + "d²(" + R.show(word) + ") = " + R.show(dd));
            }
    }
    return t.outcome();
}

CheckOutcome freealg_rotation(const RunConfig& cfg)
{
    Tally t;
    for (auto& c : coalgebras(cfg, {"E1", "E2"})) {
        TruncatedAlgebra R(c, cfg.W);
        auto fails = [&](const std::vector<Word>& ab) {
            TensorElement U(ab[0]), V(ab[1]);
            return R.project_cyclic(R.multiply(U, V)) !=
                   R.project_cyclic(R.multiply(V, U)) * Scalar(sign_of(R.degree(ab[0]) * R.degree(ab[1])));
        };
        for (int a = 1; a < cfg.W; ++a)
            for (int b = 1; a + b <= cfg.W; ++b)
                for (const auto& u : R.words(a))
                    for (const auto& v : R.words(b)) {
                        ++t.count;
                        if (!t.failed() && fails({u, v})) {
                            auto s = shrink_words({u, v}, fails);
                            t.fail(where(R) + "♮(ab) ≠ ±♮(ba) for " + shown(R, s), true);
                        }
                    }
    }
    return t.outcome();
}

CheckOutcome freealg_pbw(const RunConfig& cfg)
{
    Tally t;
    for (auto& c : coalgebras(cfg, {"E1", "E2"})) {
        TruncatedAlgebra R(c, cfg.W);
        for (int w = 0; w <= cfg.W; ++w) {
            std::map<int, int> sym_count;
            std::map<int, Echelon> span;
            for (int p = 0; p <= w; ++p)
                for (const auto& e : R.sym_basis(p, w).elements) {
                    int d = *R.degree(e);
                    ++sym_count[d];
                    if (span[d].insert(R.to_vec(e)))
                        t.fail(where(R) + "symmetric powers are dependent in weight " + std::to_string(w) +
                               ", degree " + std::to_string(d));
                }
            std::map<int, int> words;
            for (const auto& word : R.words(w))
                ++words[R.degree(word)];
            for (const auto& [d, n] : words) {
                ++t.count;
                if (sym_count[d] != n)
                    t.fail(where(R) + "weight " + std::to_string(w) + ", degree " + std::to_string(d) + ": Σ_p dim Sym^p = " +
                           std::to_string(sym_count[d]) + " but dim T(V) = " + std::to_string(n));
            }
        }
    }
    return t.outcome();
}

CheckOutcome freealg_hodge(const RunConfig& cfg)
{
    Tally t;
    for (auto& c : coalgebras(cfg, {"E1", "E2"})) {
        TruncatedAlgebra R(c, cfg.W);
        for (int w = 1; w <= cfg.W; ++w) {
            std::map<int, int> count;
            std::map<int, Echelon> span;
            for (int p = 1; p <= w; ++p)
                for (const auto& cl : R.lambda_basis(p, w).classes) {
                    int d = *R.degree(cl);
                    ++count[d];
                    if (span[d].insert(R.to_vec(cl)))
                        t.fail(where(R) + "λ-spans are dependent in weight " + std::to_string(w) + ", degree " +
                               std::to_string(d) + " (at p = " + std::to_string(p) + ")");
                }
            std::map<int, int> cyc;
            for (const auto& word : R.cyclic_basis(w))
                ++cyc[R.degree(word)];
            for (const auto& [d, n] : cyc) {
                ++t.count;
                if (count[d] != n)
                    t.fail(where(R) + "weight " + std::to_string(w) + ", degree " + std::to_string(d) + ": Σ_p dim λ^(p) = " +
                           std::to_string(count[d]) + " but the cyclic space has dimension " + std::to_string(n));
            }
        }
    }
    return t.outcome();
}

CheckOutcome freealg_lie_subcomplex(const RunConfig& cfg)
{
    Tally t;
    for (auto& c : coalgebras(cfg, {"E1", "E2"})) {
        if (!c.cocommutative)
            continue;
        TruncatedAlgebra R(c, cfg.W);
        for (int w = 1; w <= cfg.W; ++w)
            for (std::size_t i = 0; i < R.lie_basis(w).elements.size(); ++i) {
                ++t.count;
                const auto& e = R.lie_basis(w).elements[i];
                auto d = R.cobar_differential(e);
                if (!d.is_zero() && !R.in_lie_span(d))
                    t.fail(where(R) + "d[" + R.show(R.lie_basis(w).sequences[i]) + "] = " + R.show(d) +
                           " leaves the Lie span");
            }
    }
    return t.outcome();
}

// ---- dpois --------------------------------------------------------------------

CheckOutcome dpois_skew(const RunConfig& cfg)
{
    Tally t;
    for (auto& c : coalgebras(cfg, {"E1", "E2"})) {
        TruncatedAlgebra R(c, cfg.W + 1);
        DoublePoisson P(R);
        int s = P.shift();
        auto fails = [&](const std::vector<Word>& ab) {
            TensorElement a(ab[0]), b(ab[1]);
            if (R.project_cyclic(a).is_zero() || R.project_cyclic(b).is_zero())
                return false;
            return P.bracket_cyclic(a, b) !=
                   P.bracket_cyclic(b, a) * Scalar(-sign_of((R.degree(ab[0]) + s) * (R.degree(ab[1]) + s)));
        };
        auto cl = classes(R, 1, cfg.W + 1);
        for (const auto& a : cl)
            for (const auto& b : cl) {
                ++t.count;
                Word u = a.begin()->first, v = b.begin()->first;
                if (!t.failed() && fails({u, v})) {
                    auto sh = shrink_words({u, v}, fails);
                    TensorElement A(sh[0]), B(sh[1]);
                    t.fail(where(R) + shown(R, sh) + ": {a,b} = " + R.show(P.bracket_cyclic(A, B)) +
                           ", {b,a} = " + R.show(P.bracket_cyclic(B, A)),
                           true);
                }
            }
    }
    return t.outcome();
}

CheckOutcome dpois_jacobi(const RunConfig& cfg)
{
    Tally t;
    for (auto& c : coalgebras(cfg, {"E1", "E2"})) {
        TruncatedAlgebra R(c, cfg.W);
        DoublePoisson P(R);
        int s = P.shift();
        auto sides = [&](const std::vector<Word>& abc) {
            TensorElement a(abc[0]), b(abc[1]), cc(abc[2]);
            auto lhs = P.bracket_cyclic(a, P.bracket_cyclic(b, cc));
            auto rhs = P.bracket_cyclic(P.bracket_cyclic(a, b), cc) +
                       P.bracket_cyclic(b, P.bracket_cyclic(a, cc)) *
                           Scalar(sign_of((R.degree(abc[0]) + s) * (R.degree(abc[1]) + s)));
            return std::make_pair(lhs, rhs);
        };
        auto fails = [&](const std::vector<Word>& abc) {
            for (const auto& w : abc)
                if (R.project_cyclic(TensorElement(w)).is_zero())
                    return false;
            auto [l, r] = sides(abc);
            return l != r;
        };
        auto cl = classes(R, 1, cfg.W);
        for (const auto& a : cl)
            for (const auto& b : cl)
                for (const auto& cc : cl) {
                    ++t.count;
                    std::vector<Word> abc{a.begin()->first, b.begin()->first, cc.begin()->first};
                    if (!t.failed() && fails(abc)) {
                        auto sh = shrink_words(abc, fails);
                        auto [l, r] = sides(sh);
                        t.fail(where(R) + shown(R, sh) + ": {a,{b,c}} = " + R.show(l) +
                               " but {{a,b},c} ± {b,{a,c}} = " + R.show(r),
                               true);
                    }
                }
    }
    return t.outcome();
}

CheckOutcome dpois_lie_action(const RunConfig& cfg)
{
    Tally t;
    for (auto& c : coalgebras(cfg, {"E1", "E2"})) {
        TruncatedAlgebra R(c, cfg.W + 1);
        DoublePoisson P(R);
        int s = P.shift();
        auto sides = [&](const std::vector<Word>& abr) {
            TensorElement a(abr[0]), b(abr[1]), r(abr[2]);
            auto lhs = P.act_on_R(P.bracket_cyclic(a, b), r);
            auto rhs = P.act_on_R(a, P.act_on_R(b, r)) -
                       P.act_on_R(b, P.act_on_R(a, r)) *
                           Scalar(sign_of((R.degree(abr[0]) + s) * (R.degree(abr[1]) + s)));
            return std::make_pair(lhs, rhs);
        };
        auto fails = [&](const std::vector<Word>& abr) {
            if (abr[2].empty() || R.project_cyclic(TensorElement(abr[0])).is_zero() ||
                R.project_cyclic(TensorElement(abr[1])).is_zero())
                return false;
            auto [l, r] = sides(abr);
            return l != r;
        };
        auto cl = classes(R, 1, cfg.W);
        for (const auto& a : cl)
            for (const auto& b : cl)
                for (int wr = 1; wr <= cfg.W + 1 - std::max(weight_of(a), weight_of(b)); ++wr)
                    for (const auto& w : R.words(wr)) {
                        ++t.count;
                        std::vector<Word> abr{a.begin()->first, b.begin()->first, w};
                        if (!t.failed() && fails(abr)) {
                            auto sh = shrink_words(abr, fails);
                            auto [l, r] = sides(sh);
                            t.fail(where(R) + shown(R, sh, "abr") + ": {{a,b}, r} = " + R.show(l) +
                                   " but {a,{b,r}} ∓ {b,{a,r}} = " + R.show(r),
                                   true);
                        }
                    }
    }
    return t.outcome();
}

CheckOutcome dpois_chain_map(const RunConfig& cfg)
{
    Tally t;
    for (auto& c : coalgebras(cfg, {"E2"})) {
        TruncatedAlgebra R(c, cfg.W + 2);
        DoublePoisson P(R);
        int s = P.shift();
        auto d = [&](const TensorElement& x) { return R.project_cyclic(R.cobar_differential(x)); };
        auto cl = classes(R, 1, cfg.W);
        for (const auto& a : cl)
            for (const auto& b : cl) {
                ++t.count;
                auto lhs = d(P.bracket_cyclic(a, b));
                auto rhs = (P.bracket_cyclic(d(a), b) + P.bracket_cyclic(a, d(b)) * Scalar(sign_of(deg(R, a)))) *
                           Scalar(sign_of(s));
                if (lhs != rhs)
                    t.fail(where(R) + "a = " + R.show(a) + ", b = " + R.show(b) + ": d{a,b} = " + R.show(lhs) +
                           " but ±({da,b} ± {a,db}) = " + R.show(rhs));
            }
    }
    return t.outcome();
}

CheckOutcome dpois_lambda2_closure(const RunConfig& cfg)
{
    Tally t;
    for (auto& c : coalgebras(cfg, {"E1", "E2"})) {
        TruncatedAlgebra R(c, 2 * cfg.W);
        DoublePoisson P(R);
        for (int p = 1; p <= 3; ++p)
            for (const auto& a : lambda_classes(R, 2, 2, cfg.W))
                for (const auto& b : lambda_classes(R, p, p, cfg.W)) {
                    ++t.count;
                    auto ab = P.bracket_cyclic(a, b);
                    if (!ab.is_zero() && !R.in_lambda_span(ab, p))
                        t.fail(where(R) + "{" + R.show(a) + ", " + R.show(b) + "} = " + R.show(ab) +
                               " is not in λ^(" + std::to_string(p) + ")");
                }
    }
    return t.outcome();
}

CheckOutcome dpois_derivative_equivariance(const RunConfig& cfg)
{
    Tally t;
    for (auto& c : coalgebras(cfg, {"E1", "E2"})) {
        TruncatedAlgebra R(c, 2 * cfg.W);
        DoublePoisson P(R);
        for (const auto& a : lambda_classes(R, 2, 2, cfg.W))
            for (const auto& b : classes(R, 1, cfg.W)) {
                ++t.count;
                auto lhs = P.cyclic_derivative(P.bracket_cyclic(a, b));
                auto rhs = P.act_on_oneform(a, P.cyclic_derivative(b));
                if (lhs != rhs)
                    t.fail(where(R) + "α = " + R.show(a) + ", β = " + R.show(b) + ": ∂̄{α,β} = " + R.show(lhs) +
                           " but {α, ∂̄β} = " + R.show(rhs));
            }
    }
    return t.outcome();
}

// ---- reps -----------------------------------------------------------------------

CheckOutcome reps_trace_equivariance(const RunConfig& cfg)
{
    Tally t;
    for (auto& c : coalgebras(cfg, {"E1", "E2"})) {
        TruncatedAlgebra R(c, cfg.W);
        DoublePoisson P(R);
        for (int n = 1; n <= cfg.n; ++n) {
            MatrixRep M(R, n);
            auto cl = classes(R, 1, cfg.W);
            for (const auto& a : cl)
                for (const auto& b : cl) {
                    ++t.count;
                    auto lhs = M.trace(P.bracket_R(a, b));
                    auto rhs = M.algebra().bracket(M.trace(a), M.trace(b));
                    if (lhs != rhs)
                        t.fail(where(R) + "n = " + std::to_string(n) + ", a = " + R.show(a) + ", b = " + R.show(b) +
                               ": tr{a,b} = " + M.algebra().show(lhs) + " but {tr a, tr b} = " +
                               M.algebra().show(rhs));
                }
        }
    }
    return t.outcome();
}

CheckOutcome reps_trace_dg_lie(const RunConfig& cfg)
{
    Tally t;
    for (auto& c : coalgebras(cfg, {"E1", "E2"})) {
        TruncatedAlgebra R(c, cfg.W + 1);
        DoublePoisson P(R);
        for (int n = 1; n <= cfg.n; ++n) {
            MatrixRep M(R, n);
            const GCAlgebra& A = M.algebra();
            if (auto e = A.check_d_squared())
                t.fail(where(R) + "n = " + std::to_string(n) + ": " + *e);
            auto cl = classes(R, 1, cfg.W);
            for (const auto& a : cl) {
                ++t.count;
                auto lhs = M.trace(R.cobar_differential(a));
                auto rhs = A.d(M.trace(a));
                if (lhs != rhs)
                    t.fail(where(R) + "n = " + std::to_string(n) + ", a = " + R.show(a) + ": tr(da) = " + A.show(lhs) +
                           " but d tr(a) = " + A.show(rhs));
                for (const auto& b : cl) {
                    if (weight_of(a) + weight_of(b) > cfg.W + 1)
                        continue;
                    ++t.count;
                    auto l2 = M.trace(P.bracket_R(a, b));
                    auto r2 = A.bracket(M.trace(a), M.trace(b));
                    if (l2 != r2)
                        t.fail(where(R) + "n = " + std::to_string(n) + ": tr{" + R.show(a) + ", " + R.show(b) +
                               "} = " + A.show(l2) + " but {tr, tr} = " + A.show(r2));
                }
            }
        }
    }
    return t.outcome();
}

template <class F>
void for_lie(const RunConfig& cfg, const TruncatedAlgebra& R, F f)
{
    if (!R.coalgebra().cocommutative)
        return;
    for (const auto& name : cfg.lie) {
        LieRep L(R, builtin_lie(name));
        f(L, name + " on " + R.coalgebra().name + ": ");
    }
}

CheckOutcome reps_univrep(const RunConfig& cfg)
{
    Tally t;
    int top = std::max(cfg.W - 1, 2);
    for (auto& c : coalgebras(cfg, {"E1", "E2"})) {
        TruncatedAlgebra R(c, 2 * cfg.W);
        DoublePoisson P(R);
        for_lie(cfg, R, [&](const LieRep& L, const std::string& at) {
            const SymPoly& K = L.lie().invariant(2);
            for (const auto& a : lambda_classes(R, 2, 2, top)) {
                GCElement ta = L.drinfeld_trace(K, a);
                for (int w = 1; w <= top; ++w)
                    for (const auto& l : R.lie_basis(w).elements) {
                        ++t.count;
                        auto lhs = L.pi(P.act_on_R(a, l));
                        auto rhs = L.act(ta, L.pi(l));
                        if (lhs != rhs)
                            t.fail(at + "π{α, l} ≠ {tr_κ α, π l} for α = " + R.show(a) + ", l = " + R.show(l));
                    }
            }
        });
    }
    return t.outcome();
}

CheckOutcome reps_liehomom(const RunConfig& cfg)
{
    Tally t;
    for (auto& c : coalgebras(cfg, {"E1", "E2"})) {
        TruncatedAlgebra R(c, 2 * cfg.W);
        DoublePoisson P(R);
        for_lie(cfg, R, [&](const LieRep& L, const std::string& at) {
            const SymPoly& K = L.lie().invariant(2);
            const GCAlgebra& A = L.algebra();
            auto lam = lambda_classes(R, 2, 2, cfg.W);
            for (const auto& a : lam)
                for (const auto& b : lam) {
                    ++t.count;
                    auto ab = P.bracket_cyclic(a, b);
                    GCElement lhs = ab.is_zero() ? GCElement() : L.drinfeld_trace(K, ab);
                    GCElement rhs = A.bracket(L.drinfeld_trace(K, a), L.drinfeld_trace(K, b));
                    if (lhs != rhs)
                        t.fail(at + "tr_κ{" + R.show(a) + ", " + R.show(b) + "} = " + A.show(lhs) +
                               " but {tr_κ, tr_κ} = " + A.show(rhs));
                }
        });
    }
    return t.outcome();
}

CheckOutcome reps_intertwining(const RunConfig& cfg)
{
    Tally t;
    int top = std::max(cfg.W - 1, 2);
    for (auto& c : coalgebras(cfg, {"E1", "E2"})) {
        TruncatedAlgebra R(c, 2 * cfg.W);
        DoublePoisson P(R);
        for_lie(cfg, R, [&](const LieRep& L, const std::string& at) {
            const SymPoly& K = L.lie().invariant(2);
            const GCAlgebra& A = L.algebra();
            for (const auto& Pp : L.lie().invariants) {
                int p = Pp.degree;
                if (p > 3)
                    continue;
                for (const auto& a : lambda_classes(R, 2, 2, top))
                    for (const auto& s : lambda_classes(R, p, p, std::min(cfg.W, p + 2))) {
                        ++t.count;
                        auto as = P.bracket_cyclic(a, s);
                        GCElement lhs = as.is_zero() ? GCElement() : L.drinfeld_trace(Pp, as);
                        GCElement rhs = A.bracket(L.drinfeld_trace(K, a), L.drinfeld_trace(Pp, s));
                        if (lhs != rhs)
                            t.fail(at + "P = " + Pp.name + ": tr_P{" + R.show(a) + ", " + R.show(s) + "} = " +
                                   A.show(lhs) + " but {tr_κ α, tr_P s} = " + A.show(rhs));
                    }
                // factorization through λ^(p): kernel of Sym^p → cyclic words has zero trace
                for (int w = p; w <= std::min(cfg.W, p + 2); ++w) {
                    const SymBasis& sb = R.sym_basis(p, w);
                    GradedSpace src, tgt;
                    for (std::size_t i = 0; i < sb.elements.size(); ++i)
                        src.add(std::to_string(i), 0);
                    auto cyc = R.cyclic_basis(w);
                    std::map<Word, int> pos;
                    for (std::size_t i = 0; i < cyc.size(); ++i)
                        pos[cyc[i]] = tgt.add(std::to_string(i), 0);
                    LinearMap proj(src, tgt, 0);
                    for (std::size_t i = 0; i < sb.elements.size(); ++i)
                        for (const auto& [word, cf] : R.project_cyclic(sb.elements[i]))
                            proj.add_entry(pos.at(word), static_cast<int>(i), cf);
                    for (const auto& k : kernel(proj)) {
                        ++t.count;
                        TensorElement s;
                        for (const auto& [i, cf] : k)
                            s.add(sb.elements[i], cf);
                        auto v = L.drinfeld_sym(Pp, s);
                        if (!v.is_zero())
                            t.fail(at + "P = " + Pp.name + " does not vanish on " + R.show(s) +
                                   ", which is zero in the cyclic words: " + A.show(v));
                    }
                }
            }
        });
    }
    return t.outcome();
}

CheckOutcome reps_descent_square(const RunConfig& cfg)
{
    Tally t;
    int top = std::max(cfg.W - 1, 2);
    for (auto& c : coalgebras(cfg, {"E1", "E2"})) {
        TruncatedAlgebra R(c, 2 * cfg.W);
        DoublePoisson P(R);
        for_lie(cfg, R, [&](const LieRep& L, const std::string& at) {
            const GCAlgebra& A = L.algebra();
            const SymPoly& K = L.lie().invariant(2);
            for (const auto& Pp : L.lie().invariants) {
                int p = Pp.degree - 1;
                if (p > 2)
                    continue;
                std::string tag = at + "P = " + Pp.name + ": ";
                for (const auto& a : lambda_classes(R, p + 1, p + 1, std::min(cfg.W, p + 3))) {
                    ++t.count;
                    OneForm da = P.cyclic_derivative(a);
                    if (!R.in_theta_span(da, p))
                        t.fail(tag + "∂̄" + R.show(a) + " = " + R.show(da) + " is not in θ^(" + std::to_string(p) + ")");
                    else if (L.theta_trace(Pp, da) != A.kahler_d(L.drinfeld_trace(Pp, a)))
                        t.fail(tag + "θ-trace ∘ ∂̄ ≠ d ∘ tr_P on " + R.show(a));
                }
                for (int w = 1; w <= top; ++w)
                    for (const auto& th : R.theta_basis(p, w)) {
                        ++t.count;
                        KahlerForm tt = L.theta_trace(Pp, th);
                        if (L.theta_trace(Pp, P.oneform_differential(th)) != A.form_differential(tt))
                            t.fail(tag + "θ-trace is not a chain map on " + R.show(th));
                        for (const auto& Q : L.lie().invariants)
                            if (Q.degree == p && !L.drinfeld_sym(Q, P.beta(th)).is_zero())
                                t.fail(tag + "tr_" + Q.name + " ∘ β ≠ 0 on " + R.show(th));
                        for (const auto& a : lambda_classes(R, 2, 2, top))
                            if (L.theta_trace(Pp, P.act_on_oneform(a, th)) !=
                                A.act_on_form(L.drinfeld_trace(K, a), tt))
                                t.fail(tag + "θ-trace is not equivariant: α = " + R.show(a) + ", t = " + R.show(th));
                    }
            }
        });
    }
    return t.outcome();
}

CheckOutcome reps_assoc_square(const RunConfig& cfg)
{
    Tally t;
    int top = std::max(cfg.W - 1, 2);
    for (auto& c : coalgebras(cfg, {"E1", "E2"})) {
        TruncatedAlgebra R(c, 2 * cfg.W);
        DoublePoisson P(R);
        for (int n = 1; n <= cfg.n; ++n) {
            MatrixRep M(R, n);
            const GCAlgebra& A = M.algebra();
            std::string at = where(R) + "n = " + std::to_string(n) + ": ";
            for (const auto& a : classes(R, 1, top)) {
                ++t.count;
                OneForm da = P.cyclic_derivative(a);
                if (M.omega1_trace(da) != A.kahler_d(M.trace(a)))
                    t.fail(at + "Ω¹-trace ∘ ∂̄ ≠ d ∘ tr on " + R.show(a));
                if (M.omega1_trace(P.oneform_differential(da)) != A.form_differential(M.omega1_trace(da)))
                    t.fail(at + "Ω¹-trace is not a chain map on ∂̄" + R.show(a));
            }
            for (int w = 1; w <= top; ++w)
                for (const auto& r : R.words(w - 1))
                    for (int v = 0; v < R.letters(); ++v) {
                        OneForm f;
                        f.add({r, v}, 1);
                        KahlerForm tf = M.omega1_trace(f);
                        ++t.count;
                        if (M.omega1_trace(P.oneform_differential(f)) != A.form_differential(tf))
                            t.fail(at + "Ω¹-trace is not a chain map on " + R.show(f));
                        for (const auto& a : classes(R, 1, top))
                            if (M.omega1_trace(P.act_on_oneform(a, f)) != A.act_on_form(M.trace(a), tf))
                                t.fail(at + "Ω¹-trace is not equivariant: α = " + R.show(a) + ", " + R.show(f));
                    }
        }
    }
    return t.outcome();
}

// ---- operadcore -------------------------------------------------------------------

// Two letters of degrees 1 and 0, pairing of odd shift s = -1.
CyclicCoalgebra odd_even_pair()
{
    auto c = make_coalgebra("odd_even", {{"x", 2}, {"y", 1}}, -3);
    c.pairing[0][1] = 1;
    c.pairing[1][0] = 1;
    c.cocommutative = true;
    return c;
}

std::vector<CyclicOperadData> operads(const RunConfig& cfg, int M, bool need_M = true)
{
    if (cfg.operad) {
        if (need_M && cfg.operad->max_arity < M)
            throw CheckRefused("operad " + cfg.operad->name + " is truncated at arity " +
                               std::to_string(cfg.operad->max_arity) + " but the bounds need arity " + std::to_string(M));
        return {*cfg.operad};
    }
    return {builtin_operad("Ass", M), builtin_operad("Com", M), builtin_operad("Lie", M)};
}

std::vector<CyclicCoalgebra> patterns(const RunConfig& cfg)
{
    if (cfg.coalgebra)
        return {*cfg.coalgebra};
    return {builtin_coalgebra("E1"), odd_even_pair()};
}

// Arity bound needed for triple brackets of classes of arity ≤ W.
int operad_arity(const RunConfig& cfg)
{
    require_W(cfg, 1, 4, "the operadic checks");
    return std::max(2 * cfg.W - 3, std::max(cfg.W, 1));
}

template <class F>
void guarded(Tally& t, const std::string& at, F f)
{
    try {
        f();
    } catch (const OperadActionError& e) {
        t.fail(at + e.what());
    }
}

CheckOutcome operad_validate(const RunConfig& cfg)
{
    Tally t;
    for (const auto& op : operads(cfg, 5, false)) {
        auto rep = validate_operad(op);
        for (const auto& r : rep.identities) {
            ++t.count;
            // arities are scanned upwards, so the witness sits at the smallest failing arity
            if (!r.holds)
                t.fail(op.name + ": " + r.name + ": " + r.witness, true);
        }
    }
    return t.outcome();
}

CheckOutcome operad_jacobi(const RunConfig& cfg)
{
    Tally t;
    int M = operad_arity(cfg);
    for (const auto& op : operads(cfg, M))
        for (const auto& pat : patterns(cfg)) {
            OperadAlgebra A(op, shifted_space(pat));
            std::string at = op.name + " over " + pat.name + ": ";
            guarded(t, at, [&] {
                int s = A.shift();
                std::vector<OperadAlgebra::CycElem> cl;
                for (int w = 2; w <= cfg.W + 1; ++w)
                    for (const auto& k : A.cyclic_basis(w))
                        cl.emplace_back(k);
                auto wt = [](const OperadAlgebra::CycElem& e) { return static_cast<int>(e.begin()->first.second.size()); };
                auto sh = [&](const OperadAlgebra::CycElem& e) { return *A.degree(e) + s; };
                for (const auto& a : cl)
                    for (const auto& b : cl) {
                        if (wt(a) + wt(b) > 2 * cfg.W + 2 - 2)
                            continue;
                        ++t.count;
                        auto ab = A.bracket(a, b);
                        if (ab != A.bracket(b, a) * Scalar(-sign_of(sh(a) * sh(b))))
                            t.fail(at + "skew symmetry fails for " + A.show(a, true) + ", " + A.show(b, true));
                        for (const auto& c : cl) {
                            if (wt(a) + wt(b) + wt(c) > 2 * cfg.W + 2)
                                continue;
                            ++t.count;
                            auto lhs = A.bracket(a, A.bracket(b, c));
                            auto rhs = A.bracket(ab, c) + A.bracket(b, A.bracket(a, c)) * Scalar(sign_of(sh(a) * sh(b)));
                            if (lhs != rhs)
                                t.fail(at + "Jacobi fails for " + A.show(a, true) + ", " + A.show(b, true) + ", " +
                                       A.show(c, true) + ": lhs = " + A.show(lhs, true) + ", rhs = " + A.show(rhs, true));
                        }
                    }
            });
        }
    return t.outcome();
}

std::vector<Word> sorted_contents(int len, int letters)
{
    std::vector<Word> out;
    if (letters == 0)
        return out;
    Word w(len, 0);
    while (true) {
        out.push_back(w);
        int j = len - 1;
        while (j >= 0 && w[j] == letters - 1)
            --j;
        if (j < 0)
            break;
        ++w[j];
        for (int k = j + 1; k < len; ++k)
            w[k] = w[j];
    }
    return out;
}

CheckOutcome operad_natural_dims(const RunConfig& cfg)
{
    Tally t;
    int M = operad_arity(cfg);
    for (const auto& op : operads(cfg, M))
        for (const auto& pat : patterns(cfg)) {
            OperadAlgebra A(op, shifted_space(pat));
            TruncatedAlgebra R(pat, cfg.W + 1);
            std::string at = op.name + " over " + pat.name + ": ";
            guarded(t, at, [&] {
                for (int m = 1; m <= cfg.W; ++m) {
                    auto keys = A.cyclic_basis(m + 1);
                    for (const auto& content : sorted_contents(m + 1, A.V().size())) {
                        ++t.count;
                        long n = std::count_if(keys.begin(), keys.end(), [&](const auto& k) { return k.second == content; });
                        Scalar avg = coinvariant_dimension_by_averaging(A, m, content);
                        if (Scalar(n) != avg) {
                            std::string letters;
                            for (int x : content)
                                letters += A.V().names[x];
                            t.fail(at + "arity " + std::to_string(m) + ", letters " + letters + ": " +
                                   std::to_string(n) + " canonical classes but averaging gives " + to_string(avg));
                        }
                    }
                    // independent descriptions of the cyclic space where one is known
                    std::optional<std::size_t> expect;
                    if (op.name == "Ass")
                        expect = R.cyclic_basis(m + 1).size();
                    else if (op.name == "Lie" && pat.cocommutative)
                        expect = R.lambda_basis(2, m + 1).classes.size();
                    if (expect) {
                        ++t.count;
                        if (*expect != keys.size())
                            t.fail(at + "weight " + std::to_string(m + 1) + ": " + std::to_string(keys.size()) +
                                   " classes but the cyclic words give " + std::to_string(*expect));
                    }
                }
            });
        }
    return t.outcome();
}

CheckOutcome operad_ass_consistency(const RunConfig& cfg)
{
    Tally t;
    int M = operad_arity(cfg);
    for (const auto& op : operads(cfg, M)) {
        if (op.ass_embedding.empty())
            continue;
        for (const auto& pat : patterns(cfg)) {
            TruncatedAlgebra R(pat, 2 * cfg.W);
            DoublePoisson P(R);
            OperadAlgebra A(op, shifted_space(pat));
            std::string at = op.name + " over " + pat.name + ": ";
            guarded(t, at, [&] {
                std::vector<OperadAlgebra::CycElem> cl;
                for (int w = 2; w <= cfg.W; ++w)
                    for (const auto& k : A.cyclic_basis(w))
                        cl.emplace_back(k);
                for (const auto& a : cl) {
                    auto ia = A.to_cyclic_words(a, R);
                    int wa = static_cast<int>(a.begin()->first.second.size());
                    ++t.count;
                    if (A.to_oneform(A.cyclic_derivative(a)) != P.cyclic_derivative(ia))
                        t.fail(at + "∂̄ differs on " + A.show(a, true));
                    for (const auto& b : cl) {
                        int wb = static_cast<int>(b.begin()->first.second.size());
                        if (wa + wb > 2 * cfg.W - 2)
                            continue;
                        ++t.count;
                        auto ib = A.to_cyclic_words(b, R);
                        auto lhs = A.to_cyclic_words(A.bracket(a, b), R);
                        auto rhs = P.bracket_cyclic(ia, ib);
                        if (lhs != rhs)
                            t.fail(at + "bracket of " + A.show(a, true) + ", " + A.show(b, true) + " maps to " +
                                   R.show(lhs) + " but the double bracket gives " + R.show(rhs));
                    }
                    for (int w = 1; w <= 2; ++w)
                        for (const auto& k : A.free_basis(w)) {
                            ++t.count;
                            OperadAlgebra::FreeElem x(k);
                            if (A.to_tensor(A.act(a, x)) != P.act_on_R(ia, A.to_tensor(x)))
                                t.fail(at + "action of " + A.show(a, true) + " on " + A.show(x, false) + " differs");
                        }
                }
            });
        }
    }
    return t.outcome();
}

// ---- homology cross-checks --------------------------------------------------------

CheckOutcome homology_check(const std::string& target, const RunConfig& cfg)
{
    Tally t;
    auto cx = target_complex(target, cfg);
    int lo = std::max(cx.sound_lo, -64), hi = std::min(cx.sound_hi, 64);
    // a window of degrees inside the sound range that contains chains
    int cmin = INT_MAX, cmax = INT_MIN;
    for (int d : cx.space.degrees) {
        cmin = std::min(cmin, d);
        cmax = std::max(cmax, d);
    }
    lo = std::max(lo + 1, cmin);
    hi = std::min(hi - 1, cmax);
    if (lo > hi)
        throw CheckRefused(target + ": no sound degrees to compare (" + cx.soundness + ")");
    auto tab = homology_crosscheck(target, cfg, lo, hi);
    for (int k = lo; k <= hi; ++k) {
        ++t.count;
        if (tab.sparse_dims[k - lo] != tab.dense_dims[k - lo])
            t.fail(target + ": degree " + std::to_string(k) + ": sparse elimination gives " +
                   std::to_string(tab.sparse_dims[k - lo]) + ", dense elimination gives " +
                   std::to_string(tab.dense_dims[k - lo]));
    }
    if (!tab.euler_consistent)
        t.fail(target + ": Euler characteristic identity fails on " + std::to_string(lo) + ".." + std::to_string(hi));
    return t.outcome();
}

CheckOutcome trace_homology_check(const RunConfig& cfg)
{
    Tally t;
    for (auto& c : coalgebras(cfg, {"E1", "E2"})) {
        TruncatedAlgebra R(c, cfg.W);
        // every cyclic cycle of weight ≤ 2 goes to a cycle of R_n
        auto cx = R.cyclic_complex();
        for (const auto& a : classes(R, 1, std::min(cfg.W, 2))) {
            if (!R.project_cyclic(R.cobar_differential(a)).is_zero())
                continue;
            RunConfig sub = cfg;
            sub.coalgebra = c;
            try {
                auto tr = trace_on_homology(R, a, "Rn", sub);
                ++t.count;
                (void)tr;
            } catch (const BoundaryUnsound&) {
                continue;
            }
        }
        // representative independence of the bracket on homology
        auto cl = classes(R, 1, std::max(cfg.W - 2, 1));
        for (const auto& a : cl)
            for (const auto& b : cl) {
                if (!R.project_cyclic(R.cobar_differential(a)).is_zero() ||
                    !R.project_cyclic(R.cobar_differential(b)).is_zero())
                    continue;
                auto rep = bracket_on_homology(R, a, b);
                t.count += rep.count;
                if (rep.status == CheckStatus::Fail)
                    t.fail(where(R) + *rep.witness);
            }
    }
    return t.outcome();
}

std::vector<CheckSpec> make_registry()
{
    using K = CheckKind;
    return {
        {"freealg.d-squared", "freealg", "the cobar differential squares to zero on every basis word", K::Identity,
         freealg_d_squared},
        {"freealg.rotation", "freealg", "cyclic projection of a product is invariant under signed rotation",
         K::Identity, freealg_rotation},
        {"freealg.pbw", "freealg", "symmetric powers of the free Lie algebra fill the tensor algebra (PBW), per weight and degree",
         K::DimensionEquality, freealg_pbw},
        {"freealg.hodge", "freealg", "the λ^(p) spans are independent and sum to the cyclic words (Hodge decomposition)",
         K::DimensionEquality, freealg_hodge},
        {"freealg.lie-subcomplex", "freealg", "for cocommutative coalgebras the cobar differential preserves the free Lie algebra",
         K::SpanContainment, freealg_lie_subcomplex},

        {"dpois.skew", "dpois", "graded skew symmetry of the cyclic bracket with shift n+2", K::Identity, dpois_skew},
        {"dpois.jacobi", "dpois", "graded Jacobi identity of the cyclic bracket with shift n+2", K::Identity,
         dpois_jacobi},
        {"dpois.lie-action", "dpois", "the action of cyclic classes on R is a Lie action", K::Identity,
         dpois_lie_action},
        {"dpois.chain-map", "dpois", "the cobar differential is a derivation of the cyclic bracket", K::Identity,
         dpois_chain_map},
        {"dpois.lambda2-closure", "dpois", "{λ^(2), λ^(p)} ⊆ λ^(p) for p ≤ 3", K::SpanContainment,
         dpois_lambda2_closure},
        {"dpois.derivative-equivariance", "dpois", "the cyclic derivative intertwines the λ^(2) actions",
         K::SquareCommutes, dpois_derivative_equivariance},

        {"reps.trace-equivariance", "reps", "the matrix trace R♮ → R_n is equivariant (preserves brackets)",
         K::Identity, reps_trace_equivariance},
        {"reps.trace-dg-lie", "reps", "the matrix trace is a map of dg Lie algebras", K::Identity, reps_trace_dg_lie},
        {"reps.univrep", "reps", "π_𝔤 intertwines the λ^(2) action on 𝓛 with the Drinfeld-trace action",
         K::SquareCommutes, reps_univrep},
        {"reps.liehomom", "reps", "the Drinfeld trace with the invariant form is a Lie homomorphism on λ^(2)",
         K::Identity, reps_liehomom},
        {"reps.intertwining", "reps", "Drinfeld traces λ^(p) → 𝓛_𝔤 are λ^(2)-module maps (p ≤ 3)", K::Identity,
         reps_intertwining},
        {"reps.descent-square", "reps", "θ-traces: the de Rham square commutes and the maps are λ^(2)-equivariant",
         K::SquareCommutes, reps_descent_square},
        {"reps.assoc-square", "reps", "Ω¹-trace ∘ ∂̄ = d ∘ trace, with both traces equivariant", K::SquareCommutes,
         reps_assoc_square},

        {"operadcore.jacobi", "operadcore", "the operadic cyclic bracket is skew and satisfies Jacobi", K::Identity,
         operad_jacobi},
        {"operadcore.natural-dims", "operadcore", "cyclic space of a free algebra = ⊕ P(m)⊗_{S_{m+1}} V^{⊗(m+1)}",
         K::DimensionEquality, operad_natural_dims},
        {"operadcore.validate", "operadcore", "τ relations, action, unit, associativity and equivariance of builtins",
         K::Identity, operad_validate},
        {"operadcore.ass-consistency", "operadcore", "operadic constructions specialize to the double Poisson ones",
         K::SquareCommutes, operad_ass_consistency},

        {"verify.homology-cobar", "verify", "cobar homology by two elimination routes; Euler characteristic",
         K::DimensionEquality, [](const RunConfig& c) { return homology_check("cobar", c); }},
        {"verify.homology-rn", "verify", "homology of R_n by two elimination routes; Euler characteristic",
         K::DimensionEquality, [](const RunConfig& c) { return homology_check("Rn", c); }},
        {"verify.homology-lg", "verify", "homology of 𝓛_𝔤 by two elimination routes; Euler characteristic",
         K::DimensionEquality, [](const RunConfig& c) { return homology_check("Lg", c); }},
        {"verify.homology-cone", "verify", "homology of the cone of β by two elimination routes; Euler characteristic",
         K::DimensionEquality, [](const RunConfig& c) { return homology_check("cone", c); }},
        {"verify.trace-on-homology", "verify", "traces of cycles are cycles; the bracket on homology is independent of representatives",
         K::Identity, trace_homology_check},
    };
}

}  // namespace

const std::vector<CheckSpec>& registry()
{
    static const std::vector<CheckSpec> r = make_registry();
    return r;
}

std::vector<const CheckSpec*> select_checks(const std::string& selector)
{
    std::vector<const CheckSpec*> out;
    for (const auto& s : registry()) {
        auto dot = s.name.find('.');
        if (selector == "all" || selector == s.module || selector == s.name || selector == s.name.substr(dot + 1))
            out.push_back(&s);
    }
    return out;
}

std::vector<Word> shrink_words(std::vector<Word> args, const std::function<bool(const std::vector<Word>&)>& fails)
{
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < args.size() && !changed; ++i)
            for (std::size_t j = 0; j < args[i].size() && args[i].size() > 1 && !changed; ++j) {
                auto cand = args;
                cand[i].erase(cand[i].begin() + j);
                if (fails(cand)) {
                    args = std::move(cand);
                    changed = true;
                }
            }
    }
    return args;
}

CheckReport run_check(const CheckSpec& spec, const RunConfig& cfg)
{
    CheckReport r;
    r.name = spec.name;
    r.paper_ref = spec.paper_ref;
    auto start = std::chrono::steady_clock::now();
    try {
        auto o = spec.run(cfg);
        r.count = o.count;
        r.witness = o.witness;
        r.minimized = o.minimized;
        r.status = o.witness ? CheckStatus::Fail : CheckStatus::Pass;
    } catch (const CheckRefused& e) {
        r.status = CheckStatus::Refused;
        r.witness = e.what();
    } catch (const BoundaryUnsound& e) {
        r.status = CheckStatus::Refused;
        r.witness = e.what();
    } catch (const std::invalid_argument& e) {
        r.status = CheckStatus::Refused;
        r.witness = e.what();
    } catch (const std::exception& e) {
        r.status = CheckStatus::Fail;
        r.witness = std::string("exception: ") + e.what();
    }
    r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<CheckReport> run_suite(const std::vector<const CheckSpec*>& specs, const RunConfig& cfg)
{
    std::vector<CheckReport> out(specs.size());
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("CYC_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1)
            threads = static_cast<unsigned>(v);
    }
    threads = std::min<unsigned>(threads, std::max<std::size_t>(specs.size(), 1));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < specs.size(); i = next++)
            out[i] = run_check(*specs[i], cfg);
    };
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < threads; ++i)
        pool.emplace_back(worker);
    worker();
    for (auto& th : pool)
        th.join();
    return out;
}

std::string status_name(CheckStatus s)
{
    switch (s) {
    case CheckStatus::Pass:
        return "pass";
    case CheckStatus::Fail:
        return "fail";
    case CheckStatus::Refused:
        return "refused";
    }
    return "?";
}

std::string report_json(const std::string& suite, const std::vector<CheckReport>& reports, bool timing)
{
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json c;
        c["name"] = r.name;
        c["paper_ref"] = r.paper_ref;
        c["status"] = status_name(r.status);
        if (r.witness)
            c["witness"] = *r.witness;
        if (r.status == CheckStatus::Fail)
            c["minimized"] = r.minimized;
        c["count"] = r.count;
        c["millis"] = timing ? r.millis : 0;
        j["checks"].push_back(std::move(c));
    }
    return j.dump(2) + "\n";
}

// ---- homology ------------------------------------------------------------------------

ChainComplex target_complex(const std::string& target, const RunConfig& cfg)
{
    CyclicCoalgebra c = cfg.coalgebra ? *cfg.coalgebra : builtin_coalgebra("E2");
    if (target == "cobar")
        return TruncatedAlgebra(c, cfg.W).cobar_complex();
    if (target == "cyclic")
        return TruncatedAlgebra(c, cfg.W).cyclic_complex();
    if (target == "Rn") {
        TruncatedAlgebra R(c, cfg.W);
        return MatrixRep(R, cfg.n).algebra().complex(cfg.D);
    }
    if (target == "Lg") {
        TruncatedAlgebra R(c, cfg.W);
        if (cfg.lie.empty())
            throw std::invalid_argument("no Lie algebra selected");
        return LieRep(R, builtin_lie(cfg.lie.front())).algebra().complex(cfg.D);
    }
    if (target.rfind("cone", 0) == 0) {
        int p = 1;
        if (target.size() > 5 && target[4] == ':')
            p = std::stoi(target.substr(5));
        else if (target != "cone")
            throw std::invalid_argument("unknown homology target '" + target + "'");
        TruncatedAlgebra R(c, cfg.W);
        return DoublePoisson(R).hochschild_cone(p);
    }
    throw std::invalid_argument("unknown homology target '" + target + "' (expected cobar, cyclic, Rn, Lg or cone)");
}

HomologyTable homology_crosscheck(const std::string& target, const RunConfig& cfg, int lo, int hi)
{
    HomologyTable tab;
    tab.target = target;
    auto cx = target_complex(target, cfg);
    tab.soundness = cx.soundness;
    tab.lo = lo;
    tab.hi = hi;
    auto h = homology(cx, lo, hi);
    tab.dense_dims = homology_dims_dense(cx, lo, hi);
    for (const auto& d : h.degrees) {
        tab.chain_dims.push_back(d.chain_dim);
        tab.sparse_dims.push_back(d.dim);
    }
    tab.euler_consistent = h.euler_consistent;
    return tab;
}

Vec complex_coordinates(const GCAlgebra& A, int D, const GCElement& f)
{
    std::map<Monomial, int> index;
    int i = 0;
    for (int k = 0; k <= D; ++k)
        for (auto& m : A.monomials(k))
            index[m] = i++;
    Vec v;
    for (const auto& [m, c] : f) {
        auto it = index.find(m);
        if (it == index.end())
            throw std::invalid_argument("monomial " + A.show(m) + " exceeds polynomial degree " + std::to_string(D));
        v.add(it->second, c);
    }
    return v;
}

TraceResult trace_on_homology(const TruncatedAlgebra& R, const TensorElement& alpha, const std::string& target,
                              const RunConfig& cfg)
{
    TraceResult out;
    out.target = target;
    TensorElement a = R.project_cyclic(alpha);
    auto da = R.project_cyclic(R.cobar_differential(a));
    if (!da.is_zero())
        throw std::invalid_argument("the class " + R.show(a) + " is not a cycle: its differential is " + R.show(da));
    std::optional<MatrixRep> M;
    std::optional<LieRep> L;
    const GCAlgebra* A = nullptr;
    if (target == "Rn") {
        M.emplace(R, cfg.n);
        A = &M->algebra();
        out.image = M->trace(a);
    } else if (target == "Lg") {
        if (cfg.lie.empty())
            throw std::invalid_argument("no Lie algebra selected");
        L.emplace(R, builtin_lie(cfg.lie.front()));
        A = &L->algebra();
        out.image = a.is_zero() ? GCElement() : L->drinfeld_trace(L->lie().invariant(2), a);
    } else {
        throw std::invalid_argument("trace target must be Rn or Lg");
    }
    out.image_text = A->show(out.image);
    out.degree = a.is_zero() ? 0 : deg(R, a);
    int D = cfg.D;
    for (const auto& [m, c] : out.image)
        D = std::max<int>(D, static_cast<int>(m.size()));
    auto cx = A->complex(D);
    int k = out.degree;
    auto h = homology(cx, k, k);
    const auto& hk = h.at(k);
    for (const auto& rep : hk.representatives)
        out.homology_basis.push_back(to_string(rep, cx.space));
    out.homology_coordinates = homology_class(cx, h, k, complex_coordinates(*A, D, out.image));

    // second route: the trace as a chain map R♮ → R_n and its induced map on homology
    if (M && R.W() <= D) {
        auto cyc = R.cyclic_complex();
        if (cyc.sound_lo < k - 1 && k + 1 < cyc.sound_hi) {
            LinearMap tr(cyc.space, cx.space, 0);
            std::map<Word, int> idx;
            int j = 0;
            for (int w = 1; w <= R.W(); ++w)
                for (const auto& word : R.cyclic_basis(w)) {
                    idx[word] = j;
                    for (const auto& [i, c] : complex_coordinates(*A, D, M->trace(TensorElement(word))))
                        tr.add_entry(i, j, c);
                    ++j;
                }
            Vec src;
            for (const auto& [word, c] : a)
                src += Vec(idx.at(word), c);
            auto hc = homology(cyc, k, k);
            auto source_class = homology_class(cyc, hc, k, src);
            auto f = induced_map_on_homology(tr, cyc, cx, k, k);
            const auto& m = f.matrices.front();
            std::vector<Scalar> via(m.size());
            for (std::size_t r = 0; r < m.size(); ++r)
                for (std::size_t c = 0; c < source_class.size(); ++c)
                    via[r] += m[r][c] * source_class[c];
            if (via != out.homology_coordinates)
                throw std::logic_error("induced map on homology disagrees with the direct class of the trace");
            out.induced_route = true;
        }
    }
    return out;
}

CheckReport bracket_on_homology(const TruncatedAlgebra& R, const TensorElement& a0, const TensorElement& b0)
{
    CheckReport r;
    r.name = "verify.bracket-on-homology";
    r.paper_ref = "the bracket descends to cyclic homology";
    DoublePoisson P(R);
    TensorElement a = R.project_cyclic(a0), b = R.project_cyclic(b0);
    auto d = [&](const TensorElement& x) { return R.project_cyclic(R.cobar_differential(x)); };
    if (!d(a).is_zero() || !d(b).is_zero())
        throw std::invalid_argument("bracket on homology needs cycles");
    auto ab = P.bracket_cyclic(a, b);
    if (a.is_zero() || b.is_zero()) {
        r.count = 1;
        return r;
    }
    int da = deg(R, a);
    // boundaries of weight ≤ W in degree |a|
    for (int w = 1; w <= R.W(); ++w)
        for (const auto& g : R.cyclic_basis(w, da + 1)) {
            auto bd = d(TensorElement(g));
            if (bd.is_zero())
                continue;
            ++r.count;
            auto diff = P.bracket_cyclic(a + bd, b) - ab;
            if (diff.is_zero())
                continue;
            // diff must be a boundary: compare with the span of d on degree |diff| + 1
            auto deg_diff = R.degree(diff);
            Echelon bds;
            int top = 0;
            for (const auto& [word, c] : diff)
                top = std::max<int>(top, static_cast<int>(word.size()));
            for (int w2 = 1; w2 <= top; ++w2)
                for (const auto& h : R.cyclic_basis(w2, *deg_diff + 1))
                    bds.insert(R.to_vec(d(TensorElement(h))));
            if (!bds.contains(R.to_vec(diff))) {
                r.status = CheckStatus::Fail;
                r.witness = "{" + R.show(a) + " + d" + R.show(g) + ", " + R.show(b) + "} - {a, b} = " + R.show(diff) +
                            " is not a boundary";
                return r;
            }
        }
    return r;
}

}  // namespace cyc
