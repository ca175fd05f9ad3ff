#include "cyc/reps.hpp"

#include <functional>

namespace cyc {

namespace {

// Splits the generator differential of a letter into its linear and
// quadratic parts: (coefficient, u) and (coefficient, u, w).
void split_generator_differential(const TruncatedAlgebra& R, int v, std::vector<std::pair<Scalar, int>>& linear,
                                  std::vector<std::tuple<Scalar, int, int>>& quadratic)
{
    for (const auto& [w, c] : R.generator_differential(v)) {
        if (w.size() == 1)
            linear.emplace_back(c, w[0]);
        else if (w.size() == 2)
            quadratic.emplace_back(c, w[0], w[1]);
        else
            throw std::logic_error("generator differential has a term of length " + std::to_string(w.size()));
    }
}

}  // namespace

MatrixRep::MatrixRep(const TruncatedAlgebra& R, int n) : R_(R), n_(n)
{
    if (n < 1)
        throw std::invalid_argument("matrix size must be positive");
    const VSpace& V = R.V();
    int L = R.letters();
    GradedSpace G;
    std::vector<std::string> labels;
    for (int v = 0; v < L; ++v)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                std::string ij = "[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]";
                G.add("e" + ij + "⊗" + V.names[v], V.degrees[v] + 1);
                labels.push_back(V.names[v] + ij);
            }
    LinearMap dG(G, G, -1);
    std::vector<std::vector<std::tuple<Scalar, int, int>>> cob(G.dim());
    for (int v = 0; v < L; ++v) {
        std::vector<std::pair<Scalar, int>> lin;
        std::vector<std::tuple<Scalar, int, int>> quad;
        split_generator_differential(R, v, lin, quad);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                int g = generator(v, i, j);
                for (const auto& [c, u] : lin)
                    dG.add_entry(generator(u, i, j), g, -c);
                // D(e^ij⊗c) = Σ_k (e^ik⊗c')⊗(e^kj⊗c''), cobracket D - τD
                for (const auto& [q, u, w] : quad) {
                    Scalar c = q * sign_of(V.degrees[u] + 1);
                    int tau = sign_of(static_cast<long>(V.degrees[u] + 1) * (V.degrees[w] + 1));
                    for (int k = 0; k < n; ++k) {
                        cob[g].emplace_back(c, generator(u, i, k), generator(w, k, j));
                        cob[g].emplace_back(-c * tau, generator(w, k, j), generator(u, i, k));
                    }
                }
            }
    }
    A_ = ce_algebra(G, dG, cob, labels, V.shift);
    poisson_from_pairing(A_, [&](int x, int y) -> Scalar {
        int u = x / (n * n), a = (x / n) % n, b = x % n;
        int w = y / (n * n), c = (y / n) % n, d = y % n;
        return (b == c && a == d) ? V.pair(u, w) : Scalar(0);
    });
}

GCMatrix MatrixRep::multiply(const GCMatrix& a, const GCMatrix& b) const
{
    GCMatrix out(n_, std::vector<GCElement>(n_));
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            if (a[i][k].is_zero())
                continue;
            for (int j = 0; j < n_; ++j)
                out[i][j] += A_.multiply(a[i][k], b[k][j]);
        }
    return out;
}

GCMatrix MatrixRep::pi(const TensorElement& r) const
{
    GCMatrix out(n_, std::vector<GCElement>(n_));
    for (const auto& [w, c] : r) {
        GCMatrix m(n_, std::vector<GCElement>(n_));
        for (int i = 0; i < n_; ++i)
            m[i][i] = A_.one();
        for (int v : w) {
            GCMatrix g(n_, std::vector<GCElement>(n_));
            for (int i = 0; i < n_; ++i)
                for (int j = 0; j < n_; ++j)
                    g[i][j] = A_.gen(generator(v, i, j));
            m = multiply(m, g);
        }
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                out[i][j].add(m[i][j], c);
    }
    return out;
}

GCElement MatrixRep::trace(const TensorElement& r) const
{
    GCMatrix m = pi(r);
    GCElement t;
    for (int i = 0; i < n_; ++i)
        t += m[i][i];
    return t;
}

KahlerForm MatrixRep::omega1_trace(const OneForm& w) const
{
    KahlerForm out;
    for (const auto& [k, c] : w) {
        GCMatrix m = pi(TensorElement(k.first));
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                KahlerForm dx;
                dx.add({Monomial{}, generator(k.second, j, i)}, c);
                out += A_.multiply(m[i][j], dx);
            }
    }
    return out;
}

LieRep::LieRep(const TruncatedAlgebra& R, LieAlgebraData g) : R_(R), g_(std::move(g))
{
    if (!R.coalgebra().cocommutative)
        throw std::invalid_argument("𝓛_𝔤 needs a cocommutative coalgebra");
    const VSpace& V = R.V();
    int L = R.letters(), m = g_.dim();
    GradedSpace G;
    std::vector<std::string> labels;
    for (int v = 0; v < L; ++v)
        for (int a = 0; a < m; ++a) {
            G.add(g_.basis[a] + "*⊗" + V.names[v], V.degrees[v] + 1);
            labels.push_back(V.names[v] + ":" + g_.basis[a]);
        }
    LinearMap dG(G, G, -1);
    std::vector<std::vector<std::tuple<Scalar, int, int>>> cob(G.dim());
    for (int v = 0; v < L; ++v) {
        std::vector<std::pair<Scalar, int>> lin;
        std::vector<std::tuple<Scalar, int, int>> quad;
        split_generator_differential(R, v, lin, quad);
        for (int a = 0; a < m; ++a) {
            int x = generator(v, a);
            for (const auto& [c, u] : lin)
                dG.add_entry(generator(u, a), x, -c);
            // δ(ξ^a⊗c) = Σ f^a_bc (ξ^b⊗c')⊗(ξ^c⊗c'')
            for (const auto& [q, u, w] : quad)
                for (int b = 0; b < m; ++b)
                    for (int e = 0; e < m; ++e) {
                        Scalar f = g_.structure(b, e, a);
                        if (sgn(f) != 0)
                            cob[x].emplace_back(f * q * sign_of(V.degrees[u] + 1), generator(u, b), generator(w, e));
                    }
        }
    }
    A_ = ce_algebra(G, dG, cob, labels, V.shift);
    poisson_from_pairing(A_, [&](int x, int y) -> Scalar {
        return g_.kappa_inverse[x % m][y % m] * V.pair(x / m, y / m);
    });
}

LieRep::Valued LieRep::bracket(const Valued& a, const Valued& b) const
{
    int m = g_.dim();
    Valued out(m);
    for (int i = 0; i < m; ++i) {
        if (a[i].is_zero())
            continue;
        for (int j = 0; j < m; ++j) {
            if (b[j].is_zero() || g_.bracket[i][j].is_zero())
                continue;
            GCElement prod = A_.multiply(a[i], b[j]);
            for (const auto& [k, f] : g_.bracket[i][j])
                out[k].add(prod, f);
        }
    }
    return out;
}

LieRep::Valued LieRep::act(const GCElement& f, const Valued& x) const
{
    Valued out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        out[i] = A_.bracket(f, x[i]);
    return out;
}

LieRep::Valued LieRep::differential(const Valued& x) const
{
    Valued out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        out[i] = A_.d(x[i]);
    return out;
}

const LieRep::Valued& LieRep::pi_basis(const LieRef& r) const
{
    std::lock_guard lock(mu_);
    auto it = pi_cache_.find(r);
    if (it != pi_cache_.end())
        return it->second;
    const Word& seq = R_.lie_basis(r.weight).sequences.at(r.index);
    int m = g_.dim();
    auto letter = [&](int v) {
        Valued x(m);
        for (int a = 0; a < m; ++a)
            x[a] = A_.gen(generator(v, a));
        return x;
    };
    // right-nested [v1,[v2,…,[v_{w-1},v_w]…]]
    Valued acc = letter(seq.back());
    for (int i = static_cast<int>(seq.size()) - 2; i >= 0; --i)
        acc = bracket(letter(seq[i]), acc);
    return pi_cache_.emplace(r, std::move(acc)).first->second;
}

LieRep::Valued LieRep::pi(const TensorElement& l) const
{
    int m = g_.dim();
    Valued out(m);
    std::map<int, TensorElement> parts;
    for (const auto& [w, c] : l)
        parts[static_cast<int>(w.size())].add(w, c);
    for (const auto& [wt, part] : parts) {
        auto coords = wt == 0 ? std::nullopt : R_.lie_coordinates(part, wt);
        if (!coords)
            throw std::invalid_argument("not in the free Lie span: " + R_.show(part));
        for (const auto& [idx, c] : *coords) {
            const Valued& b = pi_basis({wt, idx});
            for (int a = 0; a < m; ++a)
                out[a].add(b[a], c);
        }
    }
    return out;
}

std::map<std::vector<int>, GCElement> LieRep::contract(const std::vector<LieRef>& tuple) const
{
    std::map<std::vector<int>, GCElement> out;
    std::vector<int> idx;
    int m = g_.dim();
    std::function<void(std::size_t, const GCElement&)> rec = [&](std::size_t i, const GCElement& acc) {
        if (i == tuple.size()) {
            out[idx] += acc;
            return;
        }
        const Valued& b = pi_basis(tuple[i]);
        for (int a = 0; a < m; ++a) {
            if (b[a].is_zero())
                continue;
            idx.push_back(a);
            rec(i + 1, A_.multiply(acc, b[a]));
            idx.pop_back();
        }
    };
    rec(0, A_.one());
    return out;
}

std::optional<std::string> check_ad_invariant(const LieAlgebraData& g, const SymPoly& P)
{
    int m = g.dim(), p = P.degree;
    std::vector<int> idx(p, 0);
    while (true) {
        for (int a = 0; a < m; ++a) {
            Scalar total = 0;
            for (int k = 0; k < p; ++k)
                for (const auto& [j, c] : g.bracket[a][idx[k]]) {
                    std::vector<int> t = idx;
                    t[k] = j;
                    total += c * P(t);
                }
            if (sgn(total) != 0) {
                std::string w = P.name + " is not ad-invariant under " + g.basis[a] + " at (";
                for (int k = 0; k < p; ++k)
                    w += (k ? "," : "") + g.basis[idx[k]];
                return w + ")";
            }
        }
        int k = 0;
        while (k < p && ++idx[k] == m)
            idx[k++] = 0;
        if (k == p)
            break;
    }
    return std::nullopt;
}

void LieRep::require_invariant(const SymPoly& P) const
{
    if (auto w = check_ad_invariant(g_, P))
        throw std::invalid_argument(*w);
}

GCElement LieRep::drinfeld_sym(const SymPoly& P, const TensorElement& s) const
{
    require_invariant(P);
    std::map<int, TensorElement> parts;
    for (const auto& [w, c] : s)
        parts[static_cast<int>(w.size())].add(w, c);
    GCElement out;
    for (const auto& [wt, part] : parts) {
        auto coords = R_.sym_coordinates(part, P.degree, wt);
        if (!coords)
            throw std::invalid_argument("not in Sym^" + std::to_string(P.degree) + ": " + R_.show(part));
        const SymBasis& sb = R_.sym_basis(P.degree, wt);
        for (const auto& [id, c] : *coords)
            for (const auto& [alpha, prod] : contract(sb.tuples.at(id)))
                out.add(prod, c * P(alpha));
    }
    return out;
}

GCElement LieRep::drinfeld_trace(const SymPoly& P, const TensorElement& cls) const
{
    std::map<int, TensorElement> parts;
    for (const auto& [w, c] : cls)
        parts[static_cast<int>(w.size())].add(w, c);
    TensorElement lift;
    for (const auto& [wt, part] : parts) {
        const LambdaBasis& lb = R_.lambda_basis(P.degree, wt);
        Vec combo;
        if (wt == 0 || !lb.echelon.reduce(R_.to_vec(R_.project_cyclic(part)), &combo).is_zero())
            throw std::invalid_argument("not in λ^(" + std::to_string(P.degree) + "): " + R_.show(part));
        for (const auto& [id, c] : combo)
            lift.add(lb.lifts.at(id), c);
    }
    return drinfeld_sym(P, lift);
}

KahlerForm LieRep::theta_trace(const SymPoly& P, const OneForm& t) const
{
    require_invariant(P);
    int p = P.degree - 1;
    if (p < 0)
        throw std::invalid_argument("θ-trace needs an invariant of positive degree");
    std::map<std::pair<int, int>, TensorElement> parts;  // (letter, weight)
    for (const auto& [k, c] : t)
        parts[{k.second, static_cast<int>(k.first.size())}].add(k.first, c);
    KahlerForm out;
    for (const auto& [key, part] : parts) {
        auto [v, wt] = key;
        auto coords = R_.sym_coordinates(part, p, wt);
        if (!coords)
            throw std::invalid_argument("not in θ^(" + std::to_string(p) + ")");
        const SymBasis& sb = R_.sym_basis(p, wt);
        for (const auto& [id, c] : *coords)
            for (const auto& [alpha, prod] : contract(sb.tuples.at(id)))
                for (int b = 0; b < g_.dim(); ++b) {
                    std::vector<int> full = alpha;
                    full.push_back(b);
                    Scalar e = P(full);
                    if (sgn(e) == 0)
                        continue;
                    KahlerForm dx;
                    dx.add({Monomial{}, generator(v, b)}, c * e);
                    out += A_.multiply(prod, dx);
                }
    }
    return out;
}

}  // namespace cyc
