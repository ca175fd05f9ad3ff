#include "cyc/coalg.hpp"

#include <algorithm>
#include <functional>
#include <regex>
#include <sstream>

namespace cyc {

std::vector<CyclicCoalgebra::CoproductTerm> CyclicCoalgebra::coproduct_terms(int i) const
{
    std::vector<CoproductTerm> out;
    int n = dim();
    for (const auto& [k, c] : coproduct.column(i))
        out.push_back({c, k / n, k % n});
    return out;
}

CyclicCoalgebra make_coalgebra(std::string name, const std::vector<std::pair<std::string, int>>& generators,
                               int pairing_degree)
{
    CyclicCoalgebra c;
    c.name = std::move(name);
    for (const auto& [label, deg] : generators)
        c.reduced.add(label, deg);
    c.coproduct = LinearMap(c.reduced, tensor_square(c.reduced), 0);
    c.differential = LinearMap(c.reduced, c.reduced, -1);
    c.pairing.assign(c.dim(), std::vector<Scalar>(c.dim()));
    c.pairing_degree = pairing_degree;
    return c;
}

void add_coproduct_term(CyclicCoalgebra& c, int source, const Scalar& coeff, int left, int right)
{
    c.coproduct.add_entry(left * c.dim() + right, source, coeff);
}

void add_differential_term(CyclicCoalgebra& c, int source, const Scalar& coeff, int target)
{
    c.differential.add_entry(target, source, coeff);
}

bool ValidationReport::ok() const
{
    return std::all_of(identities.begin(), identities.end(), [](const IdentityResult& r) { return r.holds; });
}

const IdentityResult& ValidationReport::find(const std::string& name) const
{
    for (const auto& r : identities)
        if (r.name == name)
            return r;
    throw std::out_of_range("no identity named " + name);
}

namespace {

using Triple = std::tuple<int, int, int>;
using Tensor3 = LinComb<Triple>;
using Tensor2 = LinComb<std::pair<int, int>>;

const std::string& lbl(const CyclicCoalgebra& c, int i) { return c.reduced.labels.at(i); }

std::string pair_label(const CyclicCoalgebra& c, int i, int j) { return lbl(c, i) + "⊗" + lbl(c, j); }

Tensor2 coproduct2(const CyclicCoalgebra& c, int i)
{
    Tensor2 t;
    for (const auto& term : c.coproduct_terms(i))
        t.add({term.left, term.right}, term.coeff);
    return t;
}

Tensor2 coproduct2(const CyclicCoalgebra& c, const Vec& v)
{
    Tensor2 t;
    for (const auto& [i, a] : v)
        t.add(coproduct2(c, i), a);
    return t;
}

std::string show(const CyclicCoalgebra& c, const Tensor2& t)
{
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : t) {
        os << (first ? "" : " + ") << v.get_str() << "*(" << pair_label(c, k.first, k.second) << ")";
        first = false;
    }
    return first ? "0" : os.str();
}

std::string show(const CyclicCoalgebra& c, const Vec& v) { return to_string(v, c.reduced); }

IdentityResult check_coassociativity(const CyclicCoalgebra& c)
{
    IdentityResult r{"coassociativity"};
    if (auto bad = c.coproduct.degree_violation()) {
        r.holds = false;
        r.witness = "coproduct of " + lbl(c, bad->first) + " is not of degree 0";
        return r;
    }
    for (int i = 0; i < c.dim(); ++i) {
        Tensor3 lhs, rhs;
        for (const auto& t : c.coproduct_terms(i)) {
            for (const auto& u : c.coproduct_terms(t.left))
                lhs.add({u.left, u.right, t.right}, t.coeff * u.coeff);
            for (const auto& u : c.coproduct_terms(t.right))
                rhs.add({t.left, u.left, u.right}, t.coeff * u.coeff);
        }
        if (lhs != rhs) {
            r.holds = false;
            r.witness = "(Δ̄⊗1)Δ̄ ≠ (1⊗Δ̄)Δ̄ on " + lbl(c, i);
            return r;
        }
    }
    return r;
}

IdentityResult check_conilpotence(const CyclicCoalgebra& c)
{
    IdentityResult r{"conilpotence"};
    for (int i = 0; i < c.dim(); ++i) {
        // iterate Δ̄ on the last tensor factor
        LinComb<std::vector<int>> cur;
        cur.add(std::vector<int>{i}, 1);
        int steps = 0;
        while (!cur.is_zero() && steps <= c.dim()) {
            LinComb<std::vector<int>> next;
            for (const auto& [w, a] : cur)
                for (const auto& t : c.coproduct_terms(w.back())) {
                    auto v = w;
                    v.back() = t.left;
                    v.push_back(t.right);
                    next.add(v, a * t.coeff);
                }
            cur = std::move(next);
            ++steps;
        }
        if (!cur.is_zero()) {
            r.holds = false;
            r.witness = "iterated coproduct of " + lbl(c, i) + " is nonzero after " + std::to_string(steps) +
                        " steps";
            return r;
        }
    }
    return r;
}

IdentityResult check_coleibniz(const CyclicCoalgebra& c)
{
    IdentityResult r{"co-Leibniz"};
    if (auto bad = c.differential.degree_violation()) {
        r.holds = false;
        r.witness = "differential of " + lbl(c, bad->first) + " is not of degree -1";
        return r;
    }
    for (int i = 0; i < c.dim(); ++i) {
        Vec dd = c.differential.apply(c.differential.column(i));
        if (!dd.is_zero()) {
            r.holds = false;
            r.witness = "d∘d ≠ 0 on " + lbl(c, i) + ": " + show(c, dd);
            return r;
        }
    }
    for (int i = 0; i < c.dim(); ++i) {
        Tensor2 lhs = coproduct2(c, c.differential.column(i));
        Tensor2 rhs;
        for (const auto& t : c.coproduct_terms(i)) {
            for (const auto& [k, a] : c.differential.column(t.left))
                rhs.add({k, t.right}, t.coeff * a);
            for (const auto& [k, a] : c.differential.column(t.right))
                rhs.add({t.left, k}, t.coeff * a * sign_of(c.degree(t.left)));
        }
        if (lhs != rhs) {
            r.holds = false;
            r.witness = "Δ̄d - (d⊗1 + 1⊗d)Δ̄ on " + lbl(c, i) + " = " + show(c, lhs - rhs);
            return r;
        }
    }
    return r;
}

// The defect functions below are linear in the pairing so that the same code
// serves validation and the solver for admissible pairings.

// graded symmetry: entry (i, j) of P - (-1)^{|i||j|} Pᵀ
std::vector<std::pair<std::string, Scalar>> symmetry_defects(const CyclicCoalgebra& c, const ScalarMatrix& p)
{
    std::vector<std::pair<std::string, Scalar>> out;
    for (int i = 0; i < c.dim(); ++i)
        for (int j = i; j < c.dim(); ++j) {
            Scalar d = p[i][j] - sign_of(c.degree(i) * c.degree(j)) * p[j][i];
            out.push_back({"⟨" + lbl(c, i) + "," + lbl(c, j) + "⟩ vs ⟨" + lbl(c, j) + "," + lbl(c, i) + "⟩", d});
        }
    return out;
}

std::vector<std::pair<std::string, Scalar>> cyclicity_defects(const CyclicCoalgebra& c, const ScalarMatrix& p,
                                                              SignRule rule)
{
    // Koszul form (the one compatible with the cobar differential):
    //   Σ (-1)^{(|v'|-1)(|v''|-1)} ⟨v', x⟩ v'' + Σ (-1)^{(|x'|-1)|x''|} ⟨v, x''⟩ x' = 0
    //   (-1)^{|v|} Σ ⟨v'', x⟩ v' - Σ (-1)^{|x'|} ⟨v, x'⟩ x'' = 0
    std::vector<std::pair<std::string, Scalar>> out;
    for (int v = 0; v < c.dim(); ++v)
        for (int x = 0; x < c.dim(); ++x) {
            Vec first, second;
            for (const auto& t : c.coproduct_terms(v)) {
                int s1 = rule == SignRule::Koszul ? sign_of((c.degree(t.left) - 1) * (c.degree(t.right) - 1)) : 1;
                first.add(t.right, t.coeff * p[t.left][x] * s1);
                int s2 = rule == SignRule::Koszul ? sign_of(c.degree(v)) : 1;
                second.add(t.left, t.coeff * p[t.right][x] * s2);
            }
            for (const auto& t : c.coproduct_terms(x)) {
                int s1 = rule == SignRule::Koszul ? sign_of((c.degree(t.left) - 1) * c.degree(t.right))
                                                  : (rule == SignRule::Plus ? -1 : 1);
                first.add(t.left, t.coeff * p[v][t.right] * s1);
                int s2 = rule == SignRule::Koszul ? -sign_of(c.degree(t.left)) : (rule == SignRule::Plus ? -1 : 1);
                second.add(t.right, t.coeff * p[v][t.left] * s2);
            }
            for (int k = 0; k < c.dim(); ++k) {
                std::string where = "(" + lbl(c, v) + ", " + lbl(c, x) + ") coefficient of " + lbl(c, k);
                out.push_back({"first form at " + where, first.coeff(k)});
                out.push_back({"second form at " + where, second.coeff(k)});
            }
        }
    return out;
}

std::vector<std::pair<std::string, Scalar>> dcompat_defects(const CyclicCoalgebra& c, const ScalarMatrix& p,
                                                            SignRule rule)
{
    std::vector<std::pair<std::string, Scalar>> out;
    for (int v = 0; v < c.dim(); ++v)
        for (int x = 0; x < c.dim(); ++x) {
            Scalar a = 0, b = 0;
            for (const auto& [k, coef] : c.differential.column(v))
                a += coef * p[k][x];
            for (const auto& [k, coef] : c.differential.column(x))
                b += coef * p[v][k];
            int s = rule == SignRule::Koszul ? sign_of(c.degree(v)) : (rule == SignRule::Plus ? -1 : 1);
            out.push_back({"⟨d" + lbl(c, v) + "," + lbl(c, x) + "⟩ ± ⟨" + lbl(c, v) + ",d" + lbl(c, x) + "⟩",
                           a + s * b});
        }
    return out;
}

IdentityResult from_defects(std::string name, const std::vector<std::pair<std::string, Scalar>>& defects)
{
    IdentityResult r{std::move(name)};
    for (const auto& [where, d] : defects)
        if (sgn(d) != 0) {
            r.holds = false;
            r.witness = where + " = " + d.get_str();
            break;
        }
    return r;
}

IdentityResult check_homogeneity(const CyclicCoalgebra& c)
{
    IdentityResult r{"homogeneity"};
    for (int i = 0; i < c.dim(); ++i)
        for (int j = 0; j < c.dim(); ++j)
            if (sgn(c.pairing[i][j]) != 0 && c.degree(i) + c.degree(j) != -c.pairing_degree) {
                r.holds = false;
                r.witness = "⟨" + lbl(c, i) + "," + lbl(c, j) + "⟩ = " + c.pairing[i][j].get_str() +
                            " but degrees sum to " + std::to_string(c.degree(i) + c.degree(j));
                return r;
            }
    return r;
}

IdentityResult check_cocommutativity(const CyclicCoalgebra& c)
{
    IdentityResult r{"cocommutativity"};
    if (!c.cocommutative) {
        r.applicable = false;
        return r;
    }
    for (int i = 0; i < c.dim(); ++i) {
        Tensor2 t = coproduct2(c, i), swapped;
        for (const auto& [k, a] : t)
            swapped.add({k.second, k.first}, a * sign_of(c.degree(k.first) * c.degree(k.second)));
        if (t != swapped) {
            r.holds = false;
            r.witness = "Δ̄" + lbl(c, i) + " = " + show(c, t) + " is not graded symmetric";
            return r;
        }
    }
    return r;
}

}  // namespace

ValidationReport validate(const CyclicCoalgebra& c, const ValidationOptions& opts)
{
    ValidationReport rep;
    rep.identities.push_back(check_coassociativity(c));
    rep.identities.push_back(check_conilpotence(c));
    rep.identities.push_back(check_coleibniz(c));
    rep.identities.push_back(from_defects("graded symmetry", symmetry_defects(c, c.pairing)));
    rep.identities.push_back(check_homogeneity(c));
    rep.identities.push_back(from_defects("cyclicity", cyclicity_defects(c, c.pairing, opts.cyclicity)));
    rep.identities.push_back(from_defects("d-compatibility", dcompat_defects(c, c.pairing, opts.dcompat)));
    rep.identities.push_back(check_cocommutativity(c));
    return rep;
}

std::vector<ScalarMatrix> solve_cyclic_pairings(const CyclicCoalgebra& c, int n, const ValidationOptions& opts)
{
    // unknowns: entries (i, j) with |c_i| + |c_j| = -n
    std::vector<std::pair<int, int>> unknowns;
    for (int i = 0; i < c.dim(); ++i)
        for (int j = 0; j < c.dim(); ++j)
            if (c.degree(i) + c.degree(j) == -n)
                unknowns.push_back({i, j});
    int m = static_cast<int>(unknowns.size());
    std::vector<std::vector<std::pair<std::string, Scalar>>> columns;
    for (const auto& [i, j] : unknowns) {
        ScalarMatrix p(c.dim(), std::vector<Scalar>(c.dim()));
        p[i][j] = 1;
        auto col = symmetry_defects(c, p);
        auto cyc = cyclicity_defects(c, p, opts.cyclicity);
        auto dc = dcompat_defects(c, p, opts.dcompat);
        col.insert(col.end(), cyc.begin(), cyc.end());
        col.insert(col.end(), dc.begin(), dc.end());
        columns.push_back(std::move(col));
    }
    std::vector<ScalarMatrix> out;
    if (m == 0)
        return out;
    int rows = static_cast<int>(columns[0].size());
    GradedSpace src, tgt;
    for (int k = 0; k < m; ++k)
        src.add("p" + std::to_string(k), 0);
    for (int r = 0; r < rows; ++r)
        tgt.add("e" + std::to_string(r), 0);
    LinearMap f(src, tgt, 0);
    for (int k = 0; k < m; ++k)
        for (int r = 0; r < rows; ++r)
            f.add_entry(r, k, columns[k][r].second);
    for (const auto& v : kernel(f)) {
        ScalarMatrix p(c.dim(), std::vector<Scalar>(c.dim()));
        // normalize so that the first nonzero entry is 1
        Scalar lead = v.begin()->second;
        for (const auto& [k, a] : v)
            p[unknowns[k].first][unknowns[k].second] = a / lead;
        out.push_back(std::move(p));
    }
    return out;
}

CyclicCoalgebra e1_symplectic_pair(int g)
{
    if (g < 1)
        throw std::invalid_argument("E1_symplectic_pair needs g ≥ 1");
    std::vector<std::pair<std::string, int>> gens;
    for (int i = 1; i <= g; ++i) {
        std::string suffix = g == 1 ? "" : std::to_string(i);
        gens.push_back({"x" + suffix, 1});
        gens.push_back({"y" + suffix, 1});
    }
    auto c = make_coalgebra(g == 1 ? "E1" : "E1_symplectic_pair(" + std::to_string(g) + ")", gens, -2);
    for (int i = 0; i < g; ++i) {
        c.pairing[2 * i][2 * i + 1] = 1;
        c.pairing[2 * i + 1][2 * i] = -1;
    }
    c.cocommutative = true;
    return c;
}

CyclicCoalgebra e2_two_stage()
{
    auto c = make_coalgebra("E2", {{"a", 2}, {"b", 4}}, -6);
    add_coproduct_term(c, 1, 1, 0, 0);
    c.pairing[0][1] = 1;
    c.pairing[1][0] = 1;
    c.cocommutative = true;
    return c;
}

CyclicCoalgebra builtin_coalgebra(const std::string& name)
{
    if (name == "E1")
        return e1_symplectic_pair(1);
    if (name == "E2" || name == "E2_two_stage")
        return e2_two_stage();
    std::smatch m;
    static const std::regex sp(R"(E1_symplectic_pair\((\d+)\))");
    if (std::regex_match(name, m, sp))
        return e1_symplectic_pair(std::stoi(m[1]));
    throw std::invalid_argument("unknown builtin coalgebra '" + name + "'");
}

VSpace shifted_space(const CyclicCoalgebra& c)
{
    VSpace v;
    v.names = c.reduced.labels;
    for (int d : c.reduced.degrees)
        v.degrees.push_back(d - 1);
    v.shift = c.pairing_degree + 2;
    v.pairing.assign(c.dim(), std::vector<Scalar>(c.dim()));
    for (int i = 0; i < c.dim(); ++i)
        for (int j = 0; j < c.dim(); ++j)
            v.pairing[i][j] = sign_of(c.degree(i) - 1) * c.pairing[i][j];
    return v;
}

Scalar SymPoly::operator()(std::vector<int> idx) const
{
    std::sort(idx.begin(), idx.end());
    auto it = values.find(idx);
    return it == values.end() ? Scalar(0) : it->second;
}

const SymPoly& LieAlgebraData::invariant(int p) const
{
    for (const auto& s : invariants)
        if (s.degree == p)
            return s;
    throw std::out_of_range(name + " has no listed invariant polynomial of degree " + std::to_string(p));
}

bool LieAlgebraData::has_invariant(int p) const
{
    return std::any_of(invariants.begin(), invariants.end(), [p](const SymPoly& s) { return s.degree == p; });
}

ScalarMatrix invert(const ScalarMatrix& m)
{
    int n = static_cast<int>(m.size());
    ScalarMatrix a = m, inv(n, std::vector<Scalar>(n));
    for (int i = 0; i < n; ++i)
        inv[i][i] = 1;
    for (int col = 0; col < n; ++col) {
        int p = col;
        while (p < n && sgn(a[p][col]) == 0)
            ++p;
        if (p == n)
            throw std::invalid_argument("singular matrix");
        std::swap(a[p], a[col]);
        std::swap(inv[p], inv[col]);
        Scalar s = 1 / a[col][col];
        for (int j = 0; j < n; ++j) {
            a[col][j] *= s;
            inv[col][j] *= s;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || sgn(a[i][col]) == 0)
                continue;
            Scalar f = a[i][col];
            for (int j = 0; j < n; ++j) {
                a[i][j] -= f * a[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

namespace {

// all index tuples of length p with entries in [0, n)
void for_each_tuple(int n, int p, const std::function<void(const std::vector<int>&)>& f)
{
    std::vector<int> t(p, 0);
    while (true) {
        f(t);
        int k = p - 1;
        while (k >= 0 && ++t[k] == n)
            t[k--] = 0;
        if (k < 0)
            return;
    }
}

using DenseMat = std::vector<std::vector<Scalar>>;

DenseMat mat_mul(const DenseMat& a, const DenseMat& b)
{
    int n = static_cast<int>(a.size());
    DenseMat c(n, std::vector<Scalar>(n));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            if (sgn(a[i][k]) != 0)
                for (int j = 0; j < n; ++j)
                    c[i][j] += a[i][k] * b[k][j];
    return c;
}

Scalar mat_trace(const DenseMat& a)
{
    Scalar t = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        t += a[i][i];
    return t;
}

// Symmetrized trace polynomial (1/p!) Σ_σ tr(X_σ1 … X_σp) on a matrix Lie algebra.
SymPoly symmetrized_trace(const std::vector<DenseMat>& basis, int p, std::string name)
{
    SymPoly s;
    s.degree = p;
    s.name = std::move(name);
    int n = static_cast<int>(basis.size());
    for_each_tuple(n, p, [&](const std::vector<int>& t) {
        if (!std::is_sorted(t.begin(), t.end()))
            return;
        std::vector<int> perm = t;
        Scalar total = 0;
        int count = 0;
        std::sort(perm.begin(), perm.end());
        // average over all orderings (with multiplicity) of the tuple
        std::vector<int> idx(p);
        for (int i = 0; i < p; ++i)
            idx[i] = i;
        do {
            DenseMat m = basis[t[idx[0]]];
            for (int i = 1; i < p; ++i)
                m = mat_mul(m, basis[t[idx[i]]]);
            total += mat_trace(m);
            ++count;
        } while (std::next_permutation(idx.begin(), idx.end()));
        Scalar v = total / count;
        if (sgn(v) != 0)
            s.values[t] = v;
    });
    return s;
}

LieAlgebraData matrix_lie(std::string name, std::vector<std::string> labels, const std::vector<DenseMat>& basis,
                          bool killing)
{
    LieAlgebraData g;
    g.name = std::move(name);
    g.basis = std::move(labels);
    int n = static_cast<int>(basis.size());
    // coordinates of a matrix in the basis by solving a linear system
    int sz = static_cast<int>(basis[0].size());
    GradedSpace src, tgt;
    for (int i = 0; i < n; ++i)
        src.add(g.basis[i], 0);
    for (int i = 0; i < sz * sz; ++i)
        tgt.add("m" + std::to_string(i), 0);
    LinearMap emb(src, tgt, 0);
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < sz; ++i)
            for (int j = 0; j < sz; ++j)
                emb.add_entry(i * sz + j, k, basis[k][i][j]);
    auto coords = [&](const DenseMat& m) {
        Vec v;
        for (int i = 0; i < sz; ++i)
            for (int j = 0; j < sz; ++j)
                v.add(i * sz + j, m[i][j]);
        auto sol = solve(emb, v);
        if (!sol)
            throw std::logic_error("matrix Lie algebra basis not closed under bracket");
        return *sol;
    };
    g.bracket.assign(n, std::vector<Vec>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            DenseMat ab = mat_mul(basis[i], basis[j]), ba = mat_mul(basis[j], basis[i]);
            for (int r = 0; r < sz; ++r)
                for (int s = 0; s < sz; ++s)
                    ab[r][s] -= ba[r][s];
            g.bracket[i][j] = coords(ab);
        }
    g.kappa.assign(n, std::vector<Scalar>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (killing) {
                // tr(ad ξ_i ad ξ_j)
                Scalar t = 0;
                for (int k = 0; k < n; ++k)
                    for (const auto& [l, c] : g.bracket[j][k])
                        t += c * g.bracket[i][l].coeff(k);
                g.kappa[i][j] = t;
            } else {
                g.kappa[i][j] = mat_trace(mat_mul(basis[i], basis[j]));
            }
        }
    g.kappa_inverse = invert(g.kappa);
    return g;
}

DenseMat unit(int n, int i, int j)
{
    DenseMat m(n, std::vector<Scalar>(n));
    m[i][j] = 1;
    return m;
}

}  // namespace

LieAlgebraData builtin_lie(const std::string& name)
{
    if (name == "sl2") {
        DenseMat h = unit(2, 0, 0);
        h[1][1] = -1;
        std::vector<DenseMat> basis{unit(2, 0, 1), h, unit(2, 1, 0)};
        auto g = matrix_lie("sl2", {"e", "h", "f"}, basis, true);
        SymPoly k;
        k.degree = 2;
        k.name = "killing";
        for (int i = 0; i < 3; ++i)
            for (int j = i; j < 3; ++j)
                if (sgn(g.kappa[i][j]) != 0)
                    k.values[{i, j}] = g.kappa[i][j];
        g.invariants.push_back(k);
        return g;
    }
    if (name == "gl2") {
        std::vector<DenseMat> basis{unit(2, 0, 0), unit(2, 0, 1), unit(2, 1, 0), unit(2, 1, 1)};
        auto g = matrix_lie("gl2", {"e11", "e12", "e21", "e22"}, basis, false);
        g.invariants.push_back(symmetrized_trace(basis, 1, "tr"));
        g.invariants.push_back(symmetrized_trace(basis, 2, "tr2"));
        g.invariants.push_back(symmetrized_trace(basis, 3, "tr3"));
        return g;
    }
    throw std::invalid_argument("unknown builtin Lie algebra '" + name + "'");
}

ValidationReport validate_lie(const LieAlgebraData& g)
{
    ValidationReport rep;
    int n = g.dim();
    auto bracket_vec = [&](const Vec& a, const Vec& b) {
        Vec r;
        for (const auto& [i, x] : a)
            for (const auto& [j, y] : b)
                r.add(g.bracket[i][j], x * y);
        return r;
    };
    auto kap = [&](const Vec& a, const Vec& b) {
        Scalar s = 0;
        for (const auto& [i, x] : a)
            for (const auto& [j, y] : b)
                s += x * y * g.kappa[i][j];
        return s;
    };
    IdentityResult anti{"antisymmetry"}, jac{"Jacobi"}, inv{"invariant form"}, nondeg{"nondegenerate form"},
        polys{"invariant polynomials"};
    for (int i = 0; i < n && anti.holds; ++i)
        for (int j = 0; j < n; ++j)
            if (g.bracket[i][j] + g.bracket[j][i] != Vec()) {
                anti.holds = false;
                anti.witness = "[" + g.basis[i] + "," + g.basis[j] + "]";
                break;
            }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Vec a(i), b(j), c(k);
                Vec s = bracket_vec(a, bracket_vec(b, c)) + bracket_vec(b, bracket_vec(c, a)) +
                        bracket_vec(c, bracket_vec(a, b));
                if (!s.is_zero() && jac.holds) {
                    jac.holds = false;
                    jac.witness = "(" + g.basis[i] + "," + g.basis[j] + "," + g.basis[k] + ")";
                }
                if (kap(bracket_vec(a, b), c) != kap(a, bracket_vec(b, c)) && inv.holds) {
                    inv.holds = false;
                    inv.witness = "(" + g.basis[i] + "," + g.basis[j] + "," + g.basis[k] + ")";
                }
            }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (g.kappa[i][j] != g.kappa[j][i] && inv.holds) {
                inv.holds = false;
                inv.witness = "κ not symmetric at (" + g.basis[i] + "," + g.basis[j] + ")";
            }
    try {
        auto prod = mat_mul(g.kappa, g.kappa_inverse);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (prod[i][j] != (i == j ? 1 : 0))
                    throw std::invalid_argument("stored inverse is wrong");
    } catch (const std::exception& e) {
        nondeg.holds = false;
        nondeg.witness = e.what();
    }
    for (const auto& p : g.invariants) {
        for_each_tuple(n, p.degree + 1, [&](const std::vector<int>& t) {
            if (!polys.holds)
                return;
            // Σ_k P(ξ_t1, …, [ξ_a, ξ_tk], …) with a = t[0]
            Scalar s = 0;
            for (int k = 1; k <= p.degree; ++k)
                for (const auto& [l, c] : g.bracket[t[0]][t[k]]) {
                    std::vector<int> idx(t.begin() + 1, t.end());
                    idx[k - 1] = l;
                    s += c * p(idx);
                }
            if (sgn(s) != 0) {
                polys.holds = false;
                polys.witness = p.name + " not ad-invariant";
            }
        });
    }
    rep.identities = {anti, jac, inv, nondeg, polys};
    return rep;
}

}  // namespace cyc
