#include "cyc/operadcore.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <sstream>

namespace cyc {

namespace {

Perm identity_perm(int n)
{
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm compose_perm(const Perm& outer, const Perm& inner)
{
    Perm r(inner.size());
    for (std::size_t k = 0; k < inner.size(); ++k)
        r[k] = outer[inner[k]];
    return r;
}

Perm tau_power(int m, int k)
{
    int n = m + 1;
    Perm p(n);
    for (int j = 0; j < n; ++j)
        p[j] = ((j + k) % n + n) % n;
    return p;
}

Perm swap_perm(int n, int k)
{
    Perm p = identity_perm(n);
    std::swap(p[k], p[k + 1]);
    return p;
}

Vec unit(int j) { return Vec(j); }

std::vector<Vec> identity_columns(int d)
{
    std::vector<Vec> c;
    for (int j = 0; j < d; ++j)
        c.push_back(unit(j));
    return c;
}

// Koszul sign of reading w in the order idx (u_j = w[idx_j]).
int reorder_sign(const std::vector<int>& idx, const Word& w, const std::vector<int>& degrees)
{
    int s = 1;
    for (std::size_t j = 0; j < idx.size(); ++j)
        for (std::size_t k = j + 1; k < idx.size(); ++k)
            if (idx[j] > idx[k] && odd(static_cast<long>(degrees[w[idx[j]]]) * degrees[w[idx[k]]]))
                s = -s;
    return s;
}

// ---- Ass as words ---------------------------------------------------------

const std::map<Perm, int>& ass_index(int m)
{
    static std::mutex mu;
    static std::map<int, std::map<Perm, int>> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(m);
    if (it == cache.end()) {
        std::map<Perm, int> idx;
        const auto& words = ass_words(m);
        for (std::size_t i = 0; i < words.size(); ++i)
            idx[words[i]] = static_cast<int>(i);
        it = cache.emplace(m, std::move(idx)).first;
    }
    return it->second;
}

// act(π) on the word a: relabel the cyclic word (a, m) by π, rotate the
// output label m to the end and drop it.
Perm ass_act(const Perm& pi, const Perm& a)
{
    int m = static_cast<int>(a.size());
    Perm c(a);
    c.push_back(m);
    for (int& x : c)
        x = pi[x];
    auto pos = std::find(c.begin(), c.end(), m) - c.begin();
    Perm r;
    for (int j = 1; j <= m; ++j)
        r.push_back(c[(pos + j) % (m + 1)]);
    return r;
}

Perm ass_compose(const Perm& a, int i, const Perm& b)
{
    int l = static_cast<int>(b.size());
    Perm r;
    for (int x : a) {
        if (x < i)
            r.push_back(x);
        else if (x == i)
            for (int y : b)
                r.push_back(y + i);
        else
            r.push_back(x + l - 1);
    }
    return r;
}

Vec ass_act_vec(const Perm& pi, int m, const Vec& v)
{
    Vec r;
    const auto& words = ass_words(m);
    const auto& idx = ass_index(m);
    for (const auto& [j, c] : v)
        r.add(idx.at(ass_act(pi, words[j])), c);
    return r;
}

Vec ass_compose_vec(int m, const Vec& mu, int i, int l, const Vec& nu)
{
    Vec r;
    const auto& idx = ass_index(m + l - 1);
    for (const auto& [a, ca] : mu)
        for (const auto& [b, cb] : nu)
            r.add(idx.at(ass_compose(ass_words(m)[a], i, ass_words(l)[b])), ca * cb);
    return r;
}

std::string word_name(const Perm& a)
{
    std::string s;
    for (int x : a)
        s += "x" + std::to_string(x + 1);
    return s;
}

void fill_compositions(CyclicOperadData& op, const std::function<Vec(int, int, int, int, int)>& f)
{
    int M = op.max_arity;
    for (int m = 1; m <= M; ++m)
        for (int l = 1; m + l - 1 <= M; ++l)
            for (int i = 0; i < m; ++i) {
                std::vector<Vec> table;
                for (int a = 0; a < op.dim(m); ++a)
                    for (int b = 0; b < op.dim(l); ++b)
                        table.push_back(f(m, a, i, l, b));
                op.compositions[{m, i, l}] = std::move(table);
            }
}

CyclicOperadData make_ass(int M)
{
    CyclicOperadData op;
    op.name = "Ass";
    op.max_arity = M;
    op.basis.resize(M + 1);
    op.swaps.resize(M + 1);
    op.tau.resize(M + 1);
    op.ass_embedding.resize(M + 1);
    for (int m = 1; m <= M; ++m) {
        const auto& words = ass_words(m);
        const auto& idx = ass_index(m);
        for (const auto& a : words)
            op.basis[m].push_back(word_name(a));
        auto columns_of = [&](const Perm& pi) {
            std::vector<Vec> cols;
            for (const auto& a : words)
                cols.push_back(unit(idx.at(ass_act(pi, a))));
            return cols;
        };
        for (int k = 0; k + 1 < m; ++k)
            op.swaps[m].push_back(columns_of(swap_perm(m + 1, k)));
        op.tau[m] = columns_of(tau_power(m, 1));
        op.ass_embedding[m] = identity_columns(op.dim(m));
    }
    fill_compositions(op, [](int m, int a, int i, int l, int b) {
        return ass_compose_vec(m, unit(a), i, l, unit(b));
    });
    return op;
}

CyclicOperadData make_com(int M)
{
    CyclicOperadData op;
    op.name = "Com";
    op.max_arity = M;
    op.basis.resize(M + 1);
    op.swaps.resize(M + 1);
    op.tau.resize(M + 1);
    for (int m = 1; m <= M; ++m) {
        op.basis[m] = {"c" + std::to_string(m)};
        for (int k = 0; k + 1 < m; ++k)
            op.swaps[m].push_back({unit(0)});
        op.tau[m] = {unit(0)};
    }
    fill_compositions(op, [](int, int, int, int, int) { return unit(0); });
    return op;
}

// [A, B] = AB - BA on multilinear words.
Vec ass_commutator(int la, const Vec& A, int lb, const Vec& B)
{
    // A on labels 0..la-1 and B on labels la..la+lb-1 already
    Vec r;
    const auto& idx = ass_index(la + lb);
    for (const auto& [a, ca] : A)
        for (const auto& [b, cb] : B) {
            const auto& wa = ass_words(la)[a];
            const auto& wb = ass_words(lb)[b];
            Perm ab, ba;
            for (int x : wa)
                ab.push_back(x);
            for (int y : wb)
                ab.push_back(y + la);
            for (int y : wb)
                ba.push_back(y + la);
            for (int x : wa)
                ba.push_back(x);
            r.add(idx.at(ab), ca * cb);
            r.add(idx.at(ba), -ca * cb);
        }
    return r;
}

// Right-nested bracket of the letters in `seq` (a permutation of 0..m-1),
// expanded in Ass(m).
Vec right_nested_expansion(const Perm& seq)
{
    int m = static_cast<int>(seq.size());
    // build on positions then relabel by seq
    Vec acc = unit(0);  // the last letter alone, in Ass(1)
    int len = 1;
    for (int j = m - 2; j >= 0; --j) {
        acc = ass_commutator(1, unit(0), len, acc);
        ++len;
    }
    // position p holds letter seq[p]: relabel the word by p ↦ seq[p]
    Vec r;
    const auto& idx = ass_index(m);
    for (const auto& [a, c] : acc) {
        Perm w;
        for (int p : ass_words(m)[a])
            w.push_back(seq[p]);
        r.add(idx.at(w), c);
    }
    return r;
}

struct LieInAss {
    std::vector<std::vector<Vec>> expansion;  // [m][j]
    std::vector<Echelon> solver;              // [m], tracking ids j
};

Vec solve_back(const LieInAss& L, int m, const Vec& v, const char* what)
{
    Vec combo;
    if (!L.solver[m].reduce(v, &combo).is_zero())
        throw std::logic_error(std::string("Lie: ") + what + " leaves the Lie span");
    return combo;
}

CyclicOperadData make_lie(int M)
{
    CyclicOperadData op;
    op.name = "Lie";
    op.max_arity = M;
    op.basis.resize(M + 1);
    op.swaps.resize(M + 1);
    op.tau.resize(M + 1);
    op.ass_embedding.resize(M + 1);
    LieInAss L;
    L.expansion.resize(M + 1);
    L.solver.assign(M + 1, Echelon(true));
    for (int m = 1; m <= M; ++m) {
        Perm sigma = identity_perm(m - 1);
        do {
            Perm seq(sigma);
            seq.push_back(m - 1);
            std::string name;
            for (int j = 0; j + 1 < m; ++j)
                name += "[x" + std::to_string(seq[j] + 1) + ",";
            name += "x" + std::to_string(m) + std::string(m - 1, ']');
            int id = static_cast<int>(op.basis[m].size());
            op.basis[m].push_back(name);
            Vec e = right_nested_expansion(seq);
            if (L.solver[m].insert(e, id))
                throw std::logic_error("Lie: right-nested basis is dependent");
            L.expansion[m].push_back(e);
        } while (std::next_permutation(sigma.begin(), sigma.end()));
        op.ass_embedding[m] = L.expansion[m];
        auto columns_of = [&](const Perm& pi) {
            std::vector<Vec> cols;
            for (const auto& e : L.expansion[m])
                cols.push_back(solve_back(L, m, ass_act_vec(pi, m, e), "slot permutation"));
            return cols;
        };
        for (int k = 0; k + 1 < m; ++k)
            op.swaps[m].push_back(columns_of(swap_perm(m + 1, k)));
        op.tau[m] = columns_of(tau_power(m, 1));
    }
    fill_compositions(op, [&](int m, int a, int i, int l, int b) {
        return solve_back(L, m + l - 1, ass_compose_vec(m, L.expansion[m][a], i, l, L.expansion[l][b]),
                          "composition");
    });
    return op;
}

// act(π) for all π ∈ S_{m+1} by breadth-first search over the Cayley graph;
// every edge is checked, so success means the generators define an action.
std::map<Perm, std::vector<Vec>> group_action(const CyclicOperadData& op, int m, std::string* failure)
{
    std::map<Perm, std::vector<Vec>> act;
    int d = op.dim(m);
    std::vector<std::pair<Perm, const std::vector<Vec>*>> gens;
    std::vector<std::string> gen_names;
    for (int k = 0; k + 1 < m; ++k) {
        gens.push_back({swap_perm(m + 1, k), &op.swaps.at(m).at(k)});
        gen_names.push_back("s" + std::to_string(k + 1));
    }
    gens.push_back({tau_power(m, 1), &op.tau.at(m)});
    gen_names.push_back("τ");
    for (const auto& g : gens)
        if (static_cast<int>(g.second->size()) != d) {
            *failure = "arity " + std::to_string(m) + ": generator matrix has wrong size";
            return {};
        }
    Perm id = identity_perm(m + 1);
    act[id] = identity_columns(d);
    std::deque<Perm> queue{id};
    while (!queue.empty()) {
        Perm p = queue.front();
        queue.pop_front();
        for (std::size_t g = 0; g < gens.size(); ++g) {
            Perm q = compose_perm(gens[g].first, p);
            std::vector<Vec> cols;
            for (const auto& c : act.at(p))
                cols.push_back(apply_columns(*gens[g].second, c));
            auto it = act.find(q);
            if (it == act.end()) {
                act.emplace(q, std::move(cols));
                queue.push_back(q);
            } else if (it->second != cols) {
                std::ostringstream os;
                os << "arity " << m << ": the generators do not define an action of S_" << m + 1
                   << " (two words for the slot permutation (";
                for (std::size_t j = 0; j < q.size(); ++j)
                    os << (j ? " " : "") << q[j];
                os << ") reached through " << gen_names[g] << " disagree)";
                *failure = os.str();
                return {};
            }
        }
    }
    return act;
}

std::string basis_name(const CyclicOperadData& op, int m, int a)
{
    return op.basis[m][a];
}

std::string vec_name(const CyclicOperadData& op, int m, const Vec& v)
{
    if (v.is_zero())
        return "0";
    std::string s;
    bool first = true;
    for (const auto& [j, c] : v) {
        if (!first)
            s += " + ";
        first = false;
        if (c != 1)
            s += to_string(c) + "*";
        s += op.basis[m][j];
    }
    return s;
}

}  // namespace

const std::vector<Perm>& ass_words(int m)
{
    static std::mutex mu;
    static std::map<int, std::vector<Perm>> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(m);
    if (it == cache.end()) {
        std::vector<Perm> words;
        Perm p = identity_perm(m);
        do
            words.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
        it = cache.emplace(m, std::move(words)).first;
    }
    return it->second;
}

Vec apply_columns(const std::vector<Vec>& columns, const Vec& v)
{
    Vec r;
    for (const auto& [j, c] : v)
        r.add(columns.at(j), c);
    return r;
}

Vec CyclicOperadData::compose(int m, const Vec& mu, int i, int l, const Vec& nu) const
{
    auto it = compositions.find({m, i, l});
    if (it == compositions.end())
        throw std::out_of_range(name + ": composition ∘_" + std::to_string(i + 1) + " of arities " +
                                std::to_string(m) + ", " + std::to_string(l) + " exceeds the arity bound " +
                                std::to_string(max_arity));
    Vec r;
    int dl = dim(l);
    for (const auto& [a, ca] : mu)
        for (const auto& [b, cb] : nu)
            r.add(it->second.at(a * dl + b), ca * cb);
    return r;
}

CyclicOperadData builtin_operad(const std::string& name, int max_arity)
{
    if (max_arity < 1 || max_arity > 5)
        throw std::invalid_argument("operad arity bound must be between 1 and 5");
    if (name == "Ass")
        return make_ass(max_arity);
    if (name == "Com")
        return make_com(max_arity);
    if (name == "Lie")
        return make_lie(max_arity);
    throw std::invalid_argument("unknown builtin operad '" + name + "' (expected Ass, Com or Lie)");
}

ValidationReport validate_operad(const CyclicOperadData& op)
{
    ValidationReport rep;
    int M = op.max_arity;
    auto result = [&](const std::string& name) -> IdentityResult& {
        rep.identities.push_back({name, true, true, ""});
        return rep.identities.back();
    };
    auto fail = [](IdentityResult& r, const std::string& w) {
        if (r.holds) {
            r.holds = false;
            r.witness = w;
        }
    };

    auto& shape = result("shape");
    if (static_cast<int>(op.basis.size()) != M + 1 || static_cast<int>(op.swaps.size()) != M + 1 ||
        static_cast<int>(op.tau.size()) != M + 1) {
        fail(shape, "tables do not cover arities 0.." + std::to_string(M));
        for (const char* n : {"action", "unit", "tau-composition", "associativity", "equivariance"}) {
            auto& r = result(n);
            r.applicable = false;
        }
        return rep;
    }
    if (op.dim(1) != 1)
        fail(shape, "P(1) must be spanned by the identity");
    for (int m = 1; m <= M; ++m)
        if (static_cast<int>(op.swaps[m].size()) != m - 1)
            fail(shape, "arity " + std::to_string(m) + " needs " + std::to_string(m - 1) + " swap generators");
    for (int m = 1; m <= M; ++m)
        for (int l = 1; m + l - 1 <= M; ++l)
            for (int i = 0; i < m; ++i) {
                auto it = op.compositions.find({m, i, l});
                if (it == op.compositions.end() ||
                    static_cast<int>(it->second.size()) != op.dim(m) * op.dim(l))
                    fail(shape, "composition table (" + std::to_string(m) + "," + std::to_string(i + 1) + "," +
                                    std::to_string(l) + ") missing or of wrong size");
            }
    if (!shape.holds) {
        for (const char* n : {"action", "unit", "tau-composition", "associativity", "equivariance"})
            result(n).applicable = false;
        return rep;
    }

    auto& action = result("action");
    std::vector<std::map<Perm, std::vector<Vec>>> acts(M + 1);
    for (int m = 1; m <= M; ++m) {
        std::string why;
        acts[m] = group_action(op, m, &why);
        if (acts[m].empty())
            fail(action, why);
    }

    auto& unit_r = result("unit");
    Vec id = unit(0);
    for (int m = 1; m <= M; ++m)
        for (int a = 0; a < op.dim(m); ++a) {
            if (op.compose(1, id, 0, m, unit(a)) != unit(a))
                fail(unit_r, "id ∘ " + basis_name(op, m, a) + " ≠ " + basis_name(op, m, a));
            for (int i = 0; i < m; ++i)
                if (op.compose(m, unit(a), i, 1, id) != unit(a))
                    fail(unit_r, basis_name(op, m, a) + " ∘_" + std::to_string(i + 1) + " id ≠ " +
                                     basis_name(op, m, a));
        }

    auto& tau_r = result("tau-composition");
    for (int m = 1; m <= M; ++m)
        for (int l = 1; m + l - 1 <= M; ++l)
            for (int a = 0; a < op.dim(m); ++a)
                for (int b = 0; b < op.dim(l); ++b)
                    for (int i = 0; i < m; ++i) {
                        Vec lhs = apply_columns(op.tau[m + l - 1], op.compose(m, unit(a), i, l, unit(b)));
                        Vec rhs = i + 1 < m
                                      ? op.compose(m, apply_columns(op.tau[m], unit(a)), i + 1, l, unit(b))
                                      : op.compose(l, apply_columns(op.tau[l], unit(b)), 0, m,
                                                   apply_columns(op.tau[m], unit(a)));
                        if (lhs != rhs)
                            fail(tau_r, "τ(" + basis_name(op, m, a) + " ∘_" + std::to_string(i + 1) + " " +
                                            basis_name(op, l, b) + ") = " + vec_name(op, m + l - 1, lhs) +
                                            " but the relation gives " + vec_name(op, m + l - 1, rhs));
                    }

    auto& assoc = result("associativity");
    for (int m = 1; m <= M; ++m)
        for (int l = 1; m + l - 1 <= M; ++l)
            for (int k = 1; m + l + k - 2 <= M; ++k)
                for (int a = 0; a < op.dim(m); ++a)
                    for (int b = 0; b < op.dim(l); ++b)
                        for (int c = 0; c < op.dim(k); ++c) {
                            Vec A = unit(a), B = unit(b), C = unit(c);
                            for (int i = 0; i < m; ++i) {
                                Vec AB = op.compose(m, A, i, l, B);
                                for (int j = 0; j < l; ++j) {
                                    Vec lhs = op.compose(m + l - 1, AB, i + j, k, C);
                                    Vec rhs = op.compose(m, A, i, l + k - 1, op.compose(l, B, j, k, C));
                                    if (lhs != rhs)
                                        fail(assoc, "sequential: (" + basis_name(op, m, a) + " ∘_" +
                                                        std::to_string(i + 1) + " " + basis_name(op, l, b) +
                                                        ") ∘ " + basis_name(op, k, c));
                                }
                                for (int i2 = i + 1; i2 < m; ++i2) {
                                    Vec lhs = op.compose(m + l - 1, AB, i2 + l - 1, k, C);
                                    Vec rhs = op.compose(m + k - 1, op.compose(m, A, i2, k, C), i, l, B);
                                    if (lhs != rhs)
                                        fail(assoc, "parallel: " + basis_name(op, m, a) + " with " +
                                                        basis_name(op, l, b) + ", " + basis_name(op, k, c));
                                }
                            }
                        }

    auto& equiv = result("equivariance");
    if (!action.holds) {
        equiv.applicable = false;
    } else {
        for (int m = 1; m <= M; ++m)
            for (int l = 1; m + l - 1 <= M; ++l) {
                int n = m + l - 1;
                for (int k = 0; k + 1 < m; ++k) {
                    // s_k on the inputs of μ, carried along by the block of ν
                    Perm s = swap_perm(m + 1, k);
                    for (int i = 0; i < m; ++i) {
                        int i2 = s[i];
                        auto pos = [&](int slot, int at) { return slot < at ? slot : slot + l - 1; };
                        Perm B(n + 1);
                        for (int j = 0; j < m; ++j)
                            if (j != i)
                                B[pos(j, i)] = pos(s[j], i2);
                        for (int t = 0; t < l; ++t)
                            B[i + t] = i2 + t;
                        B[n] = n;
                        for (int a = 0; a < op.dim(m); ++a)
                            for (int b = 0; b < op.dim(l); ++b) {
                                Vec lhs = op.compose(m, apply_columns(op.swaps[m][k], unit(a)), i2, l, unit(b));
                                Vec rhs = apply_columns(acts[n].at(B), op.compose(m, unit(a), i, l, unit(b)));
                                if (lhs != rhs)
                                    fail(equiv, "s" + std::to_string(k + 1) + " on " + basis_name(op, m, a) +
                                                    " ∘_" + std::to_string(i + 1) + " " + basis_name(op, l, b));
                            }
                    }
                }
                for (int k = 0; k + 1 < l; ++k)
                    for (int i = 0; i < m; ++i) {
                        Perm B = identity_perm(n + 1);
                        std::swap(B[i + k], B[i + k + 1]);
                        for (int a = 0; a < op.dim(m); ++a)
                            for (int b = 0; b < op.dim(l); ++b) {
                                Vec lhs = op.compose(m, unit(a), i, l, apply_columns(op.swaps[l][k], unit(b)));
                                Vec rhs = apply_columns(acts[n].at(B), op.compose(m, unit(a), i, l, unit(b)));
                                if (lhs != rhs)
                                    fail(equiv, basis_name(op, m, a) + " ∘_" + std::to_string(i + 1) + " s" +
                                                    std::to_string(k + 1) + " on " + basis_name(op, l, b));
                            }
                    }
            }
    }
    return rep;
}

std::pair<int, Word> permute_letters(const Perm& pi, const Word& w, const std::vector<int>& degrees)
{
    Word r(w.size());
    int s = 1;
    for (std::size_t k = 0; k < w.size(); ++k) {
        r[pi[k]] = w[k];
        for (std::size_t l = k + 1; l < w.size(); ++l)
            if (pi[k] > pi[l] && odd(static_cast<long>(degrees[w[k]]) * degrees[w[l]]))
                s = -s;
    }
    return {s, r};
}

// ---- OperadAlgebra ------------------------------------------------------------

OperadAlgebra::OperadAlgebra(const CyclicOperadData& op, VSpace V) : op_(op), V_(std::move(V)) {}

int OperadAlgebra::degree(const Word& w) const
{
    int d = 0;
    for (int x : w)
        d += V_.degrees.at(x);
    return d;
}

std::optional<int> OperadAlgebra::degree(const LinComb<Key>& x) const
{
    std::optional<int> d;
    for (const auto& [k, c] : x) {
        int e = degree(k.second);
        if (d && *d != e)
            return std::nullopt;
        d = e;
    }
    return d;
}

int OperadAlgebra::group_order(int m) const
{
    int f = 1;
    for (int j = 2; j <= m + 1; ++j)
        f *= j;
    return f;
}

void OperadAlgebra::build_action(int m) const
{
    if (actions_.count(m))
        return;
    if (m < 1 || m > op_.max_arity)
        throw std::out_of_range(op_.name + ": arity " + std::to_string(m) + " outside 1.." +
                                std::to_string(op_.max_arity));
    std::string why;
    auto act = group_action(op_, m, &why);
    if (act.empty())
        throw OperadActionError(op_.name + ": " + why);
    actions_.emplace(m, std::move(act));
}

const std::vector<Vec>& OperadAlgebra::action(int m, const Perm& pi) const
{
    std::lock_guard lock(mu_);
    build_action(m);
    return actions_.at(m).at(pi);
}

const OperadAlgebra::Block& OperadAlgebra::block(bool cyclic, const Word& sorted) const
{
    std::lock_guard lock(mu_);
    auto key = std::make_pair(cyclic, sorted);
    auto it = blocks_.find(key);
    if (it != blocks_.end())
        return *it->second;
    int n = static_cast<int>(sorted.size());
    int m = cyclic ? n - 1 : n;
    auto b = std::make_unique<Block>();
    for (int k = 0; k + 1 < n; ++k) {
        if (sorted[k] != sorted[k + 1])
            continue;
        int s = odd(V_.degrees[sorted[k]]) ? -1 : 1;
        const auto& t = action(m, swap_perm(m + 1, k));
        for (int j = 0; j < op_.dim(m); ++j) {
            Vec rel = unit(j);
            rel.add(t[j], -s);
            b->relations.insert(rel);
        }
    }
    auto piv = b->relations.pivots();
    for (int j = 0; j < op_.dim(m); ++j)
        if (std::find(piv.begin(), piv.end(), j) == piv.end())
            b->free_columns.push_back(j);
    return *blocks_.emplace(key, std::move(b)).first->second;
}

LinComb<OperadAlgebra::Key> OperadAlgebra::canonical(bool cyclic, const Vec& mu, const Word& w) const
{
    LinComb<Key> r;
    if (mu.is_zero())
        return r;
    int n = static_cast<int>(w.size());
    int m = cyclic ? n - 1 : n;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return w[a] < w[b]; });
    Perm pi(m + 1);
    for (int j = 0; j < n; ++j)
        pi[order[j]] = j;
    if (!cyclic)
        pi[m] = m;
    Perm on_letters(pi.begin(), pi.begin() + n);
    auto [s, sorted] = permute_letters(on_letters, w, V_.degrees);
    Vec nu = apply_columns(action(m, pi), mu);
    Vec res = block(cyclic, sorted).relations.reduce(nu);
    for (const auto& [j, c] : res)
        r.add(Key{j, sorted}, c * s);
    return r;
}

OperadAlgebra::FreeElem OperadAlgebra::free_element(const Vec& mu, const Word& w) const
{
    return canonical(false, mu, w);
}

OperadAlgebra::CycElem OperadAlgebra::cyclic_element(const Vec& mu, const Word& w) const
{
    if (w.size() < 2)
        throw std::invalid_argument("cyclic elements have at least two letters");
    return canonical(true, mu, w);
}

namespace {
void sorted_words(int len, int letters, Word& cur, int from, std::vector<Word>& out)
{
    if (static_cast<int>(cur.size()) == len) {
        out.push_back(cur);
        return;
    }
    for (int x = from; x < letters; ++x) {
        cur.push_back(x);
        sorted_words(len, letters, cur, x, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<OperadAlgebra::Key> OperadAlgebra::free_basis(int weight) const
{
    std::vector<Key> keys;
    if (weight < 1)
        return keys;
    std::vector<Word> contents;
    Word cur;
    sorted_words(weight, V_.size(), cur, 0, contents);
    for (const auto& c : contents)
        for (int j : block(false, c).free_columns)
            keys.push_back({j, c});
    return keys;
}

std::vector<OperadAlgebra::Key> OperadAlgebra::cyclic_basis(int weight) const
{
    std::vector<Key> keys;
    if (weight < 2)
        return keys;
    std::vector<Word> contents;
    Word cur;
    sorted_words(weight, V_.size(), cur, 0, contents);
    for (const auto& c : contents)
        for (int j : block(true, c).free_columns)
            keys.push_back({j, c});
    return keys;
}

OperadAlgebra::FreeOneForm OperadAlgebra::cyclic_derivative(const Vec& mu, const Word& w) const
{
    FreeOneForm r;
    int m = static_cast<int>(w.size()) - 1;
    for (int i = 0; i <= m; ++i) {
        Perm pi = tau_power(m, m - i);
        auto [s, rot] = permute_letters(pi, w, V_.degrees);
        Vec nu = apply_columns(action(m, pi), mu);
        Word front(rot.begin(), rot.begin() + m);
        for (const auto& [k, c] : canonical(false, nu, front))
            r.add({k.first, k.second, rot[m]}, c * s);
    }
    return r;
}

OperadAlgebra::FreeOneForm OperadAlgebra::cyclic_derivative(const CycElem& a) const
{
    FreeOneForm r;
    for (const auto& [k, c] : a)
        r.add(cyclic_derivative(unit(k.first), k.second), c);
    return r;
}

OperadAlgebra::CycElem OperadAlgebra::cyclic_project(const FreeOneForm& x) const
{
    CycElem r;
    for (const auto& [k, c] : x) {
        Word w = std::get<1>(k);
        w.push_back(std::get<2>(k));
        r.add(canonical(true, unit(std::get<0>(k)), w), c);
    }
    return r;
}

OperadAlgebra::CycElem OperadAlgebra::project(const FreeElem& x, const FreeElem& y) const
{
    CycElem r;
    for (const auto& [kx, cx] : x)
        for (const auto& [ky, cy] : y) {
            const Word& w = kx.second;
            const Word& u = ky.second;
            int m = static_cast<int>(w.size());
            int l = static_cast<int>(u.size());
            Vec rotated = apply_columns(action(m, tau_power(m, -1)), unit(kx.first));
            Vec comp = op_.compose(m, rotated, m - 1, l, unit(ky.first));
            Word letters(w.begin() + 1, w.end());
            letters.insert(letters.end(), u.begin(), u.end());
            letters.push_back(w[0]);
            int s = sign_of(static_cast<long>(V_.degrees[w[0]]) * (degree(w) - V_.degrees[w[0]] + degree(u)));
            r.add(canonical(true, comp, letters), cx * cy * s);
        }
    return r;
}

OperadAlgebra::CycElem OperadAlgebra::bracket(const CycElem& a, const CycElem& b) const
{
    CycElem r;
    auto da = cyclic_derivative(a);
    auto db = cyclic_derivative(b);
    for (const auto& [ka, ca] : da)
        for (const auto& [kb, cb] : db) {
            int v = std::get<2>(ka), w = std::get<2>(kb);
            const Scalar& p = V_.pair(v, w);
            if (sgn(p) == 0)
                continue;
            const Word& ys = std::get<1>(kb);
            int s = sign_of(static_cast<long>(V_.degrees[v] + V_.shift) * degree(ys));
            FreeElem x(Key{std::get<0>(ka), std::get<1>(ka)});
            FreeElem y(Key{std::get<0>(kb), ys});
            r.add(project(x, y), ca * cb * p * s);
        }
    return r;
}

OperadAlgebra::FreeElem OperadAlgebra::act(const CycElem& a, const FreeElem& x) const
{
    FreeElem r;
    for (const auto& [ka, ca] : a) {
        auto da = cyclic_derivative(unit(ka.first), ka.second);
        int shifted = degree(ka.second) + V_.shift;
        for (const auto& [kx, cx] : x) {
            const Word& w = kx.second;
            int m = static_cast<int>(w.size());
            int before = 0;
            for (int j = 0; j < m; ++j) {
                int s = sign_of(static_cast<long>(shifted) * before);
                for (const auto& [kz, cz] : da) {
                    const Scalar& p = V_.pair(std::get<2>(kz), w[j]);
                    if (sgn(p) == 0)
                        continue;
                    const Word& u = std::get<1>(kz);
                    Vec comp = op_.compose(m, unit(kx.first), j, static_cast<int>(u.size()), unit(std::get<0>(kz)));
                    Word letters(w.begin(), w.begin() + j);
                    letters.insert(letters.end(), u.begin(), u.end());
                    letters.insert(letters.end(), w.begin() + j + 1, w.end());
                    r.add(canonical(false, comp, letters), ca * cx * cz * p * s);
                }
                before += V_.degrees[w[j]];
            }
        }
    }
    return r;
}

TensorElement OperadAlgebra::to_tensor(const FreeElem& x) const
{
    if (op_.ass_embedding.empty())
        throw std::logic_error(op_.name + " has no map into Ass");
    TensorElement r;
    for (const auto& [k, c] : x) {
        int m = static_cast<int>(k.second.size());
        for (const auto& [a, ca] : op_.ass_embedding.at(m).at(k.first)) {
            const Perm& word = ass_words(m)[a];
            Word u;
            for (int j : word)
                u.push_back(k.second[j]);
            r.add(u, c * ca * reorder_sign(word, k.second, V_.degrees));
        }
    }
    return r;
}

TensorElement OperadAlgebra::to_cyclic_words(const CycElem& x, const TruncatedAlgebra& R) const
{
    if (op_.ass_embedding.empty())
        throw std::logic_error(op_.name + " has no map into Ass");
    TensorElement r;
    for (const auto& [k, c] : x) {
        int m = static_cast<int>(k.second.size()) - 1;
        for (const auto& [a, ca] : op_.ass_embedding.at(m).at(k.first)) {
            Perm idx = ass_words(m)[a];
            idx.push_back(m);
            Word u;
            for (int j : idx)
                u.push_back(k.second[j]);
            r.add(u, c * ca * reorder_sign(idx, k.second, V_.degrees));
        }
    }
    return R.project_cyclic(r);
}

OneForm OperadAlgebra::to_oneform(const FreeOneForm& x) const
{
    OneForm r;
    for (const auto& [k, c] : x) {
        TensorElement t = to_tensor(FreeElem(Key{std::get<0>(k), std::get<1>(k)}));
        for (const auto& [w, cw] : t)
            r.add({w, std::get<2>(k)}, c * cw);
    }
    return r;
}

std::string OperadAlgebra::show(const LinComb<Key>& x, bool cyclic) const
{
    if (x.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : x) {
        if (!first)
            os << " + ";
        first = false;
        if (c != 1)
            os << to_string(c) << "*";
        int arity = static_cast<int>(k.second.size()) - (cyclic ? 1 : 0);
        os << op_.basis.at(arity).at(k.first) << "(";
        for (std::size_t j = 0; j < k.second.size(); ++j)
            os << (j ? "," : "") << V_.names[k.second[j]];
        os << ")";
    }
    return os.str();
}

Scalar coinvariant_dimension_by_averaging(const OperadAlgebra& A, int m, const Word& content)
{
    if (static_cast<int>(content.size()) != m + 1)
        throw std::invalid_argument("content must have arity + 1 letters");
    std::vector<Word> arrangements;
    Word w(content);
    std::sort(w.begin(), w.end());
    do
        arrangements.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    Scalar total = 0;
    Perm pi = identity_perm(m + 1);
    do {
        const auto& act = A.action(m, pi);
        Scalar tr = 0;
        for (std::size_t j = 0; j < act.size(); ++j)
            tr += act[j].coeff(static_cast<int>(j));
        if (sgn(tr) == 0)
            continue;
        long chi = 0;
        for (const auto& u : arrangements) {
            auto [s, v] = permute_letters(pi, u, A.V().degrees);
            if (v == u)
                chi += s;
        }
        total += tr * chi;
    } while (std::next_permutation(pi.begin(), pi.end()));
    return total / A.group_order(m);
}

}  // namespace cyc
