#include "cyc/gca.hpp"

#include <algorithm>
#include <sstream>

namespace cyc {

GCAlgebra::GCAlgebra(GradedSpace generators, int shift)
    : gens_(std::move(generators)), shift_(shift), d_(gens_.dim()),
      bracket_(gens_.dim(), std::vector<Scalar>(gens_.dim()))
{
}

int GCAlgebra::degree(const Monomial& m) const
{
    int d = 0;
    for (int g : m)
        d += gens_.degrees[g];
    return d;
}

std::optional<int> GCAlgebra::degree(const GCElement& f) const
{
    std::optional<int> d;
    for (const auto& [m, c] : f) {
        int e = degree(m);
        if (d && *d != e)
            return std::nullopt;
        d = e;
    }
    return d;
}

std::optional<std::pair<int, Monomial>> GCAlgebra::multiply(const Monomial& a, const Monomial& b) const
{
    // merge; each b-element passes over the a-elements with larger index
    long parity = 0;
    Monomial out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    int a_rest = degree(a);  // total degree of a-elements not yet emitted
    for (int g : b) {
        while (i < a.size() && a[i] <= g) {
            if (a[i] == g && odd(gens_.degrees[g]))
                return std::nullopt;
            a_rest -= gens_.degrees[a[i]];
            out.push_back(a[i++]);
        }
        parity += static_cast<long>(a_rest) * gens_.degrees[g];
        out.push_back(g);
    }
    while (i < a.size())
        out.push_back(a[i++]);
    return std::make_pair(sign_of(parity), std::move(out));
}

GCElement GCAlgebra::multiply(const GCElement& a, const GCElement& b) const
{
    GCElement out;
    for (const auto& [m, x] : a)
        for (const auto& [n, y] : b)
            if (auto p = multiply(m, n))
                out.add(p->second, x * y * p->first);
    return out;
}

void GCAlgebra::set_differential(int gen, GCElement value)
{
    d_.at(gen) = std::move(value);
}

GCElement GCAlgebra::derivation(const GCElement& f, const std::function<GCElement(int)>& on_gen, int k) const
{
    GCElement out;
    for (const auto& [m, c] : f) {
        int before = 0;
        for (std::size_t i = 0; i < m.size(); ++i) {
            GCElement left(Monomial(m.begin(), m.begin() + i));
            GCElement right(Monomial(m.begin() + i + 1, m.end()));
            GCElement term = multiply(multiply(left, on_gen(m[i])), right);
            out.add(term, c * sign_of(static_cast<long>(k) * before));
            before += gens_.degrees[m[i]];
        }
    }
    return out;
}

GCElement GCAlgebra::d(const GCElement& f) const
{
    return derivation(f, [this](int g) { return d_[g]; }, -1);
}

GCElement GCAlgebra::bracket(const GCElement& f, const GCElement& g) const
{
    // {f,g} = Σ_{i,j} (-1)^{(|f|+s)|g_<j| + (|g_j|+s)|f_>i|} {f_i,g_j} g_<j f_<i f_>i g_>j
    GCElement out;
    for (const auto& [fm, fc] : f) {
        int df = degree(fm);
        for (const auto& [gm, gc] : g) {
            int g_before = 0;
            for (std::size_t j = 0; j < gm.size(); ++j) {
                int f_after = df;
                for (std::size_t i = 0; i < fm.size(); ++i) {
                    f_after -= gens_.degrees[fm[i]];
                    const Scalar& p = bracket_[fm[i]][gm[j]];
                    if (sgn(p) != 0) {
                        long e = static_cast<long>(df + shift_) * g_before +
                                 static_cast<long>(gens_.degrees[gm[j]] + shift_) * f_after;
                        Monomial rest(fm.begin(), fm.begin() + i);
                        rest.insert(rest.end(), fm.begin() + i + 1, fm.end());
                        GCElement t = multiply(GCElement(Monomial(gm.begin(), gm.begin() + j)), GCElement(rest));
                        t = multiply(t, GCElement(Monomial(gm.begin() + j + 1, gm.end())));
                        out.add(t, fc * gc * p * sign_of(e));
                    }
                }
                g_before += gens_.degrees[gm[j]];
            }
        }
    }
    return out;
}

KahlerForm GCAlgebra::kahler_d(const GCElement& f) const
{
    // d(g₁…g_k) = Σ_i (-1)^{|g_i||g_>i|} (g_<i g_>i) dg_i
    KahlerForm out;
    for (const auto& [m, c] : f) {
        int after = degree(m);
        for (std::size_t i = 0; i < m.size(); ++i) {
            after -= gens_.degrees[m[i]];
            Monomial rest(m.begin(), m.begin() + i);
            rest.insert(rest.end(), m.begin() + i + 1, m.end());
            out.add({rest, m[i]}, c * sign_of(static_cast<long>(gens_.degrees[m[i]]) * after));
        }
    }
    return out;
}

KahlerForm GCAlgebra::multiply(const GCElement& f, const KahlerForm& w) const
{
    KahlerForm out;
    for (const auto& [m, x] : f)
        for (const auto& [k, y] : w)
            if (auto p = multiply(m, k.first))
                out.add({p->second, k.second}, x * y * p->first);
    return out;
}

KahlerForm GCAlgebra::form_differential(const KahlerForm& w) const
{
    // δ(f dg) = δf dg + (-1)^{|f|} f d(δg)
    KahlerForm out;
    for (const auto& [k, c] : w) {
        const auto& [m, g] = k;
        for (const auto& [n, y] : d(GCElement(m)))
            out.add({n, g}, c * y);
        out += multiply(GCElement(m), kahler_d(d_[g])) * (c * sign_of(degree(m)));
    }
    return out;
}

KahlerForm GCAlgebra::act_on_form(const GCElement& eta, const KahlerForm& w) const
{
    KahlerForm out;
    for (const auto& [e, ce] : eta) {
        GCElement E(e, ce);
        int de = degree(e) + shift_;
        for (const auto& [k, c] : w) {
            const auto& [m, g] = k;
            for (const auto& [n, y] : bracket(E, GCElement(m)))
                out.add({n, g}, c * y);
            out += multiply(GCElement(m), kahler_d(bracket(E, gen(g)))) *
                   (c * sign_of(static_cast<long>(de) * degree(m)));
        }
    }
    return out;
}

std::vector<Monomial> GCAlgebra::monomials(int k) const
{
    std::vector<Monomial> out;
    Monomial cur;
    std::function<void(int, int)> rec = [&](int from, int left) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int g = from; g < size(); ++g) {
            cur.push_back(g);
            rec(odd(gens_.degrees[g]) ? g + 1 : g, left - 1);
            cur.pop_back();
        }
    };
    rec(0, k);
    return out;
}

ChainComplex GCAlgebra::complex(int D) const
{
    ChainComplex cx;
    std::map<Monomial, int> index;
    for (int k = 0; k <= D; ++k)
        for (auto& m : monomials(k)) {
            index[m] = cx.space.add(show(m), degree(m));
        }
    cx.d = LinearMap(cx.space, cx.space, -1);
    bool preserves = true;
    for (const auto& [m, i] : index)
        for (const auto& [n, c] : d(GCElement(m))) {
            auto it = index.find(n);
            if (it == index.end()) {
                preserves = false;
                continue;
            }
            cx.d.add_entry(it->second, i, c);
            if (n.size() != m.size())
                preserves = false;
        }
    for (int g = 0; g < size(); ++g)
        for (const auto& [n, c] : d_[g])
            if (n.size() != 1)
                preserves = false;
    int lo = INT_MAX, hi = INT_MIN;
    for (int e : gens_.degrees) {
        lo = std::min(lo, e);
        hi = std::max(hi, e);
    }
    if (preserves || size() == 0) {
        cx.soundness = "differential preserves polynomial degree; homology of polynomial degree ≤ " +
                       std::to_string(D);
    } else if (lo >= 1) {
        cx.sound_hi = (D + 1) * lo - 1;
        cx.soundness = "monomials beyond polynomial degree " + std::to_string(D) + " start in degree " +
                       std::to_string((D + 1) * lo);
    } else if (hi <= -1) {
        cx.sound_lo = (D + 1) * hi + 1;
        cx.soundness = "monomials beyond polynomial degree " + std::to_string(D) + " start in degree " +
                       std::to_string((D + 1) * hi);
    } else {
        cx.sound_lo = 1;
        cx.sound_hi = 0;
        cx.soundness = "generators of degree 0 or of both signs with a non-linear differential";
    }
    return cx;
}

std::optional<std::string> GCAlgebra::check_d_squared() const
{
    for (int g = 0; g < size(); ++g) {
        auto dg = degree(d_[g]);
        if (!d_[g].is_zero() && (!dg || *dg != gens_.degrees[g] - 1))
            return "d(" + gens_.labels[g] + ") = " + show(d_[g]) + " is not of degree " +
                   std::to_string(gens_.degrees[g] - 1);
        GCElement dd = d(d_[g]);
        if (!dd.is_zero())
            return "d²(" + gens_.labels[g] + ") = " + show(dd);
    }
    return std::nullopt;
}

std::optional<std::string> GCAlgebra::check_bracket_antisymmetry() const
{
    for (int i = 0; i < size(); ++i)
        for (int j = 0; j < size(); ++j) {
            const Scalar& p = bracket_[i][j];
            if (sgn(p) != 0 && gens_.degrees[i] + gens_.degrees[j] + shift_ != 0)
                return "{" + gens_.labels[i] + "," + gens_.labels[j] + "} = " + to_string(p) +
                       " has the wrong degree";
            int e = (gens_.degrees[i] + shift_) * (gens_.degrees[j] + shift_);
            if (p != -sign_of(e) * bracket_[j][i])
                return "{" + gens_.labels[i] + "," + gens_.labels[j] + "} = " + to_string(p) + " but {" +
                       gens_.labels[j] + "," + gens_.labels[i] + "} = " + to_string(bracket_[j][i]);
        }
    return std::nullopt;
}

std::optional<std::string> GCAlgebra::check_bracket_compatibility() const
{
    for (int i = 0; i < size(); ++i)
        for (int j = 0; j < size(); ++j) {
            GCElement lhs = d(bracket(gen(i), gen(j)));
            GCElement rhs = bracket(d_[i], gen(j)) + bracket(gen(i), d_[j]) * Scalar(sign_of(gens_.degrees[i]));
            rhs = rhs * Scalar(sign_of(shift_));
            if (lhs != rhs)
                return "d{" + gens_.labels[i] + "," + gens_.labels[j] + "} = " + show(lhs) + " but " + show(rhs);
        }
    return std::nullopt;
}

std::string GCAlgebra::show(const Monomial& m) const
{
    if (m.empty())
        return "1";
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i)
            s += "*";
        s += gens_.labels[m[i]];
    }
    return s;
}

std::string GCAlgebra::show(const GCElement& f) const
{
    if (f.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : f) {
        os << (first ? "" : " + ") << to_string(c) << "*" << show(m);
        first = false;
    }
    return os.str();
}

std::string GCAlgebra::show(const KahlerForm& w) const
{
    if (w.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : w) {
        os << (first ? "" : " + ") << to_string(c) << "*" << show(k.first) << "·d" << gens_.labels[k.second];
        first = false;
    }
    return os.str();
}

GCAlgebra ce_algebra(const GradedSpace& g, const LinearMap& dg,
                     const std::vector<std::vector<std::tuple<Scalar, int, int>>>& cobracket,
                     const std::vector<std::string>& labels, int shift)
{
    if (dg.source().dim() != g.dim() || static_cast<int>(cobracket.size()) != g.dim())
        throw InputError("ce_algebra: size mismatch");
    GradedSpace gens;
    for (int i = 0; i < g.dim(); ++i)
        gens.add(labels.empty() ? "s⁻¹" + g.labels[i] : labels.at(i), g.degrees[i] - 1);
    GCAlgebra a(gens, shift);
    Scalar half = frac(1, 2);
    for (int i = 0; i < g.dim(); ++i) {
        GCElement v;
        for (const auto& [j, c] : dg.column(i))
            v.add(Monomial{j}, -c);
        for (const auto& [c, l, r] : cobracket[i]) {
            if (g.degrees[l] + g.degrees[r] != g.degrees[i])
                throw InputError("cobracket of " + g.labels[i] + " is not of degree 0");
            v += a.multiply(a.gen(l), a.gen(r)) * (c * half * sign_of(g.degrees[l]));
        }
        a.set_differential(i, std::move(v));
    }
    if (auto w = a.check_d_squared())
        throw InputError("Chevalley–Eilenberg differential does not square to zero: " + *w);
    return a;
}

void poisson_from_pairing(GCAlgebra& a, const std::function<Scalar(int, int)>& table)
{
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j)
            a.set_bracket(i, j, table(i, j));
    if (auto w = a.check_bracket_antisymmetry())
        throw InputError("bracket is not graded antisymmetric: " + *w);
    if (auto w = a.check_bracket_compatibility())
        throw InputError("bracket is not compatible with the differential: " + *w);
}

}  // namespace cyc
