#include "cyc/dpois.hpp"

#include <sstream>

namespace cyc {

namespace {

Word concat(const Word& a, const Word& b)
{
    Word w = a;
    w.insert(w.end(), b.begin(), b.end());
    return w;
}

Word slice(const Word& w, std::size_t from, std::size_t to) { return Word(w.begin() + from, w.begin() + to); }

}  // namespace

DoubleValue DoublePoisson::double_bracket(const Word& a, const Word& b) const
{
    // {{a,b}} = Σ_{i,j} (-1)^{(|a|+s)|b_<j| + |a_≤i||a_>i|} ⟨a_i,b_j⟩ (b_<j a_>i) ⊗ (a_<i b_>j)
    DoubleValue out;
    const VSpace& V = R_.V();
    int s = V.shift;
    int da = degree(a);
    int b_before = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
        int a_upto = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            a_upto += V.degrees[a[i]];
            const Scalar& p = V.pair(a[i], b[j]);
            if (sgn(p) != 0) {
                int sign = sign_of((da + s) * b_before + a_upto * (da - a_upto));
                Word left = concat(slice(b, 0, j), slice(a, i + 1, a.size()));
                Word right = concat(slice(a, 0, i), slice(b, j + 1, b.size()));
                out.add({left, right}, p * sign);
            }
        }
        b_before += V.degrees[b[j]];
    }
    return out;
}

DoubleValue DoublePoisson::double_bracket(const TensorElement& a, const TensorElement& b) const
{
    DoubleValue out;
    for (const auto& [u, x] : a)
        for (const auto& [v, y] : b)
            out.add(double_bracket(u, v), x * y);
    return out;
}

TensorElement DoublePoisson::multiply(const DoubleValue& x) const
{
    TensorElement r;
    for (const auto& [k, c] : x)
        r.add(concat(k.first, k.second), c);
    return r;
}

TensorElement DoublePoisson::bracket_R(const TensorElement& a, const TensorElement& b) const
{
    return multiply(double_bracket(a, b));
}

TensorElement perturb_representative(const TruncatedAlgebra& R, const TensorElement& a)
{
    if (a.is_zero())
        return a;
    const Word& w = a.begin()->first;
    if (w.size() < 2)
        return a;
    Word r(w.begin() + 1, w.end());
    r.push_back(w[0]);
    TensorElement t = a;
    t.add(w, 1);
    t.add(r, -R.rotation_sign(w));
    return t;
}

TensorElement DoublePoisson::bracket_cyclic(const TensorElement& a, const TensorElement& b,
                                            bool check_representatives) const
{
    TensorElement out = R_.project_cyclic(bracket_R(a, b));
    if (check_representatives) {
        TensorElement other =
            R_.project_cyclic(bracket_R(perturb_representative(R_, a), perturb_representative(R_, b)));
        if (other != out)
            throw std::logic_error("cyclic bracket depends on representatives: " + R_.show(a) + ", " + R_.show(b));
    }
    return out;
}

TensorElement DoublePoisson::act_on_R(const TensorElement& alpha, const TensorElement& r) const
{
    return multiply(double_bracket(alpha, r));
}

OneForm DoublePoisson::cyclic_derivative(const TensorElement& alpha) const
{
    // ∂̄(w₁…w_k) = Σ_i (-1)^{|w_≤i||w_>i|} (w_>i w_<i) ⊗ w_i
    OneForm out;
    const VSpace& V = R_.V();
    for (const auto& [w, c] : alpha) {
        int total = degree(w), upto = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            upto += V.degrees[w[i]];
            Word r = concat(slice(w, i + 1, w.size()), slice(w, 0, i));
            out.add({r, w[i]}, c * sign_of(upto * (total - upto)));
        }
    }
    return out;
}

BimodForm DoublePoisson::de_rham(const TensorElement& r) const
{
    BimodForm out;
    for (const auto& [w, c] : r)
        for (std::size_t i = 0; i < w.size(); ++i)
            out.add({slice(w, 0, i), w[i], slice(w, i + 1, w.size())}, c);
    return out;
}

OneForm DoublePoisson::descend(const BimodForm& x) const
{
    // b⊗v⊗c ↦ (-1)^{|c|(|b|+|v|)} cb ⊗ v
    OneForm out;
    for (const auto& [k, coef] : x) {
        const auto& [b, v, c] = k;
        int sign = sign_of(degree(c) * (degree(b) + R_.V().degrees[v]));
        out.add({concat(c, b), v}, coef * sign);
    }
    return out;
}

BimodForm DoublePoisson::lift(const OneForm& x) const
{
    BimodForm out;
    for (const auto& [k, coef] : x)
        out.add({k.first, k.second, Word{}}, coef);
    return out;
}

namespace {

// b'·(Σ x⊗v⊗y)·c'
BimodForm sandwich(const Word& left, const BimodForm& mid, const Word& right, const Scalar& c)
{
    BimodForm out;
    for (const auto& [k, coef] : mid) {
        const auto& [b, v, e] = k;
        out.add({concat(left, b), v, concat(e, right)}, coef * c);
    }
    return out;
}

}  // namespace

BimodForm DoublePoisson::act_on_omega1(const TensorElement& alpha, const BimodForm& x) const
{
    // {α, b·dv·c} = {α,b}·dv·c + (-1)^{(|α|+s)(|b|+|v|)} b·dv·{α,c} + (-1)^{(|α|+s)|b|} b·d{α,v}·c
    BimodForm out;
    int s = shift();
    for (const auto& [a, ca] : alpha) {
        int da = degree(a) + s;
        TensorElement A(a, ca);
        for (const auto& [k, coef] : x) {
            const auto& [b, v, c] = k;
            int db = degree(b), dv = R_.V().degrees[v];
            for (const auto& [w, y] : act_on_R(A, TensorElement(b)))
                out.add({w, v, c}, coef * y);
            for (const auto& [w, y] : act_on_R(A, TensorElement(c)))
                out.add({b, v, w}, coef * y * sign_of(da * (db + dv)));
            out += sandwich(b, de_rham(act_on_R(A, TensorElement(Word{v}))), c, coef * sign_of(da * db));
        }
    }
    return out;
}

OneForm DoublePoisson::act_on_oneform(const TensorElement& alpha, const OneForm& w) const
{
    return descend(act_on_omega1(alpha, lift(w)));
}

TensorElement DoublePoisson::beta(const OneForm& x) const
{
    TensorElement out;
    for (const auto& [k, c] : x) {
        const auto& [r, v] = k;
        out.add(concat(r, Word{v}), c);
        out.add(concat(Word{v}, r), -c * sign_of(degree(r) * R_.V().degrees[v]));
    }
    return out;
}

BimodForm DoublePoisson::bimod_differential(const BimodForm& x) const
{
    // δ(b·dv·c) = δb·dv·c + (-1)^{|b|} b·d(δv)·c + (-1)^{|b|+|v|} b·dv·δc
    BimodForm out;
    for (const auto& [k, coef] : x) {
        const auto& [b, v, c] = k;
        int db = degree(b), dv = R_.V().degrees[v];
        for (const auto& [w, y] : R_.cobar_differential(TensorElement(b)))
            out.add({w, v, c}, coef * y);
        out += sandwich(b, de_rham(R_.generator_differential(v)), c, coef * sign_of(db));
        for (const auto& [w, y] : R_.cobar_differential(TensorElement(c)))
            out.add({b, v, w}, coef * y * sign_of(db + dv));
    }
    return out;
}

OneForm DoublePoisson::oneform_differential(const OneForm& w) const
{
    return descend(bimod_differential(lift(w)));
}

ChainComplex DoublePoisson::hochschild_cone(int p) const
{
    if (!R_.coalgebra().cocommutative)
        throw std::invalid_argument("the cone of β needs a cocommutative coalgebra");
    int W = R_.W();
    ChainComplex cx;
    std::vector<OneForm> theta;
    std::vector<TensorElement> sym;
    Echelon theta_ech(true), sym_ech(true);
    for (int w = 1; w <= W; ++w)
        for (auto& t : R_.theta_basis(p, w)) {
            theta_ech.insert(R_.to_vec(t), static_cast<int>(theta.size()));
            theta.push_back(std::move(t));
        }
    for (int w = 0; w <= W; ++w)
        for (const auto& e : R_.sym_basis(p, w).elements) {
            sym_ech.insert(R_.to_vec(e), static_cast<int>(sym.size()));
            sym.push_back(e);
        }
    int nt = static_cast<int>(theta.size());
    for (const auto& t : theta) {
        const auto& [r, v] = t.begin()->first;
        cx.space.add("θ:" + R_.show(t), degree(r) + R_.V().degrees[v] + 1);
    }
    for (const auto& e : sym)
        cx.space.add("S:" + R_.show(e), *degree(e));
    cx.d = LinearMap(cx.space, cx.space, -1);

    auto theta_coords = [&](const OneForm& x) {
        OneForm kept;
        for (const auto& [k, c] : x)
            if (static_cast<int>(k.first.size()) + 1 <= W)
                kept.add(k, c);
        Vec combo;
        if (!theta_ech.reduce(R_.to_vec(kept), &combo).is_zero())
            throw std::logic_error("θ^(" + std::to_string(p) + ") is not closed under the differential");
        return combo;
    };
    auto sym_coords = [&](const TensorElement& x) {
        TensorElement kept;
        for (const auto& [w, c] : x)
            if (static_cast<int>(w.size()) <= W)
                kept.add(w, c);
        Vec combo;
        if (!sym_ech.reduce(R_.to_vec(kept), &combo).is_zero())
            throw std::logic_error("image outside Sym^" + std::to_string(p));
        return combo;
    };
    for (int i = 0; i < nt; ++i) {
        for (const auto& [j, c] : theta_coords(oneform_differential(theta[i])))
            cx.d.add_entry(j, i, -c);
        for (const auto& [j, c] : sym_coords(beta(theta[i])))
            cx.d.add_entry(nt + j, i, c);
    }
    for (int i = 0; i < static_cast<int>(sym.size()); ++i)
        for (const auto& [j, c] : sym_coords(R_.cobar_differential(sym[i])))
            cx.d.add_entry(nt + j, nt + i, c);
    auto [lo, hi] = R_.sound_range(&cx.soundness);
    cx.sound_lo = lo;
    cx.sound_hi = hi;
    return cx;
}

std::string DoublePoisson::show(const DoubleValue& x) const
{
    if (x.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : x) {
        os << (first ? "" : " + ") << c.get_str() << "*" << R_.show(k.first) << "⊗" << R_.show(k.second);
        first = false;
    }
    return os.str();
}

std::string DoublePoisson::show(const BimodForm& x) const
{
    if (x.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : x) {
        const auto& [b, v, e] = k;
        os << (first ? "" : " + ") << c.get_str() << "*" << R_.show(b) << "·d" << R_.V().names[v] << "·"
           << R_.show(e);
        first = false;
    }
    return os.str();
}

}  // namespace cyc
