#include "cyc/freealg.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>

namespace cyc {

TruncatedAlgebra::TruncatedAlgebra(CyclicCoalgebra c, int W)
    : coalg_(std::move(c)), v_(shifted_space(coalg_)), W_(W)
{
    if (W < 0)
        throw std::invalid_argument("weight truncation must be non-negative");
    for (int i = 0; i < coalg_.dim(); ++i) {
        TensorElement d;
        for (const auto& [k, a] : coalg_.differential.column(i))
            d.add(Word{k}, -a);
        for (const auto& t : coalg_.coproduct_terms(i))
            d.add(Word{t.left, t.right}, t.coeff * sign_of(coalg_.degree(t.left)));
        dgen_.push_back(std::move(d));
    }
}

int TruncatedAlgebra::degree(const Word& w) const
{
    int d = 0;
    for (int l : w)
        d += v_.degrees[l];
    return d;
}

std::optional<int> TruncatedAlgebra::degree(const TensorElement& t) const
{
    std::optional<int> d;
    for (const auto& [w, c] : t) {
        int e = degree(w);
        if (d && *d != e)
            return std::nullopt;
        d = e;
    }
    return d;
}

std::vector<Word> TruncatedAlgebra::words(int weight) const
{
    std::vector<Word> out;
    int k = letters();
    if (weight == 0)
        return {Word{}};
    if (k == 0)
        return out;
    Word w(weight, 0);
    while (true) {
        out.push_back(w);
        int i = weight - 1;
        while (i >= 0 && ++w[i] == k)
            w[i--] = 0;
        if (i < 0)
            return out;
    }
}

std::vector<Word> TruncatedAlgebra::words(int weight, int deg) const
{
    std::vector<Word> out;
    for (auto& w : words(weight))
        if (degree(w) == deg)
            out.push_back(std::move(w));
    return out;
}

TensorElement TruncatedAlgebra::multiply(const TensorElement& a, const TensorElement& b) const
{
    TensorElement r;
    for (const auto& [u, x] : a)
        for (const auto& [v, y] : b) {
            Word w = u;
            w.insert(w.end(), v.begin(), v.end());
            r.add(w, x * y);
        }
    return r;
}

TensorElement TruncatedAlgebra::multiply_truncated(const TensorElement& a, const TensorElement& b,
                                                   bool* truncated) const
{
    TensorElement r;
    for (const auto& [u, x] : a)
        for (const auto& [v, y] : b) {
            if (static_cast<int>(u.size() + v.size()) > W_) {
                if (truncated)
                    *truncated = true;
                continue;
            }
            Word w = u;
            w.insert(w.end(), v.begin(), v.end());
            r.add(w, x * y);
        }
    return r;
}

TensorElement TruncatedAlgebra::commutator(const TensorElement& a, const TensorElement& b) const
{
    TensorElement r;
    for (const auto& [u, x] : a)
        for (const auto& [v, y] : b) {
            Word uv = u, vu = v;
            uv.insert(uv.end(), v.begin(), v.end());
            vu.insert(vu.end(), u.begin(), u.end());
            r.add(uv, x * y);
            r.add(vu, -x * y * sign_of(degree(u) * degree(v)));
        }
    return r;
}

TensorElement TruncatedAlgebra::cobar_differential(const TensorElement& a, bool* exceeds_W) const
{
    TensorElement r;
    for (const auto& [w, x] : a) {
        int before = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            Scalar c = x * sign_of(before);
            for (const auto& [dw, y] : dgen_[w[i]]) {
                Word out(w.begin(), w.begin() + i);
                out.insert(out.end(), dw.begin(), dw.end());
                out.insert(out.end(), w.begin() + i + 1, w.end());
                if (exceeds_W && static_cast<int>(out.size()) > W_)
                    *exceeds_W = true;
                r.add(out, c * y);
            }
            before += v_.degrees[w[i]];
        }
    }
    return r;
}

int TruncatedAlgebra::rotation_sign(const Word& w) const
{
    if (w.empty())
        return 1;
    int first = v_.degrees[w[0]];
    return sign_of(first * (degree(w) - first));
}

const TruncatedAlgebra::CyclicBlock& TruncatedAlgebra::block(int weight, int deg) const
{
    std::lock_guard lock(mu_);
    auto key = std::make_pair(weight, deg);
    auto it = blocks_.find(key);
    if (it != blocks_.end())
        return *it->second;
    auto ws = words(weight, deg);
    // column order: lexicographically largest word first, so that the free
    // column of each consistent rotation orbit is its lex-least word
    std::reverse(ws.begin(), ws.end());
    std::map<Word, int> idx;
    for (int i = 0; i < static_cast<int>(ws.size()); ++i)
        idx[ws[i]] = i;
    Echelon e;
    for (const auto& w : ws) {
        Word r(w.begin() + 1, w.end());
        r.push_back(w[0]);
        Vec row;
        row.add(idx[w], 1);
        row.add(idx[r], -rotation_sign(w));
        e.insert(row);
    }
    auto b = std::make_unique<CyclicBlock>();
    for (const auto& w : ws) {
        Vec r = e.reduce(Vec(idx[w]));
        TensorElement t;
        for (const auto& [i, c] : r)
            t.add(ws[i], c);
        if (t == TensorElement(w))
            b->canonical.push_back(w);
        b->residue.emplace(w, std::move(t));
    }
    std::sort(b->canonical.begin(), b->canonical.end());
    auto& ref = *b;
    blocks_.emplace(key, std::move(b));
    return ref;
}

TensorElement TruncatedAlgebra::project_cyclic(const TensorElement& a) const
{
    TensorElement r;
    for (const auto& [w, x] : a) {
        if (w.empty())
            continue;
        r.add(block(static_cast<int>(w.size()), degree(w)).residue.at(w), x);
    }
    return r;
}

std::vector<Word> TruncatedAlgebra::cyclic_basis(int weight) const
{
    std::vector<int> degs;
    for (const auto& w : words(weight))
        degs.push_back(degree(w));
    std::sort(degs.begin(), degs.end());
    degs.erase(std::unique(degs.begin(), degs.end()), degs.end());
    std::vector<Word> out;
    for (int d : degs) {
        auto part = cyclic_basis(weight, d);
        out.insert(out.end(), part.begin(), part.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Word> TruncatedAlgebra::cyclic_basis(int weight, int deg) const
{
    if (weight == 0)
        return {};
    return block(weight, deg).canonical;
}

int TruncatedAlgebra::word_index(const Word& w) const
{
    long k = letters();
    long offset = 0, p = 1;
    for (std::size_t len = 0; len < w.size(); ++len) {
        offset += p;
        p *= k;
    }
    long v = 0;
    for (int l : w)
        v = v * k + l;
    long idx = offset + v;
    if (idx > std::numeric_limits<int>::max() / std::max<long>(k, 1))
        throw std::length_error("word index overflow");
    return static_cast<int>(idx);
}

Vec TruncatedAlgebra::to_vec(const TensorElement& t) const
{
    Vec v;
    for (const auto& [w, c] : t)
        v.add(word_index(w), c);
    return v;
}

Vec TruncatedAlgebra::to_vec(const OneForm& t) const
{
    Vec v;
    for (const auto& [k, c] : t)
        v.add(oneform_index(k.first, k.second), c);
    return v;
}

TensorElement TruncatedAlgebra::right_nested(const Word& seq) const
{
    if (seq.empty())
        throw std::invalid_argument("empty bracket sequence");
    TensorElement r = letter(seq.back());
    for (int i = static_cast<int>(seq.size()) - 2; i >= 0; --i)
        r = commutator(letter(seq[i]), r);
    return r;
}

const LieBasis& TruncatedAlgebra::lie_basis(int weight) const
{
    std::lock_guard lock(mu_);
    auto it = lie_.find(weight);
    if (it != lie_.end())
        return *it->second;
    auto b = std::make_unique<LieBasis>();
    b->weight = weight;
    if (weight >= 1)
        for (const auto& seq : words(weight)) {
            TensorElement e = right_nested(seq);
            if (e.is_zero())
                continue;
            int id = static_cast<int>(b->elements.size());
            if (!b->echelon.insert(to_vec(e), id)) {
                b->sequences.push_back(seq);
                b->degrees.push_back(degree(seq));
                b->elements.push_back(std::move(e));
            }
        }
    auto& ref = *b;
    lie_.emplace(weight, std::move(b));
    return ref;
}

namespace {

std::map<int, TensorElement> split_by_weight(const TensorElement& t)
{
    std::map<int, TensorElement> out;
    for (const auto& [w, c] : t)
        out[static_cast<int>(w.size())].add(w, c);
    return out;
}

}  // namespace

std::optional<Vec> TruncatedAlgebra::lie_coordinates(const TensorElement& t, int weight) const
{
    TensorElement part;
    for (const auto& [w, c] : t)
        if (static_cast<int>(w.size()) == weight)
            part.add(w, c);
    const auto& b = lie_basis(weight);
    Vec combo;
    if (!b.echelon.reduce(to_vec(part), &combo).is_zero())
        return std::nullopt;
    return combo;
}

bool TruncatedAlgebra::in_lie_span(const TensorElement& t) const
{
    for (const auto& [wt, part] : split_by_weight(t))
        if (wt == 0 || !lie_coordinates(part, wt))
            return false;
    return true;
}

TensorElement TruncatedAlgebra::symmetrize(const std::vector<TensorElement>& factors) const
{
    int p = static_cast<int>(factors.size());
    if (p == 0)
        return one();
    std::vector<int> deg(p);
    for (int i = 0; i < p; ++i) {
        auto d = degree(factors[i]);
        if (!d)
            throw std::invalid_argument("symmetrize needs homogeneous nonzero factors");
        deg[i] = *d;
    }
    std::vector<int> order(p);
    std::iota(order.begin(), order.end(), 0);
    TensorElement r;
    long count = 0;
    do {
        int s = 1;
        for (int a = 0; a < p; ++a)
            for (int b = a + 1; b < p; ++b)
                if (order[a] > order[b])
                    s *= sign_of(deg[order[a]] * deg[order[b]]);
        TensorElement prod = factors[order[0]];
        for (int i = 1; i < p; ++i)
            prod = multiply(prod, factors[order[i]]);
        r.add(prod, s);
        ++count;
    } while (std::next_permutation(order.begin(), order.end()));
    r *= frac(1, count);
    return r;
}

const SymBasis& TruncatedAlgebra::sym_basis(int p, int weight) const
{
    std::lock_guard lock(mu_);
    auto key = std::make_pair(p, weight);
    auto it = sym_.find(key);
    if (it != sym_.end())
        return *it->second;
    auto b = std::make_unique<SymBasis>();
    b->p = p;
    b->weight = weight;
    // all Lie basis elements of weight ≤ weight, in (weight, index) order
    std::vector<LieRef> refs;
    for (int w = 1; w <= weight; ++w)
        for (int i = 0; i < static_cast<int>(lie_basis(w).elements.size()); ++i)
            refs.push_back({w, i});
    std::vector<LieRef> cur;
    std::function<void(int, int)> rec = [&](int start, int remaining) {
        if (static_cast<int>(cur.size()) == p) {
            if (remaining == 0)
                b->tuples.push_back(cur);
            return;
        }
        for (int i = start; i < static_cast<int>(refs.size()); ++i) {
            const LieRef& r = refs[i];
            if (r.weight > remaining)
                break;
            // a repeated odd element squares to zero in the symmetric algebra
            if (!cur.empty() && cur.back() == r && odd(lie_degree(r)))
                continue;
            cur.push_back(r);
            rec(i, remaining - r.weight);
            cur.pop_back();
        }
    };
    rec(0, weight);
    std::vector<std::vector<LieRef>> kept;
    for (const auto& t : b->tuples) {
        std::vector<TensorElement> f;
        for (const auto& r : t)
            f.push_back(lie_element(r));
        TensorElement e = symmetrize(f);
        int id = static_cast<int>(b->elements.size());
        if (!e.is_zero() && !b->echelon.insert(to_vec(e), id)) {
            kept.push_back(t);
            b->elements.push_back(std::move(e));
        }
    }
    b->tuples = std::move(kept);
    auto& ref = *b;
    sym_.emplace(key, std::move(b));
    return ref;
}

std::optional<Vec> TruncatedAlgebra::sym_coordinates(const TensorElement& t, int p, int weight) const
{
    TensorElement part;
    for (const auto& [w, c] : t)
        if (static_cast<int>(w.size()) == weight)
            part.add(w, c);
    Vec combo;
    if (!sym_basis(p, weight).echelon.reduce(to_vec(part), &combo).is_zero())
        return std::nullopt;
    return combo;
}

bool TruncatedAlgebra::in_sym_span(const TensorElement& t, int p) const
{
    for (const auto& [wt, part] : split_by_weight(t))
        if (!sym_coordinates(part, p, wt))
            return false;
    return true;
}

const LambdaBasis& TruncatedAlgebra::lambda_basis(int p, int weight) const
{
    std::lock_guard lock(mu_);
    auto key = std::make_pair(p, weight);
    auto it = lambda_.find(key);
    if (it != lambda_.end())
        return *it->second;
    auto b = std::make_unique<LambdaBasis>();
    b->p = p;
    b->weight = weight;
    for (const auto& e : sym_basis(p, weight).elements) {
        TensorElement cls = project_cyclic(e);
        int id = static_cast<int>(b->classes.size());
        if (!cls.is_zero() && !b->echelon.insert(to_vec(cls), id)) {
            b->classes.push_back(std::move(cls));
            b->lifts.push_back(e);
        }
    }
    auto& ref = *b;
    lambda_.emplace(key, std::move(b));
    return ref;
}

bool TruncatedAlgebra::in_lambda_span(const TensorElement& cls, int p) const
{
    for (const auto& [wt, part] : split_by_weight(cls))
        if (wt == 0 || !lambda_basis(p, wt).echelon.contains(to_vec(part)))
            return false;
    return true;
}

std::vector<OneForm> TruncatedAlgebra::theta_basis(int p, int weight) const
{
    std::vector<OneForm> out;
    if (weight < 1)
        return out;
    for (const auto& e : sym_basis(p, weight - 1).elements)
        for (int l = 0; l < letters(); ++l) {
            OneForm f;
            for (const auto& [w, c] : e)
                f.add({w, l}, c);
            out.push_back(std::move(f));
        }
    return out;
}

bool TruncatedAlgebra::in_theta_span(const OneForm& t, int p) const
{
    std::map<int, OneForm> parts;
    for (const auto& [k, c] : t)
        parts[static_cast<int>(k.first.size()) + 1].add(k, c);
    for (const auto& [wt, part] : parts) {
        Echelon e;
        for (const auto& b : theta_basis(p, wt))
            e.insert(to_vec(b));
        if (!e.contains(to_vec(part)))
            return false;
    }
    return true;
}

std::pair<int, int> TruncatedAlgebra::sound_range(std::string* why) const
{
    auto say = [&](const std::string& s) {
        if (why)
            *why = s;
    };
    if (coalg_.coproduct.is_zero()) {
        say("the differential preserves weight, so the weight-truncated complex is a direct summand");
        return {INT_MIN, INT_MAX};
    }
    if (letters() == 0) {
        say("no generators");
        return {INT_MIN, INT_MAX};
    }
    int lo = *std::min_element(v_.degrees.begin(), v_.degrees.end());
    int hi = *std::max_element(v_.degrees.begin(), v_.degrees.end());
    if (lo >= 1) {
        say("generators have degree ≥ " + std::to_string(lo) + ", so words of weight > W have degree ≥ " +
            std::to_string((W_ + 1) * lo));
        return {INT_MIN, (W_ + 1) * lo - 1};
    }
    if (hi <= -1) {
        say("generators have degree ≤ " + std::to_string(hi));
        return {(W_ + 1) * hi + 1, INT_MAX};
    }
    say("generators of degree 0 with weight-raising differential: no degree is exact under truncation");
    return {1, 0};
}

ChainComplex TruncatedAlgebra::cobar_complex() const
{
    ChainComplex c;
    std::map<Word, int> idx;
    for (int w = 0; w <= W_; ++w)
        for (const auto& word : words(w))
            idx[word] = c.space.add(show(word), degree(word));
    c.d = LinearMap(c.space, c.space, -1);
    for (const auto& [word, j] : idx)
        for (const auto& [out, a] : cobar_differential(TensorElement(word)))
            if (static_cast<int>(out.size()) <= W_)
                c.d.add_entry(idx.at(out), j, a);
    auto [lo, hi] = sound_range(&c.soundness);
    c.sound_lo = lo;
    c.sound_hi = hi;
    return c;
}

ChainComplex TruncatedAlgebra::cyclic_complex() const
{
    ChainComplex c;
    std::map<Word, int> idx;
    for (int w = 1; w <= W_; ++w)
        for (const auto& word : cyclic_basis(w))
            idx[word] = c.space.add(show(word), degree(word));
    c.d = LinearMap(c.space, c.space, -1);
    for (const auto& [word, j] : idx) {
        TensorElement d;
        for (const auto& [out, a] : cobar_differential(TensorElement(word)))
            if (static_cast<int>(out.size()) <= W_)
                d.add(out, a);
        for (const auto& [out, a] : project_cyclic(d))
            c.d.add_entry(idx.at(out), j, a);
    }
    auto [lo, hi] = sound_range(&c.soundness);
    c.sound_lo = lo;
    c.sound_hi = hi;
    return c;
}

std::string TruncatedAlgebra::show(const Word& w) const
{
    if (w.empty())
        return "1";
    if (w.size() == 1)
        return v_.names[w[0]];
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i)
        s += (i ? "," : "") + v_.names[w[i]];
    return s + ")";
}

namespace {

template <class K, class F>
std::string show_comb(const LinComb<K>& t, F&& key)
{
    if (t.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : t) {
        Scalar a = abs(c);
        os << (sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        if (a != 1)
            os << a.get_str() << "*";
        os << key(k);
        first = false;
    }
    return os.str();
}

}  // namespace

std::string TruncatedAlgebra::show(const TensorElement& t) const
{
    return show_comb(t, [&](const Word& w) { return show(w); });
}

std::string TruncatedAlgebra::show(const OneForm& t) const
{
    return show_comb(t, [&](const std::pair<Word, int>& k) { return show(k.first) + "⊗" + v_.names[k.second]; });
}

}  // namespace cyc
