#include "cyc/exactlin.hpp"

#include <algorithm>
#include <sstream>

namespace cyc {

Scalar parse_scalar(const std::string& text)
{
    std::string t;
    for (char ch : text)
        if (ch != ' ')
            t += ch;
    if (t.empty())
        throw std::invalid_argument("empty number");
    std::size_t start = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    auto slash = t.find('/');
    auto digits = [&](std::size_t a, std::size_t b) {
        if (a >= b)
            return false;
        for (std::size_t i = a; i < b; ++i)
            if (t[i] < '0' || t[i] > '9')
                return false;
        return true;
    };
    bool ok = slash == std::string::npos ? digits(start, t.size())
                                         : digits(start, slash) && digits(slash + 1, t.size());
    if (!ok)
        throw std::invalid_argument("not a rational number: '" + text + "'");
    Scalar q;
    std::string body = t[0] == '+' ? t.substr(1) : t;
    q.set_str(body, 10);
    if (slash != std::string::npos && q.get_den() == 0)
        throw std::invalid_argument("zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Scalar& q) { return q.get_str(); }

int GradedSpace::add(std::string label, int degree)
{
    labels.push_back(std::move(label));
    degrees.push_back(degree);
    return dim() - 1;
}

int GradedSpace::index_of(const std::string& label) const
{
    for (int i = 0; i < dim(); ++i)
        if (labels[i] == label)
            return i;
    return -1;
}

std::vector<int> GradedSpace::indices_in_degree(int d) const
{
    std::vector<int> out;
    for (int i = 0; i < dim(); ++i)
        if (degrees[i] == d)
            out.push_back(i);
    return out;
}

std::optional<int> GradedSpace::degree_of(const Vec& v) const
{
    std::optional<int> d;
    for (const auto& [i, c] : v) {
        if (d && *d != degrees.at(i))
            return std::nullopt;
        d = degrees.at(i);
    }
    return d;
}

GradedSpace tensor(const GradedSpace& a, const GradedSpace& b)
{
    GradedSpace t;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < b.dim(); ++j)
            t.add(a.labels[i] + "⊗" + b.labels[j], a.degrees[i] + b.degrees[j]);
    return t;
}

GradedSpace tensor_square(const GradedSpace& a) { return tensor(a, a); }

LinearMap::LinearMap(GradedSpace source, GradedSpace target, int degree)
    : source_(std::move(source)), target_(std::move(target)), degree_(degree),
      columns_(source_.dim())
{
}

Vec LinearMap::apply(const Vec& v) const
{
    Vec out;
    for (const auto& [j, c] : v)
        out.add(columns_.at(j), c);
    return out;
}

LinearMap LinearMap::compose(const LinearMap& inner) const
{
    LinearMap r(inner.source_, target_, degree_ + inner.degree_);
    for (int j = 0; j < inner.source_.dim(); ++j)
        r.columns_[j] = apply(inner.columns_[j]);
    return r;
}

bool LinearMap::is_zero() const
{
    return std::all_of(columns_.begin(), columns_.end(), [](const Vec& v) { return v.is_zero(); });
}

std::optional<std::pair<int, int>> LinearMap::degree_violation() const
{
    for (int j = 0; j < source_.dim(); ++j)
        for (const auto& [i, c] : columns_[j])
            if (target_.degrees.at(i) != source_.degrees[j] + degree_)
                return std::make_pair(j, i);
    return std::nullopt;
}

Vec Echelon::reduce(const Vec& v, Vec* combo) const
{
    Vec r = v;
    auto& t = r.mutable_terms();
    auto it = t.begin();
    while (it != t.end()) {
        auto row = rows_.find(it->first);
        if (row == rows_.end()) {
            ++it;
            continue;
        }
        int p = it->first;
        Scalar c = it->second;
        r.add(row->second.v, -c);
        if (combo && track_)
            combo->add(row->second.combo, c);
        it = t.upper_bound(p);
    }
    return r;
}

std::optional<Vec> Echelon::insert(const Vec& v, int id)
{
    Vec combo;
    Vec r = reduce(v, track_ ? &combo : nullptr);
    if (r.is_zero()) {
        Vec rel;
        if (track_) {
            rel.add(id, 1);
            rel.add(combo, -1);
        }
        return rel;
    }
    int pivot = r.begin()->first;
    Scalar inv = 1 / r.begin()->second;
    Row row;
    row.v = r * inv;
    if (track_) {
        row.combo.add(id, 1);
        row.combo.add(combo, -1);
        row.combo *= inv;
    }
    rows_.emplace(pivot, std::move(row));
    return std::nullopt;
}

std::vector<int> Echelon::pivots() const
{
    std::vector<int> out;
    for (const auto& kv : rows_)
        out.push_back(kv.first);
    return out;
}

int rank(const LinearMap& f)
{
    Echelon e;
    for (int j = 0; j < f.source().dim(); ++j)
        e.insert(f.column(j));
    return e.rank();
}

std::vector<Vec> kernel(const LinearMap& f)
{
    Echelon e(true);
    std::vector<Vec> out;
    for (int j = 0; j < f.source().dim(); ++j)
        if (auto rel = e.insert(f.column(j), j))
            out.push_back(std::move(*rel));
    return out;
}

std::vector<Vec> image_basis(const LinearMap& f)
{
    Echelon e;
    std::vector<Vec> out;
    for (int j = 0; j < f.source().dim(); ++j)
        if (!e.insert(f.column(j)))
            out.push_back(f.column(j));
    return out;
}

std::optional<Vec> solve(const LinearMap& f, const Vec& rhs)
{
    Echelon e(true);
    for (int j = 0; j < f.source().dim(); ++j)
        e.insert(f.column(j), j);
    Vec combo;
    if (!e.reduce(rhs, &combo).is_zero())
        return std::nullopt;
    return combo;
}

int dense_rank(const std::vector<std::vector<Scalar>>& rows, int ncols)
{
    std::vector<std::vector<mpz_class>> m;
    for (const auto& row : rows) {
        mpz_class l = 1;
        for (const auto& q : row)
            if (sgn(q) != 0)
                mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
        std::vector<mpz_class> z(ncols);
        bool nonzero = false;
        for (int j = 0; j < ncols; ++j) {
            const Scalar& q = row[j];
            if (sgn(q) == 0)
                continue;
            z[j] = q.get_num() * (l / q.get_den());
            nonzero = true;
        }
        if (nonzero)
            m.push_back(std::move(z));
    }
    int n = static_cast<int>(m.size());
    int r = 0;
    mpz_class prev = 1;
    for (int c = 0; c < ncols && r < n; ++c) {
        int p = r;
        while (p < n && m[p][c] == 0)
            ++p;
        if (p == n)
            continue;
        std::swap(m[p], m[r]);
        for (int i = r + 1; i < n; ++i) {
            for (int j = c + 1; j < ncols; ++j) {
                mpz_class t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

namespace {

// Matrix of d restricted to degree k -> k-1 as dense rows (for the second route).
std::vector<std::vector<Scalar>> dense_block(const ChainComplex& c, int k)
{
    auto src = c.space.indices_in_degree(k);
    auto tgt = c.space.indices_in_degree(k - 1);
    std::map<int, int> row_of;
    for (int i = 0; i < static_cast<int>(tgt.size()); ++i)
        row_of[tgt[i]] = i;
    std::vector<std::vector<Scalar>> rows(tgt.size(), std::vector<Scalar>(src.size()));
    for (int j = 0; j < static_cast<int>(src.size()); ++j)
        for (const auto& [i, v] : c.d.column(src[j])) {
            auto it = row_of.find(i);
            if (it == row_of.end())
                throw std::logic_error("differential does not lower degree by one");
            rows[it->second][j] = v;
        }
    return rows;
}

int dense_rank_of(const ChainComplex& c, int k)
{
    auto src = c.space.indices_in_degree(k);
    return dense_rank(dense_block(c, k), static_cast<int>(src.size()));
}

void require_sound(const ChainComplex& c, int lo, int hi)
{
    if (lo > hi)
        throw std::invalid_argument("empty degree range");
    for (int k = lo - 1; k <= hi + 1; ++k)
        if (!c.sound_at(k)) {
            std::ostringstream os;
            os << "degree " << k << " lies outside the range where the truncated complex is exact ["
               << c.sound_lo << ", " << c.sound_hi << "]";
            if (!c.soundness.empty())
                os << " (" << c.soundness << ")";
            throw BoundaryUnsound(os.str());
        }
}

void require_dd_zero(const ChainComplex& c, int lo, int hi)
{
    for (int k = lo; k <= hi + 1; ++k)
        for (int j : c.space.indices_in_degree(k)) {
            Vec dd = c.d.apply(c.d.column(j));
            if (!dd.is_zero())
                throw std::logic_error("d∘d ≠ 0 on basis vector " + c.space.labels[j]);
        }
}

}  // namespace

HomologyReport homology(const ChainComplex& c, int lo, int hi)
{
    require_sound(c, lo, hi);
    require_dd_zero(c, lo, hi);
    HomologyReport rep;
    rep.lo = lo;
    rep.hi = hi;
    for (int k = lo; k <= hi; ++k) {
        HomologyDegree h;
        h.degree = k;
        auto src = c.space.indices_in_degree(k);
        h.chain_dim = static_cast<int>(src.size());

        Echelon ker(true);
        std::vector<Vec> cycles;
        for (int j = 0; j < h.chain_dim; ++j)
            if (auto rel = ker.insert(c.d.column(src[j]), j)) {
                Vec z;
                for (const auto& [local, coef] : *rel)
                    z.add(src[local], coef);
                cycles.push_back(std::move(z));
            }
        h.cycle_dim = static_cast<int>(cycles.size());

        Echelon im;
        for (int j : c.space.indices_in_degree(k + 1))
            im.insert(c.d.column(j));
        h.boundary_dim = im.rank();
        for (const auto& z : cycles)
            if (!im.insert(z))
                h.representatives.push_back(z);
        h.dim = static_cast<int>(h.representatives.size());
        if (h.dim != h.cycle_dim - h.boundary_dim)
            throw std::logic_error("boundaries are not contained in cycles");
        rep.euler_homology += sign_of(k) * h.dim;
        rep.euler_chains += sign_of(k) * h.chain_dim;
        rep.degrees.push_back(std::move(h));
    }
    rep.rank_in = dense_rank_of(c, lo);
    rep.rank_out = rep.at(hi).boundary_dim;
    rep.euler_consistent =
        rep.euler_homology == rep.euler_chains - sign_of(lo) * rep.rank_in - sign_of(hi) * rep.rank_out;
    return rep;
}

std::vector<int> homology_dims_dense(const ChainComplex& c, int lo, int hi)
{
    require_sound(c, lo, hi);
    std::vector<int> out;
    int r_in = dense_rank_of(c, lo);
    for (int k = lo; k <= hi; ++k) {
        int r_out = dense_rank_of(c, k + 1);
        int dim = static_cast<int>(c.space.indices_in_degree(k).size());
        out.push_back(dim - r_in - r_out);
        r_in = r_out;
    }
    return out;
}

namespace {

Echelon homology_echelon(const ChainComplex& c, const HomologyDegree& h)
{
    Echelon e(true);
    int id = -1;
    for (int j : c.space.indices_in_degree(h.degree + 1))
        e.insert(c.d.column(j), id--);
    for (int i = 0; i < h.dim; ++i)
        e.insert(h.representatives[i], i);
    return e;
}

std::vector<Scalar> coordinates(const Echelon& e, const Vec& v, int dim, const std::string& what)
{
    Vec combo;
    if (!e.reduce(v, &combo).is_zero())
        throw NotAChainMap(what);
    std::vector<Scalar> out(dim);
    for (const auto& [id, coef] : combo)
        if (id >= 0)
            out.at(id) = coef;
    return out;
}

}  // namespace

std::vector<Scalar> homology_class(const ChainComplex& c, const HomologyReport& h, int k, const Vec& cycle)
{
    if (!c.d.apply(cycle).is_zero())
        throw std::invalid_argument("vector is not a cycle");
    const auto& hk = h.at(k);
    return coordinates(homology_echelon(c, hk), cycle, hk.dim, "cycle outside span of representatives");
}

InducedMap induced_map_on_homology(const LinearMap& f, const ChainComplex& a, const ChainComplex& b,
                                   int lo, int hi)
{
    if (f.degree() != 0)
        throw std::invalid_argument("induced map requires a degree-0 map");
    for (int k = lo; k <= hi + 1; ++k)
        for (int j : a.space.indices_in_degree(k)) {
            Vec lhs = f.apply(a.d.column(j));
            Vec rhs = b.d.apply(f.column(j));
            if (lhs != rhs)
                throw NotAChainMap("f∘d ≠ d∘f on " + a.space.labels[j] + ": " + to_string(lhs - rhs, b.space));
        }
    HomologyReport ha = homology(a, lo, hi);
    HomologyReport hb = homology(b, lo, hi);
    InducedMap out;
    out.lo = lo;
    out.hi = hi;
    for (int k = lo; k <= hi; ++k) {
        const auto& sa = ha.at(k);
        const auto& sb = hb.at(k);
        Echelon e = homology_echelon(b, sb);
        std::vector<std::vector<Scalar>> m(sb.dim, std::vector<Scalar>(sa.dim));
        auto boundary_sources = a.space.indices_in_degree(k + 1);
        for (int j = 0; j < sa.dim; ++j) {
            auto col = coordinates(e, f.apply(sa.representatives[j]), sb.dim, "image of a cycle is not a cycle");
            for (int i = 0; i < sb.dim; ++i)
                m[i][j] = col[i];
            // the class must not depend on the representative
            for (int src : boundary_sources) {
                Vec shifted = sa.representatives[j] + a.d.column(src);
                if (coordinates(e, f.apply(shifted), sb.dim, "image of a cycle is not a cycle") != col)
                    throw NotAChainMap("induced map depends on representative in degree " + std::to_string(k));
            }
        }
        out.matrices.push_back(std::move(m));
    }
    return out;
}

std::string to_string(const Vec& v, const GradedSpace& s)
{
    if (v.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, c] : v) {
        Scalar a = abs(c);
        os << (sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        if (a != 1)
            os << a.get_str() << "*";
        os << s.labels.at(i);
        first = false;
    }
    return os.str();
}

}  // namespace cyc
