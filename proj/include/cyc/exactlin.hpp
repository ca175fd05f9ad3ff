#pragma once

#include "cyc/lincomb.hpp"

#include <climits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyc {

using Vec = LinComb<int>;

// Finite basis with an integer degree per basis vector.
struct GradedSpace {
    std::vector<std::string> labels;
    std::vector<int> degrees;

    int dim() const { return static_cast<int>(labels.size()); }
    int add(std::string label, int degree);
    int index_of(const std::string& label) const;  // -1 if absent
    std::vector<int> indices_in_degree(int d) const;
    // Degrees of homogeneous vectors; nullopt for zero or inhomogeneous input.
    std::optional<int> degree_of(const Vec& v) const;
};

// a⊗b sits at index a * B.dim() + b.
GradedSpace tensor_square(const GradedSpace& a);
GradedSpace tensor(const GradedSpace& a, const GradedSpace& b);

class LinearMap {
public:
    LinearMap() = default;
    LinearMap(GradedSpace source, GradedSpace target, int degree);

    const GradedSpace& source() const { return source_; }
    const GradedSpace& target() const { return target_; }
    int degree() const { return degree_; }

    void set_column(int j, Vec v) { columns_.at(j) = std::move(v); }
    void add_entry(int row, int col, const Scalar& c) { columns_.at(col).add(row, c); }
    const Vec& column(int j) const { return columns_.at(j); }
    Scalar entry(int row, int col) const { return columns_.at(col).coeff(row); }

    Vec apply(const Vec& v) const;
    LinearMap compose(const LinearMap& inner) const;  // this ∘ inner
    bool is_zero() const;

    // First (col, row) whose entry violates the declared degree.
    std::optional<std::pair<int, int>> degree_violation() const;

private:
    GradedSpace source_, target_;
    int degree_ = 0;
    std::vector<Vec> columns_;
};

// Incremental sparse row echelon form over Q. Every stored row has a unit
// pivot at its smallest index, so reduction walks keys in increasing order.
// Optionally tracks each row as a combination of inserted vectors.
class Echelon {
public:
    explicit Echelon(bool track = false) : track_(track) {}

    // Residue of v modulo the span; `combo` receives coefficients c_id with
    // v = residue + Σ c_id · inserted(id) (tracking only).
    Vec reduce(const Vec& v, Vec* combo = nullptr) const;
    bool contains(const Vec& v) const { return reduce(v).is_zero(); }

    // Returns nullopt if v was independent (and is now stored); otherwise
    // the relation e_id - Σ c_k e_k among inserted ids (tracking only,
    // empty Vec when not tracking).
    std::optional<Vec> insert(const Vec& v, int id = -1);

    int rank() const { return static_cast<int>(rows_.size()); }
    std::vector<int> pivots() const;

private:
    struct Row {
        Vec v;
        Vec combo;
    };
    bool track_;
    std::map<int, Row> rows_;  // keyed by pivot
};

int rank(const LinearMap& f);
std::vector<Vec> kernel(const LinearMap& f);
std::vector<Vec> image_basis(const LinearMap& f);
std::optional<Vec> solve(const LinearMap& f, const Vec& rhs);

// Second elimination route: dense fraction-free (Bareiss) elimination over
// the integers after clearing denominators row by row.
int dense_rank(const std::vector<std::vector<Scalar>>& rows, int ncols);

struct BoundaryUnsound : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotAChainMap : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Degree-lowering differential on a graded space. Truncated producers record
// the interval of degrees in which the chain groups are exactly those of the
// untruncated complex; homology is only reported where that is sufficient.
struct ChainComplex {
    GradedSpace space;
    LinearMap d;  // degree -1
    int sound_lo = INT_MIN;
    int sound_hi = INT_MAX;
    std::string soundness;

    bool sound_at(int k) const { return k >= sound_lo && k <= sound_hi; }
};

struct HomologyDegree {
    int degree = 0;
    int chain_dim = 0;
    int cycle_dim = 0;
    int boundary_dim = 0;
    int dim = 0;
    std::vector<Vec> representatives;  // cycles, independent modulo boundaries
};

struct HomologyReport {
    int lo = 0, hi = 0;
    std::vector<HomologyDegree> degrees;
    long euler_homology = 0;
    long euler_chains = 0;
    int rank_in = 0;   // rank of d leaving degree lo
    int rank_out = 0;  // rank of d entering degree hi
    // χ(H) = χ(C) - (-1)^lo rank(d_lo) - (-1)^hi rank(d_{hi+1}) on [lo, hi].
    bool euler_consistent = false;

    const HomologyDegree& at(int k) const { return degrees.at(k - lo); }
};

// Throws BoundaryUnsound unless degrees lo-1 .. hi+1 are sound, and
// std::logic_error if d∘d ≠ 0 there.
HomologyReport homology(const ChainComplex& c, int lo, int hi);

// Homology dimensions by the dense route only (no representatives).
std::vector<int> homology_dims_dense(const ChainComplex& c, int lo, int hi);

struct InducedMap {
    int lo = 0, hi = 0;
    // matrices[k - lo][i][j]: coefficient of target class i in image of source class j
    std::vector<std::vector<std::vector<Scalar>>> matrices;
};

// f must be a degree-0 chain map between the two complexes (checked on all
// basis vectors in degrees lo..hi+1; NotAChainMap carries the witness).
InducedMap induced_map_on_homology(const LinearMap& f, const ChainComplex& a, const ChainComplex& b,
                                   int lo, int hi);

// Coordinates of a cycle of degree k in the homology basis of `h`; throws if
// the vector is not a cycle.
std::vector<Scalar> homology_class(const ChainComplex& c, const HomologyReport& h, int k, const Vec& cycle);

std::string to_string(const Vec& v, const GradedSpace& s);

}  // namespace cyc
