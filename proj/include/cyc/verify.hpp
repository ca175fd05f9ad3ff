#pragma once

#include "cyc/operadcore.hpp"
#include "cyc/reps.hpp"

#include <functional>

namespace cyc {

// Bounds and inputs shared by all checks.
struct RunConfig {
    int W = 4;  // weight bound for words and classes
    int D = 3;  // polynomial-degree bound for representation algebras
    int n = 2;  // matrix sizes 1..n
    std::vector<std::string> lie{"sl2", "gl2"};
    std::optional<CyclicCoalgebra> coalgebra;   // replaces the builtin list when set
    std::optional<CyclicOperadData> operad;     // replaces Ass/Com/Lie when set
};

enum class CheckKind { Identity, SpanContainment, SquareCommutes, DimensionEquality };

struct CheckOutcome {
    long count = 0;                      // elements (tuples) examined
    std::optional<std::string> witness;  // set iff the check failed
    bool minimized = false;              // witness cannot be made smaller by the shrinker
};

// Thrown by checks whose bounds cannot be honoured; reported as "refused".
struct CheckRefused : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CheckSpec {
    std::string name;       // "<module>.<check>"
    std::string module;
    std::string paper_ref;  // the statement being checked, in words
    CheckKind kind = CheckKind::Identity;
    std::function<CheckOutcome(const RunConfig&)> run;
};

enum class CheckStatus { Pass, Fail, Refused };

struct CheckReport {
    std::string name;
    std::string paper_ref;
    CheckStatus status = CheckStatus::Pass;
    std::optional<std::string> witness;
    bool minimized = false;
    long count = 0;
    long millis = 0;
};

const std::vector<CheckSpec>& registry();
// "all", a module name, a full check name or the part after the dot.
std::vector<const CheckSpec*> select_checks(const std::string& selector);

// Runs checks on CYC_THREADS worker threads (default: hardware concurrency);
// reports come back in registry order.
std::vector<CheckReport> run_suite(const std::vector<const CheckSpec*>& specs, const RunConfig& cfg);
CheckReport run_check(const CheckSpec& spec, const RunConfig& cfg);

std::string status_name(CheckStatus s);
// JSON report { suite, checks: [ {name, paper_ref, status, witness?, minimized?, count, millis} ] }.
std::string report_json(const std::string& suite, const std::vector<CheckReport>& reports, bool timing = true);

// Drops letters from the argument words while `fails` keeps holding.
std::vector<Word> shrink_words(std::vector<Word> args, const std::function<bool(const std::vector<Word>&)>& fails);

// ---- homology ----------------------------------------------------------------

struct HomologyTable {
    std::string target;
    std::string soundness;
    int lo = 0, hi = 0;
    std::vector<int> chain_dims;
    std::vector<int> sparse_dims;
    std::vector<int> dense_dims;
    bool euler_consistent = false;
};

// target: "cobar" | "cyclic" | "Rn" | "Lg" | "cone" (cone uses p = 1; "cone:p"
// selects another p). Homology is computed by sparse elimination with
// representatives and by dense fraction-free elimination; throws
// BoundaryUnsound for ranges outside the sound window.
HomologyTable homology_crosscheck(const std::string& target, const RunConfig& cfg, int lo, int hi);
ChainComplex target_complex(const std::string& target, const RunConfig& cfg);

struct TraceResult {
    std::string target;
    GCElement image;
    std::string image_text;
    int degree = 0;
    std::vector<Scalar> homology_coordinates;  // in the sparse homology basis of the target
    std::vector<std::string> homology_basis;
    bool induced_route = false;  // coordinates confirmed through induced_map_on_homology
};

// Trace of a cyclic cycle into R_n ("Rn") or its Drinfeld trace with the
// degree-2 invariant into 𝓛_𝔤 ("Lg"), and its class in the homology of the
// target truncated at polynomial degree max(D, degree of the image).
TraceResult trace_on_homology(const TruncatedAlgebra& R, const TensorElement& alpha, const std::string& target,
                              const RunConfig& cfg);

// {[a],[b]} computed on representatives; changing a by every boundary of
// weight ≤ W must not change the class of the result.
CheckReport bracket_on_homology(const TruncatedAlgebra& R, const TensorElement& a, const TensorElement& b);

Vec complex_coordinates(const GCAlgebra& A, int D, const GCElement& f);

}  // namespace cyc
