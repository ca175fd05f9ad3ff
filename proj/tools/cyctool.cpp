#include "cyc/classexpr.hpp"
#include "cyc/coalg_io.hpp"
#include "cyc/operad_io.hpp"
#include "cyc/verify.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace cyc;

namespace {

constexpr int kOk = 0, kCheckFailed = 1, kInputError = 2;
constexpr double kMaxWords = 2e6;

struct InputProblem : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A path to a JSON file or the name of a builtin.
CyclicCoalgebra coalgebra_arg(const std::string& s)
{
    if (std::filesystem::exists(s) || s.ends_with(".json"))
        return load_coalgebra(s);
    try {
        return builtin_coalgebra(s);
    } catch (const std::exception&) {
        throw InputProblem("'" + s + "' is neither a coalgebra file nor a builtin (E1, E2, E1_symplectic_pair(g))");
    }
}

struct Bounds {
    int W = 4, D = 3, n = 2;
    std::vector<std::string> lie;
    std::string coalgebra, operad;

    void add_to(CLI::App* app, bool with_coalgebra = true)
    {
        app->add_option("--weight,-W", W, "weight bound")->capture_default_str()->check(CLI::Range(1, 12));
        app->add_option("--degree-bound,-D", D, "polynomial degree bound for R_n and L_g")
            ->capture_default_str()
            ->check(CLI::Range(0, 8));
        app->add_option("--n", n, "largest matrix size")->capture_default_str()->check(CLI::Range(1, 4));
        app->add_option("--g", lie, "Lie algebras (sl2, gl2)")->delimiter(',');
        if (with_coalgebra) {
            app->add_option("--coalgebra", coalgebra, "coalgebra file or builtin name (replaces the defaults)");
            app->add_option("--operad", operad, "operad file (replaces Ass, Com and Lie in the operadic checks)");
        }
    }

    RunConfig config() const
    {
        RunConfig cfg;
        cfg.W = W;
        cfg.D = D;
        cfg.n = n;
        if (!lie.empty())
            cfg.lie = lie;
        for (const auto& g : cfg.lie)
            if (g != "sl2" && g != "gl2")
                throw InputProblem("unknown Lie algebra '" + g + "' (expected sl2 or gl2)");
        if (!coalgebra.empty())
            cfg.coalgebra = coalgebra_arg(coalgebra);
        if (!operad.empty())
            cfg.operad = load_operad(operad);
        // enumerations reach words of weight W + 1; refuse sizes that would not fit in memory
        int letters = cfg.coalgebra ? cfg.coalgebra->dim() : 4;
        double words = 0, layer = 1;
        for (int w = 0; w <= cfg.W + 1; ++w, layer *= letters)
            words += layer;
        if (words > kMaxWords)
            throw InputProblem("weight bound " + std::to_string(cfg.W) + " over " + std::to_string(letters) +
                               " letters needs about " + std::to_string(static_cast<long>(words)) +
                               " words; the limit is " + std::to_string(static_cast<long>(kMaxWords)));
        return cfg;
    }
};

std::pair<int, int> parse_range(const std::string& s)
{
    auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            int k = std::stoi(s);
            return {k, k};
        }
        std::size_t used = 0;
        int a = std::stoi(s.substr(0, dots), &used);
        if (used != dots)
            throw std::invalid_argument(s);
        int b = std::stoi(s.substr(dots + 2), &used);
        if (used != s.size() - dots - 2)
            throw std::invalid_argument(s);
        if (a > b)
            throw InputProblem("empty range " + s);
        return {a, b};
    } catch (const InputProblem&) {
        throw;
    } catch (const std::exception&) {
        throw InputProblem("malformed range '" + s + "' (expected a..b)");
    }
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out)
        throw InputProblem("cannot write " + path);
    out << text;
}

int print_reports(const std::vector<CheckReport>& reports)
{
    int fails = 0, refused = 0;
    for (const auto& r : reports) {
        std::string st = status_name(r.status);
        for (auto& ch : st)
            ch = static_cast<char>(std::toupper(ch));
        std::cout << st << "  " << r.name << "  (" << r.count << " cases, " << r.millis << " ms)";
        if (r.witness)
            std::cout << "\n      " << *r.witness;
        std::cout << "\n";
        fails += r.status == CheckStatus::Fail;
        refused += r.status == CheckStatus::Refused;
    }
    std::cout << reports.size() - fails - refused << " passed, " << fails << " failed, " << refused << " refused\n";
    if (fails)
        return kCheckFailed;
    return refused ? kInputError : kOk;
}

int cmd_validate(const std::string& file)
{
    auto c = coalgebra_arg(file);
    auto rep = validate(c);
    for (const auto& id : rep.identities) {
        std::cout << (id.holds ? "  ok    " : "  FAIL  ") << id.name;
        if (!id.applicable)
            std::cout << " (vacuous)";
        if (!id.holds)
            std::cout << ": " << id.witness;
        std::cout << "\n";
    }
    if (rep.ok()) {
        std::cout << "all " << rep.identities.size() << " coalgebra identities hold\n";
        return kOk;
    }
    return kCheckFailed;
}

int cmd_pairings(const std::string& file, int degree)
{
    auto c = coalgebra_arg(file);
    auto basis = solve_cyclic_pairings(c, degree);
    std::cout << "cyclic pairings of degree " << degree << " on " << c.name << ": dimension " << basis.size() << "\n";
    for (std::size_t k = 0; k < basis.size(); ++k) {
        std::cout << "  [" << k << "]";
        for (int i = 0; i < c.dim(); ++i)
            for (int j = 0; j < c.dim(); ++j)
                if (sgn(basis[k][i][j]) != 0)
                    std::cout << "  <" << c.reduced.labels[i] << "," << c.reduced.labels[j] << "> = " << basis[k][i][j];
        std::cout << "\n";
    }
    return kOk;
}

int cmd_check(const std::string& selector, const Bounds& b, const std::string& report, bool json)
{
    auto specs = select_checks(selector);
    if (specs.empty())
        throw InputProblem("no check matches '" + selector + "'");
    auto reports = run_suite(specs, b.config());
    if (!report.empty())
        write_file(report, report_json(selector, reports));
    if (json) {
        std::cout << report_json(selector, reports);
        for (const auto& r : reports)
            if (r.status != CheckStatus::Pass)
                return r.status == CheckStatus::Fail ? kCheckFailed : kInputError;
        return kOk;
    }
    return print_reports(reports);
}

int cmd_homology(const std::string& target, const std::string& range, const Bounds& b)
{
    auto [lo, hi] = parse_range(range);
    auto tab = homology_crosscheck(target, b.config(), lo, hi);
    std::cout << "homology of " << target << " (" << tab.soundness << ")\n";
    std::cout << "  degree  chains  sparse  dense\n";
    bool agree = true;
    for (int k = lo; k <= hi; ++k) {
        int i = k - lo;
        std::cout << "  " << std::setw(6) << k << "  " << std::setw(6) << tab.chain_dims[i] << "  " << std::setw(6)
                  << tab.sparse_dims[i] << "  " << std::setw(5) << tab.dense_dims[i] << "\n";
        agree = agree && tab.sparse_dims[i] == tab.dense_dims[i];
    }
    std::cout << "Euler characteristic " << (tab.euler_consistent ? "consistent" : "INCONSISTENT") << "\n";
    return agree && tab.euler_consistent ? kOk : kCheckFailed;
}

int cmd_trace(const std::string& file, const std::string& expr, const std::string& target, const std::string& other,
              Bounds b)
{
    b.coalgebra = file;
    RunConfig cfg = b.config();
    TruncatedAlgebra R(*cfg.coalgebra, cfg.W);
    auto a = R.project_cyclic(parse_class_expression(expr, R.V()));
    if (!other.empty()) {
        auto c = R.project_cyclic(parse_class_expression(other, R.V()));
        DoublePoisson P(R);
        auto rep = bracket_on_homology(R, a, c);
        std::cout << "{" << R.show(a) << ", " << R.show(c) << "} = " << R.show(P.bracket_cyclic(a, c)) << "\n";
        std::cout << "representative independence over " << rep.count << " boundaries: " << status_name(rep.status)
                  << "\n";
        if (rep.status != CheckStatus::Pass) {
            std::cout << "  " << rep.witness.value_or("") << "\n";
            return kCheckFailed;
        }
        a = P.bracket_cyclic(a, c);
    }
    auto tr = trace_on_homology(R, a, target, cfg);
    std::cout << "class " << R.show(a) << " of degree " << tr.degree << "\n";
    std::cout << "trace in " << target << ": " << tr.image_text << "\n";
    std::cout << "homology of " << target << " in degree " << tr.degree << ": dimension " << tr.homology_basis.size()
              << "\n";
    bool zero = true;
    for (std::size_t i = 0; i < tr.homology_basis.size(); ++i)
        if (sgn(tr.homology_coordinates[i]) != 0) {
            std::cout << "  " << tr.homology_coordinates[i] << "  *  [" << tr.homology_basis[i] << "]\n";
            zero = false;
        }
    if (zero)
        std::cout << "  the class is zero\n";
    if (tr.induced_route)
        std::cout << "confirmed through the induced map on homology\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"cyctool: exact checks for cyclic coalgebras, their brackets and traces"};
    app.require_subcommand(1);

    std::string file, selector, target, range, expr, other, report, out;
    int degree = 0;
    bool json = false, all = false;
    Bounds bounds;

    auto* validate_cmd = app.add_subcommand("validate", "check the eight coalgebra identities");
    validate_cmd->add_option("file", file, "coalgebra file or builtin name")->required();

    auto* pairings_cmd = app.add_subcommand("pairings", "basis of cyclic pairings of a given degree");
    pairings_cmd->add_option("file", file, "coalgebra file or builtin name")->required();
    pairings_cmd->add_option("--degree", degree, "pairing degree n")->required();

    auto* check_cmd = app.add_subcommand("check", "run checks: all, a module or a check name");
    check_cmd->add_option("selector", selector, "all | module | check")->required();
    bounds.add_to(check_cmd);
    check_cmd->add_option("--report", report, "write the JSON report here");
    check_cmd->add_flag("--json", json, "print the JSON report instead of the summary");

    auto* homology_cmd = app.add_subcommand("homology", "homology by two elimination routes");
    homology_cmd->add_option("target", target, "cobar | cyclic | Rn | Lg | cone[:p]")->required();
    homology_cmd->add_option("--range", range, "degrees a..b")->required();
    bounds.add_to(homology_cmd);

    auto* trace_cmd = app.add_subcommand("trace", "trace of a cyclic cycle and its homology class");
    trace_cmd->add_option("file", file, "coalgebra file or builtin name")->required();
    trace_cmd->add_option("--class", expr, "class expression, e.g. \"2*(x,y) - (y,x)\"")->required();
    trace_cmd->add_option("--target", target, "Rn or Lg")->capture_default_str()->check(CLI::IsMember({"Rn", "Lg"}));
    trace_cmd->add_option("--bracket-with", other, "trace the bracket with this class instead");
    bounds.add_to(trace_cmd, false);
    target = "Rn";

    auto* report_cmd = app.add_subcommand("report", "run every check and write the JSON report");
    report_cmd->add_flag("--all", all, "run every registered check")->required();
    report_cmd->add_option("--out", out, "output path (default: stdout)");
    bounds.add_to(report_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kInputError;
    }

    try {
        if (*validate_cmd)
            return cmd_validate(file);
        if (*pairings_cmd)
            return cmd_pairings(file, degree);
        if (*check_cmd)
            return cmd_check(selector, bounds, report, json);
        if (*homology_cmd)
            return cmd_homology(target, range, bounds);
        if (*trace_cmd)
            return cmd_trace(file, expr, target, other, bounds);
        if (*report_cmd) {
            auto reports = run_suite(select_checks("all"), bounds.config());
            auto text = report_json("all", reports);
            if (out.empty())
                std::cout << text;
            else
                write_file(out, text);
            int fails = 0;
            for (const auto& r : reports)
                fails += r.status != CheckStatus::Pass;
            std::cerr << reports.size() - fails << "/" << reports.size() << " checks passed\n";
            return fails ? kCheckFailed : kOk;
        }
    } catch (const BoundaryUnsound& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const InputProblem& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
