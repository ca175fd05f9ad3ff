#include <doctest.h>

#include "cyc/verify.hpp"

#include <algorithm>
#include <set>

using namespace cyc;

namespace {

std::set<std::string> names_in(const std::string& module)
{
    std::set<std::string> out;
    for (const auto& s : registry())
        if (s.module == module)
            out.insert(s.name);
    return out;
}

CyclicCoalgebra flipped_e1()
{
    auto c = builtin_coalgebra("E1");
    c.pairing[1][0] *= -1;
    c.name = "E1_flipped";
    return c;
}

const CheckReport& find(const std::vector<CheckReport>& rs, const std::string& name)
{
    auto it = std::find_if(rs.begin(), rs.end(), [&](const CheckReport& r) { return r.name == name; });
    REQUIRE(it != rs.end());
    return *it;
}

}  // namespace

TEST_SUITE("verify")
{
    TEST_CASE("registry lists every check once")
    {
        CHECK(names_in("freealg") == std::set<std::string>{"freealg.d-squared", "freealg.rotation", "freealg.pbw",
                                                           "freealg.hodge", "freealg.lie-subcomplex"});
        CHECK(names_in("dpois") == std::set<std::string>{"dpois.skew", "dpois.jacobi", "dpois.lie-action",
                                                         "dpois.chain-map", "dpois.lambda2-closure",
                                                         "dpois.derivative-equivariance"});
        CHECK(names_in("reps") == std::set<std::string>{"reps.trace-equivariance", "reps.trace-dg-lie", "reps.univrep",
                                                        "reps.liehomom", "reps.intertwining", "reps.descent-square",
                                                        "reps.assoc-square"});
        CHECK(names_in("operadcore") == std::set<std::string>{"operadcore.validate", "operadcore.jacobi",
                                                              "operadcore.natural-dims", "operadcore.ass-consistency"});
        std::set<std::string> all;
        for (const auto& s : registry()) {
            CHECK(all.insert(s.name).second);
            CHECK_FALSE(s.paper_ref.empty());
            CHECK(s.name.rfind(s.module + ".", 0) == 0);
        }
        CHECK(select_checks("all").size() == registry().size());
        CHECK(select_checks("jacobi").size() == 2);
        CHECK(select_checks("dpois.jacobi").size() == 1);
        CHECK(select_checks("nonsense").empty());
    }

    TEST_CASE("every check passes at the default bounds, in registry order")
    {
        RunConfig cfg;
        auto reports = run_suite(select_checks("all"), cfg);
        REQUIRE(reports.size() == registry().size());
        for (std::size_t i = 0; i < reports.size(); ++i) {
            INFO(reports[i].name << ": " << reports[i].witness.value_or(""));
            CHECK(reports[i].name == registry()[i].name);
            CHECK(reports[i].status == CheckStatus::Pass);
            CHECK(reports[i].count > 0);
        }
    }

    TEST_CASE("reports are deterministic")
    {
        RunConfig cfg;
        cfg.W = 3;
        auto a = report_json("all", run_suite(select_checks("all"), cfg), false);
        auto b = report_json("all", run_suite(select_checks("all"), cfg), false);
        CHECK(a == b);
        CHECK(a.find("\"status\": \"pass\"") != std::string::npos);
    }

    TEST_CASE("a sign-flipped pairing is caught with a shrunk witness")
    {
        RunConfig cfg;
        cfg.coalgebra = flipped_e1();
        auto reports = run_suite(select_checks("dpois"), cfg);
        const auto& skew = find(reports, "dpois.skew");
        REQUIRE(skew.status == CheckStatus::Fail);
        REQUIRE(skew.witness);
        // shrinking leaves a two-letter argument at most
        CHECK(skew.witness->find("a = x, b = (x,y)") != std::string::npos);
        CHECK(skew.minimized);
        CHECK(find(reports, "dpois.jacobi").status == CheckStatus::Fail);
        auto json = report_json("dpois", reports, false);
        CHECK(json.find("\"witness\"") != std::string::npos);
        CHECK(json.find("\"minimized\": true") != std::string::npos);
        CHECK(run_check(*select_checks("operadcore.jacobi").front(), cfg).status == CheckStatus::Fail);
    }

    TEST_CASE("a corrupted τ fails the operadic checks")
    {
        RunConfig cfg;
        auto op = builtin_operad("Ass", 5);
        std::swap(op.tau[2][0], op.tau[2][1]);
        cfg.operad = op;
        auto reports = run_suite(select_checks("operadcore"), cfg);
        for (const auto& r : reports) {
            INFO(r.name);
            CHECK(r.status == CheckStatus::Fail);
        }
        CHECK(find(reports, "operadcore.validate").witness->find("arity 2") != std::string::npos);
    }

    TEST_CASE("bounds that cannot be honoured are refused")
    {
        RunConfig cfg;
        cfg.W = 5;
        CHECK(run_check(*select_checks("operadcore.jacobi").front(), cfg).status == CheckStatus::Refused);
        cfg.W = 4;
        cfg.operad = builtin_operad("Com", 3);
        CHECK(run_check(*select_checks("operadcore.jacobi").front(), cfg).status == CheckStatus::Refused);
        CHECK(run_check(*select_checks("operadcore.validate").front(), cfg).status == CheckStatus::Pass);
    }

    TEST_CASE("shrinking drops letters while the failure persists")
    {
        auto fails = [](const std::vector<Word>& a) {
            return std::count(a[0].begin(), a[0].end(), 1) >= 1 && a[1].size() >= 2;
        };
        auto s = shrink_words({{0, 1, 0, 2}, {3, 3, 3}}, fails);
        CHECK(s[0] == Word{1});
        CHECK(s[1].size() == 2);
    }

    TEST_CASE("homology by two elimination routes")
    {
        RunConfig cfg;
        for (const char* target : {"cobar", "cyclic", "Rn", "Lg", "cone", "cone:2"}) {
            INFO(target);
            auto cx = target_complex(target, cfg);
            int lo = INT_MAX, hi = INT_MIN;
            for (int d : cx.space.degrees) {
                lo = std::min(lo, d);
                hi = std::max(hi, d);
            }
            lo = std::max(lo, cx.sound_lo + 1);
            hi = std::min(hi, cx.sound_hi - 1);
            if (lo > hi) {
                CHECK_THROWS_AS(homology_crosscheck(target, cfg, cx.sound_hi, cx.sound_hi), BoundaryUnsound);
                continue;
            }
            auto tab = homology_crosscheck(target, cfg, lo, hi);
            CHECK(tab.sparse_dims == tab.dense_dims);
            CHECK(tab.euler_consistent);
            CHECK_FALSE(tab.soundness.empty());
        }
        CHECK_THROWS_AS(target_complex("bogus", cfg), std::invalid_argument);
    }

    TEST_CASE("trace of a cyclic class on homology")
    {
        RunConfig cfg;
        TruncatedAlgebra R(builtin_coalgebra("E1"), cfg.W);
        // ♮(xy) ↦ Σ_ij x_ij y_ji, a nonzero class in degree 0
        TensorElement xy(Word{0, 1});
        auto tr = trace_on_homology(R, xy, "Rn", cfg);
        CHECK(tr.degree == 0);
        CHECK(tr.image.size() == 4);
        CHECK(std::any_of(tr.homology_coordinates.begin(), tr.homology_coordinates.end(),
                          [](const Scalar& c) { return sgn(c) != 0; }));
        // the trace kills commutators, so the rotated word has the same class
        auto tr2 = trace_on_homology(R, TensorElement(Word{1, 0}), "Rn", cfg);
        CHECK(tr2.homology_coordinates == tr.homology_coordinates);
        CHECK_FALSE(tr.induced_route);
        // with W ≤ D the induced map on homology confirms the coordinates
        TruncatedAlgebra R3(builtin_coalgebra("E1"), 3);
        auto tr3 = trace_on_homology(R3, xy, "Rn", cfg);
        CHECK(tr3.induced_route);
        CHECK(tr3.homology_coordinates == tr.homology_coordinates);

        auto zero = trace_on_homology(R, TensorElement(), "Rn", cfg);
        CHECK(zero.image.is_zero());
        CHECK(std::all_of(zero.homology_coordinates.begin(), zero.homology_coordinates.end(),
                          [](const Scalar& c) { return sgn(c) == 0; }));

        // Drinfeld trace of ♮(xy) ∈ λ^(2) with the invariant form of sl2
        auto lg = trace_on_homology(R, xy, "Lg", cfg);
        CHECK_FALSE(lg.image.is_zero());
        CHECK_THROWS_AS(trace_on_homology(R, xy, "bogus", cfg), std::invalid_argument);
    }

    TEST_CASE("non-cycles are rejected")
    {
        RunConfig cfg;
        TruncatedAlgebra R(builtin_coalgebra("E2"), cfg.W);
        bool found = false;
        for (int w = 1; w <= 2 && !found; ++w)
            for (const auto& c : R.cyclic_basis(w)) {
                TensorElement a(c);
                if (!R.project_cyclic(R.cobar_differential(a)).is_zero()) {
                    CHECK_THROWS_AS(trace_on_homology(R, a, "Rn", cfg), std::invalid_argument);
                    found = true;
                    break;
                }
            }
        CHECK(found);
    }

    TEST_CASE("the bracket on homology does not depend on representatives")
    {
        for (const char* name : {"E1", "E2"}) {
            TruncatedAlgebra R(builtin_coalgebra(name), 4);
            for (int w1 = 1; w1 <= 2; ++w1)
                for (const auto& a : R.cyclic_basis(w1))
                    for (const auto& b : R.cyclic_basis(2)) {
                        TensorElement A(a), B(b);
                        if (!R.project_cyclic(R.cobar_differential(A)).is_zero() ||
                            !R.project_cyclic(R.cobar_differential(B)).is_zero())
                            continue;
                        auto r = bracket_on_homology(R, A, B);
                        INFO(name << " " << R.show(a) << " " << R.show(b));
                        CHECK(r.status == CheckStatus::Pass);
                    }
        }
        // {[♮xy], [♮xx]} on E1
        TruncatedAlgebra R(builtin_coalgebra("E1"), 4);
        CHECK(bracket_on_homology(R, TensorElement(Word{0, 1}), TensorElement(Word{0, 0})).status ==
              CheckStatus::Pass);
    }
}
