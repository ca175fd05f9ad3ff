#include <doctest.h>

#include "cyc/coalg_io.hpp"

#include <fstream>
#include <sstream>

using namespace cyc;

namespace {

std::string data(const std::string& file) { return std::string(CYC_DATA_DIR) + "/" + file; }

std::string error_of(const std::string& text)
{
    try {
        parse_coalgebra(text);
    } catch (const CoalgebraParseError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_SUITE("coalg_io")
{
    TEST_CASE("builtins survive a round trip")
    {
        for (const char* name : {"E1", "E2", "E1_symplectic_pair(2)"}) {
            INFO(name);
            auto c = builtin_coalgebra(name);
            auto text = serialize_coalgebra(c);
            auto back = parse_coalgebra(text);
            CHECK(structurally_equal(c, back));
            CHECK(serialize_coalgebra(back) == text);
        }
        auto c = make_coalgebra("fractions", {{"u", 1}, {"v", 2}, {"w", 1}}, -3);
        add_differential_term(c, 1, frac(-3, 4), 0);
        add_coproduct_term(c, 1, frac(1, 2), 0, 2);
        c.pairing[0][1] = frac(5, 7);
        auto back = parse_coalgebra(serialize_coalgebra(c));
        CHECK(structurally_equal(c, back));
        CHECK(back.differential.column(1).coeff(0) == frac(-3, 4));
    }

    TEST_CASE("shipped data files match the builtins")
    {
        CHECK(structurally_equal(load_coalgebra(data("e1.json")), builtin_coalgebra("E1")));
        CHECK(structurally_equal(load_coalgebra(data("e2.json")), builtin_coalgebra("E2")));
        auto bad = load_coalgebra(data("e1_corrupt.json"));
        CHECK(validate(builtin_coalgebra("E1")).ok());
        auto rep = validate(bad);
        CHECK_FALSE(rep.ok());
        CHECK_FALSE(rep.find("graded symmetry").holds);
    }

    TEST_CASE("malformed input names the location")
    {
        CHECK(error_of("{\"name\": \"x\",").find("syntax error at byte") != std::string::npos);
        CHECK(error_of("[]").find("expected an object") != std::string::npos);
        CHECK(error_of(R"({"name":"x","generators":[],"pairing":[]})").find("pairing_degree") != std::string::npos);
        std::string base = R"({"name":"x","pairing_degree":-2,"generators":[{"label":"x","degree":1},{"label":"y","degree":1}],)";
        CHECK(error_of(base + R"("pairing":[{"left":"x","right":"z","value":1}]})").find("/pairing/0/right") !=
              std::string::npos);
        CHECK(error_of(base + R"("pairing":[{"left":"x","right":"y","value":"1/0"}]})").find("/pairing/0/value") !=
              std::string::npos);
        CHECK(error_of(base + R"("pairing":[{"left":"x","right":"y","value":1.5}]})").find("/pairing/0/value") !=
              std::string::npos);
        CHECK(error_of(base + R"("pairing":[],"coproduct":[{"source":"x","left":"x","coeff":1}]})")
                  .find("/coproduct/0: missing field \"right\"") != std::string::npos);
        CHECK(error_of(R"({"name":"x","pairing_degree":0,"generators":[{"label":"x","degree":1},{"label":"x","degree":2}],"pairing":[]})")
                  .find("duplicate") != std::string::npos);
        CHECK(error_of(base + R"("pairing":[],"cocommutative":1})").find("/cocommutative") != std::string::npos);
        CHECK_THROWS_AS(load_coalgebra(data("does_not_exist.json")), CoalgebraParseError);
    }
}
