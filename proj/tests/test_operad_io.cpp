#include <doctest.h>

#include "cyc/operad_io.hpp"

using namespace cyc;

namespace {

std::string error_of(const std::string& text)
{
    try {
        parse_operad(text);
    } catch (const CoalgebraParseError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_SUITE("operad_io")
{
    TEST_CASE("builtins survive a round trip and still validate")
    {
        for (const char* name : {"Ass", "Com", "Lie"}) {
            INFO(name);
            auto op = builtin_operad(name, 4);
            auto text = serialize_operad(op);
            auto back = parse_operad(text);
            CHECK(structurally_equal(op, back));
            CHECK(serialize_operad(back) == text);
            CHECK(validate_operad(back).ok());
        }
    }

    TEST_CASE("shipped Ass file matches the builtin")
    {
        auto op = load_operad(std::string(CYC_DATA_DIR) + "/ass4.json");
        CHECK(structurally_equal(op, builtin_operad("Ass", 4)));
    }

    TEST_CASE("a file with a corrupted τ loads but does not validate")
    {
        auto op = builtin_operad("Ass", 3);
        std::swap(op.tau[2][0], op.tau[2][1]);
        auto back = parse_operad(serialize_operad(op));
        auto rep = validate_operad(back);
        CHECK_FALSE(rep.find("action").holds);
    }

    TEST_CASE("malformed operad files name the location")
    {
        CHECK(error_of("{").find("syntax error at byte") != std::string::npos);
        CHECK(error_of(R"({"name":"P","max_arity":2,"basis":[[],["id"]],"swaps":[],"tau":[],"compositions":[]})")
                  .find("/basis") != std::string::npos);
        std::string head = R"({"name":"P","max_arity":2,"basis":[[],["id"],["m"]],"swaps":[],)";
        CHECK(error_of(head + R"("tau":[{"arity":2,"entries":[{"row":1,"col":0,"coeff":1}]}],"compositions":[]})")
                  .find("/tau/0/entries/0/row") != std::string::npos);
        CHECK(error_of(head + R"("tau":[],"compositions":[{"m":2,"slot":2,"l":1,"a":0,"b":0,"result":[]}]})")
                  .find("/compositions/0/slot") != std::string::npos);
        CHECK(error_of(head + R"("tau":[{"arity":1,"entries":[{"row":0,"col":0,"coeff":"x"}]}],"compositions":[]})")
                  .find("/tau/0/entries/0/coeff") != std::string::npos);
    }
}
