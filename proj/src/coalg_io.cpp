#include "cyc/coalg_io.hpp"

#include "json_util.hpp"

#include <fstream>
#include <sstream>

namespace cyc {

namespace {

using json = nlohmann::json;

[[noreturn]] void fail(const std::string& at, const std::string& what)
{
    throw CoalgebraParseError("at " + (at.empty() ? std::string("/") : at) + ": " + what);
}

const json& field(const json& obj, const std::string& at, const char* key)
{
    if (!obj.is_object())
        fail(at, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end())
        fail(at, std::string("missing field \"") + key + "\"");
    return *it;
}

int integer(const json& v, const std::string& at)
{
    if (!v.is_number_integer())
        fail(at, "expected an integer, got " + v.dump());
    return v.get<int>();
}

Scalar coefficient(const json& v, const std::string& at)
{
    try {
        return jsonio::rational(v);
    } catch (const std::invalid_argument& e) {
        fail(at, e.what());
    }
}

nlohmann::ordered_json coefficient_json(const Scalar& c) { return jsonio::rational_json<nlohmann::ordered_json>(c); }

const json& array(const json& obj, const std::string& at, const char* key, bool required)
{
    static const json empty = json::array();
    if (!required && (!obj.is_object() || !obj.contains(key)))
        return empty;
    const json& v = field(obj, at, key);
    if (!v.is_array())
        fail(at + "/" + key, "expected an array");
    return v;
}

}  // namespace

CyclicCoalgebra parse_coalgebra(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw CoalgebraParseError("syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    if (!j.is_object())
        fail("", "expected an object");
    const json& name = field(j, "", "name");
    if (!name.is_string())
        fail("/name", "expected a string");

    std::vector<std::pair<std::string, int>> gens;
    std::map<std::string, int> index;
    const json& g = array(j, "", "generators", true);
    for (std::size_t i = 0; i < g.size(); ++i) {
        std::string at = "/generators/" + std::to_string(i);
        const json& label = field(g[i], at, "label");
        if (!label.is_string() || label.get<std::string>().empty())
            fail(at + "/label", "expected a nonempty string");
        std::string l = label.get<std::string>();
        if (!index.emplace(l, static_cast<int>(i)).second)
            fail(at + "/label", "duplicate generator \"" + l + "\"");
        gens.emplace_back(l, integer(field(g[i], at, "degree"), at + "/degree"));
    }
    auto c = make_coalgebra(name.get<std::string>(), gens, integer(field(j, "", "pairing_degree"), "/pairing_degree"));

    auto gen = [&](const json& obj, const std::string& at, const char* key) {
        const json& v = field(obj, at, key);
        if (!v.is_string())
            fail(at + "/" + key, "expected a generator label");
        auto it = index.find(v.get<std::string>());
        if (it == index.end())
            fail(at + "/" + key, "unknown generator \"" + v.get<std::string>() + "\"");
        return it->second;
    };

    const json& p = array(j, "", "pairing", true);
    for (std::size_t i = 0; i < p.size(); ++i) {
        std::string at = "/pairing/" + std::to_string(i);
        int l = gen(p[i], at, "left"), r = gen(p[i], at, "right");
        c.pairing[l][r] += coefficient(field(p[i], at, "value"), at + "/value");
    }
    const json& cp = array(j, "", "coproduct", false);
    for (std::size_t i = 0; i < cp.size(); ++i) {
        std::string at = "/coproduct/" + std::to_string(i);
        add_coproduct_term(c, gen(cp[i], at, "source"), coefficient(field(cp[i], at, "coeff"), at + "/coeff"),
                           gen(cp[i], at, "left"), gen(cp[i], at, "right"));
    }
    const json& d = array(j, "", "differential", false);
    for (std::size_t i = 0; i < d.size(); ++i) {
        std::string at = "/differential/" + std::to_string(i);
        add_differential_term(c, gen(d[i], at, "source"), coefficient(field(d[i], at, "coeff"), at + "/coeff"),
                              gen(d[i], at, "target"));
    }
    if (j.contains("cocommutative")) {
        if (!j["cocommutative"].is_boolean())
            fail("/cocommutative", "expected true or false");
        c.cocommutative = j["cocommutative"].get<bool>();
    }
    return c;
}

CyclicCoalgebra load_coalgebra(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw CoalgebraParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_coalgebra(ss.str());
    } catch (const CoalgebraParseError& e) {
        throw CoalgebraParseError(path + ": " + e.what());
    }
}

std::string serialize_coalgebra(const CyclicCoalgebra& c)
{
    nlohmann::ordered_json j;
    const auto& labels = c.reduced.labels;
    j["name"] = c.name;
    j["generators"] = nlohmann::ordered_json::array();
    for (int i = 0; i < c.dim(); ++i)
        j["generators"].push_back({{"label", labels[i]}, {"degree", c.degree(i)}});
    j["pairing_degree"] = c.pairing_degree;
    j["pairing"] = nlohmann::ordered_json::array();
    for (int i = 0; i < c.dim(); ++i)
        for (int k = 0; k < c.dim(); ++k)
            if (sgn(c.pairing[i][k]) != 0)
                j["pairing"].push_back({{"left", labels[i]}, {"right", labels[k]}, {"value", coefficient_json(c.pairing[i][k])}});
    j["coproduct"] = nlohmann::ordered_json::array();
    for (int i = 0; i < c.dim(); ++i)
        for (const auto& t : c.coproduct_terms(i))
            j["coproduct"].push_back({{"source", labels[i]}, {"left", labels[t.left]}, {"right", labels[t.right]},
                                      {"coeff", coefficient_json(t.coeff)}});
    j["differential"] = nlohmann::ordered_json::array();
    for (int i = 0; i < c.dim(); ++i)
        for (const auto& [k, v] : c.differential.column(i))
            j["differential"].push_back({{"source", labels[i]}, {"target", labels[k]}, {"coeff", coefficient_json(v)}});
    j["cocommutative"] = c.cocommutative;
    return j.dump(2) + "\n";
}

bool structurally_equal(const CyclicCoalgebra& a, const CyclicCoalgebra& b)
{
    if (a.name != b.name || a.reduced.labels != b.reduced.labels || a.reduced.degrees != b.reduced.degrees ||
        a.pairing_degree != b.pairing_degree || a.pairing != b.pairing || a.cocommutative != b.cocommutative)
        return false;
    for (int i = 0; i < a.dim(); ++i)
        if (a.coproduct.column(i) != b.coproduct.column(i) || a.differential.column(i) != b.differential.column(i))
            return false;
    return true;
}

}  // namespace cyc
