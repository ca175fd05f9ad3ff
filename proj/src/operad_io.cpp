#include "cyc/operad_io.hpp"

#include "json_util.hpp"

#include <fstream>
#include <sstream>

namespace cyc {

namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

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

int integer(const json& obj, const std::string& at, const char* key, int lo, int hi)
{
    const json& v = field(obj, at, key);
    std::string here = at + "/" + key;
    if (!v.is_number_integer())
        fail(here, "expected an integer, got " + v.dump());
    long x = v.get<long>();
    if (x < lo || x > hi)
        fail(here, std::to_string(x) + " is outside " + std::to_string(lo) + ".." + std::to_string(hi));
    return static_cast<int>(x);
}

Scalar coefficient(const json& obj, const std::string& at)
{
    try {
        return jsonio::rational(field(obj, at, "coeff"));
    } catch (const std::invalid_argument& e) {
        fail(at + "/coeff", e.what());
    }
}

const json& array_of(const json& obj, const std::string& at, const char* key, bool required)
{
    static const json empty = json::array();
    if (!required && !obj.contains(key))
        return empty;
    const json& v = field(obj, at, key);
    if (!v.is_array())
        fail(at + "/" + key, "expected an array");
    return v;
}

std::vector<Vec> matrix(const json& obj, const std::string& at, int rows, int cols)
{
    std::vector<Vec> out(cols);
    const json& e = array_of(obj, at, "entries", true);
    for (std::size_t i = 0; i < e.size(); ++i) {
        std::string here = at + "/entries/" + std::to_string(i);
        int r = integer(e[i], here, "row", 0, rows - 1);
        int c = integer(e[i], here, "col", 0, cols - 1);
        out[c].add(r, coefficient(e[i], here));
    }
    return out;
}

ojson matrix_json(const std::vector<Vec>& cols)
{
    ojson e = ojson::array();
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (const auto& [r, x] : cols[c])
            e.push_back({{"row", r}, {"col", c}, {"coeff", jsonio::rational_json<ojson>(x)}});
    return e;
}

}  // namespace

CyclicOperadData parse_operad(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw CoalgebraParseError("syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    if (!j.is_object())
        fail("", "expected an object");
    CyclicOperadData op;
    const json& name = field(j, "", "name");
    if (!name.is_string())
        fail("/name", "expected a string");
    op.name = name.get<std::string>();
    op.max_arity = integer(j, "", "max_arity", 1, 8);
    int M = op.max_arity;

    const json& basis = array_of(j, "", "basis", true);
    if (static_cast<int>(basis.size()) != M + 1)
        fail("/basis", "expected " + std::to_string(M + 1) + " lists (arities 0.." + std::to_string(M) + ")");
    for (int m = 0; m <= M; ++m) {
        std::string at = "/basis/" + std::to_string(m);
        if (!basis[m].is_array())
            fail(at, "expected an array of names");
        std::vector<std::string> names;
        for (std::size_t k = 0; k < basis[m].size(); ++k) {
            if (!basis[m][k].is_string())
                fail(at + "/" + std::to_string(k), "expected a string");
            names.push_back(basis[m][k].get<std::string>());
        }
        op.basis.push_back(std::move(names));
    }

    op.swaps.resize(M + 1);
    op.tau.resize(M + 1);
    for (int m = 1; m <= M; ++m) {
        op.swaps[m].assign(m - 1, std::vector<Vec>(op.dim(m)));
        op.tau[m].assign(op.dim(m), Vec());
    }
    std::vector<std::vector<bool>> seen_swap(M + 1);
    for (int m = 1; m <= M; ++m)
        seen_swap[m].assign(m - 1, false);
    const json& swaps = array_of(j, "", "swaps", true);
    for (std::size_t i = 0; i < swaps.size(); ++i) {
        std::string at = "/swaps/" + std::to_string(i);
        int m = integer(swaps[i], at, "arity", 2, M);
        int k = integer(swaps[i], at, "k", 0, m - 2);
        if (seen_swap[m][k])
            fail(at, "duplicate swap table");
        seen_swap[m][k] = true;
        op.swaps[m][k] = matrix(swaps[i], at, op.dim(m), op.dim(m));
    }
    const json& tau = array_of(j, "", "tau", true);
    std::vector<bool> seen_tau(M + 1, false);
    for (std::size_t i = 0; i < tau.size(); ++i) {
        std::string at = "/tau/" + std::to_string(i);
        int m = integer(tau[i], at, "arity", 1, M);
        if (seen_tau[m])
            fail(at, "duplicate tau table");
        seen_tau[m] = true;
        op.tau[m] = matrix(tau[i], at, op.dim(m), op.dim(m));
    }

    // unlisted composition products are zero
    for (int m = 1; m <= M; ++m)
        for (int l = 1; m + l - 1 <= M; ++l)
            for (int slot = 0; slot < m; ++slot)
                op.compositions[{m, slot, l}].resize(static_cast<std::size_t>(op.dim(m)) * op.dim(l));
    const json& comp = array_of(j, "", "compositions", true);
    for (std::size_t i = 0; i < comp.size(); ++i) {
        std::string at = "/compositions/" + std::to_string(i);
        int m = integer(comp[i], at, "m", 1, M);
        int slot = integer(comp[i], at, "slot", 0, m - 1);
        int l = integer(comp[i], at, "l", 1, M - m + 1);
        int a = integer(comp[i], at, "a", 0, op.dim(m) - 1);
        int b = integer(comp[i], at, "b", 0, op.dim(l) - 1);
        Vec& out = op.compositions[{m, slot, l}][a * op.dim(l) + b];
        int target = op.dim(m + l - 1);
        const json& res = array_of(comp[i], at, "result", true);
        for (std::size_t t = 0; t < res.size(); ++t) {
            std::string here = at + "/result/" + std::to_string(t);
            out.add(integer(res[t], here, "index", 0, target - 1), coefficient(res[t], here));
        }
    }

    const json& emb = array_of(j, "", "ass_embedding", false);
    if (!emb.empty()) {
        op.ass_embedding.resize(M + 1);
        for (std::size_t i = 0; i < emb.size(); ++i) {
            std::string at = "/ass_embedding/" + std::to_string(i);
            int m = integer(emb[i], at, "arity", 1, M);
            op.ass_embedding[m] = matrix(emb[i], at, static_cast<int>(ass_words(m).size()), op.dim(m));
        }
    }
    return op;
}

CyclicOperadData load_operad(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw CoalgebraParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_operad(ss.str());
    } catch (const CoalgebraParseError& e) {
        throw CoalgebraParseError(path + ": " + e.what());
    }
}

std::string serialize_operad(const CyclicOperadData& op)
{
    ojson j;
    j["name"] = op.name;
    j["max_arity"] = op.max_arity;
    j["basis"] = op.basis;
    j["swaps"] = ojson::array();
    j["tau"] = ojson::array();
    for (int m = 1; m <= op.max_arity; ++m) {
        for (std::size_t k = 0; k < op.swaps[m].size(); ++k)
            j["swaps"].push_back({{"arity", m}, {"k", k}, {"entries", matrix_json(op.swaps[m][k])}});
        j["tau"].push_back({{"arity", m}, {"entries", matrix_json(op.tau[m])}});
    }
    j["compositions"] = ojson::array();
    for (const auto& [key, table] : op.compositions) {
        auto [m, slot, l] = key;
        for (int a = 0; a < op.dim(m); ++a)
            for (int b = 0; b < op.dim(l); ++b) {
                const Vec& v = table.at(a * op.dim(l) + b);
                if (v.is_zero())
                    continue;
                ojson res = ojson::array();
                for (const auto& [k, c] : v)
                    res.push_back({{"index", k}, {"coeff", jsonio::rational_json<ojson>(c)}});
                j["compositions"].push_back({{"m", m}, {"slot", slot}, {"l", l}, {"a", a}, {"b", b}, {"result", res}});
            }
    }
    if (!op.ass_embedding.empty()) {
        j["ass_embedding"] = ojson::array();
        for (int m = 1; m < static_cast<int>(op.ass_embedding.size()); ++m)
            j["ass_embedding"].push_back({{"arity", m}, {"entries", matrix_json(op.ass_embedding[m])}});
    }
    return j.dump(1) + "\n";
}

bool structurally_equal(const CyclicOperadData& a, const CyclicOperadData& b)
{
    if (a.name != b.name || a.max_arity != b.max_arity || a.basis != b.basis || a.swaps != b.swaps ||
        a.tau != b.tau)
        return false;
    auto nonzero = [](const std::vector<Vec>& t) {
        return std::any_of(t.begin(), t.end(), [](const Vec& v) { return !v.is_zero(); });
    };
    // tables that are entirely zero need not be listed
    for (const auto& [k, t] : a.compositions) {
        auto it = b.compositions.find(k);
        if (it == b.compositions.end() ? nonzero(t) : it->second != t)
            return false;
    }
    for (const auto& [k, t] : b.compositions)
        if (!a.compositions.count(k) && nonzero(t))
            return false;
    auto emb = [](const CyclicOperadData& o, int m) {
        return m < static_cast<int>(o.ass_embedding.size()) ? o.ass_embedding[m] : std::vector<Vec>();
    };
    for (int m = 1; m <= a.max_arity; ++m)
        if (emb(a, m) != emb(b, m))
            return false;
    return true;
}

}  // namespace cyc
