#pragma once

#include "cyc/scalar.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace cyc::jsonio {

using json = nlohmann::json;

// Integer or "p/q"; throws std::invalid_argument with a description.
inline Scalar rational(const json& v)
{
    if (v.is_number_integer())
        return Scalar(v.get<long>());
    if (v.is_string()) {
        std::string s = v.get<std::string>();
        mpq_class q;
        if (s.empty() || s.find_first_not_of("+-0123456789/") != std::string::npos || q.set_str(s, 10) != 0 ||
            q.get_den() == 0)
            throw std::invalid_argument("not a rational number: \"" + s + "\"");
        q.canonicalize();
        return q;
    }
    throw std::invalid_argument("expected an integer or a \"p/q\" string, got " + v.dump());
}

template <class J>
J rational_json(const Scalar& c)
{
    if (c.get_den() == 1 && c.get_num().fits_slong_p())
        return J(c.get_num().get_si());
    return J(c.get_str());
}

}  // namespace cyc::jsonio
