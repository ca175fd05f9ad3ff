#pragma once

#include "cyc/coalg.hpp"

namespace cyc {

// Malformed coalgebra files. The message names the byte offset (syntax
// errors) or the JSON pointer of the offending value.
struct CoalgebraParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// {
//   "name": "E2",
//   "generators": [{"label": "a", "degree": 2}, ...],
//   "pairing_degree": -6,
//   "pairing": [{"left": "a", "right": "b", "value": 1}, ...],
//   "coproduct": [{"source": "b", "left": "a", "right": "a", "coeff": 1}, ...],
//   "differential": [{"source": "b", "target": "a", "coeff": "1/2"}, ...],
//   "cocommutative": true
// }
// Coefficients are integers or strings "p/q". Entries not listed are zero;
// "coproduct", "differential" and "cocommutative" may be omitted.
CyclicCoalgebra parse_coalgebra(const std::string& text);
CyclicCoalgebra load_coalgebra(const std::string& path);
std::string serialize_coalgebra(const CyclicCoalgebra& c);

bool structurally_equal(const CyclicCoalgebra& a, const CyclicCoalgebra& b);

}  // namespace cyc
