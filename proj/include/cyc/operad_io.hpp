#pragma once

#include "cyc/coalg_io.hpp"
#include "cyc/operadcore.hpp"

namespace cyc {

// {
//   "name": "Ass", "max_arity": 3,
//   "basis": [[], ["id"], ["x1x2", "x2x1"], ...],          // names per arity 0..max_arity
//   "swaps": [{"arity": 2, "k": 0, "entries": [{"row": 1, "col": 0, "coeff": 1}, ...]}, ...],
//   "tau": [{"arity": 2, "entries": [...]}, ...],
//   "compositions": [{"m": 2, "slot": 0, "l": 2, "a": 0, "b": 1,
//                     "result": [{"index": 3, "coeff": 1}, ...]}, ...],
//   "ass_embedding": [{"arity": 2, "entries": [...]}, ...]   // optional
// }
// Matrices are listed by nonzero entries (row, col); col is the source basis
// index. Slots are 0-based. Unlisted entries and composition products are zero;
// an action that is not a group action is left for validate_operad to report.
CyclicOperadData parse_operad(const std::string& text);
CyclicOperadData load_operad(const std::string& path);
std::string serialize_operad(const CyclicOperadData& op);

bool structurally_equal(const CyclicOperadData& a, const CyclicOperadData& b);

}  // namespace cyc
