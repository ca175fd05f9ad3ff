#pragma once

#include "cyc/freealg.hpp"

namespace cyc {

// Error in a class expression; `position` is the 0-based character offset.
struct ExpressionError : std::invalid_argument {
    ExpressionError(const std::string& text, std::size_t position, const std::string& what);
    std::size_t position;
};

// Linear combination of words in the letters of V, e.g. "2*(x,y) - 1/3*(y,x) + x".
// A word is a single label or a parenthesized comma-separated list of labels.
// Coefficients are integers or fractions p/q; the '*' is optional.
TensorElement parse_class_expression(const std::string& text, const VSpace& V);

}  // namespace cyc
