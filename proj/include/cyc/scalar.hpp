#pragma once

#include <gmpxx.h>

#include <string>

namespace cyc {

using Scalar = mpq_class;

// Parses "p", "-p" or "p/q"; throws std::invalid_argument.
Scalar parse_scalar(const std::string& text);

std::string to_string(const Scalar& q);

// a/b in canonical form (the two-argument mpq constructor does not reduce).
inline Scalar frac(long a, long b)
{
    Scalar q(a, b);
    q.canonicalize();
    return q;
}

inline bool odd(long d) { return (d & 1) != 0; }

// (-1)^d
inline int sign_of(long d) { return odd(d) ? -1 : 1; }

}  // namespace cyc
