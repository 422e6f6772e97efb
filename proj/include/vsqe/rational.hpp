#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace vsqe {

// Exact coefficients. Every sign test in the engine is decided on these.
using Rational = mpq_class;

inline int sign(const Rational& q) { return sgn(q); }

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Parses "12", "-3/4" or "0.125" into an exact rational. Throws
// std::invalid_argument on malformed text.
Rational parse_rational(std::string_view text);

}  // namespace vsqe
