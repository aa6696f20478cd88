#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lie2b {

/// Exact rational coefficient. GMP keeps results of arithmetic in lowest terms.
using Scalar = mpq_class;

/// Parses "p" or "p/q" (optional leading '-'); throws std::invalid_argument.
Scalar parse_scalar(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Scalar& s);

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }

Scalar factorial(unsigned n);

} // namespace lie2b
