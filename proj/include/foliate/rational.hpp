#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace foliate {

/// Exact rational number; GMP keeps it reduced with a positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Accepts "p" or "p/q" with optional leading sign; throws Error(InvalidInput).
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& q);

}  // namespace foliate
