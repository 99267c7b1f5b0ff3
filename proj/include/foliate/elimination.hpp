#pragma once

#include <optional>
#include <string>
#include <vector>

#include "foliate/poly.hpp"

namespace foliate {

/// Determinant of a square polynomial matrix by fraction-free (Bareiss)
/// elimination.
MPoly determinant(std::vector<std::vector<MPoly>> m, const VarList& vars);

/// Resultant of f and g with respect to `var`: the determinant of the
/// Sylvester matrix laid out by ascending powers of `var`. Zero iff f and g
/// share a factor of positive degree in `var`.
MPoly resultant(const MPoly& f, const MPoly& g, std::string_view var);

/// True iff f and g have no common factor of positive degree. Decided with
/// one resultant per shared variable.
bool coprime(const MPoly& f, const MPoly& g);

/// Sound certificate that the polynomials have no common non-constant factor.
/// Returns false when no certificate was found (not a proof of a factor).
bool certify_no_common_factor(const std::vector<MPoly>& polys);

/// Common monomial content of a list (component-wise min exponent).
Exponent common_monomial_content(const std::vector<MPoly>& polys);

// Univariate helpers; the polynomial may only use variable `var`.
MPoly univariate_gcd(const MPoly& f, const MPoly& g, std::size_t var);
/// Distinct rational roots, ascending.
std::vector<Rational> rational_roots(const MPoly& f, std::size_t var);
/// f / gcd(f, f') made monic.
MPoly squarefree_part(const MPoly& f, std::size_t var);

enum class ZeroSet { Empty, NonEmpty, Inconclusive };

const char* zero_set_name(ZeroSet z);

struct ZeroSetResult {
  ZeroSet verdict = ZeroSet::Inconclusive;
  /// A common zero when one was found over the rationals.
  std::optional<std::vector<Rational>> witness;
  std::string note;
};

/// Decides whether the polynomials have a common complex zero, soundly:
/// constants, the origin, univariate gcds and pairwise resultants are
/// consulted in that order; anything else is Inconclusive.
ZeroSetResult common_zero_set(const std::vector<MPoly>& polys);

}  // namespace foliate
