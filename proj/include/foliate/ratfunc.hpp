#pragma once

#include <string>
#include <vector>

#include "foliate/poly.hpp"

namespace foliate {

/// Quotient of two polynomials over the same variables. Only common monomial
/// content is cancelled; equality is decided by cross-multiplication.
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(MPoly num);  // NOLINT(google-explicit-constructor)
  RatFunc(MPoly num, MPoly den);

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  const VarList& vars() const { return num_.vars(); }

  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator-() const { return RatFunc(-num_, den_); }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc pow(unsigned k) const;

  friend bool operator==(const RatFunc& a, const RatFunc& b);

  /// If num/den reduces to c * x^e with e possibly negative, returns (c, e).
  bool as_laurent_monomial(Rational& coeff, std::vector<int>& exps) const;

  std::string to_string() const;

 private:
  void normalize();

  MPoly num_;
  MPoly den_;
};

/// A rational map: source variable i is sent to images[i] over `target`.
struct RatMap {
  VarList source;
  VarList target;
  std::vector<RatFunc> images;

  static RatMap from_poly_map(const PolyMap& m);
};

RatFunc substitute(const RatFunc& f, const RatMap& m);
/// outer ∘ inner: inner.target must equal outer.source.
RatMap compose(const RatMap& outer, const RatMap& inner);
bool operator==(const RatMap& a, const RatMap& b);

}  // namespace foliate
