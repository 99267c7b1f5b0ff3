#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "foliate/rational.hpp"

namespace foliate {

using VarList = std::vector<std::string>;
using Exponent = std::vector<unsigned>;

/// Graded lexicographic order on exponent vectors (ascending).
struct GrlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse multivariate polynomial with rational coefficients over a named
/// variable list. Zero coefficients are never stored.
class MPoly {
 public:
  using Terms = std::map<Exponent, Rational, GrlexLess>;

  MPoly() = default;
  explicit MPoly(VarList vars) : vars_(std::move(vars)) {}

  static MPoly constant(const VarList& vars, const Rational& c);
  static MPoly variable(const VarList& vars, std::string_view name);
  static MPoly variable(const VarList& vars, std::size_t index);
  static MPoly monomial(const VarList& vars, Exponent exp, const Rational& c = 1);

  const VarList& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  std::size_t nvars() const { return vars_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the constant monomial (value at the origin).
  Rational constant_term() const;
  Rational coefficient(const Exponent& exp) const;

  /// Index of `name` in the variable list; throws UnknownVariable.
  std::size_t index_of(std::string_view name) const;
  std::optional<std::size_t> find_var(std::string_view name) const;

  /// Total degree; -1 for the zero polynomial.
  int total_degree() const;
  /// Degree in variable `i`; -1 for the zero polynomial.
  int degree_in(std::size_t i) const;
  /// Smallest exponent of variable `i` over all terms; 0 for zero.
  unsigned min_exponent_in(std::size_t i) const;

  /// Adds c * x^exp in place.
  void add_term(const Exponent& exp, const Rational& c);

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& other);
  MPoly& operator-=(const MPoly& other);
  MPoly& operator*=(const MPoly& other);
  MPoly& operator*=(const Rational& c);

  MPoly pow(unsigned k) const;
  MPoly derivative(std::size_t i) const;
  Rational evaluate(std::span<const Rational> point) const;

  /// Replace variable `i` by `value` (a polynomial over the same variables).
  MPoly substitute_var(std::size_t i, const MPoly& value) const;
  /// Set variable `i` to a constant.
  MPoly set_var(std::size_t i, const Rational& value) const;

  /// Re-express over `vars`, which must contain every variable in use.
  MPoly with_vars(const VarList& vars) const;
  /// Rename variable `i` (no other change).
  MPoly rename_var(std::size_t i, const std::string& name) const;

  /// Component-wise minimum of exponents (the monomial content).
  Exponent monomial_content() const;
  /// Exact division by the monomial x^exp (throws NotDivisible).
  MPoly divide_monomial(const Exponent& exp) const;

  /// Largest term in graded-lex order. Precondition: nonzero.
  const Terms::value_type& leading_term() const;

  /// Canonical text, terms in descending graded-lex order.
  std::string to_string() const;

  friend bool operator==(const MPoly& a, const MPoly& b);

 private:
  void require_same_vars(const MPoly& other, const char* op) const;

  VarList vars_;
  Terms terms_;
};

MPoly operator+(MPoly a, const MPoly& b);
MPoly operator-(MPoly a, const MPoly& b);
MPoly operator*(const MPoly& a, const MPoly& b);
MPoly operator*(MPoly a, const Rational& c);
MPoly operator*(const Rational& c, MPoly a);

std::string to_string(const MPoly& p);

/// Parses the ASCII polynomial grammar: integers, rationals p/q, variables,
/// `+ - * ^` (exponent: non-negative integer literal) and parentheses.
MPoly parse_poly(std::string_view text, const VarList& vars);

/// Comma separated list of variable names, e.g. "x,y,z".
VarList parse_var_list(std::string_view text);

/// A polynomial map: source variable i is sent to images[i], a polynomial in
/// the target variables.
struct PolyMap {
  VarList source;
  VarList target;
  std::vector<MPoly> images;

  static PolyMap identity(const VarList& vars);
  /// Validates sizes and that every image is over `target`.
  void validate() const;
};

/// f with each source variable replaced by its image, fully expanded.
MPoly substitute(const MPoly& f, const PolyMap& m);

/// (g ∘ f): first apply `inner` then `outer`; inner.target must be outer.source.
PolyMap compose(const PolyMap& outer, const PolyMap& inner);

/// Generic order along the coordinate subspace where the `center` variables
/// vanish: the least total degree in those variables. nullopt encodes ∞.
std::optional<unsigned> generic_order(const MPoly& f, std::span<const std::size_t> center);
std::optional<unsigned> generic_order(const MPoly& f, const VarList& center);

std::string order_to_string(std::optional<unsigned> order);

/// Exact quotient f / v^k; throws NotDivisible naming the offending term.
MPoly divide_by_var_power(const MPoly& f, std::string_view var, unsigned k);

/// Exact multivariate division; throws NotDivisible if g does not divide f.
MPoly divide_exact(const MPoly& f, const MPoly& g);

/// Coefficients of f as a polynomial in variable i, lowest degree first.
/// Each coefficient is over the same variable list (free of variable i).
std::vector<MPoly> coefficients_in(const MPoly& f, std::size_t i);

}  // namespace foliate
