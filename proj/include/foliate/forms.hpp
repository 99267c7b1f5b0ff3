#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "foliate/error.hpp"
#include "foliate/poly.hpp"
#include "foliate/ratfunc.hpp"

namespace foliate {

/// ω = Σ coeffs[i] dx_i.
struct OneForm {
  VarList vars;
  std::vector<MPoly> coeffs;

  OneForm() = default;
  OneForm(VarList v, std::vector<MPoly> c);
  static OneForm zero(const VarList& vars);

  std::size_t dim() const { return vars.size(); }
  bool is_zero() const;
  const MPoly& operator[](std::size_t i) const { return coeffs[i]; }
  const MPoly& coeff(std::string_view var) const;

  /// Every coefficient multiplied by f.
  OneForm scaled(const MPoly& f) const;
  OneForm operator+(const OneForm& other) const;
  OneForm operator-() const;

  /// "[p1, p2] over (x,y)".
  std::string to_string() const;
};

bool operator==(const OneForm& a, const OneForm& b);

/// Coefficients on dx_i ∧ dx_j for i < j. Missing keys are zero.
struct TwoForm {
  VarList vars;
  std::map<std::array<std::size_t, 2>, MPoly> coeffs;

  MPoly at(std::size_t i, std::size_t j) const;
  bool is_zero() const;
};

/// Coefficients on dx_i ∧ dx_j ∧ dx_k for i < j < k.
struct ThreeForm {
  VarList vars;
  std::map<std::array<std::size_t, 3>, MPoly> coeffs;

  MPoly at(std::size_t i, std::size_t j, std::size_t k) const;
  bool is_zero() const;
};

OneForm d(const MPoly& f);
TwoForm d(const OneForm& w);
ThreeForm d(const TwoForm& w);
TwoForm wedge(const OneForm& a, const OneForm& b);
ThreeForm wedge(const OneForm& a, const TwoForm& b);

/// ω ∧ dω = 0. Vacuous in fewer than three variables.
bool check_integrability(const OneForm& w);

/// Raw pullback Σ (a_i ∘ m) d(m_i); no exceptional division.
OneForm pullback(const OneForm& w, const PolyMap& m);

/// Drops the d(var) coefficient and sets var = 0 in the rest.
OneForm restrict_to_hyperplane(const OneForm& w, std::string_view var);
bool is_hyperplane_invariant(const OneForm& w, std::string_view var);

/// Divides out the monomial content of the coefficient list.
OneForm remove_monomial_content(const OneForm& w);
bool has_trivial_content(const OneForm& w);

/// Cleared numerator of dφ, before any content removal.
OneForm cleared_differential(const RatFunc& phi);
/// Reduced generator of the foliation with first integral φ. Throws
/// ConstantInput, or UnreducedGenerator if no coprimality certificate exists.
OneForm from_closed_rational(const RatFunc& phi);

/// The nonzero coefficients; their common zeros are the singular set.
std::vector<MPoly> singular_generators(const OneForm& w);
std::vector<Rational> evaluate(const OneForm& w, std::span<const Rational> point);
bool is_singular_at(const OneForm& w, std::span<const Rational> point);

/// Two-variable isolated singularity test. Yes / No / Inconclusive.
Verdict isolated_singularity_2d(const OneForm& w);

/// Parses "[p1, p2, p3] over (x,y,z)".
OneForm parse_one_form(std::string_view text);
/// Parses "[p1, p2, p3]" (brackets optional) over known variables.
OneForm parse_one_form(std::string_view coeffs, const VarList& vars);

}  // namespace foliate
