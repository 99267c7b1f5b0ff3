#pragma once

#include <optional>
#include <string>
#include <vector>

#include "foliate/blowup.hpp"

namespace foliate {

/// Camacho-Sad index at the origin of a two-variable form along the invariant
/// coordinate curve `curve_var` = 0.
Rational camacho_sad_index(const OneForm& w, std::string_view curve_var);

/// Linear part of the dual field B∂x - A∂y of A dx + B dy at the origin.
struct LinearPart {
  Rational m[2][2];

  Rational trace() const { return m[0][0] + m[1][1]; }
  Rational det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
  bool is_scalar() const { return m[0][1] == 0 && m[1][0] == 0 && m[0][0] == m[1][1]; }
};

LinearPart linear_part(const OneForm& w);
/// trace² / det; throws NilpotentOrDegenerate when det = 0.
Rational baum_bott_index(const LinearPart& l);

/// Linear part λI (λ ≠ 0) and a dicritical quadratic blow-up after which
/// every chart is regular and transverse along the exceptional line.
bool is_cart_wheel(const OneForm& w);

struct ExceptionalPoint {
  std::string chart;
  /// Coordinate along the exceptional line in that chart.
  Rational position;
  std::optional<Rational> index;  // nullopt: could not be computed
  std::string note;
};

struct IndexAudit {
  bool dicritical = false;
  std::vector<ExceptionalPoint> points;
  /// Singular points on the exceptional line whose coordinates are irrational.
  unsigned irrational_points = 0;
  Rational sum = 0;
  /// Index sum excludes some point.
  bool partial = false;
  std::optional<Rational> axis_index_before;
  std::optional<Rational> axis_index_after;
};

/// Blows up the origin once and computes Camacho-Sad indices along the
/// exceptional line. `axis` optionally names an invariant coordinate curve
/// whose strict transform index is reported as well.
IndexAudit blowup_index_audit(const OneForm& w, const std::string& axis = "");

}  // namespace foliate
