#pragma once

#include <optional>
#include <string>
#include <vector>

#include "foliate/chart.hpp"

namespace foliate {

enum class CenterKind { Point, Curve };

/// Coordinate center inside a chart. For a curve, `vars` are the dim - 1
/// coordinates that vanish on it; a point center is the chart origin.
struct CenterSpec {
  CenterKind kind = CenterKind::Point;
  std::vector<std::string> vars;
  std::string chart = "c0";

  static CenterSpec point(std::string chart = "c0") { return {CenterKind::Point, {}, std::move(chart)}; }
  static CenterSpec curve(std::vector<std::string> vars, std::string chart = "c0") {
    return {CenterKind::Curve, std::move(vars), std::move(chart)};
  }

  /// Variables vanishing on the center (all chart variables for a point).
  std::vector<std::string> ideal_vars(const VarList& chart_vars) const;
  std::string to_string() const;
};

struct LogGenericOrder {
  unsigned r = 0;
  /// Order of p = Σ_{i∈Y} y_i a_i; nullopt is ∞.
  std::optional<unsigned> nu_p;
  /// ν_Y(a_i) per chart variable.
  std::vector<std::optional<unsigned>> orders;
};

enum class MonoidalKind { NDic, DicV, DicNV };

const char* monoidal_kind_name(MonoidalKind k);

struct MonoidalClass {
  MonoidalKind kind = MonoidalKind::NDic;
  unsigned r = 0;
  std::optional<unsigned> nu_p;
  /// Y-variables attaining ν(y_i a_i) = r.
  std::vector<std::string> attaining;
  std::string to_string() const;  // "DicNV r=2"
};

LogGenericOrder log_generic_order(const OneForm& w, const std::vector<std::string>& center_vars);
MonoidalClass classify_monoidal(const OneForm& w, const std::vector<std::string>& center_vars);

struct ChildChart {
  FoliatedChart chart;
  /// Parent coordinates in terms of child coordinates.
  PolyMap map;
  std::string exceptional_var;
  unsigned k = 0;
  bool dicritical = false;
};

struct BlowupResult {
  CenterSpec center;
  std::vector<ChildChart> children;
  unsigned k = 0;
  bool dicritical = false;
  std::optional<MonoidalClass> monoidal_class;
  bool admissible = true;
};

struct BlowupOptions {
  /// Allow centers that are not invariant (curves) or not singular (points).
  bool allow_non_admissible = false;
  /// Step number recorded on the new exceptional component.
  int step = 0;
};

/// Invariant curve (every coefficient off Y vanishes on Y) or singular origin.
bool is_admissible_center(const FoliatedChart& c, const CenterSpec& center);

BlowupResult monoidal_blowup(const FoliatedChart& c, const CenterSpec& center, const BlowupOptions& opt = {});
BlowupResult quadratic_blowup(const FoliatedChart& c, const BlowupOptions& opt = {});
/// Dispatches on center.kind.
BlowupResult blowup(const FoliatedChart& c, const CenterSpec& center, const BlowupOptions& opt = {});

struct ShearResult {
  FoliatedChart chart;
  /// Old coordinates in terms of the new ones.
  PolyMap map;
};

/// New coordinate v' = v - p, i.e. substitutes v = v' + p. `p` must not
/// involve v. The coordinate may be renamed (z to w, say).
ShearResult shear(const FoliatedChart& c, std::string_view var, const MPoly& p, const std::string& new_name = "");

/// Point centers always; curve centers iff the divisor has a component off Y.
bool check_E_controlled(const FoliatedChart& c, const CenterSpec& center);

}  // namespace foliate
