#pragma once

#include <optional>
#include <string>
#include <vector>

#include "foliate/elimination.hpp"
#include "foliate/forms.hpp"

namespace foliate {

enum class ComponentOrigin { Original, Exceptional };

/// A coordinate hyperplane (var = 0) belonging to the divisor.
struct DivisorComponent {
  std::string var;
  ComponentOrigin origin = ComponentOrigin::Original;
  /// Script step that created an exceptional component; -1 otherwise.
  int step = -1;
  /// Cached; kept equal to is_hyperplane_invariant(form, var).
  bool invariant = false;
};

/// One affine chart (M, E, F): coordinates, a normal-crossings divisor made
/// of coordinate hyperplanes, and a reduced generator of the foliation.
struct FoliatedChart {
  std::string id = "c0";
  OneForm form;
  std::vector<DivisorComponent> divisor;
  std::string parent;  // empty for a root chart
  int parent_step = -1;

  const VarList& vars() const { return form.vars; }
  std::size_t dim() const { return form.dim(); }

  const DivisorComponent* component(std::string_view var) const;
  bool has_component(std::string_view var) const { return component(var) != nullptr; }

  /// Recomputes every cached invariance flag.
  void refresh_flags();
  /// Throws on a zero form, non-trivial monomial content, or a bad divisor.
  void validate() const;
};

/// Root chart with the given original divisor variables.
FoliatedChart make_chart(const OneForm& form, const std::vector<std::string>& divisor_vars, std::string id = "c0");

struct ComponentSplit {
  std::vector<std::string> invariant;
  std::vector<std::string> dicritical;
};

ComponentSplit classify_components(const FoliatedChart& c);

enum class PointKind { Simple, NotSimple, Singular };

const char* point_kind_name(PointKind k);

struct PointVerdict {
  PointKind kind = PointKind::Singular;
  std::string reason;
};

PointVerdict is_simple_regular_at(const FoliatedChart& c, std::span<const Rational> point);

struct TangencyReport {
  /// Coefficients of the form restricted to the component, over the
  /// remaining variables.
  std::vector<MPoly> generators;
  ZeroSetResult zero_set;
};

/// Tangency points between the foliation and the hyperplane var = 0.
TangencyReport tangency_locus(const OneForm& w, std::string_view var);
/// Same, for a dicritical divisor component (throws InvariantComponent).
TangencyReport tangency_locus(const FoliatedChart& c, std::string_view var);

bool has_dicritical_corner(const FoliatedChart& c);

}  // namespace foliate
