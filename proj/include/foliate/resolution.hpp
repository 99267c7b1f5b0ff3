#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "foliate/blowup.hpp"

namespace foliate {

enum class StepKind { Blowup, Shear, AddDivisor };

const char* step_kind_name(StepKind k);

struct ScriptStep {
  StepKind kind = StepKind::Blowup;
  std::string chart = "c0";
  CenterSpec center;           // Blowup
  std::string var;             // Shear, AddDivisor
  std::string poly;            // Shear: v' = v - poly
  std::string new_name;        // Shear: optional new coordinate name
  bool allow_non_admissible = false;

  static ScriptStep blow(CenterSpec c, bool override_admissibility = false);
  static ScriptStep shear_step(std::string chart, std::string var, std::string poly, std::string new_name = "");
  static ScriptStep add_divisor(std::string chart, std::string var);
};

using ResolutionScript = std::vector<ScriptStep>;

struct ChartNode {
  FoliatedChart chart;
  std::vector<std::string> children;
  /// Root coordinates as polynomials in this chart's coordinates.
  PolyMap to_root;
};

/// Controlledness of one point class of a blow-up center.
struct ControlCheck {
  std::string point_class;  // "origin" or "generic"
  /// True when the localized sequence at such points starts with this step.
  bool fresh = false;
  bool controlled = true;
};

struct StepRecord {
  int index = 0;
  StepKind kind = StepKind::Blowup;
  std::string chart;
  CenterSpec center;
  unsigned k = 0;
  bool dicritical = false;
  std::optional<MonoidalClass> monoidal_class;
  bool admissible = true;
  std::vector<ControlCheck> control;
  std::vector<std::string> children;
};

struct ResolutionState {
  std::string root_id = "c0";
  /// Charts in creation order; a chart is a leaf when it has no children.
  std::vector<std::string> order;
  std::map<std::string, ChartNode> nodes;
  std::vector<StepRecord> steps;

  const ChartNode& node(const std::string& id) const;
  std::vector<std::string> leaves() const;
};

ResolutionState apply_script(const FoliatedChart& root, const ResolutionScript& script);

struct LeafVerdict {
  std::string chart;
  Verdict resolved = Verdict::Inconclusive;
  std::vector<std::string> witnesses;
};

struct VerifyReport {
  std::vector<LeafVerdict> leaves;
  std::vector<StepRecord> steps;
  Verdict resolved = Verdict::Inconclusive;
  /// Every fresh point class of every blow-up is E-controlled.
  bool controlled = false;
  bool all_admissible = true;
  bool all_dicritical = true;
  /// No chart of the state, intermediate or final, has a dicritical corner.
  bool no_corners = true;
};

LeafVerdict verify_chart(const FoliatedChart& c, bool is_root_leaf);
VerifyReport verify_resolved(const ResolutionState& st);

enum class GermKind { Radial, AlmostRadial, Unresolved, Inconclusive };

const char* germ_kind_name(GermKind k);

struct GermClassification {
  GermKind kind = GermKind::Inconclusive;
  VerifyReport report;
};

GermClassification classify_foliated_germ(const FoliatedChart& root, const ResolutionScript& script);

struct SectionAdvisory {
  std::string plane;  // the coordinate set to zero
  Verdict isolated = Verdict::Inconclusive;
  std::optional<bool> cart_wheel;
  std::string note;
};

struct OpenBookResult {
  bool found = false;
  std::string p, q;
  /// w = u (p dq - q dp) with u(0) ≠ 0.
  MPoly unit;
  std::vector<SectionAdvisory> advisory;
};

OpenBookResult detect_open_book(const OneForm& w);

struct IndestructibilityCheck {
  std::string chart;
  CenterSpec center;
  bool singular_on_exceptional = false;
  std::string witness;
};

/// Re-blows up the origin of every resolved leaf chart along the point and
/// along each invariant coordinate curve; each must produce a singular point
/// on the new exceptional divisor.
std::vector<IndestructibilityCheck> indestructibility_audit(const ResolutionState& st);

/// d(φ ∘ π) ∧ ω = 0 in every chart of the state.
bool first_integral_persists(const ResolutionState& st, const RatFunc& phi);

}  // namespace foliate
