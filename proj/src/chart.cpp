#include "foliate/chart.hpp"

#include <algorithm>
#include <set>

namespace foliate {

const DivisorComponent* FoliatedChart::component(std::string_view var) const {
  for (const auto& d : divisor)
    if (d.var == var) return &d;
  return nullptr;
}

void FoliatedChart::refresh_flags() {
  for (auto& d : divisor) d.invariant = is_hyperplane_invariant(form, d.var);
}

void FoliatedChart::validate() const {
  if (form.is_zero()) throw Error(ErrorKind::ZeroForm, "chart " + id + " has a zero form");
  if (!has_trivial_content(form))
    throw Error(ErrorKind::UnreducedGenerator, "chart " + id + " form has a common monomial factor");
  std::set<std::string> seen;
  for (const auto& d : divisor) {
    if (std::find(form.vars.begin(), form.vars.end(), d.var) == form.vars.end())
      throw Error(ErrorKind::UnknownVariable, "divisor component on unknown variable '" + d.var + "'");
    if (!seen.insert(d.var).second)
      throw Error(ErrorKind::NormalCrossingsViolation, "divisor component '" + d.var + "' listed twice");
  }
}

FoliatedChart make_chart(const OneForm& form, const std::vector<std::string>& divisor_vars, std::string id) {
  FoliatedChart c;
  c.id = std::move(id);
  c.form = form;
  for (const auto& v : divisor_vars) c.divisor.push_back({v, ComponentOrigin::Original, -1, false});
  c.validate();
  c.refresh_flags();
  return c;
}

ComponentSplit classify_components(const FoliatedChart& c) {
  ComponentSplit out;
  for (const auto& d : c.divisor)
    (is_hyperplane_invariant(c.form, d.var) ? out.invariant : out.dicritical).push_back(d.var);
  return out;
}

const char* point_kind_name(PointKind k) {
  switch (k) {
    case PointKind::Simple: return "Simple";
    case PointKind::NotSimple: return "NotSimple";
    case PointKind::Singular: return "Singular";
  }
  return "Singular";
}

PointVerdict is_simple_regular_at(const FoliatedChart& c, std::span<const Rational> point) {
  auto cov = evaluate(c.form, point);
  if (std::all_of(cov.begin(), cov.end(), [](const Rational& q) { return q == 0; }))
    return {PointKind::Singular, "covector vanishes"};
  std::vector<std::size_t> through, inv;
  for (const auto& d : c.divisor) {
    std::size_t i = c.form.coeffs.front().index_of(d.var);
    if (point[i] != 0) continue;
    through.push_back(i);
    if (is_hyperplane_invariant(c.form, d.var)) inv.push_back(i);
  }
  if (!inv.empty()) {
    if (inv.size() > 1) return {PointKind::NotSimple, "two invariant components meet"};
    for (std::size_t i = 0; i < cov.size(); ++i)
      if (i != inv.front() && cov[i] != 0)
        return {PointKind::NotSimple, "not tangent to invariant component " + c.vars()[inv.front()]};
    return {PointKind::Simple, ""};
  }
  if (through.size() >= c.dim()) return {PointKind::NotSimple, "dicritical corner"};
  for (std::size_t i = 0; i < cov.size(); ++i)
    if (cov[i] != 0 && std::find(through.begin(), through.end(), i) == through.end()) return {PointKind::Simple, ""};
  return {PointKind::NotSimple, "tangent to the dicritical components"};
}

TangencyReport tangency_locus(const OneForm& w, std::string_view var) {
  TangencyReport r;
  OneForm restricted = restrict_to_hyperplane(w, var);
  r.generators = restricted.coeffs;
  r.zero_set = common_zero_set(restricted.coeffs);
  return r;
}

TangencyReport tangency_locus(const FoliatedChart& c, std::string_view var) {
  if (!c.has_component(var))
    throw Error(ErrorKind::UnknownVariable, "'" + std::string(var) + "' is not a divisor component");
  if (is_hyperplane_invariant(c.form, var))
    throw Error(ErrorKind::InvariantComponent, "component '" + std::string(var) + "' is invariant");
  return tangency_locus(c.form, var);
}

bool has_dicritical_corner(const FoliatedChart& c) {
  return !c.divisor.empty() && classify_components(c).dicritical.size() == c.dim();
}

}  // namespace foliate
