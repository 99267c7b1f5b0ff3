#include "foliate/blowup.hpp"

#include <algorithm>
#include <set>

namespace foliate {

std::vector<std::string> CenterSpec::ideal_vars(const VarList& chart_vars) const {
  return kind == CenterKind::Point ? std::vector<std::string>(chart_vars.begin(), chart_vars.end()) : vars;
}

std::string CenterSpec::to_string() const {
  if (kind == CenterKind::Point) return "point@" + chart;
  std::string s = "curve(";
  for (std::size_t i = 0; i < vars.size(); ++i) s += (i ? "," : "") + vars[i];
  return s + ")@" + chart;
}

const char* monoidal_kind_name(MonoidalKind k) {
  switch (k) {
    case MonoidalKind::NDic: return "NDic";
    case MonoidalKind::DicV: return "DicV";
    case MonoidalKind::DicNV: return "DicNV";
  }
  return "NDic";
}

std::string MonoidalClass::to_string() const { return std::string(monoidal_kind_name(kind)) + " r=" + std::to_string(r); }

namespace {

std::vector<std::size_t> indices_of(const VarList& vars, const std::vector<std::string>& names) {
  std::vector<std::size_t> out;
  for (const auto& n : names) {
    auto it = std::find(vars.begin(), vars.end(), n);
    if (it == vars.end()) throw Error(ErrorKind::UnknownVariable, "center variable '" + n + "' not in chart");
    out.push_back(static_cast<std::size_t>(it - vars.begin()));
  }
  std::set<std::size_t> uniq(out.begin(), out.end());
  if (uniq.size() != out.size()) throw Error(ErrorKind::InvalidInput, "center lists a variable twice");
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<unsigned> plus_one(std::optional<unsigned> o) { return o ? std::optional<unsigned>(*o + 1) : o; }

bool less(std::optional<unsigned> a, std::optional<unsigned> b) {
  if (!a) return false;
  if (!b) return true;
  return *a < *b;
}

void validate_center(const FoliatedChart& c, const CenterSpec& center) {
  if (center.kind == CenterKind::Point) return;
  if (c.dim() < 3) throw Error(ErrorKind::InvalidInput, "curve centers need a chart of dimension at least 3");
  if (center.vars.size() != c.dim() - 1)
    throw Error(ErrorKind::InvalidInput, "a curve center lists exactly dim - 1 variables");
  indices_of(c.vars(), center.vars);
}

}  // namespace

LogGenericOrder log_generic_order(const OneForm& w, const std::vector<std::string>& center_vars) {
  auto y = indices_of(w.vars, center_vars);
  LogGenericOrder out;
  std::optional<unsigned> r;
  MPoly p(w.vars);
  for (std::size_t i = 0; i < w.dim(); ++i) {
    auto o = generic_order(w[i], std::span<const std::size_t>(y));
    out.orders.push_back(o);
    const bool in_y = std::find(y.begin(), y.end(), i) != y.end();
    auto contribution = in_y ? plus_one(o) : o;
    if (less(contribution, r)) r = contribution;
    if (in_y) p += MPoly::variable(w.vars, i) * w[i];
  }
  if (!r) throw Error(ErrorKind::ZeroForm, "log-generic order of the zero form");
  out.r = *r;
  out.nu_p = generic_order(p, std::span<const std::size_t>(y));
  return out;
}

MonoidalClass classify_monoidal(const OneForm& w, const std::vector<std::string>& center_vars) {
  LogGenericOrder lg = log_generic_order(w, center_vars);
  auto y = indices_of(w.vars, center_vars);
  MonoidalClass mc;
  mc.r = lg.r;
  mc.nu_p = lg.nu_p;
  for (std::size_t i : y)
    if (lg.orders[i] && *lg.orders[i] + 1 == lg.r) mc.attaining.push_back(w.vars[i]);
  if (lg.nu_p && *lg.nu_p == lg.r) mc.kind = MonoidalKind::NDic;
  else mc.kind = mc.attaining.empty() ? MonoidalKind::DicV : MonoidalKind::DicNV;
  return mc;
}

bool is_admissible_center(const FoliatedChart& c, const CenterSpec& center) {
  if (center.kind == CenterKind::Point) {
    std::vector<Rational> origin(c.dim(), Rational(0));
    return is_singular_at(c.form, origin);
  }
  auto y = indices_of(c.vars(), center.vars);
  for (std::size_t i = 0; i < c.dim(); ++i) {
    if (std::find(y.begin(), y.end(), i) != y.end()) continue;
    MPoly a = c.form[i];
    for (std::size_t j : y) a = a.set_var(j, 0);
    if (!a.is_zero()) return false;
  }
  return true;
}

namespace {

BlowupResult blowup_along(const FoliatedChart& c, const CenterSpec& center, const BlowupOptions& opt) {
  validate_center(c, center);
  BlowupResult res;
  res.center = center;
  res.admissible = is_admissible_center(c, center);
  if (!res.admissible && !opt.allow_non_admissible)
    throw Error(ErrorKind::NonAdmissibleCenter, "center " + center.to_string() + " is not admissible in chart " + c.id);
  const VarList& vars = c.vars();
  auto yvars = center.ideal_vars(vars);
  auto y = indices_of(vars, yvars);
  res.monoidal_class = classify_monoidal(c.form, yvars);

  std::optional<unsigned> common_k;
  for (std::size_t j : y) {
    PolyMap m{vars, vars, {}};
    for (std::size_t i = 0; i < vars.size(); ++i) {
      MPoly img = MPoly::variable(vars, i);
      if (i != j && std::find(y.begin(), y.end(), i) != y.end()) img = MPoly::variable(vars, j) * img;
      m.images.push_back(img);
    }
    OneForm pulled = pullback(c.form, m);
    unsigned k = ~0u;
    for (const auto& a : pulled.coeffs)
      if (!a.is_zero()) k = std::min(k, a.min_exponent_in(j));
    if (k == ~0u) throw Error(ErrorKind::Internal, "pullback vanished identically");
    for (auto& a : pulled.coeffs) a = divide_by_var_power(a, vars[j], k);
    // Defensive: any leftover monomial factor would not be a generator.
    pulled = remove_monomial_content(pulled);
    if (common_k && *common_k != k)
      throw Error(ErrorKind::Internal, "divided power differs between charts of one blow-up");
    common_k = k;

    ChildChart child;
    child.map = m;
    child.exceptional_var = vars[j];
    child.k = k;
    child.chart.id = c.id + "." + vars[j];
    child.chart.parent = c.id;
    child.chart.parent_step = opt.step;
    child.chart.form = pulled;
    for (const auto& d : c.divisor)
      if (d.var != vars[j]) child.chart.divisor.push_back(d);
    child.chart.divisor.push_back({vars[j], ComponentOrigin::Exceptional, opt.step, false});
    child.chart.refresh_flags();
    child.dicritical = !child.chart.component(vars[j])->invariant;
    res.children.push_back(std::move(child));
  }
  res.k = *common_k;
  res.dicritical = res.children.front().dicritical;
  for (const auto& ch : res.children)
    if (ch.dicritical != res.dicritical) throw Error(ErrorKind::Internal, "dicriticality differs between charts");
  if ((res.monoidal_class->kind == MonoidalKind::NDic) == res.dicritical)
    throw Error(ErrorKind::Internal, "classifier disagrees with the transform");
  return res;
}

}  // namespace

BlowupResult monoidal_blowup(const FoliatedChart& c, const CenterSpec& center, const BlowupOptions& opt) {
  if (center.kind != CenterKind::Curve) throw Error(ErrorKind::InvalidInput, "monoidal blow-up needs a curve center");
  return blowup_along(c, center, opt);
}

BlowupResult quadratic_blowup(const FoliatedChart& c, const BlowupOptions& opt) {
  return blowup_along(c, CenterSpec::point(c.id), opt);
}

BlowupResult blowup(const FoliatedChart& c, const CenterSpec& center, const BlowupOptions& opt) {
  return center.kind == CenterKind::Point ? blowup_along(c, center, opt) : monoidal_blowup(c, center, opt);
}

ShearResult shear(const FoliatedChart& c, std::string_view var, const MPoly& p, const std::string& new_name) {
  const VarList& vars = c.vars();
  auto it = std::find(vars.begin(), vars.end(), var);
  if (it == vars.end()) throw Error(ErrorKind::UnknownVariable, "shear variable '" + std::string(var) + "' not in chart");
  const std::size_t v = static_cast<std::size_t>(it - vars.begin());
  MPoly pp = p.vars() == vars ? p : p.with_vars(vars);
  if (pp.degree_in(v) > 0) throw Error(ErrorKind::InvalidInput, "shear polynomial involves the sheared variable");
  if (!pp.is_zero() && c.has_component(var))
    throw Error(ErrorKind::DivisorNotPreserved,
                "divisor component '" + std::string(var) + "' would leave coordinate position");
  VarList target = vars;
  if (!new_name.empty() && new_name != vars[v]) {
    if (std::find(vars.begin(), vars.end(), new_name) != vars.end())
      throw Error(ErrorKind::InvalidInput, "shear target name '" + new_name + "' already used");
    target[v] = new_name;
  }
  PolyMap m{vars, target, {}};
  for (std::size_t i = 0; i < vars.size(); ++i) m.images.push_back(MPoly::variable(target, i));
  m.images[v] += pp.rename_var(v, target[v]).with_vars(target);

  ShearResult out;
  out.map = m;
  out.chart = c;
  out.chart.form = remove_monomial_content(pullback(c.form, m));
  for (auto& d : out.chart.divisor)
    if (d.var == vars[v]) d.var = target[v];
  out.chart.refresh_flags();
  return out;
}

bool check_E_controlled(const FoliatedChart& c, const CenterSpec& center) {
  if (center.kind == CenterKind::Point) return true;
  for (const auto& d : c.divisor)
    if (std::find(center.vars.begin(), center.vars.end(), d.var) == center.vars.end()) return true;
  return false;
}

}  // namespace foliate
