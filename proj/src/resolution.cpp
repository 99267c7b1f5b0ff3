#include "foliate/resolution.hpp"

#include <algorithm>

#include "foliate/surface.hpp"

namespace foliate {

const char* step_kind_name(StepKind k) {
  switch (k) {
    case StepKind::Blowup: return "blowup";
    case StepKind::Shear: return "shear";
    case StepKind::AddDivisor: return "add_divisor";
  }
  return "blowup";
}

ScriptStep ScriptStep::blow(CenterSpec c, bool override_admissibility) {
  ScriptStep s;
  s.kind = StepKind::Blowup;
  s.chart = c.chart;
  s.center = std::move(c);
  s.allow_non_admissible = override_admissibility;
  return s;
}

ScriptStep ScriptStep::shear_step(std::string chart, std::string var, std::string poly, std::string new_name) {
  ScriptStep s;
  s.kind = StepKind::Shear;
  s.chart = std::move(chart);
  s.var = std::move(var);
  s.poly = std::move(poly);
  s.new_name = std::move(new_name);
  return s;
}

ScriptStep ScriptStep::add_divisor(std::string chart, std::string var) {
  ScriptStep s;
  s.kind = StepKind::AddDivisor;
  s.chart = std::move(chart);
  s.var = std::move(var);
  return s;
}

const ChartNode& ResolutionState::node(const std::string& id) const {
  auto it = nodes.find(id);
  if (it == nodes.end()) throw Error(ErrorKind::UnknownChart, "unknown chart '" + id + "'");
  return it->second;
}

std::vector<std::string> ResolutionState::leaves() const {
  std::vector<std::string> out;
  for (const auto& id : order)
    if (nodes.at(id).children.empty()) out.push_back(id);
  return out;
}

namespace {

bool has_exceptional(const FoliatedChart& c) {
  return std::any_of(c.divisor.begin(), c.divisor.end(),
                     [](const DivisorComponent& d) { return d.origin == ComponentOrigin::Exceptional; });
}

std::vector<ControlCheck> control_checks(const FoliatedChart& c, const CenterSpec& center) {
  std::vector<ControlCheck> out;
  // Every exceptional component of the chart passes through its origin.
  ControlCheck origin{"origin", !has_exceptional(c), true};
  if (origin.fresh) origin.controlled = check_E_controlled(c, center);
  out.push_back(origin);
  if (center.kind == CenterKind::Curve) {
    bool fresh = true;
    for (const auto& d : c.divisor)
      if (d.origin == ComponentOrigin::Exceptional &&
          std::find(center.vars.begin(), center.vars.end(), d.var) != center.vars.end())
        fresh = false;
    ControlCheck generic{"generic", fresh, true};
    if (fresh) generic.controlled = check_E_controlled(c, center);
    out.push_back(generic);
  }
  return out;
}

ChartNode& leaf_for_step(ResolutionState& st, const std::string& id) {
  auto it = st.nodes.find(id);
  if (it == st.nodes.end()) throw Error(ErrorKind::UnknownChart, "script refers to unknown chart '" + id + "'");
  if (!it->second.children.empty())
    throw Error(ErrorKind::InvalidInput, "chart '" + id + "' has already been blown up");
  return it->second;
}

}  // namespace

ResolutionState apply_script(const FoliatedChart& root, const ResolutionScript& script) {
  root.validate();
  ResolutionState st;
  st.root_id = root.id;
  FoliatedChart r = root;
  r.refresh_flags();
  st.nodes[root.id] = ChartNode{r, {}, PolyMap::identity(root.vars())};
  st.order.push_back(root.id);

  for (std::size_t i = 0; i < script.size(); ++i) {
    const ScriptStep& step = script[i];
    ChartNode& node = leaf_for_step(st, step.chart);
    StepRecord rec;
    rec.index = static_cast<int>(i);
    rec.kind = step.kind;
    rec.chart = step.chart;
    switch (step.kind) {
      case StepKind::Blowup: {
        CenterSpec center = step.center;
        center.chart = step.chart;
        BlowupOptions opt{step.allow_non_admissible, static_cast<int>(i)};
        BlowupResult res = blowup(node.chart, center, opt);
        rec.center = center;
        rec.k = res.k;
        rec.dicritical = res.dicritical;
        rec.monoidal_class = res.monoidal_class;
        rec.admissible = res.admissible;
        rec.control = control_checks(node.chart, center);
        const PolyMap parent_to_root = node.to_root;
        for (auto& ch : res.children) {
          if (st.nodes.count(ch.chart.id)) throw Error(ErrorKind::Internal, "duplicate chart id " + ch.chart.id);
          rec.children.push_back(ch.chart.id);
          node.children.push_back(ch.chart.id);
        }
        for (auto& ch : res.children) {
          std::string id = ch.chart.id;
          st.nodes[id] = ChartNode{std::move(ch.chart), {}, compose(ch.map, parent_to_root)};
          st.order.push_back(id);
        }
        break;
      }
      case StepKind::Shear: {
        MPoly p = parse_poly(step.poly, node.chart.vars());
        ShearResult sr = shear(node.chart, step.var, p, step.new_name);
        node.chart = sr.chart;
        node.to_root = compose(sr.map, node.to_root);
        break;
      }
      case StepKind::AddDivisor: {
        FoliatedChart& c = node.chart;
        if (std::find(c.vars().begin(), c.vars().end(), step.var) == c.vars().end())
          throw Error(ErrorKind::UnknownVariable, "unknown variable '" + step.var + "'");
        if (c.has_component(step.var))
          throw Error(ErrorKind::NormalCrossingsViolation, "'" + step.var + "' is already a divisor component");
        c.divisor.push_back({step.var, ComponentOrigin::Original, -1, false});
        c.refresh_flags();
        break;
      }
    }
    st.steps.push_back(std::move(rec));
  }
  return st;
}

namespace {

struct Tally {
  bool no = false;
  bool inconclusive = false;
  void add(ZeroSet z) {
    if (z == ZeroSet::NonEmpty) no = true;
    if (z == ZeroSet::Inconclusive) inconclusive = true;
  }
  Verdict verdict() const { return no ? Verdict::No : inconclusive ? Verdict::Inconclusive : Verdict::Yes; }
};

std::string point_text(const VarList& vars, const std::optional<std::vector<Rational>>& p) {
  if (!p) return "";
  std::string s = " at (";
  for (std::size_t i = 0; i < vars.size(); ++i) s += (i ? "," : "") + vars[i] + "=" + to_string((*p)[i]);
  return s + ")";
}

}  // namespace

LeafVerdict verify_chart(const FoliatedChart& c, bool is_root_leaf) {
  LeafVerdict out;
  out.chart = c.id;
  Tally tally;
  const VarList& vars = c.vars();
  auto idx = [&](const std::string& v) { return c.form[0].index_of(v); };

  if (is_root_leaf || !has_exceptional(c)) {
    std::vector<Rational> origin(c.dim(), Rational(0));
    PointVerdict pv = is_simple_regular_at(c, origin);
    if (pv.kind != PointKind::Simple) {
      tally.no = true;
      out.witnesses.push_back(std::string("origin is ") + point_kind_name(pv.kind) +
                              (pv.reason.empty() ? "" : " (" + pv.reason + ")"));
    }
  }

  ComponentSplit split = classify_components(c);
  for (const auto& d : c.divisor) {
    std::vector<MPoly> gens;
    for (const auto& a : c.form.coeffs) gens.push_back(a.set_var(idx(d.var), 0));
    ZeroSetResult z = common_zero_set(gens);
    tally.add(z.verdict);
    if (z.verdict == ZeroSet::NonEmpty)
      out.witnesses.push_back("singular point on " + d.var + "=0" + point_text(vars, z.witness));
    else if (z.verdict == ZeroSet::Inconclusive)
      out.witnesses.push_back("regularity along " + d.var + "=0 undecided");
  }
  if (split.invariant.size() > 1) {
    tally.no = true;
    out.witnesses.push_back("invariant components " + split.invariant[0] + " and " + split.invariant[1] + " meet");
  }
  const std::size_t nd = split.dicritical.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << nd); ++mask) {
    std::vector<std::size_t> t;
    std::string names;
    for (std::size_t b = 0; b < nd; ++b)
      if (mask & (std::size_t{1} << b)) {
        t.push_back(idx(split.dicritical[b]));
        names += (names.empty() ? "" : ",") + split.dicritical[b];
      }
    if (t.size() >= c.dim()) {
      tally.no = true;
      out.witnesses.push_back("dicritical corner {" + names + "}");
      continue;
    }
    std::vector<MPoly> gens;
    for (std::size_t i = 0; i < c.dim(); ++i) {
      if (std::find(t.begin(), t.end(), i) != t.end()) continue;
      MPoly a = c.form[i];
      for (std::size_t j : t) a = a.set_var(j, 0);
      gens.push_back(a);
    }
    ZeroSetResult z = common_zero_set(gens);
    tally.add(z.verdict);
    if (z.verdict == ZeroSet::NonEmpty)
      out.witnesses.push_back("tangency with {" + names + "}" + point_text(vars, z.witness));
    else if (z.verdict == ZeroSet::Inconclusive)
      out.witnesses.push_back("transversality to {" + names + "} undecided");
  }
  out.resolved = tally.verdict();
  return out;
}

VerifyReport verify_resolved(const ResolutionState& st) {
  VerifyReport rep;
  rep.steps = st.steps;
  bool any_no = false, any_inc = false;
  for (const auto& id : st.leaves()) {
    LeafVerdict lv = verify_chart(st.node(id).chart, id == st.root_id);
    any_no |= lv.resolved == Verdict::No;
    any_inc |= lv.resolved == Verdict::Inconclusive;
    rep.leaves.push_back(std::move(lv));
  }
  rep.resolved = any_no ? Verdict::No : any_inc ? Verdict::Inconclusive : Verdict::Yes;
  for (const auto& id : st.order)
    if (has_dicritical_corner(st.node(id).chart)) rep.no_corners = false;
  rep.controlled = true;
  for (const auto& s : st.steps) {
    if (s.kind != StepKind::Blowup) continue;
    rep.all_admissible &= s.admissible;
    rep.all_dicritical &= s.dicritical;
    for (const auto& cc : s.control) rep.controlled &= cc.controlled;
  }
  return rep;
}

const char* germ_kind_name(GermKind k) {
  switch (k) {
    case GermKind::Radial: return "RadialCertificate";
    case GermKind::AlmostRadial: return "AlmostRadialCertificate";
    case GermKind::Unresolved: return "Unresolved";
    case GermKind::Inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

GermClassification classify_foliated_germ(const FoliatedChart& root, const ResolutionScript& script) {
  GermClassification out;
  out.report = verify_resolved(apply_script(root, script));
  const VerifyReport& r = out.report;
  if (r.resolved == Verdict::Inconclusive) out.kind = GermKind::Inconclusive;
  else if (r.resolved == Verdict::No || !r.all_admissible) out.kind = GermKind::Unresolved;
  else out.kind = r.controlled ? GermKind::Radial : GermKind::AlmostRadial;
  return out;
}

OpenBookResult detect_open_book(const OneForm& w) {
  if (w.dim() != 3) throw Error(ErrorKind::DimensionMismatch, "open-book detection needs three variables");
  OpenBookResult out;
  const VarList& v = w.vars;
  for (std::size_t p = 0; p < 3 && !out.found; ++p)
    for (std::size_t q = p + 1; q < 3 && !out.found; ++q) {
      const std::size_t r = 3 - p - q;
      if (!w[r].is_zero() || w[q].is_zero()) continue;
      MPoly u;
      try {
        u = divide_exact(w[q], MPoly::variable(v, p));
      } catch (const Error&) {
        continue;
      }
      if (u.constant_term() == 0 || !(w[p] == -(u * MPoly::variable(v, q)))) continue;
      out.found = true;
      out.p = v[p];
      out.q = v[q];
      out.unit = u;
    }
  for (const auto& plane : v) {
    SectionAdvisory a;
    a.plane = plane;
    OneForm eta = restrict_to_hyperplane(w, plane);
    if (eta.is_zero()) {
      a.isolated = Verdict::No;
      a.note = "plane is invariant";
    } else {
      a.isolated = isolated_singularity_2d(eta);
      std::vector<Rational> o(2, Rational(0));
      if (a.isolated == Verdict::Yes && is_singular_at(eta, o)) a.cart_wheel = is_cart_wheel(eta);
      if (a.isolated == Verdict::No) a.note = "not a Mattei-Moussu section";
      else if (a.isolated == Verdict::Inconclusive) a.note = "isolatedness undecided";
      else if (!is_singular_at(eta, o)) a.note = "restriction is regular at the origin";
    }
    out.advisory.push_back(a);
  }
  return out;
}

std::vector<IndestructibilityCheck> indestructibility_audit(const ResolutionState& st) {
  std::vector<IndestructibilityCheck> out;
  for (const auto& id : st.leaves()) {
    const FoliatedChart& c = st.node(id).chart;
    if (verify_chart(c, id == st.root_id).resolved != Verdict::Yes) continue;
    std::vector<CenterSpec> centers{CenterSpec::point(id)};
    if (c.dim() >= 3)
      for (std::size_t skip = 0; skip < c.dim(); ++skip) {
        std::vector<std::string> y;
        for (std::size_t i = 0; i < c.dim(); ++i)
          if (i != skip) y.push_back(c.vars()[i]);
        CenterSpec cs = CenterSpec::curve(y, id);
        if (is_admissible_center(c, cs)) centers.push_back(cs);
      }
    for (const auto& center : centers) {
      IndestructibilityCheck chk{id, center, false, ""};
      BlowupResult res = blowup(c, center, BlowupOptions{true, -1});
      for (const auto& ch : res.children) {
        const std::size_t e = ch.chart.form[0].index_of(ch.exceptional_var);
        std::vector<MPoly> gens;
        for (const auto& a : ch.chart.form.coeffs) gens.push_back(a.set_var(e, 0));
        ZeroSetResult z = common_zero_set(gens);
        if (z.verdict == ZeroSet::NonEmpty) {
          chk.singular_on_exceptional = true;
          chk.witness = ch.chart.id + point_text(ch.chart.vars(), z.witness);
          break;
        }
      }
      out.push_back(chk);
    }
  }
  return out;
}

bool first_integral_persists(const ResolutionState& st, const RatFunc& phi) {
  for (const auto& id : st.order) {
    const ChartNode& n = st.node(id);
    RatFunc pulled = substitute(phi, RatMap::from_poly_map(n.to_root));
    if (!wedge(cleared_differential(pulled), n.chart.form).is_zero()) return false;
  }
  return true;
}

}  // namespace foliate
