#include "foliate/serialize.hpp"

#include <algorithm>

namespace foliate {

void require_keys(const Json& j, std::initializer_list<const char*> allowed, const char* what) {
  if (!j.is_object()) throw Error(ErrorKind::InvalidInput, std::string(what) + " must be a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* k) { return it.key() == k; }))
      throw Error(ErrorKind::InvalidInput, std::string("unknown key '") + it.key() + "' in " + what);
}

namespace {

std::string get_string(const Json& j, const char* key, const char* what) {
  if (!j.contains(key) || !j.at(key).is_string())
    throw Error(ErrorKind::InvalidInput, std::string(what) + " needs a string '" + key + "'");
  return j.at(key).get<std::string>();
}

std::vector<std::string> get_strings(const Json& j, const char* key, const char* what) {
  if (!j.contains(key) || !j.at(key).is_array())
    throw Error(ErrorKind::InvalidInput, std::string(what) + " needs an array '" + key + "'");
  std::vector<std::string> out;
  for (const auto& e : j.at(key)) {
    if (!e.is_string()) throw Error(ErrorKind::InvalidInput, std::string(what) + ": '" + key + "' holds non-strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

Json order_json(std::optional<unsigned> o) { return o ? Json(*o) : Json("inf"); }

}  // namespace

Json to_json(const OneForm& w) {
  Json c = Json::array();
  for (const auto& p : w.coeffs) c.push_back(p.to_string());
  return Json{{"vars", w.vars}, {"coeffs", c}};
}

OneForm form_from_json(const Json& j) {
  require_keys(j, {"vars", "coeffs"}, "form");
  VarList vars = get_strings(j, "vars", "form");
  auto coeffs = get_strings(j, "coeffs", "form");
  if (coeffs.size() != vars.size()) throw Error(ErrorKind::DimensionMismatch, "form: one coefficient per variable");
  std::vector<MPoly> c;
  for (const auto& s : coeffs) c.push_back(parse_poly(s, vars));
  return OneForm(vars, std::move(c));
}

std::string divisor_text(const FoliatedChart& c) {
  std::string s;
  for (const auto& d : c.divisor) s += (s.empty() ? "" : ",") + d.var + (d.invariant ? "(inv)" : "(dic)");
  return s.empty() ? "-" : s;
}

Json to_json(const FoliatedChart& c) {
  Json div = Json::array();
  for (const auto& d : c.divisor) {
    Json e{{"var", d.var},
           {"origin", d.origin == ComponentOrigin::Original ? "original" : "exceptional"},
           {"invariant", d.invariant}};
    if (d.step >= 0) e["step"] = d.step;
    div.push_back(e);
  }
  Json j{{"id", c.id}, {"vars", c.vars()}, {"coeffs", to_json(c.form)["coeffs"]}, {"divisor", div}};
  if (!c.parent.empty()) j["parent"] = c.parent;
  return j;
}

FoliatedChart chart_from_json(const Json& j) {
  require_keys(j, {"id", "vars", "coeffs", "divisor"}, "chart");
  OneForm w = form_from_json(Json{{"vars", j.value("vars", Json())}, {"coeffs", j.value("coeffs", Json())}});
  std::vector<DivisorComponent> comps;
  if (j.contains("divisor")) {
    if (!j.at("divisor").is_array()) throw Error(ErrorKind::InvalidInput, "chart: 'divisor' must be an array");
    for (const auto& d : j.at("divisor")) {
      DivisorComponent dc;
      if (d.is_string()) {
        dc.var = d.get<std::string>();
      } else {
        require_keys(d, {"var", "origin", "step", "invariant"}, "divisor component");
        dc.var = get_string(d, "var", "divisor component");
        std::string origin = d.value("origin", "original");
        if (origin != "original" && origin != "exceptional")
          throw Error(ErrorKind::InvalidInput, "divisor origin must be 'original' or 'exceptional'");
        dc.origin = origin == "original" ? ComponentOrigin::Original : ComponentOrigin::Exceptional;
        dc.step = d.value("step", -1);
      }
      comps.push_back(dc);
    }
  }
  FoliatedChart c;
  c.id = j.value("id", "c0");
  c.form = w;
  c.divisor = comps;
  c.validate();
  c.refresh_flags();
  return c;
}

Json to_json(const CenterSpec& c) {
  if (c.kind == CenterKind::Point) return Json{{"kind", "point"}};
  return Json{{"kind", "curve"}, {"vars", c.vars}};
}

CenterSpec center_from_json(const Json& j, const std::string& chart) {
  require_keys(j, {"kind", "vars"}, "center");
  std::string kind = get_string(j, "kind", "center");
  if (kind == "point") return CenterSpec::point(chart);
  if (kind == "curve") return CenterSpec::curve(get_strings(j, "vars", "center"), chart);
  throw Error(ErrorKind::InvalidInput, "center kind must be 'point' or 'curve'");
}

Json to_json(const ScriptStep& s) {
  Json j{{"chart", s.chart}};
  switch (s.kind) {
    case StepKind::Blowup:
      j["center"] = to_json(s.center);
      if (s.allow_non_admissible) j["override"] = true;
      break;
    case StepKind::Shear: {
      Json sh{{"var", s.var}, {"poly", s.poly}};
      if (!s.new_name.empty()) sh["as"] = s.new_name;
      j["shear"] = sh;
      break;
    }
    case StepKind::AddDivisor: j["add_divisor"] = s.var; break;
  }
  return j;
}

ScriptStep step_from_json(const Json& j) {
  require_keys(j, {"chart", "center", "shear", "add_divisor", "override"}, "script step");
  const std::string chart = j.value("chart", "c0");
  const int kinds = int(j.contains("center")) + int(j.contains("shear")) + int(j.contains("add_divisor"));
  if (kinds != 1)
    throw Error(ErrorKind::InvalidInput, "a script step has exactly one of 'center', 'shear', 'add_divisor'");
  if (j.contains("center")) {
    bool ov = j.value("override", false);
    return ScriptStep::blow(center_from_json(j.at("center"), chart), ov);
  }
  if (j.contains("override")) throw Error(ErrorKind::InvalidInput, "'override' only applies to blow-up steps");
  if (j.contains("shear")) {
    const Json& sh = j.at("shear");
    require_keys(sh, {"var", "poly", "as"}, "shear");
    return ScriptStep::shear_step(chart, get_string(sh, "var", "shear"), get_string(sh, "poly", "shear"),
                                  sh.value("as", ""));
  }
  if (!j.at("add_divisor").is_string()) throw Error(ErrorKind::InvalidInput, "'add_divisor' names a variable");
  return ScriptStep::add_divisor(chart, j.at("add_divisor").get<std::string>());
}

Json to_json(const ResolutionScript& s) {
  Json a = Json::array();
  for (const auto& step : s) a.push_back(to_json(step));
  return a;
}

ResolutionScript script_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::InvalidInput, "a script is a JSON array of steps");
  ResolutionScript s;
  for (const auto& e : j) s.push_back(step_from_json(e));
  return s;
}

Json to_json(const MonoidalClass& m) {
  return Json{{"class", monoidal_kind_name(m.kind)}, {"r", m.r}, {"nu_p", order_json(m.nu_p)}, {"attaining", m.attaining}};
}

Json to_json(const BlowupResult& r) {
  Json children = Json::array();
  for (const auto& ch : r.children) {
    Json c = to_json(ch.chart);
    c["exceptional"] = ch.exceptional_var;
    c["k"] = ch.k;
    c["dicritical"] = ch.dicritical;
    children.push_back(c);
  }
  Json j{{"center", to_json(r.center)},
         {"k", r.k},
         {"dicritical", r.dicritical},
         {"admissible", r.admissible},
         {"children", children}};
  if (r.monoidal_class) j["classification"] = to_json(*r.monoidal_class);
  return j;
}

Json to_json(const StepRecord& s) {
  Json j{{"index", s.index}, {"kind", step_kind_name(s.kind)}, {"chart", s.chart}};
  if (s.kind != StepKind::Blowup) return j;
  j["center"] = to_json(s.center);
  j["k"] = s.k;
  j["dicritical"] = s.dicritical;
  j["admissible"] = s.admissible;
  if (s.monoidal_class) j["classification"] = to_json(*s.monoidal_class);
  Json ctrl = Json::array();
  for (const auto& c : s.control)
    ctrl.push_back(Json{{"class", c.point_class}, {"fresh", c.fresh}, {"controlled", c.controlled}});
  j["control"] = ctrl;
  j["children"] = s.children;
  return j;
}

Json to_json(const ResolutionState& st) {
  Json charts = Json::array();
  for (const auto& id : st.order) {
    const ChartNode& n = st.node(id);
    Json c = to_json(n.chart);
    c["leaf"] = n.children.empty();
    Json to_root = Json::object();
    for (std::size_t i = 0; i < n.to_root.source.size(); ++i) to_root[n.to_root.source[i]] = n.to_root.images[i].to_string();
    c["to_root"] = to_root;
    charts.push_back(c);
  }
  Json steps = Json::array();
  for (const auto& s : st.steps) steps.push_back(to_json(s));
  return Json{{"charts", charts}, {"steps", steps}};
}

Json to_json(const VerifyReport& r) {
  Json leaves = Json::array();
  for (const auto& l : r.leaves)
    leaves.push_back(Json{{"chart", l.chart}, {"resolved", verdict_name(l.resolved)}, {"witnesses", l.witnesses}});
  Json steps = Json::array();
  for (const auto& s : r.steps) steps.push_back(to_json(s));
  return Json{{"resolved", verdict_name(r.resolved)},
              {"controlled", r.controlled},
              {"all_admissible", r.all_admissible},
              {"all_dicritical", r.all_dicritical},
              {"no_corners", r.no_corners},
              {"leaves", leaves},
              {"steps", steps}};
}

Json to_json(const GermClassification& g) {
  return Json{{"classification", germ_kind_name(g.kind)}, {"report", to_json(g.report)}};
}

Json to_json(const OpenBookResult& r) {
  Json adv = Json::array();
  for (const auto& a : r.advisory) {
    Json e{{"plane", a.plane}, {"isolated", verdict_name(a.isolated)}, {"note", a.note}};
    if (a.cart_wheel) e["cart_wheel"] = *a.cart_wheel;
    adv.push_back(e);
  }
  Json j{{"open_book", r.found}, {"advisory", adv}};
  if (r.found) {
    j["pair"] = {r.p, r.q};
    j["unit"] = r.unit.to_string();
  }
  return j;
}

Json to_json(const IndexAudit& a) {
  Json pts = Json::array();
  for (const auto& p : a.points) {
    Json e{{"chart", p.chart}, {"position", to_string(p.position)}};
    e["index"] = p.index ? Json(to_string(*p.index)) : Json("INCONCLUSIVE");
    if (!p.note.empty()) e["note"] = p.note;
    pts.push_back(e);
  }
  Json j{{"dicritical", a.dicritical},
         {"points", pts},
         {"irrational_points", a.irrational_points},
         {"sum", to_string(a.sum)},
         {"partial", a.partial}};
  if (a.axis_index_before) j["axis_index_before"] = to_string(*a.axis_index_before);
  if (a.axis_index_after) j["axis_index_after"] = to_string(*a.axis_index_after);
  return j;
}

Json to_json(const TubeAudit& t) {
  Json j{{"alpha", t.alpha}, {"beta", t.beta}, {"surface_index", t.surface_index}, {"ok", t.ok},
         {"l0_self_intersection", t.l0_self_intersection}};
  if (t.l0_child) j["l0_child"] = {t.l0_child->a, t.l0_child->b};
  if (t.generic_child) j["generic_child"] = {t.generic_child->a, t.generic_child->b};
  if (!t.note.empty()) j["note"] = t.note;
  return j;
}

Json to_json(const DiophantineSolution& s) {
  return Json{{"d1", s.d1}, {"d2", s.d2}, {"situation", s.situation}, {"realizable", s.realizable}};
}

Json to_json(const RegistryEntry& e) {
  Json scripts = Json::array();
  for (const auto& s : e.scripts) scripts.push_back(to_json(s));
  Json j{{"name", e.name}, {"description", e.description}, {"germ", to_json(e.germ)}, {"scripts", scripts}};
  if (e.first_integral) j["first_integral"] = e.first_integral->to_string();
  return j;
}

}  // namespace foliate
