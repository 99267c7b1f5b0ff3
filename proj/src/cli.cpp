#include "foliate/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "foliate/serialize.hpp"

namespace foliate::cli {

namespace {

struct Options {
  std::string form, vars, registry, lambda = "2", chart, script, center, var, curve, axis, point, name;
  std::optional<std::string> divisor;
  std::string delta, alpha, beta;
  std::vector<std::string> checks;
  bool override_admissibility = false;
  bool json = false;
  bool detail = false;
};

const char* yes_no(bool b) { return b ? "yes" : "no"; }

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::Yes: return Success;
    case Verdict::No: return Failure;
    default: return Inconclusive;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Text of an inline JSON argument; a leading '@' names a file instead.
Json parse_json_arg(const std::string& text, const char* what) {
  const std::string body = !text.empty() && text[0] == '@' ? read_file(text.substr(1)) : text;
  try {
    return Json::parse(body);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::InvalidInput, std::string(what) + " is not valid JSON: " + e.what());
  }
}

long parse_long(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    long v = std::stol(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::InvalidInput, std::string(what) + " must be an integer, got '" + text + "'");
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

std::vector<std::string> divisor_list(const std::string& text) {
  if (text == "none" || text == "-" || text.empty()) return {};
  return split_commas(text);
}

FoliatedChart load_chart(const Options& o) {
  const int sources = int(!o.form.empty()) + int(!o.registry.empty()) + int(!o.chart.empty());
  if (sources != 1) throw Error(ErrorKind::InvalidInput, "give exactly one of --form, --registry, --chart");
  FoliatedChart c;
  if (!o.registry.empty()) {
    c = registry_entry(o.registry, parse_rational(o.lambda)).germ;
  } else if (!o.chart.empty()) {
    c = chart_from_json(parse_json_arg(o.chart, "--chart"));
  } else {
    OneForm w = o.vars.empty() ? parse_one_form(o.form) : parse_one_form(o.form, parse_var_list(o.vars));
    c = make_chart(w, {});
  }
  if (o.divisor) {
    if (!o.chart.empty()) throw Error(ErrorKind::InvalidInput, "--divisor conflicts with --chart");
    c = make_chart(c.form, divisor_list(*o.divisor), c.id);
  }
  return c;
}

ResolutionScript load_script(const Options& o) {
  if (!o.script.empty()) return script_from_json(parse_json_arg(o.script, "--script"));
  if (!o.registry.empty()) return registry_entry(o.registry, parse_rational(o.lambda)).scripts.front();
  throw Error(ErrorKind::InvalidInput, "a script is required (--script, or --registry for its reference script)");
}

CenterSpec parse_center(const std::string& text, const std::string& chart) {
  if (text == "point") return CenterSpec::point(chart);
  return CenterSpec::curve(split_commas(text), chart);
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

std::string chart_line(const FoliatedChart& c) {
  return c.id + "\t" + c.form.to_string() + "\tdivisor=" + divisor_text(c);
}

// ---- subcommand handlers ----

int cmd_integrable(const Options& o, std::ostream& out) {
  const FoliatedChart c = load_chart(o);
  const bool ok = check_integrability(c.form);
  if (o.json)
    print_json(out, {{"form", to_json(c.form)}, {"integrable", ok}});
  else
    out << "integrable=" << yes_no(ok) << "\n";
  return ok ? Success : Failure;
}

int cmd_sing(const Options& o, std::ostream& out) {
  const FoliatedChart c = load_chart(o);
  const auto gens = singular_generators(c.form);
  Json j{{"form", to_json(c.form)}};
  Json g = Json::array();
  for (const auto& p : gens) g.push_back(p.to_string());
  j["generators"] = g;
  std::optional<Verdict> isolated;
  if (c.dim() == 2) isolated = isolated_singularity_2d(c.form);
  if (isolated) j["isolated"] = verdict_name(*isolated);
  std::vector<Rational> value;
  bool singular = false;
  if (!o.point.empty()) {
    std::vector<Rational> pt;
    for (const auto& s : split_commas(o.point)) pt.push_back(parse_rational(s));
    if (pt.size() != c.dim()) throw Error(ErrorKind::DimensionMismatch, "--point needs one coordinate per variable");
    value = evaluate(c.form, pt);
    singular = is_singular_at(c.form, pt);
    Json v = Json::array();
    for (const auto& q : value) v.push_back(to_string(q));
    j["value"] = v;
    j["singular"] = singular;
  }
  if (o.json) {
    print_json(out, j);
  } else {
    for (const auto& p : gens) out << "generator\t" << p.to_string() << "\n";
    if (isolated) out << "isolated=" << verdict_name(*isolated) << "\n";
    if (!o.point.empty()) {
      std::vector<std::string> vs;
      for (const auto& q : value) vs.push_back(to_string(q));
      out << "value=[" << join(vs, ", ") << "]\n" << "singular=" << yes_no(singular) << "\n";
    }
  }
  return Success;
}

int cmd_invariant(const Options& o, std::ostream& out) {
  const FoliatedChart c = load_chart(o);
  const bool inv = is_hyperplane_invariant(c.form, o.var);
  if (o.json)
    print_json(out, {{"var", o.var}, {"invariant", inv}});
  else
    out << "invariant=" << yes_no(inv) << "\n";
  return inv ? Success : Failure;
}

int cmd_classify_center(const Options& o, std::ostream& out) {
  const FoliatedChart c = load_chart(o);
  const MonoidalClass m = classify_monoidal(c.form, split_commas(o.center));
  if (o.json)
    print_json(out, to_json(m));
  else
    out << m.to_string() << "\n";
  return Success;
}

int cmd_blowup(const Options& o, std::ostream& out) {
  const FoliatedChart c = load_chart(o);
  BlowupOptions opt;
  opt.allow_non_admissible = o.override_admissibility;
  const BlowupResult r = blowup(c, parse_center(o.center, c.id), opt);
  if (o.json) {
    print_json(out, to_json(r));
    return Success;
  }
  out << "center=" << r.center.to_string();
  if (r.monoidal_class) out << " class=" << r.monoidal_class->to_string();
  out << " k=" << r.k << " dicritical=" << yes_no(r.dicritical) << " admissible=" << yes_no(r.admissible) << "\n";
  for (const auto& ch : r.children) out << chart_line(ch.chart) << "\n";
  return Success;
}

int cmd_resolve(const Options& o, std::ostream& out) {
  const FoliatedChart c = load_chart(o);
  const ResolutionState st = apply_script(c, load_script(o));
  if (o.json) {
    print_json(out, to_json(st));
    return Success;
  }
  for (const auto& s : st.steps) {
    out << "step " << s.index << "\t" << step_kind_name(s.kind) << "\t" << s.chart;
    if (s.kind == StepKind::Blowup) {
      out << "\t" << s.center.to_string();
      if (s.monoidal_class) out << "\t" << s.monoidal_class->to_string();
      out << "\tdicritical=" << yes_no(s.dicritical);
    }
    out << "\n";
  }
  for (const auto& id : st.leaves()) out << "leaf\t" << chart_line(st.node(id).chart) << "\n";
  return Success;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const FoliatedChart c = load_chart(o);
  const ResolutionState st = apply_script(c, load_script(o));
  const VerifyReport r = verify_resolved(st);
  std::vector<std::string> checks = o.checks.empty() ? std::vector<std::string>{"resolved", "controlled"} : o.checks;
  bool want_controlled = false, want_audits = false;
  for (const auto& k : checks) {
    if (k == "controlled") want_controlled = true;
    else if (k == "audits") want_audits = true;
    else if (k != "resolved") throw Error(ErrorKind::InvalidInput, "unknown check '" + k + "'");
  }
  std::optional<bool> persists;
  std::optional<bool> indestructible;
  if (want_audits) {
    if (!o.registry.empty()) {
      const auto entry = registry_entry(o.registry, parse_rational(o.lambda));
      if (entry.first_integral) persists = first_integral_persists(st, *entry.first_integral);
    }
    bool all = true;
    for (const auto& chk : indestructibility_audit(st)) all = all && chk.singular_on_exceptional;
    indestructible = all;
  }
  if (o.json) {
    Json j = to_json(r);
    if (!want_controlled) j.erase("controlled");
    if (want_audits) {
      j["first_integral_persists"] = persists ? Json(*persists) : Json(nullptr);
      j["indestructible"] = *indestructible;
    }
    print_json(out, j);
  } else {
    out << "resolved=" << verdict_name(r.resolved);
    if (want_controlled) out << " controlled=" << yes_no(r.controlled);
    out << "\n";
    if (want_audits) {
      out << "first_integral=" << (persists ? (*persists ? "persists" : "lost") : "n/a") << "\n";
      out << "indestructible=" << yes_no(*indestructible) << "\n";
    }
    if (o.detail) {
      for (const auto& l : r.leaves) {
        out << "leaf\t" << l.chart << "\t" << verdict_name(l.resolved);
        if (!l.witnesses.empty()) out << "\t" << join(l.witnesses, "; ");
        out << "\n";
      }
    }
  }
  return verdict_exit(r.resolved);
}

int cmd_classify_germ(const Options& o, std::ostream& out) {
  const FoliatedChart c = load_chart(o);
  const GermClassification g = classify_foliated_germ(c, load_script(o));
  if (o.json)
    print_json(out, to_json(g));
  else
    out << germ_kind_name(g.kind) << "\n";
  switch (g.kind) {
    case GermKind::Radial:
    case GermKind::AlmostRadial: return Success;
    case GermKind::Unresolved: return Failure;
    default: return Inconclusive;
  }
}

int cmd_detect_open_book(const Options& o, std::ostream& out) {
  const FoliatedChart c = load_chart(o);
  const OpenBookResult r = detect_open_book(c.form);
  if (o.json) {
    print_json(out, to_json(r));
  } else {
    out << "open_book=" << yes_no(r.found);
    if (r.found) out << " pair=" << r.p << "," << r.q << " unit=" << r.unit.to_string();
    out << "\n";
    for (const auto& a : r.advisory) {
      out << "section\t" << a.plane << "=0\tisolated=" << verdict_name(a.isolated);
      if (a.cart_wheel) out << "\tcart_wheel=" << yes_no(*a.cart_wheel);
      if (!a.note.empty()) out << "\t" << a.note;
      out << "\n";
    }
  }
  return r.found ? Success : Failure;
}

int cmd_camacho_sad(const Options& o, std::ostream& out) {
  const FoliatedChart c = load_chart(o);
  const Rational idx = camacho_sad_index(c.form, o.curve);
  if (o.json)
    print_json(out, {{"curve", o.curve}, {"index", to_string(idx)}});
  else
    out << "index=" << to_string(idx) << "\n";
  return Success;
}

int cmd_cart_wheel(const Options& o, std::ostream& out) {
  const FoliatedChart c = load_chart(o);
  const bool cw = is_cart_wheel(c.form);
  std::optional<Rational> bb;
  try {
    bb = baum_bott_index(linear_part(c.form));
  } catch (const Error&) {
  }
  if (o.json)
    print_json(out, {{"cart_wheel", cw}, {"baum_bott", bb ? Json(to_string(*bb)) : Json(nullptr)}});
  else
    out << "cart_wheel=" << yes_no(cw) << " BB=" << (bb ? to_string(*bb) : std::string("undefined")) << "\n";
  return cw ? Success : Failure;
}

int cmd_blowup_audit(const Options& o, std::ostream& out) {
  const FoliatedChart c = load_chart(o);
  const IndexAudit a = blowup_index_audit(c.form, o.axis);
  if (o.json) {
    print_json(out, to_json(a));
    return a.partial ? Inconclusive : Success;
  }
  out << "dicritical=" << yes_no(a.dicritical) << "\n";
  for (const auto& p : a.points) {
    out << "point\t" << p.chart << "\t" << to_string(p.position) << "\t"
        << (p.index ? to_string(*p.index) : std::string("INCONCLUSIVE"));
    if (!p.note.empty()) out << "\t" << p.note;
    out << "\n";
  }
  if (!a.dicritical) out << "sum=" << to_string(a.sum) << " partial=" << yes_no(a.partial) << "\n";
  if (a.axis_index_before)
    out << "axis_before=" << to_string(*a.axis_index_before)
        << " axis_after=" << (a.axis_index_after ? to_string(*a.axis_index_after) : std::string("undefined")) << "\n";
  return a.partial ? Inconclusive : Success;
}

int cmd_hirzebruch_solve(const Options& o, std::ostream& out) {
  const long delta = parse_long(o.delta, "--delta");
  const auto sols = solve_radial_diophantine(delta);
  if (o.json) {
    Json rows = Json::array();
    for (const auto& s : sols) rows.push_back(to_json(s));
    print_json(out, {{"delta", delta}, {"solutions", rows}});
  } else {
    for (const auto& s : sols)
      out << s.d1 << "\t" << s.d2 << "\tS" << s.situation << "\t" << yes_no(s.realizable) << "\n";
  }
  return Success;
}

int cmd_tube_audit(const Options& o, std::ostream& out) {
  const long alpha = parse_long(o.alpha, "--alpha");
  const long beta = parse_long(o.beta, "--beta");
  const TubeAudit t = tube_transition_audit(int(alpha), int(beta));
  if (o.json) {
    print_json(out, to_json(t));
  } else {
    auto bd = [](const std::optional<BiDegree>& b) {
      return b ? "(" + std::to_string(b->a) + "," + std::to_string(b->b) + ")" : std::string("undefined");
    };
    out << "ok=" << yes_no(t.ok) << " surface=S" << t.surface_index << " l0_child=" << bd(t.l0_child)
        << " generic_child=" << bd(t.generic_child) << " l0_self_intersection=" << t.l0_self_intersection << "\n";
    if (!t.note.empty()) out << "note\t" << t.note << "\n";
  }
  return t.ok ? Success : Failure;
}

int cmd_registry(const Options& o, std::ostream& out) {
  if (o.name.empty()) {
    const auto names = registry_names();
    if (o.json)
      print_json(out, names);
    else
      for (const auto& n : names) out << n << "\n";
    return Success;
  }
  const RegistryEntry e = registry_entry(o.name, parse_rational(o.lambda));
  if (o.json) {
    print_json(out, to_json(e));
    return Success;
  }
  out << "name=" << e.name << "\n"
      << "description=" << e.description << "\n"
      << "form=" << e.germ.form.to_string() << "\n"
      << "divisor=" << divisor_text(e.germ) << "\n";
  if (e.first_integral) out << "first_integral=" << e.first_integral->to_string() << "\n";
  for (std::size_t i = 0; i < e.scripts.size(); ++i)
    out << "script[" << i << "]=" << to_json(e.scripts[i]).dump() << "\n";
  return Success;
}

// ---- job files ----

const std::vector<std::string>& subcommand_names() {
  static const std::vector<std::string> n{"integrable",   "sing",       "invariant",        "classify-center",
                                          "blowup",       "resolve",    "verify",           "classify-germ",
                                          "detect-open-book", "camacho-sad", "cart-wheel",   "blowup-audit",
                                          "hirzebruch-solve", "tube-audit", "registry"};
  return n;
}

std::string scalar_text(const Json& v, const std::string& key) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long>());
  throw Error(ErrorKind::InvalidInput, "job key '" + key + "' must be a string or an integer");
}

/// Translates a job document into command-line tokens.
std::vector<std::string> job_tokens(const Json& job, std::string& command) {
  require_keys(job,
               {"command", "form", "vars", "divisor", "registry", "lambda", "germ", "script", "checks", "center",
                "override", "var", "curve", "axis", "point", "delta", "alpha", "beta", "name", "json", "detail"},
               "job");
  std::vector<std::string> t;
  for (auto it = job.begin(); it != job.end(); ++it) {
    const std::string& k = it.key();
    const Json& v = it.value();
    if (k == "command") {
      command = scalar_text(v, k);
    } else if (k == "germ") {
      if (v.is_object() && v.contains("registry")) {
        require_keys(v, {"registry", "lambda"}, "germ");
        t.insert(t.end(), {"--registry", scalar_text(v.at("registry"), "registry")});
        if (v.contains("lambda")) t.insert(t.end(), {"--lambda", scalar_text(v.at("lambda"), "lambda")});
      } else {
        t.insert(t.end(), {"--chart", v.dump()});
      }
    } else if (k == "script") {
      t.insert(t.end(), {"--script", v.dump()});
    } else if (k == "checks") {
      if (!v.is_array()) throw Error(ErrorKind::InvalidInput, "job key 'checks' must be an array");
      for (const auto& c : v) t.insert(t.end(), {"--check", scalar_text(c, k)});
    } else if (k == "override" || k == "json" || k == "detail") {
      if (!v.is_boolean()) throw Error(ErrorKind::InvalidInput, "job key '" + k + "' must be a boolean");
      if (v.get<bool>()) t.push_back("--" + k);
    } else if (k == "name") {
      t.push_back(scalar_text(v, k));
    } else if ((k == "divisor" || k == "vars" || k == "center" || k == "point") && v.is_array()) {
      std::vector<std::string> parts;
      for (const auto& e : v) parts.push_back(scalar_text(e, k));
      t.insert(t.end(), {"--" + k, parts.empty() ? std::string("none") : join(parts, ",")});
    } else {
      t.insert(t.end(), {"--" + k, scalar_text(v, k)});
    }
  }
  return t;
}

/// Expands `--job FILE` into tokens placed right after the subcommand name.
std::vector<std::string> expand_job(const std::vector<std::string>& args) {
  std::vector<std::string> rest;
  std::string job_path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--job") {
      if (i + 1 >= args.size()) throw Error(ErrorKind::InvalidInput, "--job needs a file");
      job_path = args[++i];
    } else if (args[i].rfind("--job=", 0) == 0) {
      job_path = args[i].substr(6);
    } else {
      rest.push_back(args[i]);
    }
  }
  if (job_path.empty()) return rest;
  std::string command;
  const auto tokens = job_tokens(parse_json_arg("@" + job_path, "job file"), command);
  const auto& names = subcommand_names();
  auto pos = std::find_if(rest.begin(), rest.end(),
                          [&](const std::string& a) { return std::find(names.begin(), names.end(), a) != names.end(); });
  if (pos == rest.end()) {
    if (command.empty()) throw Error(ErrorKind::InvalidInput, "job file has no 'command' and none was given");
    rest.insert(rest.begin(), command);
    pos = rest.begin();
  } else if (!command.empty() && command != *pos) {
    throw Error(ErrorKind::InvalidInput, "job command '" + command + "' conflicts with '" + *pos + "'");
  }
  rest.insert(pos + 1, tokens.begin(), tokens.end());
  return rest;
}

void error_object(std::ostream& err, const std::string& kind, const std::string& message) {
  err << Json{{"error", kind}, {"message", message}}.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args_in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Symbolic toolkit for codimension-one foliations"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  app.fallthrough();
  std::string job_unused;
  app.add_option("--job", job_unused, "JSON job file; its keys mirror the option names");
  app.add_flag("--json", o.json, "emit the report as JSON");

  auto form_input = [&](CLI::App* s) {
    s->add_option("--form", o.form, "one-form '[a, b, c]' with --vars, or '[a, b] over (x,y)'");
    s->add_option("--vars", o.vars, "comma-separated variables");
    s->add_option("--divisor", o.divisor, "comma-separated divisor variables, or 'none'");
    s->add_option("--registry", o.registry, "registry germ name");
    s->add_option("--lambda", o.lambda, "parameter for linear_lambda");
    s->add_option("--chart", o.chart, "chart JSON, inline or @file");
  };
  std::map<std::string, int (*)(const Options&, std::ostream&)> handlers;
  auto sub = [&](const char* name, const char* help, int (*h)(const Options&, std::ostream&), bool form = true) {
    CLI::App* s = app.add_subcommand(name, help);
    if (form) form_input(s);
    handlers[name] = h;
    return s;
  };

  sub("integrable", "test w ^ dw = 0", cmd_integrable);
  sub("sing", "singular locus generators", cmd_sing)->add_option("--point", o.point, "evaluate at p1,p2,...");
  sub("invariant", "test invariance of a coordinate hyperplane", cmd_invariant)
      ->add_option("--var", o.var, "hyperplane variable")
      ->required();
  sub("classify-center", "monoidal classification of a codimension-two center", cmd_classify_center)
      ->add_option("--center", o.center, "center variables, e.g. y,z")
      ->required();
  {
    CLI::App* s = sub("blowup", "blow up a point or coordinate curve", cmd_blowup);
    s->add_option("--center", o.center, "'point' or center variables")->required();
    s->add_flag("--override", o.override_admissibility, "allow a non-admissible center");
  }
  sub("resolve", "apply a resolution script", cmd_resolve)->add_option("--script", o.script, "script JSON or @file");
  {
    CLI::App* s = sub("verify", "check a resolution script", cmd_verify);
    s->add_option("--script", o.script, "script JSON or @file");
    s->add_option("--check", o.checks, "resolved, controlled, audits")->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    s->add_flag("--detail", o.detail, "list leaf verdicts");
  }
  sub("classify-germ", "radial / almost radial certificate for a script", cmd_classify_germ)
      ->add_option("--script", o.script, "script JSON or @file");
  sub("detect-open-book", "look for an open-book normal form", cmd_detect_open_book);
  sub("camacho-sad", "Camacho-Sad index along a coordinate axis", cmd_camacho_sad)
      ->add_option("--curve", o.curve, "axis variable set to zero")
      ->required();
  sub("cart-wheel", "cart-wheel test and Baum-Bott index", cmd_cart_wheel);
  sub("blowup-audit", "index audit of one quadratic blow-up", cmd_blowup_audit)
      ->add_option("--axis", o.axis, "invariant axis variable");
  sub("hirzebruch-solve", "radial solutions on a Hirzebruch surface", cmd_hirzebruch_solve, false)
      ->add_option("--delta", o.delta, "surface index")
      ->required();
  {
    CLI::App* s = sub("tube-audit", "tubular neighbourhood blow-up audit", cmd_tube_audit, false);
    s->add_option("--alpha", o.alpha)->required();
    s->add_option("--beta", o.beta)->required();
  }
  {
    CLI::App* s = sub("registry", "list or show registry germs", cmd_registry, false);
    s->add_option("name", o.name, "entry name");
    s->add_option("--lambda", o.lambda, "parameter for linear_lambda");
  }

  try {
    std::vector<std::string> args = expand_job(args_in);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Success;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return Success;
  } catch (const CLI::ParseError& e) {
    error_object(err, "UsageError", e.what());
    return InputError;
  } catch (const Error& e) {
    error_object(err, e.kind_name(), e.what());
    return InputError;
  }

  for (CLI::App* s : app.get_subcommands()) {
    try {
      return handlers.at(s->get_name())(o, out);
    } catch (const Error& e) {
      error_object(err, e.kind_name(), e.what());
      return InputError;
    } catch (const std::exception& e) {
      error_object(err, "Internal", e.what());
      return InputError;
    }
  }
  return InputError;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace foliate::cli
