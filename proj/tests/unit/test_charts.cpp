#include <doctest.h>

#include "helpers.hpp"

using namespace foliate;
using namespace testing_support;

namespace {

const ChildChart& child(const BlowupResult& r, const std::string& id) {
  for (const auto& c : r.children)
    if (c.chart.id == id) return c;
  FAIL("missing child " << id);
  return r.children.front();
}

std::vector<Rational> origin(std::size_t n) { return std::vector<Rational>(n, Rational(0)); }

}  // namespace

TEST_CASE("divisor components split into invariant and dicritical") {
  const auto s = classify_components(make_chart(F("[0, -z, y]"), {"x", "y", "z"}));
  CHECK(s.invariant == std::vector<std::string>{"y", "z"});
  CHECK(s.dicritical == std::vector<std::string>{"x"});
  CHECK(classify_components(make_chart(F("[1, 0, 0]"), {"x"})).invariant == std::vector<std::string>{"x"});
  CHECK(classify_components(make_chart(F("[1, 0, 0]"), {"y"})).dicritical == std::vector<std::string>{"y"});
}

TEST_CASE("chart validation") {
  CHECK_ERROR_KIND(make_chart(F("[0, -z, y]"), {"q"}), UnknownVariable);
  CHECK_ERROR_KIND(make_chart(F("[0, 0, 0]"), {}), ZeroForm);
}

TEST_CASE("simple regular points") {
  CHECK(is_simple_regular_at(make_chart(F("[0, 0, 1]"), {"y"}), origin(3)).kind == PointKind::Simple);
  const FoliatedChart two = make_chart(parse_one_form("[1, 0, 1]", VarList{"x", "y", "w"}), {"y", "w"});
  CHECK(is_simple_regular_at(two, origin(3)).kind == PointKind::Simple);
  CHECK(is_simple_regular_at(make_chart(F("[0, -z, y]"), {"y"}), origin(3)).kind == PointKind::Singular);
  CHECK(is_simple_regular_at(make_chart(F("[1, 1, 1]"), {"x", "y", "z"}), origin(3)).kind == PointKind::NotSimple);
}

TEST_CASE("tangency loci") {
  CHECK(tangency_locus(make_chart(F("[0, 0, 1]"), {"y"}), "y").zero_set.verdict == ZeroSet::Empty);
  CHECK(tangency_locus(F("[y^2, -z^2, 2*y*z]"), "x").zero_set.verdict == ZeroSet::NonEmpty);
  CHECK(tangency_locus(F("[1, 0, 0]"), "y").zero_set.verdict == ZeroSet::Empty);
  CHECK_ERROR_KIND(tangency_locus(make_chart(F("[0, -z, y]"), {"y"}), "y"), InvariantComponent);
}

TEST_CASE("dicritical corners") {
  CHECK(has_dicritical_corner(make_chart(F("[1, 1, 1]"), {"x", "y", "z"})));
  CHECK_FALSE(has_dicritical_corner(make_chart(parse_one_form("[1, 0, 1]", VarList{"x", "y", "w"}), {"y", "w"})));
  CHECK_FALSE(has_dicritical_corner(make_chart(F("[1, 0, 0]"), {})));
}

TEST_CASE("log-generic order") {
  const auto ob = log_generic_order(F("[0, -z, y]"), {"y", "z"});
  CHECK(ob.r == 2);
  CHECK_FALSE(ob.nu_p.has_value());
  const auto phi2 = log_generic_order(F("[y^2, -z^2, 2*y*z]"), {"y", "z"});
  CHECK(phi2.r == 2);
  CHECK(phi2.nu_p == 3u);
  const auto sph = log_generic_order(F("[0, 2*y, 2*z]"), {"y", "z"});
  CHECK(sph.r == 2);
  CHECK(sph.nu_p == 2u);
}

TEST_CASE("monoidal classification") {
  CHECK(classify_monoidal(F("[0, -z, y]"), {"y", "z"}).kind == MonoidalKind::DicNV);
  CHECK(classify_monoidal(F("[0, -z, y]"), {"y", "z"}).to_string() == "DicNV r=2");
  CHECK(classify_monoidal(F("[y^2, -z^2, 2*y*z]"), {"y", "z"}).kind == MonoidalKind::DicV);
  CHECK(classify_monoidal(F("[0, 2*y, 2*z]"), {"y", "z"}).kind == MonoidalKind::NDic);
  CHECK(classify_monoidal(F("[z^3, 2*y*z, -2*y^2]"), {"y", "z"}).to_string() == "DicNV r=3");
}

TEST_CASE("monoidal blow-up charts") {
  const auto ob = monoidal_blowup(make_chart(F("[0, -z, y]"), {}), CenterSpec::curve({"y", "z"}));
  REQUIRE(ob.children.size() == 2);
  const auto& y = child(ob, "c0.y");
  CHECK(y.chart.form == F("[0, 0, 1]"));
  CHECK(y.k == 2);
  CHECK(y.dicritical);
  CHECK(y.exceptional_var == "y");
  CHECK(child(ob, "c0.z").chart.form == F("[0, -1, 0]"));
  CHECK(ob.monoidal_class->kind == MonoidalKind::DicNV);

  const auto phi3 = monoidal_blowup(make_chart(F("[z^3, 2*y*z, -2*y^2]"), {}), CenterSpec::curve({"y", "z"}));
  CHECK(child(phi3, "c0.y").chart.form == F("[z^3, 0, -2]"));
  CHECK(child(phi3, "c0.y").k == 3);
  CHECK(child(phi3, "c0.z").chart.form == F("[1, 2*y, 0]"));

  const auto sph = monoidal_blowup(make_chart(F("[0, 2*y, 2*z]"), {}), CenterSpec::curve({"y", "z"}));
  CHECK(child(sph, "c0.y").chart.form == F("[0, 2 + 2*z^2, 2*y*z]"));
  CHECK(child(sph, "c0.y").k == 1);
  CHECK_FALSE(child(sph, "c0.y").dicritical);
  CHECK(child(sph, "c0.y").chart.component("y")->invariant);
}

TEST_CASE("quadratic blow-up charts") {
  const auto cw = quadratic_blowup(make_chart(F("[y, -x]", xy()), {}));
  CHECK(child(cw, "c0.x").chart.form == F("[0, -1]", xy()));
  CHECK(child(cw, "c0.x").k == 2);
  CHECK(cw.dicritical);
  const auto ob = quadratic_blowup(make_chart(F("[0, -z, y]"), {}));
  CHECK(child(ob, "c0.x").chart.form == F("[0, -z, y]"));
  CHECK(child(ob, "c0.x").k == 2);
  const auto lam = quadratic_blowup(make_chart(F("[2*y, -x]", xy()), {}));
  CHECK(child(lam, "c0.x").chart.form == F("[y, -x]", xy()));
  CHECK(child(lam, "c0.x").k == 1);
  CHECK_FALSE(lam.dicritical);
}

TEST_CASE("blow-up children carry divisor bookkeeping") {
  const auto r = monoidal_blowup(make_chart(F("[0, -z, y]"), {"x"}), CenterSpec::curve({"y", "z"}));
  const auto& c = child(r, "c0.y").chart;
  REQUIRE(c.component("x") != nullptr);
  CHECK(c.component("x")->origin == ComponentOrigin::Original);
  REQUIRE(c.component("y") != nullptr);
  CHECK(c.component("y")->origin == ComponentOrigin::Exceptional);
  CHECK(c.parent == "c0");
}

TEST_CASE("admissibility of centers") {
  const FoliatedChart ob = make_chart(F("[0, -z, y]"), {});
  CHECK(is_admissible_center(ob, CenterSpec::curve({"y", "z"})));
  // The z-axis lies in the leaf y = 0.
  CHECK(is_admissible_center(ob, CenterSpec::curve({"x", "y"})));
  const FoliatedChart dz = make_chart(F("[0, 0, 1]"), {});
  CHECK_FALSE(is_admissible_center(dz, CenterSpec::curve({"x", "y"})));
  CHECK_ERROR_KIND(blowup(dz, CenterSpec::curve({"x", "y"})), NonAdmissibleCenter);
  BlowupOptions opt;
  opt.allow_non_admissible = true;
  CHECK_FALSE(blowup(dz, CenterSpec::curve({"x", "y"}), opt).admissible);
  CHECK_FALSE(is_admissible_center(make_chart(F("[1, 0, 0]"), {}), CenterSpec::point()));
}

TEST_CASE("shear keeps the open book integrable") {
  const auto s = shear(make_chart(F("[0, -z, y]"), {}), "z", P("x*y"), "w");
  const VarList xyw{"x", "y", "w"};
  CHECK(s.chart.form == parse_one_form("[y^2, -w, y]", xyw));
  CHECK(check_integrability(s.chart.form));
  const FoliatedChart c = make_chart(F("[0, -z, y]"), {});
  CHECK(shear(c, "z", P("0")).chart.form == c.form);
  CHECK_ERROR_KIND(shear(make_chart(F("[0, -z, y]"), {"z"}), "z", P("x")), DivisorNotPreserved);
}

TEST_CASE("E-controlled centers") {
  CHECK(check_E_controlled(make_chart(F("[0, -z, y]"), {"x"}), CenterSpec::curve({"y", "z"})));
  CHECK_FALSE(check_E_controlled(make_chart(F("[0, -z, y]"), {}), CenterSpec::curve({"y", "z"})));
  const FoliatedChart sh = make_chart(parse_one_form("[y^2, -w, y]", VarList{"x", "y", "w"}), {"w"});
  CHECK_FALSE(check_E_controlled(sh, CenterSpec::curve({"y", "w"})));
  CHECK(check_E_controlled(make_chart(F("[0, -z, y]"), {}), CenterSpec::point()));
}
