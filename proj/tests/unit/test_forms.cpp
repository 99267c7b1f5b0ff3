#include <doctest.h>

#include "helpers.hpp"

using namespace foliate;
using namespace testing_support;

namespace {

std::vector<Rational> pt(std::initializer_list<int> v) {
  std::vector<Rational> out;
  for (int x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("one-forms print and re-parse") {
  const OneForm w = F("[0, -z, y]");
  CHECK(w.to_string() == "[0, -z, y] over (x,y,z)");
  CHECK(parse_one_form(w.to_string()) == w);
  CHECK(parse_one_form("[y, -x] over (x,y)") == F("[y, -x]", xy()));
  CHECK_ERROR_KIND(F("[1, 2]"), DimensionMismatch);
  CHECK_ERROR_KIND(parse_one_form("[1, 2]"), SyntaxError);
}

TEST_CASE("exterior derivative and wedge") {
  const OneForm w = F("[0, -z, y]");
  const TwoForm dw = d(w);
  CHECK(dw.at(1, 2) == P("2"));
  CHECK(dw.at(0, 1).is_zero());
  CHECK(d(dw).is_zero());
  CHECK(d(d(P("x^2*y*z + y^3"))).is_zero());
  const TwoForm dxdy = wedge(F("[1, 0, 0]"), F("[0, 1, 0]"));
  CHECK(dxdy.at(0, 1) == P("1"));
  CHECK(dxdy.at(1, 0) == P("-1"));
}

TEST_CASE("integrability") {
  CHECK(check_integrability(F("[0, -z, y]")));
  CHECK_FALSE(check_integrability(F("[y, 0, x]")));
  const ThreeForm t = wedge(F("[y, 0, x]"), d(F("[y, 0, x]")));
  CHECK(t.at(0, 1, 2) == P("-x"));
  CHECK(check_integrability(F("[x^3 + y, 7*x*y]", xy())));
}

TEST_CASE("pullback along chart maps") {
  CHECK(pullback(F("[0, -z, y]"), M({"x", "y", "y*z"})) == F("[0, 0, y^2]"));
  CHECK(pullback(F("[1, 0, 0]"), PolyMap::identity(xyz())) == F("[1, 0, 0]"));
  CHECK(pullback(F("[z^3, 2*y*z, -2*y^2]"), M({"x", "y", "y*z"})) == F("[y^3*z^3, 0, -2*y^3]"));
}

TEST_CASE("restriction to coordinate hyperplanes") {
  const OneForm r = restrict_to_hyperplane(F("[0, -z, y]"), "x");
  CHECK(r == F("[-z, y]", VarList{"y", "z"}));
  CHECK(restrict_to_hyperplane(F("[y^2, -z^2, 2*y*z]"), "x") == F("[-z^2, 2*y*z]", VarList{"y", "z"}));
  CHECK(restrict_to_hyperplane(F("[1, 0, 0]"), "x").is_zero());
}

TEST_CASE("hyperplane invariance") {
  CHECK(is_hyperplane_invariant(F("[0, -z, y]"), "y"));
  CHECK(is_hyperplane_invariant(F("[0, -z, y]"), "z"));
  CHECK_FALSE(is_hyperplane_invariant(F("[0, -z, y]"), "x"));
  // x = 0 is a leaf of dx = 0.
  CHECK(is_hyperplane_invariant(F("[1, 0, 0]"), "x"));
  CHECK_FALSE(is_hyperplane_invariant(F("[1, 0, 0]"), "y"));
}

TEST_CASE("generators from closed rational functions") {
  CHECK(from_closed_rational(R("x*z^2 + y^2", "z^2")) == F("[z^3, 2*y*z, -2*y^2]"));
  CHECK(from_closed_rational(R("x*y + z^2", "y")) == F("[y^2, -z^2, 2*y*z]"));
  CHECK(from_closed_rational(R("x*z^2 + y^2", "y*z")) == F("[y*z^3, y^2*z - x*z^3, x*y*z^2 - y^3]"));
  CHECK_ERROR_KIND(from_closed_rational(RatFunc(P("3"))), ConstantInput);
  for (const char* num : {"x*z^2 + y^2", "x*y + z^2"})
    CHECK(check_integrability(from_closed_rational(R(num, "y*z"))));
}

TEST_CASE("monomial content") {
  const OneForm w = F("[x*y^2, x^2*y, 0]");
  CHECK_FALSE(has_trivial_content(w));
  CHECK(remove_monomial_content(w) == F("[y, x, 0]"));
  CHECK(has_trivial_content(F("[0, -z, y]")));
}

TEST_CASE("singular points by evaluation") {
  const OneForm ob = F("[0, -z, y]");
  CHECK(is_singular_at(ob, pt({1, 0, 0})));
  CHECK_FALSE(is_singular_at(ob, pt({0, 1, 0})));
  const auto v = evaluate(ob, pt({0, 1, 0}));
  CHECK(v == pt({0, 0, 1}));
  const OneForm phi1 = from_closed_rational(R("x*z^2 + y^2", "y*z"));
  CHECK(is_singular_at(phi1, pt({0, 0, 1})));
  CHECK(singular_generators(ob).size() == 2);
}

TEST_CASE("isolated singularity test in dimension two") {
  CHECK(isolated_singularity_2d(F("[-z, y]", VarList{"y", "z"})) == Verdict::Yes);
  CHECK(isolated_singularity_2d(F("[-z^2, 2*y*z]", VarList{"y", "z"})) == Verdict::No);
  CHECK(isolated_singularity_2d(F("[y, 0]", xy())) == Verdict::No);
  CHECK(isolated_singularity_2d(F("[1 + x, y]", xy())) == Verdict::Yes);
}
