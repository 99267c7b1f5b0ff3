#include <doctest.h>

#include "helpers.hpp"

using namespace foliate;
using namespace testing_support;

TEST_CASE("rationals parse and print in lowest terms") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-5")) == "-5");
  CHECK(to_string(parse_rational("0/7")) == "0");
  CHECK(is_integer(parse_rational("8/4")));
  CHECK_FALSE(is_integer(parse_rational("1/3")));
  CHECK_ERROR_KIND(parse_rational("1/0"), SyntaxError);
  CHECK_ERROR_KIND(parse_rational("abc"), SyntaxError);
}

TEST_CASE("polynomial parsing reads terms directly") {
  const MPoly f = P("y^2 + x*z^3");
  CHECK(f.terms().size() == 2);
  CHECK(f.coefficient({0, 2, 0}) == 1);
  CHECK(f.coefficient({1, 0, 3}) == 1);
  CHECK(P("0").is_zero());
  CHECK(P("3/2*x - 3/2*x").is_zero());
  CHECK(P("(x + y)^2") == P("x^2 + 2*x*y + y^2"));
  CHECK(P("-(x - 1)") == P("1 - x"));
}

TEST_CASE("polynomial printing is canonical and re-parses") {
  CHECK(P("y^2 + x*z^3").to_string() == "x*z^3 + y^2");
  CHECK(P("1 - x*y^2").to_string() == "-x*y^2 + 1");
  CHECK(P("3/2*x*y - 1/2").to_string() == "3/2*x*y - 1/2");
  CHECK(P("0").to_string() == "0");
  for (const char* s : {"x*z^3 + y^2 - 7", "-2/3*x^2*y + z", "x - y - z + 1"})
    CHECK(P(P(s).to_string().c_str()) == P(s));
}

TEST_CASE("polynomial parser rejects malformed input") {
  CHECK_ERROR_KIND(P("x +"), SyntaxError);
  CHECK_ERROR_KIND(P("x^y"), SyntaxError);
  CHECK_ERROR_KIND(P("q + 1"), UnknownVariable);
  CHECK_ERROR_KIND(P("(x"), SyntaxError);
}

TEST_CASE("substitution along chart maps") {
  CHECK(substitute(P("z^3"), M({"x", "y", "y*z"})) == P("y^3*z^3"));
  CHECK(substitute(P("y^2 + x*z^3"), PolyMap::identity(xyz())) == P("y^2 + x*z^3"));
  const MPoly g = substitute(P("y^2 - x*z^2"), M({"x", "y", "y*z"}));
  CHECK(g == P("y^2 - x*y^2*z^2"));
  CHECK(g == P("y^2") * P("1 - x*z^2"));
}

TEST_CASE("composition of maps applies the inner map first") {
  const PolyMap inner = M({"x", "y", "y*z"});
  const PolyMap outer = M({"x", "x*y", "z"});
  const PolyMap c = compose(outer, inner);
  const MPoly f = P("x + y^2*z");
  CHECK(substitute(f, c) == substitute(substitute(f, inner), outer));
}

TEST_CASE("generic order along a coordinate center") {
  CHECK(generic_order(P("y^2 + x*z^3"), VarList{"y", "z"}) == 2u);
  CHECK(generic_order(P("x"), VarList{"y", "z"}) == 0u);
  CHECK_FALSE(generic_order(P("0"), VarList{"y", "z"}).has_value());
  CHECK(order_to_string(std::nullopt) == "inf");
}

TEST_CASE("exact division by a variable power") {
  CHECK(divide_by_var_power(P("y^2*x + y^3"), "y", 2) == P("x + y"));
  CHECK(divide_by_var_power(P("-x^2"), "x", 2) == P("-1"));
  CHECK_ERROR_KIND(divide_by_var_power(P("x + y"), "y", 1), NotDivisible);
  CHECK(divide_exact(P("x^2 - y^2"), P("x - y")) == P("x + y"));
  CHECK_ERROR_KIND(divide_exact(P("x^2 + y^2"), P("x - y")), NotDivisible);
}

TEST_CASE("resultants of small Sylvester systems") {
  CHECK(resultant(P("-z"), P("y"), "z") == P("y"));
  CHECK(resultant(P("-z^2"), P("2*y*z"), "z").is_zero());
  CHECK(resultant(P("y - 1"), P("y + 1"), "y") == P("-2"));
  CHECK(resultant(P("x^2 - 2"), P("x^2 - 3"), "x") == P("1"));
  CHECK(coprime(P("x + y"), P("x - y")));
  CHECK_FALSE(coprime(P("x*(y+1)"), P("z*(y+1)")));
}

TEST_CASE("determinant by fraction-free elimination") {
  const VarList v = xy();
  std::vector<std::vector<MPoly>> m{{P("x", v), P("1", v)}, {P("y", v), P("x", v)}};
  CHECK(determinant(m, v) == P("x^2 - y", v));
  std::vector<std::vector<MPoly>> singular{{P("x", v), P("y", v)}, {P("2*x", v), P("2*y", v)}};
  CHECK(determinant(singular, v).is_zero());
}

TEST_CASE("univariate helpers") {
  const VarList v{"t"};
  const MPoly f = parse_poly("t^3 - t", v);
  const auto roots = rational_roots(f, 0);
  REQUIRE(roots.size() == 3);
  CHECK(roots[0] == -1);
  CHECK(roots[1] == 0);
  CHECK(roots[2] == 1);
  CHECK(rational_roots(parse_poly("t^2 - 2", v), 0).empty());
  CHECK(univariate_gcd(parse_poly("t^2 - 1", v), parse_poly("t^2 + 2*t + 1", v), 0) == parse_poly("t + 1", v));
  CHECK(squarefree_part(parse_poly("(t - 1)^3*(t + 2)", v), 0) == parse_poly("(t - 1)*(t + 2)", v));
}

TEST_CASE("common zero sets are decided soundly") {
  CHECK(common_zero_set({P("1")}).verdict == ZeroSet::Empty);
  CHECK(common_zero_set({P("x"), P("y")}).verdict == ZeroSet::NonEmpty);
  CHECK(common_zero_set({P("y - 1"), P("y + 1")}).verdict == ZeroSet::Empty);
  CHECK(common_zero_set({P("x*y - 1"), P("x")}).verdict == ZeroSet::Empty);
  CHECK(common_zero_set({P("-z^2"), P("2*y*z")}).verdict == ZeroSet::NonEmpty);
  const auto r = common_zero_set({P("x - 1", xy()), P("y - 2", xy())});
  CHECK(r.verdict == ZeroSet::NonEmpty);
  CHECK(zero_set_name(ZeroSet::Inconclusive) == std::string("INCONCLUSIVE"));
}

TEST_CASE("certificate of no common factor") {
  CHECK(certify_no_common_factor({P("y^2"), P("-z"), P("y")}));
  CHECK_FALSE(certify_no_common_factor({P("x*y"), P("x*z")}));
  CHECK(common_monomial_content({P("x^2*y"), P("x*y^3")}) == Exponent{1, 1, 0});
}

TEST_CASE("rational functions reduce and compose") {
  const RatFunc a = R("x*y", "y^2");
  CHECK(a == R("x", "y"));
  CHECK((R("1", "x") + R("1", "y")) == R("x + y", "x*y"));
  CHECK((R("x", "y") * R("y", "x")) == RatFunc(P("1")));
  CHECK_ERROR_KIND(R("1", "0"), ZeroInput);
}
