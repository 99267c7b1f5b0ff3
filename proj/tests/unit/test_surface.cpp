#include <doctest.h>

#include "foliate/surface.hpp"
#include "helpers.hpp"

using namespace foliate;
using namespace testing_support;

namespace {

OneForm linear(const Rational& lambda) {
  return OneForm(xy(), {MPoly::variable(xy(), 1) * lambda, -MPoly::variable(xy(), 0)});
}

LinearPart diag(const Rational& a, const Rational& b) {
  LinearPart l;
  l.m[0][0] = a;
  l.m[1][1] = b;
  return l;
}

}  // namespace

TEST_CASE("Camacho-Sad index along coordinate axes") {
  CHECK(camacho_sad_index(linear(2), "y") == 2);
  CHECK(camacho_sad_index(F("[y, -x]", xy()), "y") == 1);
  CHECK(camacho_sad_index(F("[y, -x]", xy()), "x") == 1);
  CHECK(camacho_sad_index(linear(Rational(5, 2)), "y") == Rational(5, 2));
  CHECK_ERROR_KIND(camacho_sad_index(F("[1, 0]", xy()), "y"), CurveNotInvariant);
}

TEST_CASE("Baum-Bott index from the linear part") {
  CHECK(baum_bott_index(diag(1, 1)) == 4);
  CHECK(baum_bott_index(diag(1, 2)) == Rational(9, 2));
  CHECK(baum_bott_index(diag(1, -1)) == 0);
  CHECK(baum_bott_index(linear_part(F("[y, -x]", xy()))) == 4);
  const LinearPart l = linear_part(F("[y + x^2, -x - y^3]", xy()));
  CHECK(l.is_scalar());
}

TEST_CASE("cart-wheel recognition") {
  CHECK(is_cart_wheel(F("[y, -x]", xy())));
  CHECK_FALSE(is_cart_wheel(linear(2)));
  CHECK(is_cart_wheel(F("[y + x^2, -x - y^3]", xy())));
  CHECK_ERROR_KIND(is_cart_wheel(F("[1, 0]", xy())), RegularOrigin);
}

TEST_CASE("index audit after one quadratic blow-up") {
  const IndexAudit a = blowup_index_audit(linear(3), "y");
  CHECK_FALSE(a.dicritical);
  REQUIRE(a.points.size() == 2);
  std::vector<Rational> idx;
  for (const auto& p : a.points) idx.push_back(*p.index);
  std::sort(idx.begin(), idx.end());
  CHECK(idx[0] == Rational(-3, 2));
  CHECK(idx[1] == Rational(1, 2));
  CHECK(a.sum == -1);
  CHECK(a.axis_index_before == 3);
  CHECK(a.axis_index_after == 2);

  const IndexAudit cw = blowup_index_audit(F("[y, -x]", xy()));
  CHECK(cw.dicritical);
  CHECK(cw.points.empty());
}

TEST_CASE("strict transform index drops by one") {
  for (const Rational lambda : {Rational(1), Rational(2), Rational(3), Rational(5, 2)}) {
    const IndexAudit a = blowup_index_audit(linear(lambda), "y");
    REQUIRE(a.axis_index_after.has_value());
    CHECK(*a.axis_index_after == lambda - 1);
  }
}
