#include <doctest.h>

#include "foliate/projective.hpp"
#include "helpers.hpp"

using namespace foliate;
using namespace testing_support;

namespace {

const VarList& p2() {
  static const VarList v{"X0", "X1", "X2"};
  return v;
}

MPoly H(const char* s) { return parse_poly(s, hirzebruch_vars()); }

}  // namespace

TEST_CASE("projective forms and degree") {
  CHECK(validate_projective_form({P("X1", p2()), P("-X0", p2()), P("0", p2())}) == 0);
  CHECK(validate_projective_form({P("X2", p2()), P("X2", p2()), P("-X0 - X1", p2())}) == 0);
  CHECK_ERROR_KIND(validate_projective_form({P("X0", p2()), P("0", p2()), P("0", p2())}), EulerViolation);
  CHECK_ERROR_KIND(validate_projective_form({P("X1^2", p2()), P("-X0", p2()), P("0", p2())}), NotHomogeneous);
}

TEST_CASE("bi-degrees on Hirzebruch coordinates") {
  CHECK(bidegree(H("X0^2*Y1"), 2) == BiDegree{0, 1});
  CHECK(bidegree(H("X0"), 3) == BiDegree{1, 0});
  CHECK(bidegree(H("Y0"), 3) == BiDegree{0, 1});
  CHECK(bidegree(H("Y1"), 3) == BiDegree{-3, 1});
  CHECK_ERROR_KIND(bidegree(H("X0 + Y0"), 0), NotBiHomogeneous);
  CHECK_FALSE(bidegree(H("0"), 0).has_value());
}

TEST_CASE("Hirzebruch forms") {
  HirzebruchForm fib{1, H("X1"), H("-X0"), H("0"), H("0")};
  CHECK(validate_hirzebruch_form(fib) == BiDegree{2, 0});
  HirzebruchForm other{0, H("0"), H("0"), H("Y1"), H("-Y0")};
  CHECK(validate_hirzebruch_form(other) == BiDegree{0, 2});
  for (int delta = 0; delta <= 4; ++delta) CHECK(foliation_bidegree({2, 0}, delta) == BiDegree{delta, -2});
  CHECK(foliation_bidegree({0, 2}, 0) == BiDegree{-2, 0});
  for (int delta = 0; delta <= 4; ++delta) CHECK(foliation_bidegree({2 - delta, 2}, delta) == BiDegree{0, 0});
}

TEST_CASE("Milnor count") {
  for (long delta = 0; delta <= 6; ++delta) {
    CHECK(milnor_count(delta, -2, delta) == 0);
    CHECK(milnor_count(-delta - 1, 2, delta) == 2);
  }
  CHECK(milnor_count(0, 0, 0) == 4);
}

TEST_CASE("radial Diophantine solutions") {
  const auto s1 = solve_radial_diophantine(1);
  REQUIRE(s1.size() == 3);
  CHECK((s1[0].d1 == 1 && s1[0].d2 == -2 && s1[0].situation == 1 && s1[0].realizable));
  CHECK((s1[1].d1 == -2 && s1[1].d2 == 0 && s1[1].situation == 2 && !s1[1].realizable));
  CHECK((s1[2].d1 == -2 && s1[2].d2 == 2 && s1[2].situation == 3 && !s1[2].realizable));
  const auto s0 = solve_radial_diophantine(0);
  REQUIRE(s0.size() == 4);
  std::vector<std::tuple<long, long, int, bool>> got;
  for (const auto& s : s0) got.emplace_back(s.d1, s.d2, s.situation, s.realizable);
  std::vector<std::tuple<long, long, int, bool>> want{{0, -2, 1, true}, {-2, 0, 2, true}, {-1, 2, 3, false}, {2, -1, 4, false}};
  CHECK(got == want);
  for (const auto& s : s0) CHECK(radial_equation(s.d1, s.d2, 0) == 0);
  CHECK_ERROR_KIND(solve_radial_diophantine(-1), InvalidInput);
}

TEST_CASE("Picard pairing") {
  CHECK(picard_pairing({1, 0}, {1, 0}, 3) == 0);
  CHECK(picard_pairing({1, 0}, {0, 1}, 3) == 1);
  CHECK(picard_pairing({0, 1}, {0, 1}, 3) == 3);
  CHECK(picard_pairing({-3, 1}, {-3, 1}, 3) == -3);
}

TEST_CASE("tube transition audit") {
  const TubeAudit a = tube_transition_audit(0, 1);
  CHECK(a.ok);
  CHECK(a.surface_index == 1);
  CHECK(a.l0_child == BiDegree{0, 1});
  CHECK(a.generic_child == BiDegree{1, 1});
  const TubeAudit b = tube_transition_audit(1, 1);
  CHECK(b.surface_index == 2);
  CHECK(b.l0_child == BiDegree{1, 2});
  CHECK(b.generic_child == BiDegree{2, 1});
  const TubeAudit c = tube_transition_audit(0, 3);
  CHECK(c.surface_index == 3);
  CHECK(c.l0_child == BiDegree{0, 3});
  CHECK(c.generic_child == BiDegree{3, 3});
}

TEST_CASE("Hirzebruch atlas transitions") {
  CHECK(s_delta_atlas_check(0));
  CHECK(s_delta_atlas_check(1));
  CHECK(s_delta_atlas_check(5));
}
