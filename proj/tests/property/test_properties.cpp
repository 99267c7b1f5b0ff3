#include <doctest.h>

#include <random>

#include "foliate/projective.hpp"
#include "helpers.hpp"

using namespace foliate;
using namespace testing_support;

namespace {

constexpr int kCases = 500;

/// Deterministic generator of small random algebraic data.
class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rational coeff() {
    int num = 0;
    while (num == 0) num = uniform(-5, 5);
    Rational q(num, uniform(1, 3));
    q.canonicalize();
    return q;
  }

  Exponent exponent(std::size_t nvars, int max_deg) {
    Exponent e(nvars, 0);
    const int deg = uniform(0, max_deg);
    for (int i = 0; i < deg; ++i) e[std::size_t(uniform(0, int(nvars) - 1))] += 1;
    return e;
  }

  MPoly poly(const VarList& vars, int max_terms = 4, int max_deg = 3) {
    MPoly f(vars);
    const int n = uniform(0, max_terms);
    for (int i = 0; i < n; ++i) f.add_term(exponent(vars.size(), max_deg), coeff());
    return f;
  }

  MPoly nonzero_poly(const VarList& vars, int max_terms = 4, int max_deg = 3) {
    for (;;) {
      MPoly f = poly(vars, max_terms, max_deg);
      if (!f.is_zero()) return f;
    }
  }

  /// Polynomial whose every monomial involves one of `inside`, so it
  /// vanishes on the coordinate subspace cut out by those variables.
  MPoly poly_in_ideal(const VarList& vars, const std::vector<std::size_t>& inside, int terms) {
    MPoly f(vars);
    while (f.is_zero()) {
      for (int i = 0; i < terms; ++i) {
        Exponent e = exponent(vars.size(), 3);
        e[inside[std::size_t(uniform(0, int(inside.size()) - 1))]] += 1;
        f.add_term(e, coeff());
      }
    }
    return f;
  }

  PolyMap poly_map(const VarList& vars) {
    PolyMap m{vars, vars, {}};
    for (std::size_t i = 0; i < vars.size(); ++i) m.images.push_back(poly(vars, 3, 2));
    return m;
  }

  /// Bi-homogeneous polynomial of bi-degree (a, b) on a Hirzebruch surface.
  MPoly bihomogeneous(int a, int b, int delta) {
    MPoly f(hirzebruch_vars());
    for (int t = 0; t < 3; ++t) {
      const int e = uniform(0, b);
      const int xdeg = a + delta * e;
      if (xdeg < 0) continue;
      const int x0 = uniform(0, xdeg);
      f.add_term(Exponent{unsigned(x0), unsigned(xdeg - x0), unsigned(b - e), unsigned(e)}, coeff());
    }
    return f;
  }

 private:
  std::mt19937 rng_;
};

MPoly one(const VarList& v) { return MPoly::constant(v, 1); }

}  // namespace

TEST_CASE("polynomial ring axioms") {
  Gen g(1);
  for (int i = 0; i < kCases; ++i) {
    const MPoly a = g.poly(xyz()), b = g.poly(xyz()), c = g.poly(xyz());
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + MPoly(xyz()) == a);
    CHECK(a * one(xyz()) == a);
    CHECK((a + (-a)).is_zero());
    CHECK((a - b) + b == a);
  }
}

TEST_CASE("substitution is a ring homomorphism") {
  Gen g(2);
  for (int i = 0; i < kCases; ++i) {
    const MPoly a = g.poly(xyz()), b = g.poly(xyz());
    const PolyMap m = g.poly_map(xyz());
    CHECK(substitute(a + b, m) == substitute(a, m) + substitute(b, m));
    CHECK(substitute(a * b, m) == substitute(a, m) * substitute(b, m));
    CHECK(substitute(one(xyz()), m) == one(xyz()));
  }
}

TEST_CASE("pullback commutes with the exterior derivative") {
  Gen g(3);
  for (int i = 0; i < kCases; ++i) {
    const MPoly f = g.poly(xyz());
    const PolyMap m = g.poly_map(xyz());
    CHECK(pullback(d(f), m) == d(substitute(f, m)));
  }
}

TEST_CASE("d of d vanishes") {
  Gen g(4);
  for (int i = 0; i < kCases; ++i) {
    CHECK(d(d(g.poly(xyz()))).is_zero());
    OneForm w(xyz(), {g.poly(xyz()), g.poly(xyz()), g.poly(xyz())});
    CHECK(d(d(w)).is_zero());
  }
}

TEST_CASE("integrability is preserved by every blow-up chart") {
  Gen g(5);
  BlowupOptions opt;
  opt.allow_non_admissible = true;
  int checked = 0;
  for (int i = 0; i < kCases; ++i) {
    const MPoly f = g.poly_in_ideal(xyz(), {1, 2}, 3);
    const MPoly u = one(xyz()) + g.poly(xyz(), 2, 1);
    const OneForm w = remove_monomial_content(d(f).scaled(u));
    if (w.is_zero()) continue;
    REQUIRE(check_integrability(w));
    const FoliatedChart c = make_chart(w, {});
    const bool point = i % 2 == 1;
    const BlowupResult r = point ? blowup(c, CenterSpec::point(), opt) : blowup(c, CenterSpec::curve({"y", "z"}), opt);
    for (const auto& ch : r.children) {
      CHECK(check_integrability(ch.chart.form));
      CHECK(pullback(w, ch.map) == ch.chart.form.scaled(MPoly::variable(xyz(), ch.exceptional_var).pow(ch.k)));
    }
    ++checked;
  }
  CHECK(checked >= kCases * 9 / 10);
}

TEST_CASE("generic order is additive") {
  Gen g(6);
  const VarList center{"y", "z"};
  for (int i = 0; i < kCases; ++i) {
    const MPoly a = g.nonzero_poly(xyz()), b = g.nonzero_poly(xyz());
    CHECK(*generic_order(a * b, center) == *generic_order(a, center) + *generic_order(b, center));
    CHECK_FALSE(generic_order(a * MPoly(xyz()), center).has_value());
  }
}

TEST_CASE("division undoes multiplication") {
  Gen g(7);
  for (int i = 0; i < kCases; ++i) {
    const MPoly a = g.poly(xyz());
    const MPoly b = g.nonzero_poly(xyz());
    CHECK(divide_exact(a * b, b) == a);
    const unsigned k = unsigned(g.uniform(0, 3));
    const std::string v = xyz()[std::size_t(g.uniform(0, 2))];
    CHECK(divide_by_var_power(a * MPoly::variable(xyz(), v).pow(k), v, k) == a);
  }
}

TEST_CASE("dicriticality agrees between the classifier and the transform") {
  Gen g(8);
  BlowupOptions opt;
  opt.allow_non_admissible = true;
  int dicritical = 0, non_dicritical = 0;
  for (int i = 0; i < kCases; ++i) {
    // Even cases: holomorphic f. Odd cases: f = p / q, cleared to q dp - p dq.
    const MPoly p = g.poly_in_ideal(xyz(), {1, 2}, g.uniform(3, 6));
    const MPoly u = one(xyz()) + g.poly(xyz(), 2, 1);
    OneForm df = d(p);
    if (i % 2 == 1) {
      const MPoly q = g.poly_in_ideal(xyz(), {1, 2}, g.uniform(2, 4));
      df = d(p).scaled(q) + (-d(q).scaled(p));
    }
    const OneForm w = remove_monomial_content(df.scaled(u));
    if (w.is_zero()) continue;
    const MonoidalClass cls = classify_monoidal(w, {"y", "z"});
    const BlowupResult r = monoidal_blowup(make_chart(w, {}), CenterSpec::curve({"y", "z"}), opt);
    CHECK((cls.kind != MonoidalKind::NDic) == r.dicritical);
    for (const auto& ch : r.children) CHECK(ch.dicritical == r.dicritical);
    (r.dicritical ? dicritical : non_dicritical) += 1;
  }
  CHECK(dicritical >= 50);
  CHECK(non_dicritical >= 50);
}

TEST_CASE("resultant vanishes on a shared factor") {
  Gen g(9);
  for (int i = 0; i < kCases; ++i) {
    const MPoly h = MPoly::variable(xyz(), "z") + g.poly(xyz(), 2, 1).set_var(2, 0);
    const MPoly a = g.nonzero_poly(xyz(), 3, 2) * h;
    const MPoly b = g.nonzero_poly(xyz(), 3, 2) * h;
    CHECK(resultant(a, b, "z").is_zero());
  }
}

TEST_CASE("bi-degree is additive under products") {
  Gen g(10);
  int checked = 0;
  for (int i = 0; i < kCases; ++i) {
    const int delta = g.uniform(0, 4);
    const int a1 = g.uniform(0, 4), b1 = g.uniform(0, 3), a2 = g.uniform(0, 4), b2 = g.uniform(0, 3);
    const MPoly f = g.bihomogeneous(a1, b1, delta), h = g.bihomogeneous(a2, b2, delta);
    if (f.is_zero() || h.is_zero()) continue;
    const auto df = bidegree(f, delta), dh = bidegree(h, delta), dfh = bidegree(f * h, delta);
    REQUIRE(df.has_value());
    REQUIRE(dh.has_value());
    REQUIRE(dfh.has_value());
    CHECK(*dfh == *df + *dh);
    ++checked;
  }
  CHECK(checked >= kCases * 9 / 10);
}
