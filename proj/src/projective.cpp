#include "foliate/projective.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "foliate/elimination.hpp"
#include "foliate/error.hpp"

namespace foliate {

namespace {

std::optional<int> homogeneous_degree(const MPoly& f) {
  if (f.is_zero()) return std::nullopt;
  int deg = -1;
  for (const auto& [e, c] : f.terms()) {
    int d = 0;
    for (unsigned x : e) d += static_cast<int>(x);
    if (deg >= 0 && d != deg) throw Error(ErrorKind::NotHomogeneous, "'" + f.to_string() + "' is not homogeneous");
    deg = d;
  }
  return deg;
}

MPoly var(const VarList& vars, std::size_t i) { return MPoly::variable(vars, i); }

}  // namespace

int validate_projective_form(const ProjectiveForm& w) {
  const VarList& vars = w.a0.vars();
  if (vars.size() != 3) throw Error(ErrorKind::DimensionMismatch, "projective forms live over three variables");
  std::array<MPoly, 3> a{w.a0, w.a1.with_vars(vars), w.a2.with_vars(vars)};
  std::optional<int> deg;
  for (const auto& c : a) {
    auto d = homogeneous_degree(c);
    if (!d) continue;
    if (deg && *deg != *d) throw Error(ErrorKind::NotHomogeneous, "coefficients have different degrees");
    deg = d;
  }
  if (!deg) throw Error(ErrorKind::ZeroForm, "zero projective form");
  MPoly euler(vars);
  for (std::size_t i = 0; i < 3; ++i) euler += var(vars, i) * a[i];
  if (!euler.is_zero()) throw Error(ErrorKind::EulerViolation, "Euler relation fails: " + euler.to_string());
  if (!certify_no_common_factor({a.begin(), a.end()}))
    throw Error(ErrorKind::CommonFactor, "coefficients share a common factor");
  return *deg - 1;
}

const VarList& hirzebruch_vars() {
  static const VarList v{"X0", "X1", "Y0", "Y1"};
  return v;
}

std::optional<BiDegree> bidegree(const MPoly& f, int delta) {
  if (f.is_zero()) return std::nullopt;
  MPoly g = f.vars() == hirzebruch_vars() ? f : f.with_vars(hirzebruch_vars());
  std::optional<BiDegree> out;
  for (const auto& [e, c] : g.terms()) {
    BiDegree bd{static_cast<int>(e[0] + e[1]) - delta * static_cast<int>(e[3]), static_cast<int>(e[2] + e[3])};
    if (out && !(*out == bd))
      throw Error(ErrorKind::NotBiHomogeneous, "'" + f.to_string() + "' is not bi-homogeneous");
    out = bd;
  }
  return out;
}

BiDegree validate_hirzebruch_form(const HirzebruchForm& h) {
  const VarList& v = hirzebruch_vars();
  const int d = h.delta;
  std::array<MPoly, 4> c{h.a0.with_vars(v), h.a1.with_vars(v), h.b0.with_vars(v), h.b1.with_vars(v)};
  const std::array<BiDegree, 4> dweight{BiDegree{1, 0}, BiDegree{1, 0}, BiDegree{0, 1}, BiDegree{-d, 1}};
  std::optional<BiDegree> common;
  for (std::size_t i = 0; i < 4; ++i) {
    auto bd = bidegree(c[i], d);
    if (!bd) continue;
    BiDegree total = *bd + dweight[i];
    if (common && !(*common == total))
      throw Error(ErrorKind::NotBiHomogeneous, "coefficients of the form have different bi-degrees");
    common = total;
  }
  if (!common) throw Error(ErrorKind::ZeroForm, "zero form");
  MPoly e1 = var(v, 0) * c[0] + var(v, 1) * c[1] - Rational(d) * var(v, 3) * c[3];
  MPoly e2 = var(v, 2) * c[2] + var(v, 3) * c[3];
  if (!e1.is_zero() || !e2.is_zero())
    throw Error(ErrorKind::EulerViolation, "Euler relations fail: " + e1.to_string() + "; " + e2.to_string());
  return *common;
}

BiDegree foliation_bidegree(const BiDegree& ab, int delta) { return {ab.a - 2 + delta, ab.b - 2}; }

long milnor_count(long d1, long d2, long delta) { return (d2 + 1) * (2 * (d1 + 1) + delta * d2) + 2; }

long radial_equation(long d1, long d2, long delta) {
  return 6 * d1 * d2 + 4 * d1 + 4 * d2 + 3 * delta * d2 * d2 + 2 * delta * d2 + 8;
}

std::vector<DiophantineSolution> solve_radial_diophantine(long delta) {
  if (delta < 0) throw Error(ErrorKind::InvalidInput, "surface index must be non-negative");
  // d1 (6 d2 + 4) = -(3δ d2² + (4 + 2δ) d2 + 8). Integrality of d1 forces
  // |d2 - 2| ≥ |3 d2 + 2| or d2 = 2, hence -2 ≤ d2 ≤ 2.
  const std::map<long, int> situation{{-2, 1}, {0, 2}, {2, 3}, {-1, 4}};
  std::vector<DiophantineSolution> out;
  for (long d2 = -2; d2 <= 2; ++d2) {
    const long num = -(3 * delta * d2 * d2 + (4 + 2 * delta) * d2 + 8);
    const long den = 6 * d2 + 4;
    if (num % den != 0) continue;
    DiophantineSolution s{num / den, d2, situation.count(d2) ? situation.at(d2) : 0, false};
    s.realizable = s.situation == 1 || (s.situation == 2 && delta == 0);
    out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.situation < b.situation; });
  return out;
}

long picard_pairing(const BiDegree& c1, const BiDegree& c2, int delta) {
  return static_cast<long>(c1.a) * c2.b + static_cast<long>(c2.a) * c1.b + static_cast<long>(c1.b) * c2.b * delta;
}

// ---------------------------------------------------------------------------
// Tubes

namespace {

RatFunc laurent(const VarList& vars, std::vector<int> exps, const Rational& c = 1) {
  Exponent num(vars.size(), 0), den(vars.size(), 0);
  for (std::size_t i = 0; i < exps.size(); ++i) (exps[i] >= 0 ? num[i] : den[i]) = static_cast<unsigned>(std::abs(exps[i]));
  return RatFunc(MPoly::monomial(vars, num, c), MPoly::monomial(vars, den));
}

RatFunc rvar(const VarList& vars, std::size_t i) { return RatFunc(MPoly::variable(vars, i)); }

/// Reads an image of the form x^s * t where t is the coordinate `other`.
std::optional<int> x_exponent(const RatFunc& f, std::size_t other) {
  Rational c;
  std::vector<int> e;
  if (!f.as_laurent_monomial(c, e) || c != 1) return std::nullopt;
  for (std::size_t i = 1; i < e.size(); ++i)
    if (e[i] != (i == other ? 1 : 0)) return std::nullopt;
  return e[0];
}

}  // namespace

TubeAudit tube_transition_audit(int alpha, int beta) {
  if (alpha < 0 || beta < 1) throw Error(ErrorKind::InvalidInput, "tube needs alpha >= 0 and beta >= 1");
  TubeAudit out;
  out.alpha = alpha;
  out.beta = beta;
  const int s = alpha + beta;
  const VarList xyz{"x", "y", "z"}, uvw{"u", "v", "w"};
  // (u,v,w) in terms of (x,y,z).
  RatMap tube{uvw, xyz, {laurent(xyz, {-1, 0, 0}), laurent(xyz, {beta, 1, 0}), laurent(xyz, {-alpha, 0, 1})}};

  // Chart where the exceptional coordinate is z (resp. w): y = y1 z1, z = z1.
  const VarList c11{"x1", "y1", "z1"}, c21{"u1", "v1", "w1"};
  RatMap blow11{xyz, c11, {rvar(c11, 0), rvar(c11, 1) * rvar(c11, 2), rvar(c11, 2)}};
  RatMap inv21{c21, uvw, {rvar(uvw, 0), rvar(uvw, 1) / rvar(uvw, 2), rvar(uvw, 2)}};
  RatMap t1 = compose(blow11, compose(tube, inv21));

  // Chart where the exceptional coordinate is y (resp. v): z = y2 z2.
  const VarList c12{"x2", "y2", "z2"}, c22{"u2", "v2", "w2"};
  const VarList c12s{"x2", "y2", "zt2"}, c22s{"u2", "v2", "wt2"};
  RatMap blow12{xyz, c12, {rvar(c12, 0), rvar(c12, 1), rvar(c12, 1) * rvar(c12, 2)}};
  RatMap inv22{c22, uvw, {rvar(uvw, 0), rvar(uvw, 1), rvar(uvw, 2) / rvar(uvw, 1)}};
  // A generic section z2 = Σ a_i x2^(s-i) is moved to zt2 = 0 on both sides.
  RatFunc section_x = RatFunc(MPoly(c12s)), section_u = RatFunc(MPoly(c22));
  for (int i = 0; i <= s; ++i) {
    const Rational a = i + 1;
    section_x = section_x + laurent(c12s, {s - i, 0, 0}, a);
    section_u = section_u + laurent(c22, {i, 0, 0}, a);
  }
  RatMap shear_in{c12, c12s, {rvar(c12s, 0), rvar(c12s, 1), rvar(c12s, 2) + section_x}};
  RatMap shear_out{c22s, c22, {rvar(c22, 0), rvar(c22, 1), rvar(c22, 2) - section_u}};
  RatMap t2 = compose(shear_in, compose(blow12, compose(tube, compose(inv22, shear_out))));

  auto check_u = [](const RatFunc& f) { return x_exponent(f, 99).value_or(0) == -1; };
  auto v1 = x_exponent(t1.images[1], 1), w1 = x_exponent(t1.images[2], 2);
  auto v2 = x_exponent(t2.images[1], 1), w2 = x_exponent(t2.images[2], 2);
  if (!check_u(t1.images[0]) || !check_u(t2.images[0]) || !v1 || !w1 || !v2 || !w2) {
    out.note = "transition is not monomial";
    return out;
  }
  out.surface_index = *v1;
  out.l0_child = BiDegree{-*w1, *v1};
  out.generic_child = BiDegree{-*w2, *v2};
  out.l0_self_intersection = picard_pairing({-out.surface_index, 1}, {-out.surface_index, 1}, out.surface_index);
  out.ok = out.surface_index == s && *out.l0_child == BiDegree{alpha, s} && *out.generic_child == BiDegree{s, beta} &&
           out.l0_self_intersection == -s;
  if (!out.ok) out.note = "orders differ from the expected tube data";
  return out;
}

bool s_delta_atlas_check(int delta) {
  const VarList& h = hirzebruch_vars();
  const RatFunc X0 = rvar(h, 0), X1 = rvar(h, 1), Y0 = rvar(h, 2), Y1 = rvar(h, 3);
  const std::array<std::string, 4> names{"00", "10", "01", "11"};
  std::array<VarList, 4> cv;
  for (std::size_t k = 0; k < 4; ++k) cv[k] = {"x" + names[k], "y" + names[k]};
  // Chart coordinates as invariant quotients.
  const std::array<std::array<RatFunc, 2>, 4> quotient{{
      {X1 / X0, X0.pow(delta) * Y1 / Y0},
      {X0 / X1, X1.pow(delta) * Y1 / Y0},
      {X1 / X0, Y0 / (X0.pow(delta) * Y1)},
      {X0 / X1, Y0 / (X1.pow(delta) * Y1)},
  }};
  // Homogeneous coordinates of a chart point.
  auto section = [&](std::size_t k) {
    RatFunc x = rvar(cv[k], 0), y = rvar(cv[k], 1), one = RatFunc(MPoly::constant(cv[k], 1));
    switch (k) {
      case 0: return RatMap{h, cv[k], {one, x, one, y}};
      case 1: return RatMap{h, cv[k], {x, one, one, y}};
      case 2: return RatMap{h, cv[k], {one, x, y, one}};
      default: return RatMap{h, cv[k], {x, one, y, one}};
    }
  };
  std::array<std::array<RatMap, 4>, 4> t;
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) {
      RatMap s = section(b);
      t[a][b] = RatMap{cv[a], cv[b], {substitute(quotient[a][0], s), substitute(quotient[a][1], s)}};
    }
  for (std::size_t a = 0; a < 4; ++a) {
    RatMap id{cv[a], cv[a], {rvar(cv[a], 0), rvar(cv[a], 1)}};
    if (!(t[a][a] == id)) return false;
    for (std::size_t b = 0; b < 4; ++b) {
      if (!(compose(t[b][a], t[a][b]) == id)) return false;
      for (std::size_t c = 0; c < 4; ++c)
        if (!(compose(t[b][c], t[a][b]) == t[a][c])) return false;
    }
  }
  // The transitions as written in the atlas.
  auto x = [&](std::size_t k) { return rvar(cv[k], 0); };
  auto y = [&](std::size_t k) { return rvar(cv[k], 1); };
  RatFunc one00 = RatFunc(MPoly::constant(cv[1], 1));
  if (!(t[0][1] == RatMap{cv[0], cv[1], {one00 / x(1), x(1).pow(delta) * y(1)}})) return false;
  RatFunc one02 = RatFunc(MPoly::constant(cv[2], 1));
  if (!(t[0][2] == RatMap{cv[0], cv[2], {x(2), one02 / y(2)}})) return false;
  RatFunc one13 = RatFunc(MPoly::constant(cv[3], 1));
  if (!(t[1][3] == RatMap{cv[1], cv[3], {x(3), one13 / y(3)}})) return false;
  if (!(t[2][3] == RatMap{cv[2], cv[3], {one13 / x(3), y(3) / x(3).pow(delta)}})) return false;
  return true;
}

}  // namespace foliate
