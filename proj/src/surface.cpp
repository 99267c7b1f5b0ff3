#include "foliate/surface.hpp"

#include <algorithm>

namespace foliate {

namespace {

std::vector<Rational> dense(const MPoly& f, std::size_t var) {
  std::vector<Rational> out;
  for (const auto& [e, c] : f.terms()) {
    if (out.size() <= e[var]) out.resize(e[var] + 1, Rational(0));
    out[e[var]] = c;
  }
  return out;
}

Rational at(const std::vector<Rational>& a, std::size_t i) { return i < a.size() ? a[i] : Rational(0); }

void require_2d(const OneForm& w) {
  if (w.dim() != 2) throw Error(ErrorKind::DimensionMismatch, "expected a form in two variables");
}

bool origin_singular(const OneForm& w) {
  std::vector<Rational> o(w.dim(), Rational(0));
  return is_singular_at(w, o);
}

}  // namespace

Rational camacho_sad_index(const OneForm& w, std::string_view curve_var) {
  require_2d(w);
  const std::size_t c = w[0].index_of(curve_var);
  const std::size_t t = 1 - c;
  MPoly abar;
  try {
    abar = divide_by_var_power(w[t], curve_var, 1);
  } catch (const Error&) {
    throw Error(ErrorKind::CurveNotInvariant, "curve " + std::string(curve_var) + " = 0 is not invariant");
  }
  MPoly b = w[c].set_var(c, 0);
  if (b.is_zero()) throw Error(ErrorKind::UndefinedIndex, "index undefined: restricted coefficient vanishes");
  auto num = dense(abar.set_var(c, 0), t);
  auto den = dense(b, t);
  std::size_t m = 0;
  while (den[m] == 0) ++m;
  if (m == 0) return 0;
  const int bound = std::max(w[0].total_degree(), w[1].total_degree()) + 2;
  if (static_cast<int>(m) - 1 > bound)
    throw Error(ErrorKind::IrrationalResidue, "pole order exceeds the supported truncation");
  std::vector<Rational> u(den.begin() + static_cast<long>(m), den.end());
  // Series quotient num / u up to degree m - 1.
  std::vector<Rational> q(m, Rational(0));
  for (std::size_t n = 0; n < m; ++n) {
    Rational acc = at(num, n);
    for (std::size_t i = 1; i <= n; ++i) acc -= at(u, i) * q[n - i];
    q[n] = acc / u[0];
  }
  return -q[m - 1];
}

LinearPart linear_part(const OneForm& w) {
  require_2d(w);
  std::vector<Rational> o(2, Rational(0));
  const MPoly& a = w[0];
  const MPoly& b = w[1];
  LinearPart l;
  l.m[0][0] = b.derivative(0).evaluate(o);
  l.m[0][1] = b.derivative(1).evaluate(o);
  l.m[1][0] = -a.derivative(0).evaluate(o);
  l.m[1][1] = -a.derivative(1).evaluate(o);
  return l;
}

Rational baum_bott_index(const LinearPart& l) {
  Rational det = l.det();
  if (det == 0) throw Error(ErrorKind::NilpotentOrDegenerate, "linear part is degenerate");
  return l.trace() * l.trace() / det;
}

bool is_cart_wheel(const OneForm& w) {
  require_2d(w);
  if (!origin_singular(w)) throw Error(ErrorKind::RegularOrigin, "origin is not singular");
  LinearPart l = linear_part(w);
  if (!l.is_scalar() || l.m[0][0] == 0) return false;
  BlowupResult r = quadratic_blowup(make_chart(w, {}));
  if (!r.dicritical) return false;
  for (const auto& ch : r.children)
    if (tangency_locus(ch.chart, ch.exceptional_var).zero_set.verdict != ZeroSet::Empty) return false;
  return true;
}

IndexAudit blowup_index_audit(const OneForm& w, const std::string& axis) {
  require_2d(w);
  if (!origin_singular(w)) throw Error(ErrorKind::RegularOrigin, "origin is not singular");
  IndexAudit audit;
  FoliatedChart root = make_chart(w, {});
  BlowupResult r = quadratic_blowup(root);
  audit.dicritical = r.dicritical;
  if (!axis.empty()) {
    try {
      audit.axis_index_before = camacho_sad_index(w, axis);
    } catch (const Error&) {
    }
  }
  const VarList& vars = w.vars;
  // Strict transform of the axis, at its point on the exceptional line.
  for (const auto& ch : r.children) {
    if (axis.empty() || axis == ch.exceptional_var) continue;
    try {
      audit.axis_index_after = camacho_sad_index(ch.chart.form, axis);
    } catch (const Error&) {
    }
  }
  if (audit.dicritical) return audit;

  for (const auto& ch : r.children) {
    const std::size_t e = w[0].index_of(ch.exceptional_var);
    const std::size_t t = 1 - e;
    const OneForm& f = ch.chart.form;
    std::vector<Rational> positions;
    if (e == 0) {
      // Whole exceptional line except one point.
      MPoly g = univariate_gcd(f[0].set_var(e, 0), f[1].set_var(e, 0), t);
      positions = rational_roots(g, t);
      MPoly sq = squarefree_part(g, t);
      audit.irrational_points += static_cast<unsigned>(sq.degree_in(t)) - static_cast<unsigned>(positions.size());
    } else if (origin_singular(f)) {
      positions.push_back(0);
    }
    for (const auto& pos : positions) {
      ExceptionalPoint pt{ch.chart.id, pos, std::nullopt, ""};
      OneForm local = f;
      if (pos != 0) local = shear(ch.chart, vars[t], MPoly::constant(vars, pos)).chart.form;
      try {
        pt.index = camacho_sad_index(local, vars[e]);
        audit.sum += *pt.index;
      } catch (const Error& err) {
        pt.note = err.what();
        audit.partial = true;
      }
      audit.points.push_back(pt);
    }
  }
  if (audit.irrational_points > 0) audit.partial = true;
  return audit;
}

}  // namespace foliate
