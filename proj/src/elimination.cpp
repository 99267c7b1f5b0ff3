#include "foliate/elimination.hpp"

#include <algorithm>
#include <set>

#include "foliate/error.hpp"

namespace foliate {

MPoly determinant(std::vector<std::vector<MPoly>> m, const VarList& vars) {
  const std::size_t n = m.size();
  if (n == 0) return MPoly::constant(vars, 1);
  for (const auto& row : m)
    if (row.size() != n) throw Error(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
  bool negate = false;
  MPoly prev = MPoly::constant(vars, 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && m[pivot][k].is_zero()) ++pivot;
      if (pivot == n) return MPoly(vars);
      std::swap(m[k], m[pivot]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = divide_exact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      m[i][k] = MPoly(vars);
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

MPoly resultant(const MPoly& f, const MPoly& g, std::string_view var) {
  if (f.is_zero() || g.is_zero()) throw Error(ErrorKind::ZeroInput, "resultant of a zero polynomial");
  if (f.vars() != g.vars()) throw Error(ErrorKind::VariableMismatch, "resultant operands over different variables");
  const std::size_t v = f.index_of(var);
  auto fc = coefficients_in(f, v);
  auto gc = coefficients_in(g, v);
  const std::size_t df = fc.size() - 1, dg = gc.size() - 1, n = df + dg;
  const VarList& vars = f.vars();
  if (n == 0) return MPoly::constant(vars, 1);
  std::vector<std::vector<MPoly>> s(n, std::vector<MPoly>(n, MPoly(vars)));
  for (std::size_t r = 0; r < dg; ++r)
    for (std::size_t i = 0; i <= df; ++i) s[r][r + i] = fc[i];
  for (std::size_t r = 0; r < df; ++r)
    for (std::size_t j = 0; j <= dg; ++j) s[dg + r][r + j] = gc[j];
  return determinant(std::move(s), vars);
}

bool coprime(const MPoly& f, const MPoly& g) {
  if (f.is_zero()) return g.is_constant() && !g.is_zero();
  if (g.is_zero()) return f.is_constant();
  if (f.is_constant() || g.is_constant()) return true;
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    if (f.degree_in(i) <= 0 || g.degree_in(i) <= 0) continue;
    if (resultant(f, g, f.vars()[i]).is_zero()) return false;
  }
  return true;
}

Exponent common_monomial_content(const std::vector<MPoly>& polys) {
  std::optional<Exponent> acc;
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    Exponent m = p.monomial_content();
    if (!acc) acc = m;
    else
      for (std::size_t i = 0; i < m.size(); ++i) (*acc)[i] = std::min((*acc)[i], m[i]);
  }
  if (!acc) return Exponent(polys.empty() ? 0 : polys.front().nvars(), 0);
  return *acc;
}

bool certify_no_common_factor(const std::vector<MPoly>& polys) {
  std::vector<MPoly> nz;
  for (const auto& p : polys)
    if (!p.is_zero()) nz.push_back(p);
  if (nz.empty()) return false;
  for (const auto& p : nz)
    if (p.is_constant()) return true;
  if (nz.size() == 1) return false;
  // Any coprime pair settles it.
  for (std::size_t i = 0; i < nz.size(); ++i)
    for (std::size_t j = i + 1; j < nz.size(); ++j)
      if (coprime(nz[i], nz[j])) return true;
  // gcd(all) divides every linear combination, so a coprime (p, combo) pair
  // is a certificate as well.
  std::sort(nz.begin(), nz.end(), [](const MPoly& a, const MPoly& b) { return a.terms().size() < b.terms().size(); });
  const long weights[] = {2, 3, 5, 7};
  for (long w : weights) {
    MPoly combo(nz[0].vars());
    Rational lambda = 1;
    for (std::size_t i = 1; i < nz.size(); ++i) {
      combo += nz[i] * lambda;
      lambda *= w;
    }
    if (!combo.is_zero() && coprime(nz[0], combo)) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Univariate arithmetic on dense coefficient vectors.

namespace {

using Dense = std::vector<Rational>;  // lowest degree first

void trim(Dense& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Dense to_dense(const MPoly& f, std::size_t var) {
  Dense out;
  for (const auto& [e, c] : f.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != var && e[i] != 0) throw Error(ErrorKind::InvalidInput, "polynomial is not univariate in " + f.vars()[var]);
    if (out.size() <= e[var]) out.resize(e[var] + 1, Rational(0));
    out[e[var]] = c;
  }
  trim(out);
  return out;
}

MPoly from_dense(const Dense& a, const VarList& vars, std::size_t var) {
  MPoly out(vars);
  Exponent e(vars.size(), 0);
  for (std::size_t k = 0; k < a.size(); ++k) {
    e[var] = static_cast<unsigned>(k);
    out.add_term(e, a[k]);
  }
  return out;
}

Dense dense_rem(Dense a, const Dense& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rational q = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

Dense dense_gcd(Dense a, Dense b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Dense r = dense_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rational lc = a.back();
    for (auto& c : a) c /= lc;
  }
  return a;
}

Dense dense_div(Dense a, const Dense& b) {
  trim(a);
  if (a.size() < b.size()) return {};
  Dense q(a.size() - b.size() + 1, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    Rational c = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    a.pop_back();
    trim(a);
  }
  return q;
}

Rational dense_eval(const Dense& a, const Rational& x) {
  Rational acc = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<Integer> positive_divisors(Integer n, std::size_t budget) {
  if (n < 0) n = -n;
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (budget-- == 0) break;
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

MPoly univariate_gcd(const MPoly& f, const MPoly& g, std::size_t var) {
  return from_dense(dense_gcd(to_dense(f, var), to_dense(g, var)), f.vars(), var);
}

MPoly squarefree_part(const MPoly& f, std::size_t var) {
  Dense a = to_dense(f, var);
  if (a.size() <= 1) return from_dense(a, f.vars(), var);
  Dense da(a.size() - 1);
  for (std::size_t k = 1; k < a.size(); ++k) da[k - 1] = a[k] * static_cast<long>(k);
  Dense g = dense_gcd(a, da);
  Dense q = dense_div(a, g);
  Rational lc = q.back();
  for (auto& c : q) c /= lc;
  return from_dense(q, f.vars(), var);
}

std::vector<Rational> rational_roots(const MPoly& f, std::size_t var) {
  Dense a = to_dense(f, var);
  std::vector<Rational> roots;
  if (a.size() <= 1) return roots;
  std::size_t low = 0;
  while (a[low] == 0) ++low;
  if (low > 0) {
    roots.push_back(0);
    a.erase(a.begin(), a.begin() + static_cast<long>(low));
  }
  if (a.size() > 1) {
    // Clear denominators to get integer coefficients.
    Integer l = 1;
    for (const auto& c : a) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> ints;
    for (const auto& c : a) ints.push_back(Integer(c * l));
    const std::size_t budget = 2'000'000;
    auto ps = positive_divisors(ints.front(), budget);
    auto qs = positive_divisors(ints.back(), budget);
    std::set<Rational> found;
    for (const auto& p : ps)
      for (const auto& q : qs)
        for (int sign : {1, -1}) {
          Rational cand(Integer(p * sign), q);
          cand.canonicalize();
          if (dense_eval(a, cand) == 0) found.insert(cand);
        }
    roots.insert(roots.end(), found.begin(), found.end());
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

const char* zero_set_name(ZeroSet z) {
  switch (z) {
    case ZeroSet::Empty: return "Empty";
    case ZeroSet::NonEmpty: return "NonEmpty";
    case ZeroSet::Inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

namespace {

std::vector<std::size_t> used_vars(const std::vector<MPoly>& polys) {
  std::set<std::size_t> used;
  for (const auto& p : polys)
    for (const auto& [e, c] : p.terms())
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i]) used.insert(i);
  return {used.begin(), used.end()};
}

ZeroSetResult univariate_case(const std::vector<MPoly>& polys, std::size_t var) {
  MPoly g = polys.front();
  for (std::size_t i = 1; i < polys.size(); ++i) g = univariate_gcd(g, polys[i], var);
  ZeroSetResult r;
  if (g.is_constant()) {
    r.verdict = ZeroSet::Empty;
    r.note = "univariate gcd is constant";
    return r;
  }
  r.verdict = ZeroSet::NonEmpty;
  r.note = "common factor " + g.to_string();
  auto roots = rational_roots(g, var);
  if (!roots.empty()) {
    std::vector<Rational> w(polys.front().nvars(), Rational(0));
    w[var] = roots.front();
    r.witness = w;
  }
  return r;
}

// With the variable `fixed` set to `value`, looks for a common zero.
std::optional<std::vector<Rational>> witness_on_line(const std::vector<MPoly>& polys, std::size_t fixed,
                                                     const Rational& value, std::size_t free_var) {
  std::vector<MPoly> restricted;
  for (const auto& p : polys) {
    MPoly q = p.set_var(fixed, value);
    if (!q.is_zero()) restricted.push_back(q);
  }
  std::vector<Rational> w(polys.front().nvars(), Rational(0));
  w[fixed] = value;
  if (restricted.empty()) return w;
  for (const auto& q : restricted)
    if (q.is_constant()) return std::nullopt;
  MPoly g = restricted.front();
  for (std::size_t i = 1; i < restricted.size(); ++i) g = univariate_gcd(g, restricted[i], free_var);
  if (g.is_constant()) return std::nullopt;
  auto roots = rational_roots(g, free_var);
  if (roots.empty()) return std::nullopt;
  w[free_var] = roots.front();
  return w;
}

}  // namespace

ZeroSetResult common_zero_set(const std::vector<MPoly>& input) {
  ZeroSetResult r;
  std::vector<MPoly> polys;
  for (const auto& p : input)
    if (!p.is_zero()) polys.push_back(p);
  const std::size_t n = input.empty() ? 0 : input.front().nvars();
  if (polys.empty()) {
    r.verdict = ZeroSet::NonEmpty;
    r.witness = std::vector<Rational>(n, Rational(0));
    r.note = "all generators vanish identically";
    return r;
  }
  for (const auto& p : polys)
    if (p.is_constant()) {
      r.verdict = ZeroSet::Empty;
      r.note = "nonzero constant generator";
      return r;
    }
  bool origin = std::all_of(polys.begin(), polys.end(), [](const MPoly& p) { return p.constant_term() == 0; });
  if (origin) {
    r.verdict = ZeroSet::NonEmpty;
    r.witness = std::vector<Rational>(n, Rational(0));
    r.note = "all generators vanish at the origin";
    return r;
  }
  auto used = used_vars(polys);
  if (used.size() == 1) return univariate_case(polys, used.front());
  if (polys.size() == 1) {
    r.verdict = ZeroSet::NonEmpty;
    r.note = "single non-constant generator";
    return r;
  }
  if (polys.size() == 2 && !coprime(polys[0], polys[1])) {
    r.verdict = ZeroSet::NonEmpty;
    r.note = "generators share a common factor";
    return r;
  }
  if (used.size() == 2) {
    const std::size_t u = used[0], v = used[1];
    for (std::size_t i = 0; i < polys.size(); ++i)
      for (std::size_t j = i + 1; j < polys.size(); ++j)
        for (std::size_t elim : {u, v}) {
          MPoly res = resultant(polys[i], polys[j], polys[i].vars()[elim]);
          if (res.is_constant() && !res.is_zero()) {
            r.verdict = ZeroSet::Empty;
            r.note = "constant resultant in " + polys[i].vars()[elim];
            return r;
          }
        }
    for (std::size_t i = 0; i < polys.size(); ++i)
      for (std::size_t j = i + 1; j < polys.size(); ++j)
        for (std::size_t elim : {u, v}) {
          const std::size_t keep = elim == u ? v : u;
          MPoly res = resultant(polys[i], polys[j], polys[i].vars()[elim]);
          if (res.is_zero()) continue;
          for (const auto& root : rational_roots(res, keep))
            if (auto w = witness_on_line(polys, keep, root, elim)) {
              r.verdict = ZeroSet::NonEmpty;
              r.witness = w;
              r.note = "rational common zero";
              return r;
            }
        }
  }
  r.verdict = ZeroSet::Inconclusive;
  r.note = "no certificate found";
  return r;
}

}  // namespace foliate
