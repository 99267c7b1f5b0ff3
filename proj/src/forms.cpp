#include "foliate/forms.hpp"

#include <algorithm>
#include <cctype>

#include "foliate/elimination.hpp"

namespace foliate {

OneForm::OneForm(VarList v, std::vector<MPoly> c) : vars(std::move(v)), coeffs(std::move(c)) {
  if (coeffs.size() != vars.size())
    throw Error(ErrorKind::DimensionMismatch,
                "form has " + std::to_string(coeffs.size()) + " coefficients over " + std::to_string(vars.size()) +
                    " variables");
  for (auto& p : coeffs)
    if (p.vars() != vars) p = p.with_vars(vars);
}

OneForm OneForm::zero(const VarList& vars) { return OneForm(vars, std::vector<MPoly>(vars.size(), MPoly(vars))); }

bool OneForm::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const MPoly& p) { return p.is_zero(); });
}

const MPoly& OneForm::coeff(std::string_view var) const {
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == var) return coeffs[i];
  throw Error(ErrorKind::UnknownVariable, "unknown variable '" + std::string(var) + "'");
}

OneForm OneForm::scaled(const MPoly& f) const {
  OneForm out = *this;
  for (auto& c : out.coeffs) c = c * f;
  return out;
}

OneForm OneForm::operator+(const OneForm& other) const {
  if (vars != other.vars) throw Error(ErrorKind::VariableMismatch, "adding forms over different variables");
  OneForm out = *this;
  for (std::size_t i = 0; i < coeffs.size(); ++i) out.coeffs[i] += other.coeffs[i];
  return out;
}

OneForm OneForm::operator-() const {
  OneForm out = *this;
  for (auto& c : out.coeffs) c = -c;
  return out;
}

std::string OneForm::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < coeffs.size(); ++i) s += (i ? ", " : "") + coeffs[i].to_string();
  s += "] over (";
  for (std::size_t i = 0; i < vars.size(); ++i) s += (i ? "," : "") + vars[i];
  return s + ")";
}

bool operator==(const OneForm& a, const OneForm& b) { return a.vars == b.vars && a.coeffs == b.coeffs; }

MPoly TwoForm::at(std::size_t i, std::size_t j) const {
  if (i == j) return MPoly(vars);
  if (i > j) return -at(j, i);
  auto it = coeffs.find({i, j});
  return it == coeffs.end() ? MPoly(vars) : it->second;
}

bool TwoForm::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const auto& kv) { return kv.second.is_zero(); });
}

MPoly ThreeForm::at(std::size_t i, std::size_t j, std::size_t k) const {
  auto it = coeffs.find({i, j, k});
  return it == coeffs.end() ? MPoly(vars) : it->second;
}

bool ThreeForm::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const auto& kv) { return kv.second.is_zero(); });
}

OneForm d(const MPoly& f) {
  std::vector<MPoly> c;
  for (std::size_t i = 0; i < f.nvars(); ++i) c.push_back(f.derivative(i));
  return OneForm(f.vars(), std::move(c));
}

TwoForm d(const OneForm& w) {
  TwoForm out{w.vars, {}};
  for (std::size_t i = 0; i < w.dim(); ++i)
    for (std::size_t j = i + 1; j < w.dim(); ++j) {
      MPoly c = w[j].derivative(i) - w[i].derivative(j);
      if (!c.is_zero()) out.coeffs[{i, j}] = c;
    }
  return out;
}

ThreeForm d(const TwoForm& w) {
  ThreeForm out{w.vars, {}};
  const std::size_t n = w.vars.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        MPoly c = w.at(j, k).derivative(i) - w.at(i, k).derivative(j) + w.at(i, j).derivative(k);
        if (!c.is_zero()) out.coeffs[{i, j, k}] = c;
      }
  return out;
}

TwoForm wedge(const OneForm& a, const OneForm& b) {
  if (a.vars != b.vars) throw Error(ErrorKind::VariableMismatch, "wedge of forms over different variables");
  TwoForm out{a.vars, {}};
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      MPoly c = a[i] * b[j] - a[j] * b[i];
      if (!c.is_zero()) out.coeffs[{i, j}] = c;
    }
  return out;
}

ThreeForm wedge(const OneForm& a, const TwoForm& b) {
  if (a.vars != b.vars) throw Error(ErrorKind::VariableMismatch, "wedge of forms over different variables");
  ThreeForm out{a.vars, {}};
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        MPoly c = a[i] * b.at(j, k) - a[j] * b.at(i, k) + a[k] * b.at(i, j);
        if (!c.is_zero()) out.coeffs[{i, j, k}] = c;
      }
  return out;
}

bool check_integrability(const OneForm& w) {
  if (w.dim() < 3) return true;
  return wedge(w, d(w)).is_zero();
}

OneForm pullback(const OneForm& w, const PolyMap& m) {
  if (m.source != w.vars) throw Error(ErrorKind::VariableMismatch, "pullback map source differs from form variables");
  m.validate();
  OneForm out = OneForm::zero(m.target);
  for (std::size_t i = 0; i < w.dim(); ++i) {
    if (w[i].is_zero()) continue;
    out = out + d(m.images[i]).scaled(substitute(w[i], m));
  }
  return out;
}

OneForm restrict_to_hyperplane(const OneForm& w, std::string_view var) {
  std::size_t v = w.vars.size();
  for (std::size_t i = 0; i < w.vars.size(); ++i)
    if (w.vars[i] == var) v = i;
  if (v == w.vars.size()) throw Error(ErrorKind::UnknownVariable, "unknown variable '" + std::string(var) + "'");
  VarList rest;
  for (std::size_t i = 0; i < w.vars.size(); ++i)
    if (i != v) rest.push_back(w.vars[i]);
  std::vector<MPoly> c;
  for (std::size_t i = 0; i < w.vars.size(); ++i)
    if (i != v) c.push_back(w[i].set_var(v, 0).with_vars(rest));
  return OneForm(rest, std::move(c));
}

bool is_hyperplane_invariant(const OneForm& w, std::string_view var) {
  return restrict_to_hyperplane(w, var).is_zero();
}

OneForm remove_monomial_content(const OneForm& w) {
  Exponent content = common_monomial_content(w.coeffs);
  OneForm out = w;
  for (auto& c : out.coeffs)
    if (!c.is_zero()) c = c.divide_monomial(content);
  return out;
}

bool has_trivial_content(const OneForm& w) {
  Exponent content = common_monomial_content(w.coeffs);
  return std::all_of(content.begin(), content.end(), [](unsigned e) { return e == 0; });
}

OneForm cleared_differential(const RatFunc& phi) {
  const MPoly& n = phi.num();
  const MPoly& q = phi.den();
  std::vector<MPoly> c;
  for (std::size_t i = 0; i < n.nvars(); ++i) c.push_back(q * n.derivative(i) - n * q.derivative(i));
  return OneForm(n.vars(), std::move(c));
}

OneForm from_closed_rational(const RatFunc& phi) {
  OneForm raw = cleared_differential(phi);
  if (raw.is_zero()) throw Error(ErrorKind::ConstantInput, "first integral is constant");
  OneForm w = remove_monomial_content(raw);
  if (!certify_no_common_factor(w.coeffs))
    throw Error(ErrorKind::UnreducedGenerator, "coefficients " + w.to_string() + " may share a non-monomial factor");
  return w;
}

std::vector<MPoly> singular_generators(const OneForm& w) {
  std::vector<MPoly> out;
  for (const auto& c : w.coeffs)
    if (!c.is_zero()) out.push_back(c);
  return out;
}

std::vector<Rational> evaluate(const OneForm& w, std::span<const Rational> point) {
  if (point.size() != w.dim())
    throw Error(ErrorKind::DimensionMismatch, "point has " + std::to_string(point.size()) + " coordinates, chart has " +
                                                  std::to_string(w.dim()));
  std::vector<Rational> out;
  for (const auto& c : w.coeffs) out.push_back(c.evaluate(point));
  return out;
}

bool is_singular_at(const OneForm& w, std::span<const Rational> point) {
  auto v = evaluate(w, point);
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

Verdict isolated_singularity_2d(const OneForm& w) {
  if (w.dim() != 2) throw Error(ErrorKind::DimensionMismatch, "isolated_singularity_2d needs exactly two variables");
  if (w.is_zero()) throw Error(ErrorKind::ZeroForm, "zero form");
  const MPoly& a = w[0];
  const MPoly& b = w[1];
  if (a.is_zero() || b.is_zero()) return Verdict::No;
  if (!has_trivial_content(w)) return Verdict::No;
  // A unit coefficient means the origin is not singular at all.
  if (a.constant_term() != 0 || b.constant_term() != 0) return Verdict::Yes;
  const bool r0 = a.degree_in(0) > 0 && b.degree_in(0) > 0 ? resultant(a, b, w.vars[0]).is_zero() : false;
  const bool r1 = a.degree_in(1) > 0 && b.degree_in(1) > 0 ? resultant(a, b, w.vars[1]).is_zero() : false;
  if (r0 && r1) return Verdict::No;
  if (!r0 && !r1) return Verdict::Yes;
  return Verdict::Inconclusive;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_commas(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == ',') {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  return out;
}

}  // namespace

OneForm parse_one_form(std::string_view coeffs, const VarList& vars) {
  std::string_view body = trim(coeffs);
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') throw Error(ErrorKind::SyntaxError, "form: missing closing ']'");
    body = body.substr(1, body.size() - 2);
  }
  auto parts = split_commas(body);
  if (parts.size() != vars.size())
    throw Error(ErrorKind::DimensionMismatch, "form has " + std::to_string(parts.size()) + " coefficients over " +
                                                  std::to_string(vars.size()) + " variables");
  std::vector<MPoly> c;
  for (auto p : parts) c.push_back(parse_poly(p, vars));
  return OneForm(vars, std::move(c));
}

OneForm parse_one_form(std::string_view text) {
  auto over = text.find("over");
  if (over == std::string_view::npos) throw Error(ErrorKind::SyntaxError, "form: expected '[...] over (vars)'");
  std::string_view tail = trim(text.substr(over + 4));
  if (tail.size() < 2 || tail.front() != '(' || tail.back() != ')')
    throw Error(ErrorKind::SyntaxError, "form: variable list must be parenthesised");
  VarList vars = parse_var_list(tail.substr(1, tail.size() - 2));
  return parse_one_form(text.substr(0, over), vars);
}

}  // namespace foliate
