#include "foliate/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "foliate/error.hpp"

namespace foliate {

namespace {

unsigned degree_of(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0u); }

std::string join_vars(const VarList& vars) {
  std::string out = "(";
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i) out += ",";
    out += vars[i];
  }
  return out + ")";
}

}  // namespace

bool GrlexLess::operator()(const Exponent& a, const Exponent& b) const {
  unsigned da = degree_of(a), db = degree_of(b);
  if (da != db) return da < db;
  // Among equal degrees, a larger exponent on an earlier variable is bigger.
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MPoly MPoly::constant(const VarList& vars, const Rational& c) {
  MPoly p(vars);
  p.add_term(Exponent(vars.size(), 0), c);
  return p;
}

MPoly MPoly::variable(const VarList& vars, std::string_view name) {
  MPoly p(vars);
  return variable(vars, p.index_of(name));
}

MPoly MPoly::variable(const VarList& vars, std::size_t index) {
  if (index >= vars.size()) throw Error(ErrorKind::UnknownVariable, "variable index out of range");
  Exponent e(vars.size(), 0);
  e[index] = 1;
  return monomial(vars, std::move(e));
}

MPoly MPoly::monomial(const VarList& vars, Exponent exp, const Rational& c) {
  if (exp.size() != vars.size()) throw Error(ErrorKind::DimensionMismatch, "exponent length differs from variable count");
  MPoly p(vars);
  p.add_term(exp, c);
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && degree_of(terms_.begin()->first) == 0);
}

Rational MPoly::constant_term() const { return coefficient(Exponent(vars_.size(), 0)); }

Rational MPoly::coefficient(const Exponent& exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<std::size_t> MPoly::find_var(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

std::size_t MPoly::index_of(std::string_view name) const {
  if (auto i = find_var(name)) return *i;
  throw Error(ErrorKind::UnknownVariable, "unknown variable '" + std::string(name) + "' in " + join_vars(vars_));
}

int MPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(degree_of(terms_.rbegin()->first));
}

int MPoly::degree_in(std::size_t i) const {
  if (terms_.empty()) return -1;
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
  return static_cast<int>(d);
}

unsigned MPoly::min_exponent_in(std::size_t i) const {
  if (terms_.empty()) return 0;
  unsigned d = terms_.begin()->first[i];
  for (const auto& [e, c] : terms_) d = std::min(d, e[i]);
  return d;
}

void MPoly::add_term(const Exponent& exp, const Rational& c) {
  if (exp.size() != vars_.size()) throw Error(ErrorKind::DimensionMismatch, "exponent length differs from variable count");
  if (c == 0) return;
  Rational cc = c;
  cc.canonicalize();
  auto [it, inserted] = terms_.try_emplace(exp, cc);
  if (!inserted) {
    it->second += cc;
    if (it->second == 0) terms_.erase(it);
  }
}

void MPoly::require_same_vars(const MPoly& other, const char* op) const {
  if (vars_ != other.vars_)
    throw Error(ErrorKind::VariableMismatch,
                std::string("variable lists differ in ") + op + ": " + join_vars(vars_) + " vs " + join_vars(other.vars_));
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& other) {
  require_same_vars(other, "addition");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& other) {
  require_same_vars(other, "subtraction");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MPoly& MPoly::operator*=(const MPoly& other) {
  require_same_vars(other, "multiplication");
  MPoly out(vars_);
  Exponent e(vars_.size());
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : other.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  terms_ = std::move(out.terms_);
  return *this;
}

MPoly& MPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

MPoly MPoly::pow(unsigned k) const {
  MPoly result = constant(vars_, 1);
  MPoly base = *this;
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return result;
}

MPoly MPoly::derivative(std::size_t i) const {
  MPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponent d = e;
    d[i] -= 1;
    out.add_term(d, c * e[i]);
  }
  return out;
}

Rational MPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != vars_.size())
    throw Error(ErrorKind::DimensionMismatch, "point has " + std::to_string(point.size()) + " coordinates, expected " +
                                                  std::to_string(vars_.size()));
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      mpz_class num, den;
      mpz_pow_ui(num.get_mpz_t(), point[i].get_num_mpz_t(), e[i]);
      mpz_pow_ui(den.get_mpz_t(), point[i].get_den_mpz_t(), e[i]);
      t *= Rational(num, den);
    }
    sum += t;
  }
  sum.canonicalize();
  return sum;
}

MPoly MPoly::substitute_var(std::size_t i, const MPoly& value) const {
  require_same_vars(value, "substitution");
  std::vector<MPoly> powers{constant(vars_, 1)};
  MPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    while (powers.size() <= e[i]) powers.push_back(powers.back() * value);
    Exponent rest = e;
    rest[i] = 0;
    out += monomial(vars_, rest, c) * powers[e[i]];
  }
  return out;
}

MPoly MPoly::set_var(std::size_t i, const Rational& value) const {
  return substitute_var(i, constant(vars_, value));
}

MPoly MPoly::with_vars(const VarList& vars) const {
  std::vector<std::size_t> where(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(vars.begin(), vars.end(), vars_[i]);
    if (it == vars.end()) {
      if (degree_in(i) > 0)
        throw Error(ErrorKind::VariableMismatch, "variable '" + vars_[i] + "' is in use and missing from " + join_vars(vars));
      where[i] = vars.size();
    } else {
      where[i] = static_cast<std::size_t>(it - vars.begin());
    }
  }
  MPoly out(vars);
  for (const auto& [e, c] : terms_) {
    Exponent ne(vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) ne[where[i]] = e[i];
    out.add_term(ne, c);
  }
  return out;
}

MPoly MPoly::rename_var(std::size_t i, const std::string& name) const {
  MPoly out = *this;
  out.vars_.at(i) = name;
  return out;
}

Exponent MPoly::monomial_content() const {
  Exponent m(vars_.size(), 0);
  if (terms_.empty()) return m;
  m = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
  return m;
}

MPoly MPoly::divide_monomial(const Exponent& exp) const {
  MPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    Exponent q = e;
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (q[i] < exp[i])
        throw Error(ErrorKind::NotDivisible,
                    "term " + monomial(vars_, e, c).to_string() + " is not divisible by " + monomial(vars_, exp).to_string());
      q[i] -= exp[i];
    }
    out.terms_.emplace(std::move(q), c);
  }
  return out;
}

const MPoly::Terms::value_type& MPoly::leading_term() const {
  if (terms_.empty()) throw Error(ErrorKind::ZeroInput, "leading term of the zero polynomial");
  return *terms_.rbegin();
}

namespace {

std::string monomial_text(const VarList& vars, const Exponent& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars[i];
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

}  // namespace

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    bool negative = c < 0;
    std::string mono = monomial_text(vars_, e);
    std::string body;
    if (mono.empty()) body = foliate::to_string(mag);
    else if (mag == 1) body = mono;
    else body = foliate::to_string(mag) + "*" + mono;
    if (first) out = (negative ? "-" : "") + body;
    else out += (negative ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
  VarList all = a.vars_;
  for (const auto& v : b.vars_)
    if (std::find(all.begin(), all.end(), v) == all.end()) all.push_back(v);
  try {
    return a.with_vars(all).terms_ == b.with_vars(all).terms_;
  } catch (const Error&) {
    return false;
  }
}

MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r = a;
  r *= b;
  return r;
}
MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
MPoly operator*(const Rational& c, MPoly a) { return a *= c; }

std::string to_string(const MPoly& p) { return p.to_string(); }

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  Parser(std::string_view text, const VarList& vars) : text_(text), vars_(vars) {}

  MPoly parse() {
    skip_ws();
    if (at_end()) fail("empty expression");
    MPoly p = expr();
    skip_ws();
    if (!at_end()) fail(std::string("unexpected character '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::SyntaxError, "syntax error at position " + std::to_string(pos_) + ": " + what);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  MPoly expr() {
    skip_ws();
    MPoly acc(vars_);
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    MPoly t = term();
    acc += negate ? -t : t;
    for (;;) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      MPoly rhs = term();
      if (c == '+') acc += rhs;
      else acc -= rhs;
    }
    return acc;
  }

  MPoly term() {
    MPoly acc = factor();
    for (;;) {
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
      acc *= factor();
    }
    return acc;
  }

  MPoly factor() {
    MPoly base = primary();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("exponent must be a non-negative integer literal");
      std::string digits = integer_literal();
      unsigned long k = std::stoul(digits);
      base = base.pow(static_cast<unsigned>(k));
    }
    skip_ws();
    char c = peek();
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_')
      fail("implicit multiplication is not allowed");
    return base;
  }

  std::string integer_literal() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  MPoly primary() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      ++pos_;
      MPoly inner = expr();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = integer_literal();
      std::string den = "1";
      if (peek() == '/') {
        ++pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator after '/'");
        den = integer_literal();
      }
      Integer d(den);
      if (d == 0) fail("zero denominator");
      Rational q(Integer(num), d);
      q.canonicalize();
      return MPoly::constant(vars_, q);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end())
        throw Error(ErrorKind::UnknownVariable, "unknown variable '" + name + "' at position " + std::to_string(start));
      return MPoly::variable(vars_, static_cast<std::size_t>(it - vars_.begin()));
    }
    if (at_end()) fail("unexpected end of input");
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  const VarList& vars_;
  std::size_t pos_ = 0;
};

bool valid_identifier(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

MPoly parse_poly(std::string_view text, const VarList& vars) { return Parser(text, vars).parse(); }

VarList parse_var_list(std::string_view text) {
  VarList out;
  std::string cur;
  auto flush = [&] {
    std::string v;
    for (char c : cur)
      if (!std::isspace(static_cast<unsigned char>(c))) v += c;
    if (!valid_identifier(v)) throw Error(ErrorKind::InvalidInput, "invalid variable name '" + v + "'");
    if (std::find(out.begin(), out.end(), v) != out.end())
      throw Error(ErrorKind::InvalidInput, "duplicate variable '" + v + "'");
    out.push_back(v);
    cur.clear();
  };
  for (char c : text) {
    if (c == ',') flush();
    else cur += c;
  }
  flush();
  return out;
}

// ---------------------------------------------------------------------------
// Maps

PolyMap PolyMap::identity(const VarList& vars) {
  PolyMap m{vars, vars, {}};
  for (std::size_t i = 0; i < vars.size(); ++i) m.images.push_back(MPoly::variable(vars, i));
  return m;
}

void PolyMap::validate() const {
  if (images.size() != source.size())
    throw Error(ErrorKind::VariableMismatch, "map has " + std::to_string(images.size()) + " images for " +
                                                 std::to_string(source.size()) + " source variables");
  for (const auto& img : images)
    if (img.vars() != target) throw Error(ErrorKind::VariableMismatch, "map image not over the target variables");
}

MPoly substitute(const MPoly& f, const PolyMap& m) {
  m.validate();
  if (f.vars() != m.source)
    throw Error(ErrorKind::VariableMismatch, "polynomial variables " + join_vars(f.vars()) +
                                                 " differ from map source " + join_vars(m.source));
  std::vector<std::vector<MPoly>> powers(m.source.size());
  for (std::size_t i = 0; i < m.source.size(); ++i) powers[i].push_back(MPoly::constant(m.target, 1));
  MPoly out(m.target);
  for (const auto& [e, c] : f.terms()) {
    MPoly t = MPoly::constant(m.target, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      while (powers[i].size() <= e[i]) powers[i].push_back(powers[i].back() * m.images[i]);
      t *= powers[i][e[i]];
    }
    out += t;
  }
  return out;
}

PolyMap compose(const PolyMap& outer, const PolyMap& inner) {
  if (inner.target != outer.source) throw Error(ErrorKind::VariableMismatch, "cannot compose maps: variable lists differ");
  PolyMap r{inner.source, outer.target, {}};
  for (const auto& img : inner.images) r.images.push_back(substitute(img, outer));
  return r;
}

// ---------------------------------------------------------------------------
// Orders and division

std::optional<unsigned> generic_order(const MPoly& f, std::span<const std::size_t> center) {
  if (f.is_zero()) return std::nullopt;
  unsigned best = ~0u;
  for (const auto& [e, c] : f.terms()) {
    unsigned d = 0;
    for (std::size_t i : center) d += e.at(i);
    best = std::min(best, d);
  }
  return best;
}

std::optional<unsigned> generic_order(const MPoly& f, const VarList& center) {
  std::vector<std::size_t> idx;
  for (const auto& v : center) idx.push_back(f.index_of(v));
  return generic_order(f, idx);
}

std::string order_to_string(std::optional<unsigned> order) { return order ? std::to_string(*order) : "inf"; }

MPoly divide_by_var_power(const MPoly& f, std::string_view var, unsigned k) {
  std::size_t i = f.index_of(var);
  Exponent m(f.nvars(), 0);
  m[i] = k;
  return f.divide_monomial(m);
}

MPoly divide_exact(const MPoly& f, const MPoly& g) {
  if (g.is_zero()) throw Error(ErrorKind::ZeroInput, "division by the zero polynomial");
  if (f.vars() != g.vars()) throw Error(ErrorKind::VariableMismatch, "division operands over different variables");
  MPoly rem = f;
  MPoly quot(f.vars());
  const auto& [ge, gc] = g.leading_term();
  while (!rem.is_zero()) {
    const auto& [re, rc] = rem.leading_term();
    Exponent q = re;
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (q[i] < ge[i])
        throw Error(ErrorKind::NotDivisible, "'" + g.to_string() + "' does not divide '" + f.to_string() + "'");
      q[i] -= ge[i];
    }
    MPoly step = MPoly::monomial(f.vars(), q, rc / gc);
    quot += step;
    rem -= step * g;
  }
  return quot;
}

std::vector<MPoly> coefficients_in(const MPoly& f, std::size_t i) {
  int deg = f.degree_in(i);
  std::vector<MPoly> out(deg < 0 ? 0 : static_cast<std::size_t>(deg) + 1, MPoly(f.vars()));
  for (const auto& [e, c] : f.terms()) {
    Exponent r = e;
    r[i] = 0;
    out[e[i]].add_term(r, c);
  }
  return out;
}

}  // namespace foliate
