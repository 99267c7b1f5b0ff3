#include "foliate/ratfunc.hpp"

#include "foliate/error.hpp"

namespace foliate {

RatFunc::RatFunc(MPoly num) : num_(std::move(num)), den_(MPoly::constant(num_.vars(), 1)) {}

RatFunc::RatFunc(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorKind::ZeroInput, "rational function with zero denominator");
  if (num_.vars() != den_.vars()) throw Error(ErrorKind::VariableMismatch, "numerator and denominator variables differ");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = MPoly::constant(num_.vars(), 1);
    return;
  }
  Exponent a = num_.monomial_content(), b = den_.monomial_content();
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = std::min(a[i], b[i]);
  num_ = num_.divide_monomial(a);
  den_ = den_.divide_monomial(a);
  // Monic-ish denominator: leading coefficient 1.
  Rational lc = den_.leading_term().second;
  if (lc != 1) {
    Rational inv = 1 / lc;
    num_ *= inv;
    den_ *= inv;
  }
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num_ * b.num_, a.den_ * b.den_); }

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroInput, "division by the zero rational function");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::pow(unsigned k) const { return RatFunc(num_.pow(k), den_.pow(k)); }

bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ * b.den_ == b.num_ * a.den_; }

bool RatFunc::as_laurent_monomial(Rational& coeff, std::vector<int>& exps) const {
  if (num_.terms().size() != 1 || den_.terms().size() != 1) return false;
  const auto& [ne, nc] = *num_.terms().begin();
  const auto& [de, dc] = *den_.terms().begin();
  coeff = nc / dc;
  exps.assign(ne.size(), 0);
  for (std::size_t i = 0; i < ne.size(); ++i) exps[i] = static_cast<int>(ne[i]) - static_cast<int>(de[i]);
  return true;
}

std::string RatFunc::to_string() const {
  if (den_.is_constant() && den_.constant_term() == 1) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RatMap RatMap::from_poly_map(const PolyMap& m) {
  RatMap r{m.source, m.target, {}};
  for (const auto& img : m.images) r.images.emplace_back(img);
  return r;
}

RatFunc substitute(const RatFunc& f, const RatMap& m) {
  if (f.vars() != m.source) throw Error(ErrorKind::VariableMismatch, "rational function variables differ from map source");
  auto eval = [&](const MPoly& p) {
    RatFunc acc(MPoly(m.target));
    for (const auto& [e, c] : p.terms()) {
      RatFunc t(MPoly::constant(m.target, c));
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i]) t = t * m.images[i].pow(e[i]);
      acc = acc + t;
    }
    return acc;
  };
  return eval(f.num()) / eval(f.den());
}

RatMap compose(const RatMap& outer, const RatMap& inner) {
  if (inner.target != outer.source) throw Error(ErrorKind::VariableMismatch, "cannot compose rational maps");
  RatMap r{inner.source, outer.target, {}};
  for (const auto& img : inner.images) r.images.push_back(substitute(img, outer));
  return r;
}

bool operator==(const RatMap& a, const RatMap& b) {
  if (a.source != b.source || a.target != b.target || a.images.size() != b.images.size()) return false;
  for (std::size_t i = 0; i < a.images.size(); ++i)
    if (!(a.images[i] == b.images[i])) return false;
  return true;
}

}  // namespace foliate
