#pragma once

#include <doctest.h>

#include <string>

#include "foliate/blowup.hpp"
#include "foliate/chart.hpp"
#include "foliate/elimination.hpp"
#include "foliate/forms.hpp"
#include "foliate/poly.hpp"
#include "foliate/ratfunc.hpp"

/// Checks that `expr` throws foliate::Error of kind `k`.
#define CHECK_ERROR_KIND(expr, k)          \
  do {                                     \
    bool thrown = false;                   \
    try {                                  \
      (void)(expr);                        \
    } catch (const Error& e) {             \
      thrown = true;                       \
      CHECK(e.kind() == ErrorKind::k);     \
    }                                      \
    CHECK_MESSAGE(thrown, "expected " #k); \
  } while (0)

namespace doctest {
template <>
struct StringMaker<foliate::MPoly> {
  static String convert(const foliate::MPoly& p) { return p.to_string().c_str(); }
};
template <>
struct StringMaker<foliate::OneForm> {
  static String convert(const foliate::OneForm& w) { return w.to_string().c_str(); }
};
template <>
struct StringMaker<foliate::Rational> {
  static String convert(const foliate::Rational& q) { return foliate::to_string(q).c_str(); }
};
}  // namespace doctest

namespace testing_support {

inline const foliate::VarList& xyz() {
  static const foliate::VarList v{"x", "y", "z"};
  return v;
}

inline const foliate::VarList& xy() {
  static const foliate::VarList v{"x", "y"};
  return v;
}

inline foliate::MPoly P(const char* text, const foliate::VarList& vars = xyz()) {
  return foliate::parse_poly(text, vars);
}

inline foliate::OneForm F(const char* coeffs, const foliate::VarList& vars = xyz()) {
  return foliate::parse_one_form(coeffs, vars);
}

/// Map sending source variable i to images[i], source and target equal.
inline foliate::PolyMap M(std::initializer_list<const char*> images, const foliate::VarList& vars = xyz()) {
  foliate::PolyMap m{vars, vars, {}};
  for (const char* s : images) m.images.push_back(P(s, vars));
  return m;
}

inline foliate::RatFunc R(const char* num, const char* den, const foliate::VarList& vars = xyz()) {
  return foliate::RatFunc(P(num, vars), P(den, vars));
}

}  // namespace testing_support
