#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qcactus {

// Arbitrary-precision integers and rationals. Rational values are kept
// canonical (gcd 1, positive denominator) by construction.
using Integer = mpz_class;
using Rational = mpq_class;

struct MathError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : MathError {
  DivisionByZero() : MathError("division by zero") {}
  explicit DivisionByZero(const std::string& what) : MathError(what) {}
};

// Raised when a rational function is evaluated at a pole. `valuation` is the
// order of the zero/pole at the point (negative = pole). `row`/`col` are set
// when the error surfaced from a matrix entry.
struct PoleError : MathError {
  long valuation = 0;
  int row = -1;
  int col = -1;
  PoleError(const std::string& what, long v) : MathError(what), valuation(v) {}
  PoleError(const std::string& what, long v, int r, int c)
      : MathError(what), valuation(v), row(r), col(c) {}
};

struct DimensionMismatch : MathError {
  using MathError::MathError;
};

struct SingularMatrix : MathError {
  SingularMatrix() : MathError("matrix is singular") {}
};

struct ParseError : MathError {
  using MathError::MathError;
};

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& x) { return x.get_str(); }

inline std::string to_string(const Integer& x) { return x.get_str(); }

// Accepts "p" or "p/q" with optional leading '-'.
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational literal");
  Rational r;
  if (r.set_str(text, 10) != 0)
    throw ParseError("bad rational literal: " + text);
  if (r.get_den() == 0) throw DivisionByZero("rational literal " + text);
  r.canonicalize();
  return r;
}

}  // namespace qcactus
