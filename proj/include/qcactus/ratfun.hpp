#pragma once

#include <string>

#include "qcactus/laurent.hpp"

namespace qcactus {

// The two quantum-integer conventions. Balanced: [n] = (q^n - q^-n)/(q - q^-1);
// standard: [n] = (1 - q^n)/(1 - q). There is no default on purpose.
enum class Convention { balanced, standard };

// Element of Q(q) in canonical form:
//   value = num / den with
//   - den an ordinary polynomial, nonzero constant term, monic;
//   - num a Laurent polynomial whose ordinary part is coprime to den.
// Canonical form is unique, so structural equality is mathematical equality.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(LaurentPoly::one()) {}

  explicit RationalFunction(const Rational& c)
      : num_(LaurentPoly::constant(c)), den_(LaurentPoly::one()) {}

  explicit RationalFunction(long c)
      : num_(LaurentPoly::constant(Rational(c))), den_(LaurentPoly::one()) {}

  explicit RationalFunction(LaurentPoly numerator)
      : num_(std::move(numerator)), den_(LaurentPoly::one()) {}

  RationalFunction(LaurentPoly numerator, LaurentPoly denominator)
      : num_(std::move(numerator)), den_(std::move(denominator)) {
    canonicalize();
  }

  static RationalFunction monomial(const Rational& c, long exp) {
    return RationalFunction(LaurentPoly::monomial(c, exp));
  }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }

  bool is_constant() const { return num_.is_constant() && den_ == LaurentPoly::one(); }

  // Value of a constant element; throws if q still appears.
  Rational as_rational() const {
    if (!is_constant()) throw MathError("rational function is not constant");
    return num_.coeff(0);
  }

  bool is_polynomial() const { return den_ == LaurentPoly::one(); }

  bool operator==(const RationalFunction& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  RationalFunction operator-() const {
    RationalFunction r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  RationalFunction operator+(const RationalFunction& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return RationalFunction(num_ + o.num_, den_);
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }

  RationalFunction operator-(const RationalFunction& o) const {
    return *this + (-o);
  }

  RationalFunction operator*(const RationalFunction& o) const {
    if (is_zero() || o.is_zero()) return RationalFunction();
    return RationalFunction(num_ * o.num_, den_ * o.den_);
  }

  RationalFunction operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw DivisionByZero("rational function division by zero");
    if (is_zero()) return RationalFunction();
    return RationalFunction(num_ * o.den_, den_ * o.num_);
  }

  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  // Valuation at q = 0: lowest exponent of the numerator (the canonical
  // denominator never vanishes at 0). Negative means a pole.
  long order_at_zero() const {
    if (is_zero()) throw MathError("order_at_zero of zero (valuation is infinite)");
    return num_.min_exp();
  }

  bool regular_at_zero() const { return is_zero() || order_at_zero() >= 0; }

  // Exact evaluation. At q = 0 only elements with valuation >= 0 may be
  // evaluated; elsewhere the denominator must not vanish. A violation
  // raises PoleError carrying the valuation at the point.
  Rational eval(const Rational& point) const {
    if (is_zero()) return Rational(0);
    if (point == 0) {
      long v = order_at_zero();
      if (v < 0) throw PoleError("pole at q = 0", v);
      if (v > 0) return Rational(0);
      return num_.coeff(0) / den_.coeff(0);
    }
    Rational d = den_.eval(point);
    if (d == 0) {
      int m = den_.root_multiplicity(point);
      throw PoleError("pole at q = " + qcactus::to_string(point), -m);
    }
    return num_.eval(point) / d;
  }

  size_t complexity() const { return num_.term_count() + den_.term_count(); }

  // Canonical text form `(num)/(den)`.
  std::string to_string() const {
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

  static RationalFunction parse(const std::string& text) {
    if (text.size() < 5 || text.front() != '(' || text.back() != ')')
      throw ParseError("bad rational function literal: " + text);
    size_t split = text.find(")/(");
    if (split == std::string::npos)
      throw ParseError("bad rational function literal: " + text);
    LaurentPoly num = LaurentPoly::parse(text.substr(1, split - 1));
    LaurentPoly den =
        LaurentPoly::parse(text.substr(split + 3, text.size() - split - 4));
    return RationalFunction(std::move(num), std::move(den));
  }

 private:
  void canonicalize() {
    if (den_.is_zero()) throw DivisionByZero("zero denominator");
    if (num_.is_zero()) {
      den_ = LaurentPoly::one();
      return;
    }
    long vn = num_.min_exp();
    long vd = den_.min_exp();
    LaurentPoly n = num_.shifted(-vn);
    LaurentPoly d = den_.shifted(-vd);
    if (d.is_constant()) {
      num_ = n.scaled(Rational(1) / d.coeff(0)).shifted(vn - vd);
      den_ = LaurentPoly::one();
      return;
    }
    LaurentPoly g = LaurentPoly::gcd_monic(n, d);
    if (!g.is_constant()) {
      n = LaurentPoly::exact_div(n, g);
      d = LaurentPoly::exact_div(d, g);
    }
    if (d.is_constant()) {
      num_ = n.scaled(Rational(1) / d.coeff(0)).shifted(vn - vd);
      den_ = LaurentPoly::one();
      return;
    }
    Rational lead = d.leading_coeff();
    if (lead != 1) {
      n = n.scaled(Rational(1) / lead);
      d = d.scaled(Rational(1) / lead);
    }
    num_ = n.shifted(vn - vd);
    den_ = d;
  }

  LaurentPoly num_;
  LaurentPoly den_;
};

// Quantum integer [n] for n >= 0; both conventions expand to a Laurent
// polynomial with denominator 1.
inline RationalFunction quantum_int(int n, Convention conv) {
  if (n < 0) throw MathError("quantum_int requires n >= 0");
  LaurentPoly p;
  for (int j = 0; j < n; ++j) {
    long e = (conv == Convention::balanced) ? 2L * j - (n - 1) : j;
    p.add_term(e, Rational(1));
  }
  return RationalFunction(std::move(p));
}

// [a] extended to signed arguments by [-n] = -[n].
inline RationalFunction quantum_int_signed(int a, Convention conv) {
  if (a >= 0) return quantum_int(a, conv);
  return -quantum_int(-a, conv);
}

}  // namespace qcactus
