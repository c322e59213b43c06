#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "qcactus/intpoly.hpp"
#include "qcactus/numeric.hpp"

namespace qcactus {

// Laurent polynomial in q with exact rational coefficients, stored as a map
// from exponent to nonzero coefficient. The zero polynomial is the empty map.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly zero() { return LaurentPoly(); }

  static LaurentPoly one() { return monomial(Rational(1), 0); }

  static LaurentPoly monomial(const Rational& coeff, long exp) {
    LaurentPoly p;
    if (coeff != 0) p.t_[exp] = coeff;
    return p;
  }

  static LaurentPoly constant(const Rational& c) { return monomial(c, 0); }

  bool is_zero() const { return t_.empty(); }

  bool is_constant() const {
    return t_.empty() || (t_.size() == 1 && t_.begin()->first == 0);
  }

  long min_exp() const {
    if (is_zero()) throw MathError("min_exp of zero polynomial");
    return t_.begin()->first;
  }

  long max_exp() const {
    if (is_zero()) throw MathError("max_exp of zero polynomial");
    return t_.rbegin()->first;
  }

  bool is_ordinary() const { return is_zero() || min_exp() >= 0; }

  Rational coeff(long exp) const {
    auto it = t_.find(exp);
    return it == t_.end() ? Rational(0) : it->second;
  }

  const Rational& leading_coeff() const {
    if (is_zero()) throw MathError("leading coefficient of zero polynomial");
    return t_.rbegin()->second;
  }

  size_t term_count() const { return t_.size(); }

  const std::map<long, Rational>& terms() const { return t_; }

  void add_term(long exp, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = t_.try_emplace(exp, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) t_.erase(it);
    }
  }

  bool operator==(const LaurentPoly& o) const { return t_ == o.t_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  LaurentPoly operator-() const {
    LaurentPoly r(*this);
    for (auto& [e, c] : r.t_) c = -c;
    return r;
  }

  LaurentPoly operator+(const LaurentPoly& o) const {
    LaurentPoly r(*this);
    for (const auto& [e, c] : o.t_) r.add_term(e, c);
    return r;
  }

  LaurentPoly operator-(const LaurentPoly& o) const {
    LaurentPoly r(*this);
    for (const auto& [e, c] : o.t_) r.add_term(e, -c);
    return r;
  }

  LaurentPoly operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : t_)
      for (const auto& [e2, c2] : o.t_) r.add_term(e1 + e2, c1 * c2);
    return r;
  }

  LaurentPoly scaled(const Rational& c) const {
    LaurentPoly r;
    if (c == 0) return r;
    for (const auto& [e, k] : t_) r.t_[e] = k * c;
    return r;
  }

  LaurentPoly shifted(long delta) const {
    LaurentPoly r;
    for (const auto& [e, c] : t_) r.t_[e + delta] = c;
    return r;
  }

  // Evaluation; a negative exponent requires x != 0.
  Rational eval(const Rational& x) const {
    Rational acc(0);
    for (const auto& [e, c] : t_) {
      if (e >= 0) {
        Rational p(1);
        for (long i = 0; i < e; ++i) p *= x;
        acc += c * p;
      } else {
        if (x == 0)
          throw PoleError("negative exponent evaluated at 0", min_exp());
        Rational p(1);
        for (long i = 0; i < -e; ++i) p *= x;
        acc += c / p;
      }
    }
    return acc;
  }

  // Multiplicity of (q - x) as a factor; input must be ordinary.
  int root_multiplicity(const Rational& x) const {
    if (is_zero() || !is_ordinary()) throw MathError("root multiplicity needs an ordinary polynomial");
    LaurentPoly p(*this);
    int m = 0;
    while (p.eval(x) == 0) {
      p = synthetic_quotient(p, x);
      ++m;
    }
    return m;
  }

  // Long division over Q; both operands must be ordinary, divisor nonzero.
  static void divmod(const LaurentPoly& a, const LaurentPoly& b,
                     LaurentPoly& quot, LaurentPoly& rem) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (!a.is_ordinary() || !b.is_ordinary())
      throw MathError("divmod requires ordinary polynomials");
    long db = b.is_zero() ? 0 : b.max_exp();
    std::vector<Rational> r = a.dense();
    std::vector<Rational> bd = b.dense();
    std::vector<Rational> q;
    long da = static_cast<long>(r.size()) - 1;
    if (da >= db) q.assign(static_cast<size_t>(da - db) + 1, Rational(0));
    for (long k = da - db; k >= 0; --k) {
      Rational c = r[static_cast<size_t>(k + db)] / bd[static_cast<size_t>(db)];
      if (c == 0) continue;
      q[static_cast<size_t>(k)] = c;
      for (long j = 0; j <= db; ++j)
        r[static_cast<size_t>(k + j)] -= c * bd[static_cast<size_t>(j)];
    }
    quot = from_dense(q);
    rem = from_dense(r);
  }

  static LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly q, r;
    divmod(a, b, q, r);
    if (!r.is_zero()) throw MathError("inexact polynomial division");
    return q;
  }

  // Monic gcd over Q[q] of two ordinary polynomials, via a primitive PRS on
  // the denominator-cleared integer images.
  static LaurentPoly gcd_monic(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) throw MathError("gcd(0, 0)");
    IntPoly g = IntPoly::gcd(a.to_int_primitive(), b.to_int_primitive());
    LaurentPoly r;
    Rational lead(g.leading());
    for (int k = 0; k <= g.degree(); ++k) {
      Integer c = g.coeff(k);
      if (c != 0) r.t_[k] = Rational(c) / lead;
    }
    return r;
  }

  // Clears denominators and content; input must be ordinary and nonzero.
  IntPoly to_int_primitive() const {
    if (is_zero()) return IntPoly();
    if (!is_ordinary()) throw MathError("to_int_primitive requires an ordinary polynomial");
    Integer lcm(1);
    for (const auto& [e, c] : t_)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> v(static_cast<size_t>(max_exp()) + 1, Integer(0));
    for (const auto& [e, c] : t_) {
      Rational s = c * Rational(lcm);
      v[static_cast<size_t>(e)] = s.get_num();
    }
    return IntPoly(std::move(v)).primitive_part();
  }

  // Canonical text form: `c*q^e` terms joined by `+`, exponents ascending.
  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : t_) {
      if (!first) out << "+";
      first = false;
      out << qcactus::to_string(c) << "*q^" << e;
    }
    return out.str();
  }

  static LaurentPoly parse(const std::string& text) {
    LaurentPoly r;
    if (text == "0") return r;
    if (text.empty()) throw ParseError("empty polynomial literal");
    size_t pos = 0;
    while (pos < text.size()) {
      size_t next = text.find('+', pos);
      if (next == std::string::npos) next = text.size();
      std::string term = text.substr(pos, next - pos);
      size_t star = term.find("*q^");
      if (star == std::string::npos)
        throw ParseError("bad polynomial term: " + term);
      Rational c = parse_rational(term.substr(0, star));
      long e = 0;
      try {
        e = std::stol(term.substr(star + 3));
      } catch (const std::exception&) {
        throw ParseError("bad exponent in term: " + term);
      }
      r.add_term(e, c);
      pos = next + 1;
    }
    return r;
  }

 private:
  std::vector<Rational> dense() const {
    if (is_zero()) return {};
    std::vector<Rational> v(static_cast<size_t>(max_exp()) + 1, Rational(0));
    for (const auto& [e, c] : t_) v[static_cast<size_t>(e)] = c;
    return v;
  }

  static LaurentPoly from_dense(const std::vector<Rational>& v) {
    LaurentPoly r;
    for (size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) r.t_[static_cast<long>(i)] = v[i];
    return r;
  }

  static LaurentPoly synthetic_quotient(const LaurentPoly& p, const Rational& x) {
    std::vector<Rational> d = p.dense();
    std::vector<Rational> q(d.size() > 0 ? d.size() - 1 : 0, Rational(0));
    Rational carry(0);
    for (size_t i = d.size(); i-- > 1;) {
      carry = d[i] + carry * x;
      q[i - 1] = carry;
    }
    return from_dense(q);
  }

  std::map<long, Rational> t_;
};

}  // namespace qcactus
