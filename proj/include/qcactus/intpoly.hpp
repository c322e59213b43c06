#pragma once

#include <algorithm>
#include <vector>

#include "qcactus/numeric.hpp"

namespace qcactus {

// Dense univariate polynomial over the integers, coefficients ascending in
// the power of q. The highest stored coefficient is nonzero; zero is the
// empty coefficient vector.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) {
    trim();
  }
  explicit IntPoly(long constant) {
    if (constant != 0) c_.push_back(Integer(constant));
  }

  static IntPoly monomial(Integer coeff, int degree) {
    IntPoly p;
    if (coeff == 0) return p;
    p.c_.assign(static_cast<size_t>(degree) + 1, Integer(0));
    p.c_.back() = std::move(coeff);
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  Integer coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Integer(0);
    return c_[static_cast<size_t>(k)];
  }

  const std::vector<Integer>& coefficients() const { return c_; }

  const Integer& leading() const { return c_.back(); }

  bool operator==(const IntPoly& o) const { return c_ == o.c_; }
  bool operator!=(const IntPoly& o) const { return !(*this == o); }

  IntPoly operator-() const {
    IntPoly r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
  }

  IntPoly operator+(const IntPoly& o) const {
    std::vector<Integer> r(std::max(c_.size(), o.c_.size()), Integer(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPoly(std::move(r));
  }

  IntPoly operator-(const IntPoly& o) const { return *this + (-o); }

  IntPoly operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<Integer> r(c_.size() + o.c_.size() - 1, Integer(0));
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return IntPoly(std::move(r));
  }

  // Division with remainder; requires a monic divisor so the quotient stays
  // integral.
  static void divmod_monic(const IntPoly& a, const IntPoly& b, IntPoly& quot,
                           IntPoly& rem) {
    if (b.is_zero() || b.leading() != 1)
      throw MathError("divmod_monic requires a monic divisor");
    std::vector<Integer> r = a.c_;
    int db = b.degree();
    std::vector<Integer> q;
    if (a.degree() >= db) q.assign(static_cast<size_t>(a.degree() - db) + 1, Integer(0));
    for (int k = a.degree() - db; k >= 0; --k) {
      Integer c = (static_cast<int>(r.size()) > k + db) ? r[static_cast<size_t>(k + db)]
                                                        : Integer(0);
      if (c == 0) continue;
      q[static_cast<size_t>(k)] = c;
      for (int j = 0; j <= db; ++j)
        r[static_cast<size_t>(k + j)] -= c * b.coeff(j);
    }
    quot = IntPoly(std::move(q));
    rem = IntPoly(std::move(r));
  }

  // Exact division by a monic divisor; remainder must vanish.
  static IntPoly exact_div_monic(const IntPoly& a, const IntPoly& b) {
    IntPoly q, r;
    divmod_monic(a, b, q, r);
    if (!r.is_zero()) throw MathError("inexact polynomial division");
    return q;
  }

  // gcd of the coefficients, nonnegative; 0 for the zero polynomial.
  Integer content() const {
    Integer g(0);
    for (const auto& x : c_) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      if (g == 1) break;
    }
    return g;
  }

  IntPoly primitive_part() const {
    if (is_zero()) return IntPoly();
    Integer g = content();
    if (leading() < 0) g = -g;
    IntPoly r(*this);
    for (auto& x : r.c_) x /= g;
    return r;
  }

  // Pseudo-remainder of a by b (b nonzero, deg a >= deg b expected by the
  // gcd loop; handles smaller degrees by returning a).
  static IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
    std::vector<Integer> r = a.c_;
    int db = b.degree();
    const Integer& lb = b.leading();
    int dr = a.degree();
    while (dr >= db) {
      Integer lead = r[static_cast<size_t>(dr)];
      for (int j = 0; j <= dr; ++j) r[static_cast<size_t>(j)] *= lb;
      for (int j = 0; j <= db; ++j)
        r[static_cast<size_t>(dr - db + j)] -= lead * b.coeff(j);
      while (dr >= 0 && r[static_cast<size_t>(dr)] == 0) --dr;
      r.resize(static_cast<size_t>(dr + 1));
    }
    return IntPoly(std::move(r));
  }

  // Primitive PRS gcd; result is primitive with positive leading coefficient.
  static IntPoly gcd(IntPoly a, IntPoly b) {
    a = a.primitive_part();
    b = b.primitive_part();
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
      IntPoly r = pseudo_rem(a, b).primitive_part();
      a = std::move(b);
      b = std::move(r);
    }
    return a;
  }

  Integer eval(const Integer& x) const {
    Integer acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Integer value_at_one() const { return eval(Integer(1)); }

  // Substitute q -> q^k (k >= 0).
  IntPoly substitute_power(int k) const {
    if (is_zero()) return IntPoly();
    std::vector<Integer> r(static_cast<size_t>(degree() * k) + 1, Integer(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i * static_cast<size_t>(k)] += c_[i];
    return IntPoly(std::move(r));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Integer> c_;
};

// The r-th cyclotomic polynomial, computed by exact division in
// q^r - 1 = prod_{d | r} Phi_d(q).
inline IntPoly cyclotomic_polynomial(int r) {
  if (r < 1) throw MathError("cyclotomic order must be positive");
  std::vector<IntPoly> phi(static_cast<size_t>(r) + 1);
  for (int d = 1; d <= r; ++d) {
    if (r % d != 0) continue;
    IntPoly num = IntPoly::monomial(Integer(1), d) - IntPoly(1);
    for (int e = 1; e < d; ++e) {
      if (d % e != 0) continue;
      num = IntPoly::exact_div_monic(num, phi[static_cast<size_t>(e)]);
    }
    phi[static_cast<size_t>(d)] = num;
  }
  return phi[static_cast<size_t>(r)];
}

}  // namespace qcactus
