#pragma once

#include <sstream>
#include <string>

#include "qcactus/intpoly.hpp"

namespace qcactus {

// An element of Z[q] / Phi_r(q): exact arithmetic at a primitive r-th root
// of unity. Two elements are equal iff their reduced residues coincide.
class CyclotomicElement {
 public:
  CyclotomicElement(int order, IntPoly residue)
      : order_(order), modulus_(cyclotomic_polynomial(order)) {
    IntPoly q, r;
    IntPoly::divmod_monic(residue, modulus_, q, r);
    residue_ = std::move(r);
  }

  int order() const { return order_; }
  const IntPoly& residue() const { return residue_; }

  bool operator==(const CyclotomicElement& o) const {
    return order_ == o.order_ && residue_ == o.residue_;
  }
  bool operator!=(const CyclotomicElement& o) const { return !(*this == o); }

  bool is_integer() const { return residue_.degree() <= 0; }

  bool equals_integer(const Integer& c) const {
    if (c == 0) return residue_.is_zero();
    return residue_.degree() == 0 && residue_.coeff(0) == c;
  }

  std::string to_string() const {
    if (residue_.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = 0; k <= residue_.degree(); ++k) {
      Integer c = residue_.coeff(k);
      if (c == 0) continue;
      if (!first) out << (c > 0 ? "+" : "");
      first = false;
      if (k == 0) {
        out << c.get_str();
      } else {
        if (c == -1)
          out << "-";
        else if (c != 1)
          out << c.get_str() << "*";
        out << "w";
        if (k > 1) out << "^" << k;
      }
    }
    return out.str();
  }

 private:
  int order_;
  IntPoly modulus_;
  IntPoly residue_;
};

// P(w^k) for w a primitive r-th root of unity, computed as P(q^k) reduced
// modulo Phi_r(q). Exponents reduce by q^r = 1 before the final division.
inline CyclotomicElement eval_at_root(const IntPoly& p, int r, long k) {
  if (r < 1) throw MathError("root order must be positive");
  long kk = ((k % r) + r) % r;
  std::vector<Integer> folded(static_cast<size_t>(r), Integer(0));
  for (int e = 0; e <= p.degree(); ++e) {
    size_t idx = static_cast<size_t>((static_cast<long>(e) * kk) % r);
    folded[idx] += p.coeff(e);
  }
  return CyclotomicElement(r, IntPoly(std::move(folded)));
}

}  // namespace qcactus
