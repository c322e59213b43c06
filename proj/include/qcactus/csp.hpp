#pragma once

#include <vector>

#include "qcactus/cyclotomic.hpp"
#include "qcactus/tableau.hpp"

namespace qcactus {

// [n] = 1 + q + ... + q^(n-1) as an integer polynomial (standard convention).
inline IntPoly standard_quantum_int(int n) {
  if (n < 0) throw MathError("quantum integer requires n >= 0");
  return IntPoly(std::vector<Integer>(static_cast<size_t>(n), Integer(1)));
}

// [r]! / prod_cells [h(i,j)], an exact quotient in Z[q] with nonnegative
// coefficients. An inexact division here is an implementation bug.
inline IntPoly q_hook_polynomial(const Shape& shape) {
  IntPoly p(1);
  for (int n = 2; n <= shape.size(); ++n) p = p * standard_quantum_int(n);
  for (int h : hook_lengths(shape)) {
    IntPoly quot, rem;
    IntPoly::divmod_monic(p, standard_quantum_int(h), quot, rem);
    if (!rem.is_zero()) throw MathError("q-hook quotient is not a polynomial");
    p = std::move(quot);
  }
  for (const auto& c : p.coefficients())
    if (c < 0) throw MathError("q-hook polynomial has a negative coefficient");
  return p;
}

// Sum of q^maj(T) over the standard tableaux of the shape.
inline IntPoly maj_generating_function(const Shape& shape) {
  IntPoly p;
  for (const auto& t : enumerate_syt(shape))
    p = p + IntPoly::monomial(Integer(1), t.maj());
  return p;
}

// Number of tableaux fixed by the k-th promotion power, for k = 0..r-1.
inline std::vector<long> fixed_point_counts(const Shape& shape) {
  auto basis = enumerate_syt(shape);
  std::vector<int> promo = promotion_permutation(basis);
  int r = shape.size();
  std::vector<long> counts;
  counts.reserve(static_cast<size_t>(r));
  std::vector<int> power(promo.size());
  for (size_t j = 0; j < promo.size(); ++j) power[j] = static_cast<int>(j);
  for (int k = 0; k < r; ++k) {
    long fixed = 0;
    for (size_t j = 0; j < power.size(); ++j)
      if (power[j] == static_cast<int>(j)) ++fixed;
    counts.push_back(fixed);
    for (size_t j = 0; j < power.size(); ++j)
      power[j] = promo[static_cast<size_t>(power[j])];
  }
  return counts;
}

enum class CspPolynomial { q_hook, maj };

struct CspVerdict {
  struct PerRoot {
    int k = 0;
    CyclotomicElement lhs;  // P(w^k) reduced mod Phi_r
    long rhs = 0;           // |Fix(p^k)|
    bool equal = false;
  };

  Shape shape;
  CspPolynomial which = CspPolynomial::q_hook;
  IntPoly polynomial;
  std::vector<long> fix_counts;
  std::vector<PerRoot> per_k;
  bool holds = false;
};

// Exact root-of-unity audit: P(w^k) = |Fix(p^k)| in Z[q]/Phi_r for every k.
inline CspVerdict csp_check(const Shape& shape, CspPolynomial which) {
  int r = shape.size();
  if (r < 2) throw MathError("csp check requires size >= 2");
  IntPoly p = (which == CspPolynomial::q_hook) ? q_hook_polynomial(shape)
                                               : maj_generating_function(shape);
  CspVerdict verdict{shape, which, p, fixed_point_counts(shape), {}, true};
  for (int k = 0; k < r; ++k) {
    CyclotomicElement lhs = eval_at_root(p, r, k);
    long rhs = verdict.fix_counts[static_cast<size_t>(k)];
    bool equal = lhs.equals_integer(Integer(rhs));
    if (!equal) verdict.holds = false;
    verdict.per_k.push_back({k, lhs, rhs, equal});
  }
  return verdict;
}

}  // namespace qcactus
