#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "qcactus/fixtures.hpp"
#include "qcactus/seminormal.hpp"

namespace qcactus {

// Diagonal of D: the entry for basis vector T is q^inv(T).
inline std::vector<RationalFunction> d_diagonal(const SeminormalRep& rep) {
  std::vector<RationalFunction> d;
  d.reserve(rep.basis.size());
  for (const auto& t : rep.basis)
    d.push_back(RationalFunction::monomial(Rational(1), t.inversions()));
  return d;
}

inline MatrixQq d_matrix(const SeminormalRep& rep) {
  int n = rep.dimension();
  MatrixQq m(n, n);
  auto d = d_diagonal(rep);
  for (int i = 0; i < n; ++i) m.at(i, i) = d[static_cast<size_t>(i)];
  return m;
}

struct HattedGenerators {
  std::vector<MatrixQq> t_hat;  // index i at [i-1]
  bool d_on_left = true;        // true: D t D^-1; false: D^-1 t D
};

// D-conjugated cactus generators. The conjugation orientation is not free:
// exactly one of D t D^-1 and D^-1 t D cancels the simple poles at q = 0
// under the pinned inversion statistic. Both are tried; if neither is
// entrywise regular the statistic is falsified and we fail loudly.
inline HattedGenerators hatted_generators(const SeminormalRep& rep) {
  auto d = d_diagonal(rep);
  std::vector<RationalFunction> d_inv;
  d_inv.reserve(d.size());
  for (const auto& x : d) d_inv.push_back(RationalFunction(1) / x);

  for (bool left : {true, false}) {
    const auto& diag = left ? d : d_inv;
    std::vector<MatrixQq> hats;
    bool regular = true;
    for (const auto& t : rep.t_q) {
      MatrixQq h = t.conjugate_by_diagonal(diag);
      auto v = h.order_scan();
      if (v && *v < 0) {
        regular = false;
        break;
      }
      hats.push_back(std::move(h));
    }
    if (regular) return {std::move(hats), left};
  }
  throw MathError("no conjugation orientation makes the generators regular at q = 0 (shape " +
                  rep.shape.to_string() + ")");
}

// Witness data for one shape: the matrix of p(r-1) in the hatted basis and
// everything checked about it. For a rectangular shape with all flags true
// this certifies the conjugacy of the q = 0 and q = 1 specializations.
struct InterpolationCertificate {
  Shape shape;
  MatrixQq p_hat;
  bool regular_at_zero = false;
  std::optional<MatrixQq> eval0;
  std::optional<MatrixQq> eval1;
  bool power_is_identity = false;           // p_hat^r = I
  std::optional<long> power_order;          // actual order if small, else nullopt
  std::optional<bool> eval0_is_promotion;   // eval0 equals the promotion 0/1 matrix
  std::optional<LaurentPoly> char_poly_eval0;
  std::optional<LaurentPoly> char_poly_eval1;
  bool char_polys_equal = false;
  std::optional<std::vector<int>> matched_basis_permutation;
};

inline MatrixQq interpolating_matrix_of(const SeminormalRep& rep,
                                        const HattedGenerators& hats) {
  int n = rep.dimension();
  MatrixQq acc = MatrixQq::identity(n);
  for (int i = rep.shape.size() - 1; i >= 1; --i)
    acc = acc * hats.t_hat[static_cast<size_t>(i) - 1];
  return acc;
}

inline InterpolationCertificate interpolating_matrix(
    const Shape& shape, FixedVectorSign fixed_sign = FixedVectorSign::by_axial) {
  SeminormalRep rep = build_seminormal(shape, fixed_sign);
  int r = shape.size();
  if (r < 2) throw MathError("interpolation requires size >= 2");
  HattedGenerators hats = hatted_generators(rep);
  InterpolationCertificate cert{shape, interpolating_matrix_of(rep, hats)};

  auto v = cert.p_hat.order_scan();
  cert.regular_at_zero = !v || *v >= 0;
  if (cert.regular_at_zero) {
    cert.eval0 = cert.p_hat.eval_at(Rational(0));
    std::vector<int> promo = promotion_permutation(rep.basis);
    cert.eval0_is_promotion = (*cert.eval0 == MatrixQq::permutation(promo));
  }
  cert.eval1 = cert.p_hat.eval_at(Rational(1));

  MatrixQq p_r = cert.p_hat.power(static_cast<unsigned long>(r));
  cert.power_is_identity = p_r.is_identity();
  if (cert.power_is_identity) {
    for (long d = 1; d <= r; ++d) {
      if (r % d != 0) continue;
      if (cert.p_hat.power(static_cast<unsigned long>(d)).is_identity()) {
        cert.power_order = d;
        break;
      }
    }
  } else {
    MatrixQq acc = cert.p_hat;
    const long cap = 3L * r;
    for (long m = 2; m <= cap && !cert.power_order; ++m) {
      acc = acc * cert.p_hat;
      if (acc.is_identity()) cert.power_order = m;
    }
  }

  if (cert.eval0 && cert.eval1) {
    cert.char_poly_eval0 = char_poly_in_q(*cert.eval0);
    cert.char_poly_eval1 = char_poly_in_q(*cert.eval1);
    cert.char_polys_equal = (*cert.char_poly_eval0 == *cert.char_poly_eval1);
  }
  return cert;
}

struct EntryDiff {
  std::string matrix;
  int row = 0;
  int col = 0;
  std::string expected;
  std::string computed;
};

struct ExampleMatchReport {
  bool matched = false;
  std::vector<int> basis_permutation;     // basis index -> fixture index
  std::vector<RelationCheck> per_matrix;  // equality per fixture, best permutation
  std::vector<EntryDiff> diffs;           // closest-match diff when not matched
  InterpolationCertificate certificate;
  // the six computed matrices reindexed into the fixture basis
  MatrixQq p_hat, p_hat_inverse, eval0, eval0_inverse, eval1, eval1_inverse;
};

// Searches for one basis permutation under which all six computed matrices
// equal the reference fixtures simultaneously.
inline ExampleMatchReport match_paper_example(
    const ExampleFixtures& fx = builtin_example_fixtures(),
    FixedVectorSign fixed_sign = FixedVectorSign::by_axial) {
  Shape shape({3, 3});
  InterpolationCertificate cert = interpolating_matrix(shape, fixed_sign);
  if (!cert.eval0 || !cert.eval1)
    throw MathError("interpolating matrix is not regular at 0 for shape 3,3");

  struct Pair {
    const char* name;
    MatrixQq computed;
    const MatrixQq* fixture;
  };
  std::vector<Pair> pairs;
  pairs.push_back({"interpolating", cert.p_hat, &fx.interpolating});
  pairs.push_back({"interpolating_inverse", cert.p_hat.inverse(), &fx.interpolating_inverse});
  pairs.push_back({"promotion", *cert.eval0, &fx.promotion});
  pairs.push_back({"promotion_inverse", cert.eval0->inverse(), &fx.promotion_inverse});
  pairs.push_back({"rotation", *cert.eval1, &fx.rotation});
  pairs.push_back({"rotation_inverse", cert.eval1->inverse(), &fx.rotation_inverse});

  int n = cert.p_hat.rows();
  std::vector<int> perm(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;

  std::vector<int> best_perm = perm;
  size_t best_mismatch = SIZE_MAX;
  bool found = false;
  do {
    size_t mismatch = 0;
    for (const auto& p : pairs)
      mismatch += p.computed.reindex(perm).mismatch_count(*p.fixture);
    if (mismatch < best_mismatch) {
      best_mismatch = mismatch;
      best_perm = perm;
    }
    if (mismatch == 0) {
      found = true;
      break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  ExampleMatchReport report{found, best_perm, {}, {}, std::move(cert), {}, {}, {}, {}, {}, {}};
  for (auto& p : pairs) {
    MatrixQq reindexed = p.computed.reindex(best_perm);
    bool equal = (reindexed == *p.fixture);
    report.per_matrix.push_back({"fixture_equal", p.name, equal});
    if (!equal) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (!(reindexed.at(i, j) == p.fixture->at(i, j)))
            report.diffs.push_back({p.name, i, j, p.fixture->at(i, j).to_string(),
                                    reindexed.at(i, j).to_string()});
    }
  }
  report.p_hat = pairs[0].computed.reindex(best_perm);
  report.p_hat_inverse = pairs[1].computed.reindex(best_perm);
  report.eval0 = pairs[2].computed.reindex(best_perm);
  report.eval0_inverse = pairs[3].computed.reindex(best_perm);
  report.eval1 = pairs[4].computed.reindex(best_perm);
  report.eval1_inverse = pairs[5].computed.reindex(best_perm);
  if (found) report.certificate.matched_basis_permutation = best_perm;
  return report;
}

struct IntertwinerReport {
  // candidate identities, all tested exactly
  bool m_c0_eq_phat_m = false;  // M c0 = p_hat M
  bool m_phat_eq_c0_m = false;  // M p_hat = c0 M
  bool m_c0_eq_c1_m = false;    // M c0 = c1 M
  bool m_c1_eq_c0_m = false;    // M c1 = c0 M

  bool any() const {
    return m_c0_eq_phat_m || m_phat_eq_c0_m || m_c0_eq_c1_m || m_c1_eq_c0_m;
  }
};

// Tests which of the four candidate intertwining identities a supplied
// matrix satisfies against this shape's promotion matrix c0, long-cycle
// matrix c1 and interpolating matrix. `basis_permutation` reindexes the
// computed matrices into the basis M is written in (e.g. the fixture basis
// found by match_paper_example).
inline IntertwinerReport verify_intertwiner(
    const MatrixQq& m, const Shape& shape,
    const std::optional<std::vector<int>>& basis_permutation = std::nullopt) {
  InterpolationCertificate cert = interpolating_matrix(shape);
  if (m.rows() != cert.p_hat.rows() || m.cols() != cert.p_hat.cols())
    throw DimensionMismatch("intertwiner dimension mismatch");
  m.inverse();  // singular input is an error, not a finding
  if (!cert.eval0 || !cert.eval1)
    throw MathError("shape has no q = 0 evaluation");
  MatrixQq p_hat = cert.p_hat;
  MatrixQq c0 = *cert.eval0;
  MatrixQq c1 = *cert.eval1;
  if (basis_permutation) {
    p_hat = p_hat.reindex(*basis_permutation);
    c0 = c0.reindex(*basis_permutation);
    c1 = c1.reindex(*basis_permutation);
  }
  IntertwinerReport report;
  report.m_c0_eq_phat_m = (m * c0) == (p_hat * m);
  report.m_phat_eq_c0_m = (m * p_hat) == (c0 * m);
  report.m_c0_eq_c1_m = (m * c0) == (c1 * m);
  report.m_c1_eq_c0_m = (m * c1) == (c0 * m);
  return report;
}

}  // namespace qcactus
