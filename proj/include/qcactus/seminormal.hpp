#pragma once

#include <vector>

#include "qcactus/cactus.hpp"
#include "qcactus/matrix.hpp"
#include "qcactus/tableau.hpp"

namespace qcactus {

// Seminormal matrices over Q(q) for one shape: the Hecke generators u_i,
// the braid images sigma_i = q + u_i, and the cactus generators t_i^(q),
// all indexed 1..r-1 over the basis from enumerate_syt.
//
// On the ordered pair (T, s_iT) with a = a_T(i) > 1 the blocks are
//   u_i = [ -[a-1]/[a]   [a-1]/[a] ]     t_i = [  1/[a]   [a-1]/[a] ]
//         [  [a+1]/[a]  -[a+1]/[a] ]           [ [a+1]/[a]   -1/[a] ]
// and both columns follow the single signed-quantum-integer formulas
//   u_i T = -([a-1]/[a]) T + ([a+1]/[a]) s_iT,
//   t_i T =      (1/[a]) T + ([a+1]/[a]) s_iT,   a = a_T(i), [-n] = -[n],
// with the s_iT term dropped when s_iT is not standard. In particular a
// basis vector fixed by s_i carries u-eigenvalue 0 (same row, a = 1) or
// -[2] (same column, a = -1), and t-eigenvalue 1/[a] = +1 or -1.
struct SeminormalRep {
  Shape shape;
  std::vector<StandardTableau> basis;
  std::vector<MatrixQq> u;      // index i stored at u[i-1]
  std::vector<MatrixQq> sigma;
  std::vector<MatrixQq> t_q;

  int dimension() const { return static_cast<int>(basis.size()); }

  const MatrixQq& u_gen(int i) const { return u[static_cast<size_t>(i) - 1]; }
  const MatrixQq& sigma_gen(int i) const { return sigma[static_cast<size_t>(i) - 1]; }
  const MatrixQq& t_gen(int i) const { return t_q[static_cast<size_t>(i) - 1]; }
};

// Diagonal convention for basis vectors fixed by s_i (a = +1 same row,
// a = -1 same column). The prose formulas and the specialization anchors
// disagree here; the relation suite and the worked-example fixtures decide.
enum class FixedVectorSign {
  by_axial,          // 1/[a]: +1 same row, -1 same column
  by_axial_negated,  // -1/[a]: -1 same row, +1 same column
  always_plus,
  always_minus,
};

inline SeminormalRep build_seminormal(const Shape& shape,
                                      FixedVectorSign fixed_sign = FixedVectorSign::by_axial) {
  SeminormalRep rep{shape, enumerate_syt(shape), {}, {}, {}};
  TableauIndex index(rep.basis);
  int n = rep.dimension();
  int r = shape.size();
  const RationalFunction q_mono = RationalFunction::monomial(Rational(1), 1);

  for (int i = 1; i <= r - 1; ++i) {
    MatrixQq u(n, n), t(n, n);
    for (int col = 0; col < n; ++col) {
      const StandardTableau& tab = rep.basis[static_cast<size_t>(col)];
      int a = tab.axial_distance(i);
      RationalFunction qa = quantum_int_signed(a, Convention::balanced);
      u.at(col, col) = -quantum_int_signed(a - 1, Convention::balanced) / qa;
      StandardTableau swapped = bender_knuth(tab, i);
      if (!(swapped == tab)) {
        t.at(col, col) = RationalFunction(1) / qa;
        int row = index.at(swapped);
        RationalFunction off = quantum_int_signed(a + 1, Convention::balanced) / qa;
        u.at(row, col) = off;
        t.at(row, col) = off;
      } else {
        long sign = 1;
        switch (fixed_sign) {
          case FixedVectorSign::by_axial: sign = (a > 0) ? 1 : -1; break;
          case FixedVectorSign::by_axial_negated: sign = (a > 0) ? -1 : 1; break;
          case FixedVectorSign::always_plus: sign = 1; break;
          case FixedVectorSign::always_minus: sign = -1; break;
        }
        t.at(col, col) = RationalFunction(sign);
      }
    }
    MatrixQq sigma = u;
    for (int d = 0; d < n; ++d) sigma.at(d, d) += q_mono;
    rep.u.push_back(std::move(u));
    rep.sigma.push_back(std::move(sigma));
    rep.t_q.push_back(std::move(t));
  }
  return rep;
}

// The q = 1 specialization of the matrix of p(r-1): the long cycle in the
// seminormal basis, with constant rational entries.
inline MatrixQq long_cycle_matrix(const SeminormalRep& rep) {
  int n = rep.dimension();
  MatrixQq acc = MatrixQq::identity(n);
  int r = rep.shape.size();
  for (int i = r - 1; i >= 1; --i) acc = acc * rep.t_gen(i).eval_at(Rational(1));
  return acc;
}

// Cactus action with matrix elements, fed by any family of involutions
// indexed 1..r-1 (the t_i^(q) or their D-conjugates).
class MatrixCactusAction {
 public:
  using Element = MatrixQq;

  MatrixCactusAction(std::vector<MatrixQq> t_matrices, int dim)
      : t_(std::move(t_matrices)), dim_(dim) {}

  Element identity() const { return MatrixQq::identity(dim_); }
  Element t_elem(int i) const { return t_[static_cast<size_t>(i) - 1]; }
  Element compose(const Element& a, const Element& b) const { return a * b; }
  bool equal(const Element& a, const Element& b) const { return a == b; }

 private:
  std::vector<MatrixQq> t_;
  int dim_;
};

struct RelationSuiteReport {
  Shape shape;
  std::vector<RelationCheck> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

namespace detail {
inline std::string gen_instance(const char* name, int i, int j = 0) {
  std::ostringstream out;
  out << name << " i=" << i;
  if (j > 0) out << " j=" << j;
  return out.str();
}
}  // namespace detail

// Exact matrix identities: the Hecke defining relations on the u_i, the
// braid relations and inverse identities for sigma_i, involutivity of the
// t_i^(q), optionally the full cactus presentation on the t-matrices, and
// the q = 1 specialization being a symmetric-group representation.
inline RelationSuiteReport relation_suite(const SeminormalRep& rep,
                                          bool include_cactus_presentation = true) {
  RelationSuiteReport report{rep.shape, {}};
  int r = rep.shape.size();
  int n = rep.dimension();
  if (r < 2) return report;
  const MatrixQq id = MatrixQq::identity(n);
  const RationalFunction two = quantum_int(2, Convention::balanced);
  const RationalFunction q_mono = RationalFunction::monomial(Rational(1), 1);
  const RationalFunction q_inv_mono = RationalFunction::monomial(Rational(1), -1);

  for (int i = 1; i <= r - 1; ++i) {
    const MatrixQq& u = rep.u_gen(i);
    bool ok = (u * u + u.scaled(two)).is_zero();
    report.checks.push_back({"u_square", detail::gen_instance("u^2 = -[2]u", i), ok});
  }
  for (int i = 1; i <= r - 2; ++i) {
    const MatrixQq& a = rep.u_gen(i);
    const MatrixQq& b = rep.u_gen(i + 1);
    bool ok = (a * b * a - a) == (b * a * b - b);
    report.checks.push_back({"u_cubic", detail::gen_instance("braid-type", i, i + 1), ok});
  }
  for (int i = 1; i <= r - 1; ++i)
    for (int j = i + 2; j <= r - 1; ++j) {
      bool ok = (rep.u_gen(i) * rep.u_gen(j)) == (rep.u_gen(j) * rep.u_gen(i));
      report.checks.push_back({"u_commute", detail::gen_instance("far commute", i, j), ok});
    }

  for (int i = 1; i <= r - 1; ++i) {
    MatrixQq sigma_inv = rep.u_gen(i);
    for (int d = 0; d < n; ++d) sigma_inv.at(d, d) += q_inv_mono;
    bool invertible = (rep.sigma_gen(i) * sigma_inv).is_identity();
    report.checks.push_back(
        {"sigma_inverse", detail::gen_instance("sigma * sigma^-1 = I", i), invertible});
    MatrixQq diff = rep.sigma_gen(i) - sigma_inv;
    bool skein = diff == id.scaled(q_mono - q_inv_mono);
    report.checks.push_back(
        {"sigma_skein", detail::gen_instance("sigma - sigma^-1 = (q - q^-1)I", i), skein});
  }
  for (int i = 1; i <= r - 2; ++i) {
    const MatrixQq& a = rep.sigma_gen(i);
    const MatrixQq& b = rep.sigma_gen(i + 1);
    bool ok = (a * b * a) == (b * a * b);
    report.checks.push_back({"sigma_braid", detail::gen_instance("braid", i, i + 1), ok});
  }

  for (int i = 1; i <= r - 1; ++i) {
    bool ok = (rep.t_gen(i) * rep.t_gen(i)).is_identity();
    report.checks.push_back({"t_involution", detail::gen_instance("t^2 = I", i), ok});
  }

  if (include_cactus_presentation) {
    MatrixCactusAction act(rep.t_q, n);
    PresentationReport pres = check_presentation(act, r);
    for (auto& c : pres.checks)
      report.checks.push_back({"cactus_" + c.relation, c.instance, c.pass});
  }

  // q = 1: the specialized t-matrices generate a symmetric-group action.
  std::vector<MatrixQq> at_one;
  for (const auto& m : rep.t_q) at_one.push_back(m.eval_at(Rational(1)));
  for (int i = 1; i <= r - 1; ++i) {
    bool ok = (at_one[static_cast<size_t>(i) - 1] * at_one[static_cast<size_t>(i) - 1]).is_identity();
    report.checks.push_back({"q1_involution", detail::gen_instance("t(1)^2 = I", i), ok});
    bool matches_sigma =
        at_one[static_cast<size_t>(i) - 1] == rep.sigma_gen(i).eval_at(Rational(1));
    report.checks.push_back(
        {"q1_matches_sigma", detail::gen_instance("t|q=1 = sigma|q=1", i), matches_sigma});
  }
  for (int i = 1; i <= r - 2; ++i) {
    MatrixQq prod = at_one[static_cast<size_t>(i) - 1] * at_one[static_cast<size_t>(i)];
    bool ok = prod.power(3).is_identity();
    report.checks.push_back({"q1_coxeter", detail::gen_instance("(s_i s_{i+1})^3 = I", i, i + 1), ok});
  }
  for (int i = 1; i <= r - 1; ++i)
    for (int j = i + 2; j <= r - 1; ++j) {
      bool ok = (at_one[static_cast<size_t>(i) - 1] * at_one[static_cast<size_t>(j) - 1]) ==
                (at_one[static_cast<size_t>(j) - 1] * at_one[static_cast<size_t>(i) - 1]);
      report.checks.push_back({"q1_commute", detail::gen_instance("far commute", i, j), ok});
    }

  return report;
}

}  // namespace qcactus
