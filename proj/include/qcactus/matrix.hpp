#pragma once

#include <optional>
#include <vector>

#include "qcactus/ratfun.hpp"

namespace qcactus {

// Dense matrix over Q(q), row-major. All operations are exact and return
// entries in canonical form.
class MatrixQq {
 public:
  MatrixQq() : rows_(0), cols_(0) {}

  MatrixQq(int rows, int cols)
      : rows_(rows), cols_(cols),
        e_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {
    if (rows < 0 || cols < 0) throw DimensionMismatch("negative dimension");
  }

  static MatrixQq identity(int n) {
    MatrixQq m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = RationalFunction(1);
    return m;
  }

  // Column j carries the image of basis vector j: entry (image[j], j) = 1.
  static MatrixQq permutation(const std::vector<int>& image) {
    int n = static_cast<int>(image.size());
    MatrixQq m(n, n);
    for (int j = 0; j < n; ++j) m.at(image[static_cast<size_t>(j)], j) = RationalFunction(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  RationalFunction& at(int i, int j) {
    return e_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)];
  }
  const RationalFunction& at(int i, int j) const {
    return e_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)];
  }

  bool operator==(const MatrixQq& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }
  bool operator!=(const MatrixQq& o) const { return !(*this == o); }

  MatrixQq operator+(const MatrixQq& o) const {
    require_same_shape(o);
    MatrixQq r(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
    return r;
  }

  MatrixQq operator-(const MatrixQq& o) const {
    require_same_shape(o);
    MatrixQq r(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
    return r;
  }

  MatrixQq operator*(const MatrixQq& o) const {
    if (cols_ != o.rows_)
      throw DimensionMismatch("matrix product dimension mismatch");
    MatrixQq r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < o.cols_; ++j) {
        RationalFunction acc;
        for (int k = 0; k < cols_; ++k) {
          const RationalFunction& a = at(i, k);
          const RationalFunction& b = o.at(k, j);
          if (a.is_zero() || b.is_zero()) continue;
          acc += a * b;
        }
        r.at(i, j) = std::move(acc);
      }
    }
    return r;
  }

  MatrixQq scaled(const RationalFunction& c) const {
    MatrixQq r(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] * c;
    return r;
  }

  MatrixQq transpose() const {
    MatrixQq r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  MatrixQq power(unsigned long m) const {
    require_square();
    MatrixQq result = identity(rows_);
    MatrixQq base = *this;
    while (m > 0) {
      if (m & 1UL) result = result * base;
      m >>= 1UL;
      if (m > 0) base = base * base;
    }
    return result;
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    return *this == identity(rows_);
  }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!x.is_zero()) return false;
    return true;
  }

  // 0/1 permutation matrix with exactly one 1 per row and column.
  bool is_permutation() const {
    if (rows_ != cols_) return false;
    std::vector<int> col_count(static_cast<size_t>(cols_), 0);
    for (int i = 0; i < rows_; ++i) {
      int row_count = 0;
      for (int j = 0; j < cols_; ++j) {
        const RationalFunction& x = at(i, j);
        if (x.is_zero()) continue;
        if (!(x == RationalFunction(1))) return false;
        ++row_count;
        ++col_count[static_cast<size_t>(j)];
      }
      if (row_count != 1) return false;
    }
    for (int c : col_count)
      if (c != 1) return false;
    return true;
  }

  // Exact Gauss-Jordan inverse. Pivots are chosen by least term count to
  // limit fill-in; a rank deficiency raises SingularMatrix.
  MatrixQq inverse() const {
    require_square();
    int n = rows_;
    MatrixQq a(*this);
    MatrixQq inv = identity(n);
    for (int col = 0; col < n; ++col) {
      int pivot = -1;
      size_t best = 0;
      for (int i = col; i < n; ++i) {
        if (a.at(i, col).is_zero()) continue;
        size_t c = a.at(i, col).complexity();
        if (pivot < 0 || c < best) {
          pivot = i;
          best = c;
        }
      }
      if (pivot < 0) throw SingularMatrix();
      if (pivot != col) {
        a.swap_rows(pivot, col);
        inv.swap_rows(pivot, col);
      }
      RationalFunction p = a.at(col, col);
      for (int j = 0; j < n; ++j) {
        a.at(col, j) = a.at(col, j) / p;
        inv.at(col, j) = inv.at(col, j) / p;
      }
      for (int i = 0; i < n; ++i) {
        if (i == col) continue;
        RationalFunction f = a.at(i, col);
        if (f.is_zero()) continue;
        for (int j = 0; j < n; ++j) {
          a.at(i, j) = a.at(i, j) - f * a.at(col, j);
          inv.at(i, j) = inv.at(i, j) - f * inv.at(col, j);
        }
      }
    }
    return inv;
  }

  RationalFunction determinant() const {
    require_square();
    int n = rows_;
    MatrixQq a(*this);
    RationalFunction det(1);
    for (int col = 0; col < n; ++col) {
      int pivot = -1;
      size_t best = 0;
      for (int i = col; i < n; ++i) {
        if (a.at(i, col).is_zero()) continue;
        size_t c = a.at(i, col).complexity();
        if (pivot < 0 || c < best) {
          pivot = i;
          best = c;
        }
      }
      if (pivot < 0) return RationalFunction();
      if (pivot != col) {
        a.swap_rows(pivot, col);
        det = -det;
      }
      const RationalFunction p = a.at(col, col);
      det *= p;
      for (int i = col + 1; i < n; ++i) {
        RationalFunction f = a.at(i, col) / p;
        if (f.is_zero()) continue;
        for (int j = col; j < n; ++j)
          a.at(i, j) = a.at(i, j) - f * a.at(col, j);
      }
    }
    return det;
  }

  // D * this * D^-1 for a diagonal D given by its diagonal entries.
  MatrixQq conjugate_by_diagonal(const std::vector<RationalFunction>& d) const {
    require_square();
    if (static_cast<int>(d.size()) != rows_)
      throw DimensionMismatch("diagonal size mismatch");
    for (const auto& x : d)
      if (x.is_zero()) throw DivisionByZero("singular diagonal conjugation");
    MatrixQq r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) {
        if (at(i, j).is_zero()) continue;
        r.at(i, j) = at(i, j) * d[static_cast<size_t>(i)] / d[static_cast<size_t>(j)];
      }
    return r;
  }

  // Entrywise exact evaluation; PoleError is tagged with the offending
  // entry's coordinates.
  MatrixQq eval_at(const Rational& point) const {
    MatrixQq r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) {
        try {
          r.at(i, j) = RationalFunction(at(i, j).eval(point));
        } catch (const PoleError& e) {
          throw PoleError(std::string(e.what()) + " in matrix entry", e.valuation, i, j);
        }
      }
    return r;
  }

  // Minimum valuation at q = 0 over the nonzero entries; nullopt for the
  // zero matrix. The matrix is regular at 0 iff this is >= 0.
  std::optional<long> order_scan() const {
    std::optional<long> min;
    for (const auto& x : e_) {
      if (x.is_zero()) continue;
      long v = x.order_at_zero();
      if (!min || v < *min) min = v;
    }
    return min;
  }

  // Basis reindexing: entry (i, j) moves to (perm[i], perm[j]).
  MatrixQq reindex(const std::vector<int>& perm) const {
    require_square();
    if (static_cast<int>(perm.size()) != rows_)
      throw DimensionMismatch("permutation size mismatch");
    MatrixQq r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        r.at(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]) = at(i, j);
    return r;
  }

  size_t mismatch_count(const MatrixQq& o) const {
    require_same_shape(o);
    size_t n = 0;
    for (size_t k = 0; k < e_.size(); ++k)
      if (!(e_[k] == o.e_[k])) ++n;
    return n;
  }

 private:
  void require_square() const {
    if (rows_ != cols_) throw DimensionMismatch("matrix is not square");
  }

  void require_same_shape(const MatrixQq& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw DimensionMismatch("matrix shape mismatch");
  }

  void swap_rows(int i, int j) {
    for (int col = 0; col < cols_; ++col) std::swap(at(i, col), at(j, col));
  }

  int rows_;
  int cols_;
  std::vector<RationalFunction> e_;
};

// Characteristic polynomial det(q*I - M) of a matrix with constant rational
// entries, as an exact polynomial in q.
inline LaurentPoly char_poly_in_q(const MatrixQq& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("char poly of non-square matrix");
  MatrixQq a(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      if (!m.at(i, j).is_constant())
        throw MathError("char_poly_in_q expects a constant matrix");
      RationalFunction x = -m.at(i, j);
      if (i == j) x += RationalFunction::monomial(Rational(1), 1);
      a.at(i, j) = x;
    }
  RationalFunction det = a.determinant();
  if (!det.is_polynomial() || !det.num().is_ordinary())
    throw MathError("characteristic polynomial is not polynomial");
  return det.num();
}

}  // namespace qcactus
