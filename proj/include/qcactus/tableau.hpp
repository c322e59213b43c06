#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qcactus/numeric.hpp"

namespace qcactus {

// Partition shape: weakly decreasing positive parts, English orientation.
class Shape {
 public:
  explicit Shape(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw MathError("empty shape");
    for (size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw MathError("shape parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw MathError("shape parts must be weakly decreasing");
    }
  }

  const std::vector<int>& parts() const { return parts_; }
  int num_rows() const { return static_cast<int>(parts_.size()); }
  int row_length(int i) const { return parts_[static_cast<size_t>(i)]; }

  int size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
  }

  bool is_rectangular() const {
    return std::all_of(parts_.begin(), parts_.end(),
                       [&](int p) { return p == parts_[0]; });
  }

  // Number of cells in column j (0-based).
  int col_height(int j) const {
    int h = 0;
    for (int p : parts_)
      if (p > j) ++h;
    return h;
  }

  bool contains(int i, int j) const {
    return i >= 0 && i < num_rows() && j >= 0 && j < row_length(i);
  }

  bool operator==(const Shape& o) const { return parts_ == o.parts_; }
  bool operator!=(const Shape& o) const { return !(*this == o); }
  bool operator<(const Shape& o) const { return parts_ < o.parts_; }

  std::string to_string() const {
    std::ostringstream out;
    for (size_t i = 0; i < parts_.size(); ++i) {
      if (i) out << ",";
      out << parts_[i];
    }
    return out.str();
  }

  // Parses comma-separated parts, e.g. "3,3".
  static Shape parse(const std::string& text) {
    std::vector<int> parts;
    std::stringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
      try {
        size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw ParseError("bad shape part: " + tok);
        parts.push_back(v);
      } catch (const ParseError&) {
        throw;
      } catch (const std::exception&) {
        throw ParseError("bad shape part: " + tok);
      }
    }
    if (parts.empty()) throw ParseError("empty shape: " + text);
    try {
      return Shape(parts);
    } catch (const MathError& e) {
      throw ParseError(std::string("invalid shape '") + text + "': " + e.what());
    }
  }

 private:
  std::vector<int> parts_;
};

struct Cell {
  int row = 0;
  int col = 0;
};

// Hook length (arm + leg + 1) of every cell, row-major.
inline std::vector<int> hook_lengths(const Shape& shape) {
  std::vector<int> hooks;
  for (int i = 0; i < shape.num_rows(); ++i)
    for (int j = 0; j < shape.row_length(i); ++j)
      hooks.push_back((shape.row_length(i) - j - 1) + (shape.col_height(j) - i - 1) + 1);
  return hooks;
}

// Standard filling of a shape: entries 1..r, rows and columns strictly
// increasing. Rows are stored 0-based internally.
class StandardTableau {
 public:
  StandardTableau(Shape shape, std::vector<std::vector<int>> rows)
      : shape_(std::move(shape)), rows_(std::move(rows)) {
    validate();
  }

  const Shape& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int size() const { return shape_.size(); }

  int entry(int i, int j) const { return rows_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }

  // Cell (0-based) holding entry k.
  Cell cell_of(int k) const {
    for (int i = 0; i < shape_.num_rows(); ++i)
      for (int j = 0; j < shape_.row_length(i); ++j)
        if (entry(i, j) == k) return {i, j};
    throw MathError("entry not found in tableau");
  }

  // ct(k) = j - i for the cell holding k, listed for k = 1..r.
  std::vector<int> content_vector() const {
    std::vector<int> ct(static_cast<size_t>(size()), 0);
    for (int i = 0; i < shape_.num_rows(); ++i)
      for (int j = 0; j < shape_.row_length(i); ++j)
        ct[static_cast<size_t>(entry(i, j)) - 1] = j - i;
    return ct;
  }

  // a(i) = ct(i+1) - ct(i); |a| = 1 iff i and i+1 share a row (+1) or a
  // column (-1).
  int axial_distance(int i) const {
    if (i < 1 || i >= size()) throw MathError("axial distance index out of range");
    std::vector<int> ct = content_vector();
    return ct[static_cast<size_t>(i)] - ct[static_cast<size_t>(i) - 1];
  }

  // Number of pairs k < l with ct(l) < ct(k).
  int inversions() const {
    std::vector<int> ct = content_vector();
    int inv = 0;
    for (size_t k = 0; k < ct.size(); ++k)
      for (size_t l = k + 1; l < ct.size(); ++l)
        if (ct[l] < ct[k]) ++inv;
    return inv;
  }

  // Descents: i such that i+1 sits in a strictly lower row than i.
  std::vector<int> descents() const {
    std::vector<int> d;
    for (int i = 1; i < size(); ++i)
      if (cell_of(i + 1).row > cell_of(i).row) d.push_back(i);
    return d;
  }

  int maj() const {
    int m = 0;
    for (int i : descents()) m += i;
    return m;
  }

  bool operator==(const StandardTableau& o) const { return rows_ == o.rows_; }
  bool operator!=(const StandardTableau& o) const { return !(*this == o); }

 private:
  void validate() const {
    if (shape_.num_rows() != static_cast<int>(rows_.size()))
      throw MathError("tableau row count does not match shape");
    std::set<int> seen;
    for (int i = 0; i < shape_.num_rows(); ++i) {
      if (static_cast<int>(rows_[static_cast<size_t>(i)].size()) != shape_.row_length(i))
        throw MathError("tableau row length does not match shape");
      for (int j = 0; j < shape_.row_length(i); ++j) {
        int v = entry(i, j);
        if (v < 1 || v > size() || !seen.insert(v).second)
          throw MathError("tableau entries must be a permutation of 1..r");
        if (j > 0 && entry(i, j - 1) >= v)
          throw MathError("tableau rows must strictly increase");
        if (i > 0 && entry(i - 1, j) >= v)
          throw MathError("tableau columns must strictly increase");
      }
    }
  }

  Shape shape_;
  std::vector<std::vector<int>> rows_;
};

// Elementary swap involution: exchange i and i+1 when the result is still
// standard (i.e. they share neither row nor column), else fix the tableau.
inline StandardTableau bender_knuth(const StandardTableau& t, int i) {
  if (i < 1 || i >= t.size()) throw MathError("bender_knuth index out of range");
  Cell a = t.cell_of(i);
  Cell b = t.cell_of(i + 1);
  if (a.row == b.row || a.col == b.col) return t;
  auto rows = t.rows();
  rows[static_cast<size_t>(a.row)][static_cast<size_t>(a.col)] = i + 1;
  rows[static_cast<size_t>(b.row)][static_cast<size_t>(b.col)] = i;
  return StandardTableau(t.shape(), std::move(rows));
}

// Jeu-de-taquin promotion by direct sliding: remove 1, slide the hole to the
// outer boundary, decrement every entry, and write r into the vacated cell.
// Implemented independently of bender_knuth so the two can cross-validate.
inline StandardTableau jdt_promotion(const StandardTableau& t) {
  auto rows = t.rows();
  int r = t.size();
  Cell hole = t.cell_of(1);
  for (;;) {
    bool has_right = t.shape().contains(hole.row, hole.col + 1);
    bool has_below = t.shape().contains(hole.row + 1, hole.col);
    if (!has_right && !has_below) break;
    int right = has_right ? rows[static_cast<size_t>(hole.row)][static_cast<size_t>(hole.col) + 1]
                          : r + 1;
    int below = has_below ? rows[static_cast<size_t>(hole.row) + 1][static_cast<size_t>(hole.col)]
                          : r + 1;
    Cell from = (right < below) ? Cell{hole.row, hole.col + 1} : Cell{hole.row + 1, hole.col};
    rows[static_cast<size_t>(hole.row)][static_cast<size_t>(hole.col)] =
        rows[static_cast<size_t>(from.row)][static_cast<size_t>(from.col)];
    hole = from;
  }
  for (auto& row : rows)
    for (int& v : row) --v;
  rows[static_cast<size_t>(hole.row)][static_cast<size_t>(hole.col)] = r;
  return StandardTableau(t.shape(), std::move(rows));
}

// Half-turn rotation of a rectangular tableau with entries e -> r+1-e.
inline StandardTableau reverse_complement(const StandardTableau& t) {
  if (!t.shape().is_rectangular())
    throw MathError("reverse_complement requires a rectangular shape");
  int a = t.shape().num_rows();
  int b = t.shape().row_length(0);
  int r = t.size();
  std::vector<std::vector<int>> rows(static_cast<size_t>(a),
                                     std::vector<int>(static_cast<size_t>(b), 0));
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j)
      rows[static_cast<size_t>(a - 1 - i)][static_cast<size_t>(b - 1 - j)] =
          r + 1 - t.entry(i, j);
  return StandardTableau(t.shape(), std::move(rows));
}

// All standard tableaux of the shape, ordered by content vector in
// descending lexicographic order. This ordering is the basis ordering used
// by every matrix construction.
inline std::vector<StandardTableau> enumerate_syt(const Shape& shape) {
  int r = shape.size();
  std::vector<std::vector<int>> grid(static_cast<size_t>(shape.num_rows()));
  for (int i = 0; i < shape.num_rows(); ++i)
    grid[static_cast<size_t>(i)].assign(static_cast<size_t>(shape.row_length(i)), 0);
  std::vector<int> fill(static_cast<size_t>(shape.num_rows()), 0);
  std::vector<StandardTableau> out;

  auto rec = [&](auto&& self, int k) -> void {
    if (k > r) {
      out.emplace_back(shape, grid);
      return;
    }
    for (int i = 0; i < shape.num_rows(); ++i) {
      int j = fill[static_cast<size_t>(i)];
      if (j >= shape.row_length(i)) continue;
      if (i > 0 && fill[static_cast<size_t>(i) - 1] <= j) continue;
      grid[static_cast<size_t>(i)][static_cast<size_t>(j)] = k;
      ++fill[static_cast<size_t>(i)];
      self(self, k + 1);
      --fill[static_cast<size_t>(i)];
    }
  };
  rec(rec, 1);

  std::sort(out.begin(), out.end(),
            [](const StandardTableau& a, const StandardTableau& b) {
              return a.content_vector() > b.content_vector();
            });
  return out;
}

// Index lookup for a fixed basis ordering.
class TableauIndex {
 public:
  explicit TableauIndex(const std::vector<StandardTableau>& basis) {
    for (size_t i = 0; i < basis.size(); ++i)
      index_[basis[i].rows()] = static_cast<int>(i);
  }

  int at(const StandardTableau& t) const {
    auto it = index_.find(t.rows());
    if (it == index_.end()) throw MathError("tableau not in basis");
    return it->second;
  }

 private:
  std::map<std::vector<std::vector<int>>, int> index_;
};

// Promotion as a permutation of the basis indices: image[j] = index of
// jdt_promotion(basis[j]).
inline std::vector<int> promotion_permutation(const std::vector<StandardTableau>& basis) {
  TableauIndex index(basis);
  std::vector<int> image(basis.size());
  for (size_t j = 0; j < basis.size(); ++j)
    image[j] = index.at(jdt_promotion(basis[j]));
  return image;
}

inline std::vector<std::vector<int>> permutation_orbits(const std::vector<int>& image) {
  std::vector<std::vector<int>> orbits;
  std::vector<bool> seen(image.size(), false);
  for (size_t s = 0; s < image.size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> orbit;
    int x = static_cast<int>(s);
    while (!seen[static_cast<size_t>(x)]) {
      seen[static_cast<size_t>(x)] = true;
      orbit.push_back(x);
      x = image[static_cast<size_t>(x)];
    }
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

// Multiplicative order = lcm of the cycle lengths.
inline long permutation_order(const std::vector<int>& image) {
  long order = 1;
  for (const auto& orbit : permutation_orbits(image))
    order = std::lcm(order, static_cast<long>(orbit.size()));
  return order;
}

// Partitions of n, largest-first within each partition, enumerated in
// descending lexicographic order starting at (n).
inline std::vector<Shape> partitions_of(int n) {
  std::vector<Shape> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  if (n >= 1) rec(rec, n, n);
  return out;
}

inline std::vector<Shape> partitions_up_to(int n) {
  std::vector<Shape> out;
  for (int k = 1; k <= n; ++k)
    for (auto& s : partitions_of(k)) out.push_back(std::move(s));
  return out;
}

}  // namespace qcactus
