#pragma once

#include "qcactus/matrix.hpp"

namespace qcactus {

// Reference matrices for the bundled 5x5 worked example (shape 3,3): the
// rotation pair (the long cycle at q = 1), the promotion pair, the
// interpolating pair over Q(q), and the explicit intertwiner pair. Entries
// are built from balanced quantum integers so they stay exact.
struct ExampleFixtures {
  MatrixQq rotation;
  MatrixQq rotation_inverse;
  MatrixQq promotion;
  MatrixQq promotion_inverse;
  MatrixQq interpolating;
  MatrixQq interpolating_inverse;
  MatrixQq intertwiner;
  MatrixQq intertwiner_inverse;
};

namespace fixtures_detail {

inline RationalFunction qb(int n) { return quantum_int(n, Convention::balanced); }

inline RationalFunction rat(long num, long den) {
  return RationalFunction(make_rational(num, den));
}

inline MatrixQq from_rows(const std::vector<std::vector<RationalFunction>>& rows) {
  int n = static_cast<int>(rows.size());
  MatrixQq m(n, static_cast<int>(rows[0].size()));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  return m;
}

inline MatrixQq from_int_rows(const std::vector<std::vector<int>>& rows) {
  int n = static_cast<int>(rows.size());
  MatrixQq m(n, static_cast<int>(rows[0].size()));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m.cols(); ++j)
      m.at(i, j) = RationalFunction(static_cast<long>(rows[static_cast<size_t>(i)][static_cast<size_t>(j)]));
  return m;
}

}  // namespace fixtures_detail

inline ExampleFixtures builtin_example_fixtures() {
  using namespace fixtures_detail;
  const RationalFunction z(0L), one(1L);
  const RationalFunction q2 = qb(2), q3 = qb(3), q4 = qb(4);

  ExampleFixtures fx;

  fx.rotation = from_rows({
      {rat(1, 3), rat(4, 9), z, rat(2, 3), z},
      {rat(1, 2), rat(-1, 12), rat(3, 8), rat(-1, 8), rat(9, 16)},
      {one, rat(-1, 6), rat(-1, 4), rat(-1, 4), rat(-3, 8)},
      {z, rat(1, 2), rat(3, 4), rat(-1, 4), rat(-3, 8)},
      {z, one, rat(-1, 2), rat(-1, 2), rat(1, 4)},
  });

  fx.rotation_inverse = from_rows({
      {rat(1, 3), rat(4, 9), rat(2, 3), z, z},
      {rat(1, 2), rat(-1, 12), rat(-1, 8), rat(3, 8), rat(9, 16)},
      {z, rat(1, 2), rat(-1, 4), rat(3, 4), rat(-3, 8)},
      {one, rat(-1, 6), rat(-1, 4), rat(-1, 4), rat(-3, 8)},
      {z, one, rat(-1, 2), rat(-1, 2), rat(1, 4)},
  });

  fx.promotion = from_int_rows({
      {0, 0, 0, 1, 0},
      {0, 0, 0, 0, 1},
      {1, 0, 0, 0, 0},
      {0, 0, 1, 0, 0},
      {0, 1, 0, 0, 0},
  });

  fx.promotion_inverse = from_int_rows({
      {0, 0, 1, 0, 0},
      {0, 0, 0, 0, 1},
      {0, 0, 0, 1, 0},
      {1, 0, 0, 0, 0},
      {0, 1, 0, 0, 0},
  });

  fx.interpolating = from_rows({
      {one / q3, q4 / (q3 * q3), z, q4 / (q2 * q3), z},
      {one / q2, -one / (q3 * q2 * q2), q3 / (q2 * q2 * q2), -one / (q2 * q2 * q2),
       (q3 * q3) / (q2 * q2 * q2 * q2)},
      {one, -one / (q2 * q3), -one / (q2 * q2), -one / (q2 * q2), -q3 / (q2 * q2 * q2)},
      {z, one / q2, q3 / (q2 * q2), -one / (q2 * q2), -q3 / (q2 * q2 * q2)},
      {z, one, -one / q2, -one / q2, one / (q2 * q2)},
  });

  fx.interpolating_inverse = from_rows({
      {one / q3, q4 / (q3 * q3), q2 / q3, z, z},
      {one / q2, -one / (q2 * q2 * q3), -one / (q2 * q2 * q2), q3 / (q2 * q2 * q2),
       (q3 * q3) / (q2 * q2 * q2 * q2)},
      {z, one / q2, -one / (q2 * q2), q3 / (q2 * q2), -q3 / (q2 * q2 * q2)},
      {one, -one / (q2 * q3), -one / (q2 * q2), -one / (q2 * q2), -q3 / (q2 * q2 * q2)},
      {z, one, -one / q2, -one / q2, one / (q2 * q2)},
  });

  fx.intertwiner = from_rows({
      {one, -q2 / q3, z, z, -one / q2},
      {z, one, -one / q2, -one / q2, one / (q2 * q2)},
      {z, z, one, z, -one / q2},
      {z, z, z, one, -one / q2},
      {z, z, z, z, one},
  });

  fx.intertwiner_inverse = from_rows({
      {one, q2 / q3, one / q3, one / q3, q2 / q3},
      {z, one, one / q2, one / q2, one / (q2 * q2)},
      {z, z, one, z, one / q2},
      {z, z, z, one, one / q2},
      {z, z, z, z, one},
  });

  return fx;
}

}  // namespace qcactus
