#pragma once

#include <random>

#include "sublat/normal_forms.hpp"

namespace sublat::testing {

/// Uniform matrix with entries in [lo, hi].
inline IntMatrix random_matrix(std::mt19937_64& rng, int n, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = dist(rng);
  return m;
}

/// Resamples until the determinant is nonzero.
inline IntMatrix random_nonsingular(std::mt19937_64& rng, int n, long lo, long hi) {
  for (;;) {
    IntMatrix m = random_matrix(rng, n, lo, hi);
    if (det(m) != 0) return m;
  }
}

/// Product of at most max_ops random elementary integer row operations
/// (swap, negate, add k times another row), so unimodular by construction.
inline IntMatrix random_unimodular(std::mt19937_64& rng, int n, int max_ops = 10) {
  IntMatrix w = identity_matrix(n);
  std::uniform_int_distribution<int> op_count(0, max_ops);
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<int> row(0, n - 1);
  std::uniform_int_distribution<long> scale(-3, 3);
  const int ops = op_count(rng);
  for (int t = 0; t < ops; ++t) {
    const int i = row(rng);
    int j = row(rng);
    switch (kind(rng)) {
      case 0:
        if (i != j) w.row(i).swap(w.row(j));
        break;
      case 1:
        w.row(i) = -w.row(i);
        break;
      default:
        if (n == 1) break;
        while (j == i) j = row(rng);
        w.row(i) += Int(scale(rng)) * w.row(j);
        break;
    }
  }
  return w;
}

}  // namespace sublat::testing
