#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include "sublat/int.hpp"

namespace Eigen {

// Teaches Eigen's dense types to carry GMP integers as scalars. Only ring
// operations are ever used on them (storage, sums, products, compares); no
// decompositions touch this scalar.
template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpz_class;
  using Nested = mpz_class;
  using Literal = long;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 50
  };
};

}  // namespace Eigen

namespace sublat {

/// Dense square matrix of exact integers. Throughout the library, row i is
/// the coordinate vector of basis vector i relative to the standard basis
/// of the ambient lattice Z^n.
using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;

inline IntMatrix identity_matrix(Eigen::Index n) {
  return IntMatrix::Identity(n, n);
}

inline bool same_matrix(const IntMatrix& a, const IntMatrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && a == b;
}

inline bool is_square(const IntMatrix& a) {
  return a.rows() == a.cols() && a.rows() >= 1;
}

}  // namespace sublat
