#pragma once

#include <vector>

#include "sublat/errors.hpp"
#include "sublat/matrix.hpp"

namespace sublat {

/// Exact determinant via fraction-free (Bareiss) elimination.
Int det(const IntMatrix& a);

/// True iff |det(a)| = 1, i.e. a maps Z^n bijectively onto Z^n.
bool is_unimodular(const IntMatrix& a);

/// Transposed cofactor matrix; adjugate(a) * a = det(a) * I.
IntMatrix adjugate(const IntMatrix& a);

/// Exact inverse of a unimodular matrix (integral by unimodularity).
/// Throws std::invalid_argument when |det| != 1.
IntMatrix inverse_unimodular(const IntMatrix& u);

/// The canonical basis of a full-rank sublattice of Z^n: lower-triangular,
/// positive diagonal, and every below-diagonal entry reduced modulo its
/// column's diagonal (0 <= u_ij < u_jj for j < i). One per sublattice.
/// (A row-bounded variant, 0 <= u_ij < u_ii, also exists but is not unique
/// per lattice -- e.g. [[1,0],[0,2]] and [[1,0],[1,2]] both satisfy it and
/// generate the same lattice -- so it is not used here.)
class HnfBasis {
 public:
  /// Validates all invariants; throws std::invalid_argument on violation.
  explicit HnfBasis(IntMatrix m);

  const IntMatrix& matrix() const { return mat_; }
  Eigen::Index dim() const { return mat_.rows(); }
  /// Product of the diagonal = |det| = index of the sublattice.
  const Int& index() const { return index_; }

  bool operator==(const HnfBasis& o) const { return same_matrix(mat_, o.mat_); }

 private:
  IntMatrix mat_;
  Int index_;
};

/// Reduces a nonsingular basis to the canonical HnfBasis generating the
/// same row lattice over Z. Throws singular_matrix_error when the rows are
/// linearly dependent.
HnfBasis hnf_reduce(const IntMatrix& a);

/// Smith normal form diagonal in decreasing-divisibility order:
/// d_1, d_2, ..., d_n positive with d_i | d_{i-1}. The complete invariant
/// of sublattices under unimodular equivalence; product = index.
class InvariantChain {
 public:
  /// Validates positivity and the divisibility chain; throws
  /// std::invalid_argument on violation.
  explicit InvariantChain(std::vector<Int> chain);

  const std::vector<Int>& values() const { return chain_; }
  int size() const { return static_cast<int>(chain_.size()); }
  Int product() const;

  bool operator==(const InvariantChain& o) const { return chain_ == o.chain_; }
  bool operator<(const InvariantChain& o) const { return chain_ < o.chain_; }

 private:
  std::vector<Int> chain_;
};

/// left * a * right = diag(chain), with both witnesses unimodular.
struct SnfResult {
  InvariantChain chain;
  IntMatrix left;
  IntMatrix right;
};

/// Diagonalizes a nonsingular integer matrix by unimodular row and column
/// operations. The returned chain is in decreasing-divisibility order and
/// the witness identity is verified before returning (std::logic_error on
/// an internal failure). Throws singular_matrix_error for singular input.
SnfResult snf_reduce(const IntMatrix& a);

/// The invariant chain alone; same elimination, no witness bookkeeping.
InvariantChain snf_chain(const IntMatrix& a);

}  // namespace sublat
