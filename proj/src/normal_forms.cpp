#include "sublat/normal_forms.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace sublat {

namespace {

void require_square(const IntMatrix& a, const char* who) {
  if (!is_square(a))
    throw std::invalid_argument(std::string(who) + ": matrix must be square, n >= 1");
}

}  // namespace

Int det(const IntMatrix& a) {
  require_square(a, "det");
  const Eigen::Index n = a.rows();
  IntMatrix m = a;
  Int prev = 1;
  int sign = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return 0;
      m.row(k).swap(m.row(r));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j)
        m(i, j) = exact_div(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev, "det");
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  Int d = m(n - 1, n - 1);
  return sign < 0 ? Int(-d) : d;
}

bool is_unimodular(const IntMatrix& a) {
  Int d = det(a);
  return d == 1 || d == -1;
}

IntMatrix adjugate(const IntMatrix& a) {
  require_square(a, "adjugate");
  const Eigen::Index n = a.rows();
  if (n == 1) {
    IntMatrix r(1, 1);
    r(0, 0) = 1;
    return r;
  }
  IntMatrix adj(n, n);
  IntMatrix sub(n - 1, n - 1);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      for (Eigen::Index r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (Eigen::Index c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          sub(mr, mc) = a(r, c);
          ++mc;
        }
        ++mr;
      }
      Int cof = det(sub);
      if ((i + j) % 2 != 0) cof = -cof;
      adj(j, i) = cof;  // transposed
    }
  }
  return adj;
}

IntMatrix inverse_unimodular(const IntMatrix& u) {
  require_square(u, "inverse_unimodular");
  Int d = det(u);
  if (d != 1 && d != -1)
    throw std::invalid_argument("inverse_unimodular: matrix is not unimodular");
  IntMatrix inv = adjugate(u);
  if (d == -1) inv = -inv;
  if (!same_matrix(u * inv, identity_matrix(u.rows())))
    throw std::logic_error("inverse_unimodular: verification failed");
  return inv;
}

HnfBasis::HnfBasis(IntMatrix m) : mat_(std::move(m)) {
  if (!is_square(mat_))
    throw std::invalid_argument("HnfBasis: matrix must be square, n >= 1");
  const Eigen::Index n = mat_.rows();
  index_ = 1;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (mat_(i, i) <= 0)
      throw std::invalid_argument("HnfBasis: diagonal must be positive");
    index_ *= mat_(i, i);
    for (Eigen::Index j = i + 1; j < n; ++j)
      if (mat_(i, j) != 0)
        throw std::invalid_argument("HnfBasis: matrix must be lower-triangular");
    for (Eigen::Index j = 0; j < i; ++j)
      if (mat_(i, j) < 0 || mat_(i, j) >= mat_(j, j))
        throw std::invalid_argument(
            "HnfBasis: entry not reduced modulo its column diagonal");
  }
}

HnfBasis hnf_reduce(const IntMatrix& a) {
  require_square(a, "hnf_reduce");
  const Eigen::Index n = a.rows();
  IntMatrix u = a;
  // Right-to-left over columns. When column c is reached, rows 0..c are
  // already zero in every column > c, so row operations among them keep
  // the triangular part intact.
  for (Eigen::Index c = n - 1; c >= 0; --c) {
    for (Eigen::Index i = 0; i < c; ++i) {
      if (u(i, c) == 0) continue;
      // Unimodular 2x2 transform of rows (c, i): gcd lands at (c,c),
      // (i,c) becomes zero.
      const GcdExt e = gcd_ext(u(c, c), u(i, c));
      const Int ac = u(c, c) / e.g;
      const Int ai = u(i, c) / e.g;
      for (Eigen::Index j = 0; j <= c; ++j) {
        const Int rc = e.s * u(c, j) + e.t * u(i, j);
        const Int ri = ac * u(i, j) - ai * u(c, j);
        u(c, j) = rc;
        u(i, j) = ri;
      }
    }
    if (u(c, c) == 0)
      throw singular_matrix_error("hnf_reduce: rows are linearly dependent");
    if (u(c, c) < 0)
      for (Eigen::Index j = 0; j <= c; ++j) u(c, j) = -u(c, j);
    // Reduce the fixed rows below so 0 <= u(i,c) < u(c,c).
    for (Eigen::Index i = c + 1; i < n; ++i) {
      const Int q = floor_div(u(i, c), u(c, c));
      if (q == 0) continue;
      for (Eigen::Index j = 0; j <= c; ++j) u(i, j) -= q * u(c, j);
    }
  }
  return HnfBasis(std::move(u));
}

InvariantChain::InvariantChain(std::vector<Int> chain) : chain_(std::move(chain)) {
  if (chain_.empty())
    throw std::invalid_argument("InvariantChain: needs at least one entry");
  for (std::size_t i = 0; i < chain_.size(); ++i) {
    if (chain_[i] <= 0)
      throw std::invalid_argument("InvariantChain: entries must be positive");
    if (i > 0 && !divides(chain_[i], chain_[i - 1]))
      throw std::invalid_argument("InvariantChain: d_i must divide d_{i-1}");
  }
}

Int InvariantChain::product() const {
  Int p = 1;
  for (const Int& d : chain_) p *= d;
  return p;
}

namespace {

struct SnfCore {
  std::vector<Int> ascending;  // s_1 | s_2 | ... | s_n
  IntMatrix left, right;       // maintained only when with_witnesses
};

// Diagonalizes by unimodular row/column operations, keeping
// left * a * right = s as an invariant when witnesses are requested.
SnfCore snf_core(const IntMatrix& a, bool with_witnesses) {
  const Eigen::Index n = a.rows();
  IntMatrix s = a;
  SnfCore out;
  if (with_witnesses) {
    out.left = identity_matrix(n);
    out.right = identity_matrix(n);
  }

  auto add_row = [&](Eigen::Index dst, Eigen::Index src, const Int& q) {
    s.row(dst) += q * s.row(src);
    if (with_witnesses) out.left.row(dst) += q * out.left.row(src);
  };
  auto add_col = [&](Eigen::Index dst, Eigen::Index src, const Int& q) {
    s.col(dst) += q * s.col(src);
    if (with_witnesses) out.right.col(dst) += q * out.right.col(src);
  };
  // gcd of s(t,pivot-axis) into the pivot via a 2x2 unimodular block.
  auto gcd_rows = [&](Eigen::Index t, Eigen::Index i, Eigen::Index col) {
    const GcdExt e = gcd_ext(s(t, col), s(i, col));
    const Int at = s(t, col) / e.g;
    const Int ai = s(i, col) / e.g;
    for (Eigen::Index j = 0; j < n; ++j) {
      const Int rt = e.s * s(t, j) + e.t * s(i, j);
      const Int ri = at * s(i, j) - ai * s(t, j);
      s(t, j) = rt;
      s(i, j) = ri;
    }
    if (with_witnesses)
      for (Eigen::Index j = 0; j < n; ++j) {
        const Int rt = e.s * out.left(t, j) + e.t * out.left(i, j);
        const Int ri = at * out.left(i, j) - ai * out.left(t, j);
        out.left(t, j) = rt;
        out.left(i, j) = ri;
      }
  };
  auto gcd_cols = [&](Eigen::Index t, Eigen::Index j, Eigen::Index row) {
    const GcdExt e = gcd_ext(s(row, t), s(row, j));
    const Int at = s(row, t) / e.g;
    const Int aj = s(row, j) / e.g;
    for (Eigen::Index i = 0; i < n; ++i) {
      const Int ct = e.s * s(i, t) + e.t * s(i, j);
      const Int cj = at * s(i, j) - aj * s(i, t);
      s(i, t) = ct;
      s(i, j) = cj;
    }
    if (with_witnesses)
      for (Eigen::Index i = 0; i < n; ++i) {
        const Int ct = e.s * out.right(i, t) + e.t * out.right(i, j);
        const Int cj = at * out.right(i, j) - aj * out.right(i, t);
        out.right(i, t) = ct;
        out.right(i, j) = cj;
      }
  };

  for (Eigen::Index t = 0; t < n; ++t) {
    // Bring the smallest nonzero of the trailing submatrix to (t,t);
    // small pivots keep intermediate entries from ballooning.
    for (;;) {
      Eigen::Index pi = -1, pj = -1;
      for (Eigen::Index i = t; i < n; ++i)
        for (Eigen::Index j = t; j < n; ++j) {
          if (s(i, j) == 0) continue;
          if (pi < 0 || abs(s(i, j)) < abs(s(pi, pj))) {
            pi = i;
            pj = j;
          }
        }
      if (pi < 0)
        throw singular_matrix_error("snf_reduce: rows are linearly dependent");
      if (pi != t) {
        s.row(t).swap(s.row(pi));
        if (with_witnesses) out.left.row(t).swap(out.left.row(pi));
      }
      if (pj != t) {
        s.col(t).swap(s.col(pj));
        if (with_witnesses) out.right.col(t).swap(out.right.col(pj));
      }

      for (Eigen::Index i = t + 1; i < n; ++i) {
        if (s(i, t) == 0) continue;
        if (divides(s(t, t), s(i, t)))
          add_row(i, t, Int(-(s(i, t) / s(t, t))));
        else
          gcd_rows(t, i, t);
      }
      for (Eigen::Index j = t + 1; j < n; ++j) {
        if (s(t, j) == 0) continue;
        if (divides(s(t, t), s(t, j)))
          add_col(j, t, Int(-(s(t, j) / s(t, t))));
        else
          gcd_cols(t, j, t);
      }

      bool clear = true;
      for (Eigen::Index i = t + 1; i < n && clear; ++i)
        if (s(i, t) != 0) clear = false;
      for (Eigen::Index j = t + 1; j < n && clear; ++j)
        if (s(t, j) != 0) clear = false;
      if (!clear) continue;

      // Pivot must divide the whole trailing submatrix; fold a bad row in
      // and repeat, which strictly shrinks the pivot gcd.
      bool divisible = true;
      for (Eigen::Index i = t + 1; i < n && divisible; ++i)
        for (Eigen::Index j = t + 1; j < n && divisible; ++j)
          if (!divides(s(t, t), s(i, j))) {
            add_row(t, i, 1);
            divisible = false;
          }
      if (divisible) break;
    }
    if (s(t, t) < 0) {
      s.row(t) = -s.row(t);
      if (with_witnesses) out.left.row(t) = -out.left.row(t);
    }
  }

  out.ascending.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index t = 0; t < n; ++t) out.ascending.push_back(s(t, t));
  return out;
}

std::vector<Int> reversed(std::vector<Int> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

}  // namespace

SnfResult snf_reduce(const IntMatrix& a) {
  require_square(a, "snf_reduce");
  const Eigen::Index n = a.rows();
  SnfCore core = snf_core(a, true);
  // The convention here is decreasing divisibility (largest first); conjugate
  // by the reversal permutation, which is its own transpose and inverse.
  IntMatrix rev = IntMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) rev(i, n - 1 - i) = 1;
  SnfResult r{InvariantChain(reversed(core.ascending)), IntMatrix(rev * core.left),
              IntMatrix(core.right * rev)};
  IntMatrix diag = IntMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) diag(i, i) = r.chain.values()[static_cast<std::size_t>(i)];
  if (!same_matrix(r.left * a * r.right, diag))
    throw std::logic_error("snf_reduce: witness identity failed");
  if (!is_unimodular(r.left) || !is_unimodular(r.right))
    throw std::logic_error("snf_reduce: witness is not unimodular");
  return r;
}

InvariantChain snf_chain(const IntMatrix& a) {
  require_square(a, "snf_chain");
  return InvariantChain(reversed(snf_core(a, false).ascending));
}

}  // namespace sublat
