#include "sublat/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace sublat {

namespace {

constexpr int kMaxOracleDim = 3;

void check_guard(const IntMatrix& m, const char* who) {
  if (!is_square(m))
    throw std::invalid_argument(std::string(who) + ": matrix must be square");
  if (m.rows() > kMaxOracleDim)
    throw std::invalid_argument(std::string(who) + ": oracle is capped at n <= 3");
}

// Laplace cofactor expansion along the first row; deliberately naive.
Int cofactor_det(const IntMatrix& a) {
  const Eigen::Index n = a.rows();
  if (n == 1) return a(0, 0);
  Int total = 0;
  IntMatrix sub(n - 1, n - 1);
  for (Eigen::Index j = 0; j < n; ++j) {
    if (a(0, j) == 0) continue;
    for (Eigen::Index r = 1; r < n; ++r)
      for (Eigen::Index c = 0, mc = 0; c < n; ++c) {
        if (c == j) continue;
        sub(r - 1, mc) = a(r, c);
        ++mc;
      }
    Int term = a(0, j) * cofactor_det(sub);
    if (j % 2 != 0) term = -term;
    total += term;
  }
  return total;
}

// All k-element subsets of {0..n-1}, lexicographic.
std::vector<std::vector<Eigen::Index>> subsets(Eigen::Index n, Eigen::Index k) {
  std::vector<std::vector<Eigen::Index>> out;
  std::vector<Eigen::Index> cur;
  auto rec = [&](auto&& self, Eigen::Index start) -> void {
    if (static_cast<Eigen::Index>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (Eigen::Index v = start; v < n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

std::set<std::vector<Int>> lattice_points_in_box(const IntMatrix& b,
                                                 const PointBox& box) {
  check_guard(b, "lattice_points_in_box");
  if (box.radius < 1)
    throw std::invalid_argument("lattice_points_in_box: radius must be >= 1");
  if (box.n != b.rows())
    throw std::invalid_argument("lattice_points_in_box: box dimension mismatch");
  const Int d = cofactor_det(b);
  if (d == 0)
    throw std::invalid_argument("lattice_points_in_box: matrix is singular");
  const Eigen::Index n = b.rows();
  const IntMatrix adj = adjugate(b);
  const Int absdet = abs(d);

  // Coefficient windows: |z_i| <= radius * colsum_i(|adj|) / |det|.
  std::vector<long> window(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    Int colsum = 0;
    for (Eigen::Index j = 0; j < n; ++j) colsum += abs(adj(j, i));
    Int w = floor_div(box.radius * colsum, absdet);
    window[static_cast<std::size_t>(i)] = std::max(w.get_si(), 0L);
  }

  std::set<std::vector<Int>> points;
  std::vector<long> z(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, Eigen::Index i) -> void {
    if (i == n) {
      std::vector<Int> x(static_cast<std::size_t>(n), 0);
      for (Eigen::Index c = 0; c < n; ++c) {
        Int& xc = x[static_cast<std::size_t>(c)];
        for (Eigen::Index r = 0; r < n; ++r)
          xc += z[static_cast<std::size_t>(r)] * b(r, c);
        if (abs(xc) > box.radius) return;
      }
      points.insert(std::move(x));
      return;
    }
    const long w = window[static_cast<std::size_t>(i)];
    for (long v = -w; v <= w; ++v) {
      z[static_cast<std::size_t>(i)] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return points;
}

bool oracle_equal(const IntMatrix& a, const IntMatrix& b, const PointBox& box) {
  check_guard(a, "oracle_equal");
  check_guard(b, "oracle_equal");
  if (a.rows() != b.rows())
    throw std::invalid_argument("oracle_equal: dimension mismatch");
  return lattice_points_in_box(a, box) == lattice_points_in_box(b, box);
}

InvariantChain oracle_snf(const IntMatrix& a) {
  check_guard(a, "oracle_snf");
  const Eigen::Index n = a.rows();
  if (cofactor_det(a) == 0)
    throw std::invalid_argument("oracle_snf: matrix is singular");

  std::vector<Int> dd(static_cast<std::size_t>(n) + 1);
  dd[0] = 1;
  for (Eigen::Index k = 1; k <= n; ++k) {
    Int g = 0;
    IntMatrix sub(k, k);
    for (const auto& rows : subsets(n, k))
      for (const auto& cols : subsets(n, k)) {
        for (Eigen::Index r = 0; r < k; ++r)
          for (Eigen::Index c = 0; c < k; ++c)
            sub(r, c) = a(rows[static_cast<std::size_t>(r)],
                          cols[static_cast<std::size_t>(c)]);
        Int mnr = cofactor_det(sub);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), mnr.get_mpz_t());
      }
    dd[static_cast<std::size_t>(k)] = g;
  }

  std::vector<Int> chain(static_cast<std::size_t>(n));
  for (Eigen::Index k = 1; k <= n; ++k)
    chain[static_cast<std::size_t>(n - k)] = exact_div(
        dd[static_cast<std::size_t>(k)], dd[static_cast<std::size_t>(k - 1)],
        "oracle_snf: determinantal divisors");
  return InvariantChain(std::move(chain));
}

}  // namespace sublat
