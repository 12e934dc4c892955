#pragma once

#include <vector>

#include "sublat/arith.hpp"
#include "sublat/counting.hpp"
#include "sublat/errors.hpp"
#include "sublat/normal_forms.hpp"

namespace sublat {

/// One unimodular-equivalence class in a census: its invariant chain, how
/// many distinct sublattices carry it, and the first enumerated member.
struct SublatticeClass {
  InvariantChain chain;
  Int size;
  HnfBasis representative;
};

/// Empirical census of all index-m sublattices of Z^n, grouped by invariant
/// chain, against the closed-form counts.
struct CensusReport {
  int n = 0;
  Int m;
  Int total_enumerated;
  std::vector<SublatticeClass> classes;  // sorted by chain, descending lex
  Int formula_f;
  Int formula_f_star;
};

inline const Int kDefaultEnumerationCap = 10'000'000;

/// Visits the canonical basis of every index-m sublattice of Z^n exactly
/// once: for each ordered factorization of m (the diagonal, ascending lex)
/// every filling of the below-diagonal entries with 0 <= u_ij < u_jj, in
/// odometer order. Returns the number visited, which equals f_n(m).
template <typename F>
Int enumerate_hnf(int n, const Int& m, F&& visit) {
  if (n < 1) throw std::invalid_argument("enumerate_hnf: n must be >= 1");
  if (m < 1) throw std::invalid_argument("enumerate_hnf: m must be >= 1");
  Int count = 0;
  for_each_ordered_factorization(m, n, [&](const std::vector<Int>& diag) {
    IntMatrix u = IntMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) u(i, i) = diag[static_cast<std::size_t>(i)];
    // Free positions in row-major order, last varying fastest.
    std::vector<std::pair<int, int>> pos;
    for (int i = 1; i < n; ++i)
      for (int j = 0; j < i; ++j)
        if (u(j, j) > 1) pos.emplace_back(i, j);
    for (;;) {
      visit(HnfBasis(u));
      ++count;
      int k = static_cast<int>(pos.size()) - 1;
      while (k >= 0) {
        const auto [i, j] = pos[static_cast<std::size_t>(k)];
        u(i, j) += 1;
        if (u(i, j) < u(j, j)) break;
        u(i, j) = 0;
        --k;
      }
      if (k < 0) break;
    }
  });
  return count;
}

/// Materialized form of enumerate_hnf; intended for small f_n(m).
std::vector<HnfBasis> enumerate_hnf_all(int n, const Int& m);

/// Enumerates every sublattice of index m, reduces each to its invariant
/// chain, and groups; asserts that the totals match f_n(m) and the class
/// count matches f*_n(m) (std::logic_error on violation). Throws
/// cap_exceeded_error when f_n(m) > cap before enumerating anything.
CensusReport classify(int n, const Int& m, const Int& cap = kDefaultEnumerationCap);

/// The chains of all equivalence classes directly from partitions — one
/// partition of each prime exponent into at most n parts — without touching
/// any sublattice. Stream length = f*_n(m).
std::vector<InvariantChain> class_chains(int n, const Int& m);

}  // namespace sublat
