#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sublat/int.hpp"

namespace sublat {

/// Prime factorization of a positive integer m: (prime, exponent) pairs,
/// strictly ascending by prime, exponents >= 1. Empty iff m = 1.
class Factorization {
 public:
  using Entry = std::pair<Int, unsigned long>;

  Factorization() = default;
  /// Validates the invariants (primality, ascending order, exponents >= 1);
  /// throws std::invalid_argument on violation.
  explicit Factorization(std::vector<Entry> pairs);

  const std::vector<Entry>& pairs() const { return pairs_; }
  std::size_t prime_count() const { return pairs_.size(); }

  /// Expands the factorization back to the integer it describes.
  Int value() const;

  /// True iff every exponent is 1 (includes the empty case m = 1).
  bool squarefree() const;

 private:
  std::vector<Entry> pairs_;
};

/// Trial-division factorization with a 2/3 wheel. Inputs are desk-scale;
/// rejects m < 1.
Factorization factorize(const Int& m);

/// All positive divisors, ascending.
std::vector<Int> divisors(const Factorization& f);
std::vector<Int> divisors(const Int& m);

/// Visits every ordered n-tuple (d_1,...,d_n) of positive integers with
/// d_1*d_2*...*d_n = m, exactly once, in lexicographic order.
template <typename F>
void for_each_ordered_factorization(const Int& m, int n, F&& visit) {
  if (m < 1) throw std::invalid_argument("ordered_factorizations: m must be >= 1");
  if (n < 1) throw std::invalid_argument("ordered_factorizations: n must be >= 1");
  const std::vector<Int> divs = divisors(m);
  std::vector<Int> tuple(static_cast<std::size_t>(n));
  auto rec = [&](auto&& self, const Int& rest, int pos) -> void {
    if (pos == n - 1) {
      tuple[static_cast<std::size_t>(pos)] = rest;
      visit(const_cast<const std::vector<Int>&>(tuple));
      return;
    }
    for (const Int& d : divs) {
      if (d > rest) break;
      if (!divides(d, rest)) continue;
      tuple[static_cast<std::size_t>(pos)] = d;
      self(self, Int(rest / d), pos + 1);
    }
  };
  rec(rec, m, 0);
}

/// Materialized form of for_each_ordered_factorization.
std::vector<std::vector<Int>> ordered_factorizations(const Int& m, int n);

/// Weakly decreasing tuple (x_1,...,x_n) of nonnegative integers; parts may
/// be zero, so a Partition of k into n parts is a partition of k into at
/// most n positive parts.
class Partition {
 public:
  /// Validates monotonicity and nonnegativity; throws std::invalid_argument.
  explicit Partition(std::vector<long> parts);

  const std::vector<long>& parts() const { return parts_; }
  int size() const { return static_cast<int>(parts_.size()); }
  long sum() const;

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }

 private:
  std::vector<long> parts_;
};

/// p_n(k): the number of weakly decreasing nonnegative n-tuples summing to
/// k, via the recurrence p_n(k) = p_{n-1}(k) + p_n(k-n).
Int partition_count(int n, long k);

/// Visits each Partition of k into n parts exactly once, in
/// reverse-lexicographic order, e.g. (3,0,0),(2,1,0),(1,1,1).
template <typename F>
void for_each_partition(int n, long k, F&& visit) {
  if (n < 1) throw std::invalid_argument("partitions: n must be >= 1");
  if (k < 0) throw std::invalid_argument("partitions: k must be >= 0");
  std::vector<long> parts(static_cast<std::size_t>(n), 0);
  // At slot i with r units left, the part x must satisfy x <= bound (the
  // previous part) and x*(n-i) >= r so the remaining slots can absorb r.
  auto rec = [&](auto&& self, int i, long r, long bound) -> void {
    if (i == n - 1) {
      parts[static_cast<std::size_t>(i)] = r;
      visit(Partition(parts));
      return;
    }
    const long slots = n - i;
    const long lo = (r + slots - 1) / slots;  // ceil(r / slots)
    for (long x = std::min(r, bound); x >= lo; --x) {
      parts[static_cast<std::size_t>(i)] = x;
      self(self, i + 1, r - x, x);
    }
  };
  rec(rec, 0, k, k);
}

/// Materialized form of for_each_partition.
std::vector<Partition> partitions(int n, long k);

}  // namespace sublat
