#include "sublat/arith.hpp"

#include <algorithm>
#include <map>

namespace sublat {

namespace {

bool probably_prime(const Int& p) {
  return mpz_probab_prime_p(p.get_mpz_t(), 30) != 0;
}

}  // namespace

Factorization::Factorization(std::vector<Entry> pairs) : pairs_(std::move(pairs)) {
  const Int* prev = nullptr;
  for (const auto& [p, e] : pairs_) {
    if (e < 1) throw std::invalid_argument("Factorization: exponent must be >= 1");
    if (prev && !(*prev < p))
      throw std::invalid_argument("Factorization: primes must be strictly ascending");
    if (!probably_prime(p))
      throw std::invalid_argument("Factorization: entry is not prime");
    prev = &p;
  }
}

Int Factorization::value() const {
  Int m = 1;
  for (const auto& [p, e] : pairs_) m *= ipow(p, e);
  return m;
}

bool Factorization::squarefree() const {
  return std::all_of(pairs_.begin(), pairs_.end(),
                     [](const Entry& pe) { return pe.second == 1; });
}

Factorization factorize(const Int& m) {
  if (m < 1) throw std::invalid_argument("factorize: m must be >= 1");
  std::vector<Factorization::Entry> pairs;
  Int rest = m;
  auto strip = [&](const Int& p) {
    unsigned long e = 0;
    while (divides(p, rest)) {
      rest /= p;
      ++e;
    }
    if (e > 0) pairs.emplace_back(p, e);
  };
  strip(2);
  strip(3);
  // 6k +/- 1 wheel.
  for (Int d = 5; d * d <= rest; d += 4) {
    strip(d);
    d += 2;
    strip(d);
  }
  if (rest > 1) pairs.emplace_back(rest, 1);
  Factorization f(std::move(pairs));
  if (f.value() != m) throw std::logic_error("factorize: expansion mismatch");
  return f;
}

std::vector<Int> divisors(const Factorization& f) {
  std::vector<Int> divs{1};
  for (const auto& [p, e] : f.pairs()) {
    const std::size_t base = divs.size();
    Int pk = 1;
    for (unsigned long k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

std::vector<Int> divisors(const Int& m) { return divisors(factorize(m)); }

std::vector<std::vector<Int>> ordered_factorizations(const Int& m, int n) {
  std::vector<std::vector<Int>> out;
  for_each_ordered_factorization(m, n,
                                 [&](const std::vector<Int>& t) { out.push_back(t); });
  return out;
}

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("Partition: needs at least one part");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("Partition: parts must be >= 0");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
}

long Partition::sum() const {
  long s = 0;
  for (long x : parts_) s += x;
  return s;
}

Int partition_count(int n, long k) {
  if (n < 1) throw std::invalid_argument("partition_count: n must be >= 1");
  if (k < 0) throw std::invalid_argument("partition_count: k must be >= 0");
  // table[j][t] = p_j(t); p_j(0) = 1, p_0(t>0) = 0, p_j(t<0) = 0.
  std::vector<std::vector<Int>> table(static_cast<std::size_t>(n) + 1,
                                      std::vector<Int>(static_cast<std::size_t>(k) + 1, 0));
  for (int j = 0; j <= n; ++j) table[static_cast<std::size_t>(j)][0] = 1;
  for (int j = 1; j <= n; ++j)
    for (long t = 1; t <= k; ++t) {
      Int v = table[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(t)];
      if (t >= j) v += table[static_cast<std::size_t>(j)][static_cast<std::size_t>(t - j)];
      table[static_cast<std::size_t>(j)][static_cast<std::size_t>(t)] = v;
    }
  return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

std::vector<Partition> partitions(int n, long k) {
  std::vector<Partition> out;
  for_each_partition(n, k, [&](const Partition& p) { out.push_back(p); });
  return out;
}

}  // namespace sublat
