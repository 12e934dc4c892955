#include "sublat/counting.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace sublat {

namespace {

void check_nm(int n, const Int& m, const char* who) {
  if (n < 1) throw std::invalid_argument(std::string(who) + ": n must be >= 1");
  if (m < 1) throw std::invalid_argument(std::string(who) + ": m must be >= 1");
}

}  // namespace

Int f_recursive(int n, const Int& m) {
  check_nm(n, m, "f_recursive");
  // The call tree only ever visits divisors of m; a per-call memo keeps the
  // function pure (no shared state to synchronize).
  std::map<std::pair<int, Int>, Int> memo;
  auto rec = [&](auto&& self, int level, const Int& v) -> Int {
    if (level == 1) return 1;
    auto key = std::make_pair(level, v);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Int total = 0;
    for (const Int& d : divisors(v)) total += d * self(self, level - 1, d);
    memo.emplace(std::move(key), total);
    return total;
  };
  return rec(rec, n, m);
}

Int f_sum(int n, const Int& m) {
  check_nm(n, m, "f_sum");
  Int total = 0;
  for_each_ordered_factorization(m, n, [&](const std::vector<Int>& d) {
    Int w = 1;
    for (int j = 1; j < n; ++j) w *= ipow(d[static_cast<std::size_t>(j)],
                                          static_cast<unsigned long>(j));
    total += w;
  });
  return total;
}

Int f_product(int n, const Int& m) {
  check_nm(n, m, "f_product");
  const auto nu = static_cast<unsigned long>(n);
  Int result = 1;
  const Factorization fac = factorize(m);
  for (const auto& [p, a] : fac.pairs()) {
    // prod_{j=1..a} (p^(j+n-1)-1)/(p^j-1), one exact division per prime.
    Int num = 1, den = 1;
    for (unsigned long j = 1; j <= a; ++j) {
      num *= ipow(p, j + nu - 1) - 1;
      den *= ipow(p, j) - 1;
    }
    Int first = exact_div(num, den, "f_product (exponent-limit form)");
    // prod_{j=1..n-1} (p^(j+a)-1)/(p^j-1)
    Int num2 = 1, den2 = 1;
    for (unsigned long j = 1; j + 1 <= nu; ++j) {
      num2 *= ipow(p, j + a) - 1;
      den2 *= ipow(p, j) - 1;
    }
    Int second = exact_div(num2, den2, "f_product (dimension-limit form)");
    if (first != second)
      throw std::logic_error("f_product: the two product forms disagree");
    result *= first;
  }
  return result;
}

Int f_star(int n, const Int& m) {
  check_nm(n, m, "f_star");
  Int result = 1;
  const Factorization fac = factorize(m);
  for (const auto& [p, a] : fac.pairs())
    result *= partition_count(n, static_cast<long>(a));
  return result;
}

CountReport bounds_report(int n, const Int& m) {
  check_nm(n, m, "bounds_report");
  CountReport r;
  r.n = n;
  r.m = m;
  r.f_recursive = f_recursive(n, m);
  r.f_sum = f_sum(n, m);
  r.f_product = f_product(n, m);
  r.f_star = f_star(n, m);
  const auto nu = static_cast<unsigned long>(n);
  r.siegel_bound = ipow(m, nu * nu);
  r.lower_bound = ipow(m, nu - 1);
  r.upper_bound = ipow(m, nu);
  r.agree = r.f_recursive == r.f_sum && r.f_sum == r.f_product;
  return r;
}

}  // namespace sublat
