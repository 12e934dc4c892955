#include "sublat/enumeration.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <utility>

namespace sublat {

std::vector<HnfBasis> enumerate_hnf_all(int n, const Int& m) {
  std::vector<HnfBasis> out;
  enumerate_hnf(n, m, [&](const HnfBasis& h) { out.push_back(h); });
  return out;
}

CensusReport classify(int n, const Int& m, const Int& cap) {
  if (n < 1) throw std::invalid_argument("classify: n must be >= 1");
  if (m < 1) throw std::invalid_argument("classify: m must be >= 1");
  const Int f = f_sum(n, m);
  if (f > cap) {
    std::ostringstream msg;
    msg << "classify: f_" << n << "(" << m << ") = " << f
        << " exceeds the enumeration cap " << cap
        << "; request a count instead of a census";
    throw cap_exceeded_error(msg.str());
  }

  std::map<InvariantChain, std::pair<Int, std::optional<HnfBasis>>> groups;
  const Int total = enumerate_hnf(n, m, [&](const HnfBasis& h) {
    auto& g = groups[snf_chain(h.matrix())];
    g.first += 1;
    if (!g.second) g.second = h;
  });

  CensusReport report;
  report.n = n;
  report.m = m;
  report.total_enumerated = total;
  report.formula_f = f;
  report.formula_f_star = f_star(n, m);

  Int size_total = 0;
  for (auto& [chain, g] : groups) {
    size_total += g.first;
    report.classes.push_back(SublatticeClass{chain, g.first, std::move(*g.second)});
  }
  std::sort(report.classes.begin(), report.classes.end(),
            [](const SublatticeClass& x, const SublatticeClass& y) {
              return y.chain < x.chain;  // descending lexicographic
            });

  if (total != f || size_total != f)
    throw std::logic_error("classify: enumerated total does not match f_n(m)");
  if (Int(static_cast<long>(report.classes.size())) != report.formula_f_star)
    throw std::logic_error("classify: class count does not match f*_n(m)");
  return report;
}

std::vector<InvariantChain> class_chains(int n, const Int& m) {
  if (n < 1) throw std::invalid_argument("class_chains: n must be >= 1");
  if (m < 1) throw std::invalid_argument("class_chains: m must be >= 1");
  const Factorization fac = factorize(m);
  const std::size_t np = fac.prime_count();
  // One partition of each exponent a_i into <= n parts; the chain is
  // d_j = prod_i p_i^(beta_ij), which inherits d_j | d_{j-1} from the
  // weakly decreasing rows.
  std::vector<std::vector<Partition>> choices;
  choices.reserve(np);
  for (const auto& [p, a] : fac.pairs())
    choices.push_back(partitions(n, static_cast<long>(a)));

  std::vector<InvariantChain> out;
  std::vector<const Partition*> picked(np, nullptr);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == np) {
      std::vector<Int> chain(static_cast<std::size_t>(n), 1);
      for (std::size_t q = 0; q < np; ++q) {
        const Int& p = fac.pairs()[q].first;
        const auto& parts = picked[q]->parts();
        for (int j = 0; j < n; ++j)
          chain[static_cast<std::size_t>(j)] *=
              ipow(p, static_cast<unsigned long>(parts[static_cast<std::size_t>(j)]));
      }
      out.emplace_back(std::move(chain));
      return;
    }
    for (const Partition& p : choices[i]) {
      picked[i] = &p;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace sublat
