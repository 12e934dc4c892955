// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Everything is exact arithmetic; the only tolerances are
// the wall-clock budgets stated inline.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "run_cli.hpp"
#include "sublat/counting.hpp"
#include "sublat/enumeration.hpp"
#include "sublat/lattice.hpp"
#include "sublat/matrix_io.hpp"
#include "sublat/oracle.hpp"
#include "test_rng.hpp"

using namespace sublat;
using sublat::testing::random_nonsingular;
using sublat::testing::random_unimodular;
using sublat::testing::run_cli;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void fail(Outcome& o, const std::string& why) {
  o.passed = false;
  if (!o.detail.empty()) o.detail += "; ";
  o.detail += why;
}

// 1. f_recursive = f_sum = f_product for 1 <= n <= 5, 1 <= m <= 60,
//    exact equality, total runtime < 5 s.
Outcome criterion_triple_agreement() {
  Outcome o;
  const auto start = Clock::now();
  for (int n = 1; n <= 5 && o.passed; ++n)
    for (long m = 1; m <= 60; ++m) {
      const Int a = f_recursive(n, m);
      const Int b = f_sum(n, m);
      const Int c = f_product(n, m);
      if (a != b || b != c) {
        std::ostringstream msg;
        msg << "disagreement at n=" << n << " m=" << m << ": " << a << "/" << b
            << "/" << c;
        fail(o, msg.str());
        break;
      }
    }
  const double t = seconds_since(start);
  if (t >= 5.0) fail(o, "runtime " + std::to_string(t) + " s >= 5 s");
  return o;
}

// 2. Enumerated HNF count equals f_n(m) for 1 <= n <= 4, 1 <= m <= 30,
//    exact; < 30 s. Largest cell is f_4(30), confirmed by the run.
Outcome criterion_enumeration_bijection() {
  Outcome o;
  const auto start = Clock::now();
  for (int n = 1; n <= 4 && o.passed; ++n)
    for (long m = 1; m <= 30; ++m) {
      const Int counted = enumerate_hnf(n, m, [](const HnfBasis&) {});
      if (counted != f_sum(n, m)) {
        std::ostringstream msg;
        msg << "count mismatch at n=" << n << " m=" << m << ": enumerated "
            << counted << ", formula " << f_sum(n, m);
        fail(o, msg.str());
        break;
      }
      if (n == 4 && m == 30 && counted != 93600)
        fail(o, "largest cell f_4(30) = " + counted.get_str() + ", expected 93600");
    }
  const double t = seconds_since(start);
  if (t >= 30.0) fail(o, "runtime " + std::to_string(t) + " s >= 30 s");
  return o;
}

// 3. Census: distinct SNF chains among enumerated sublattices number
//    prod p_n(a_i), and the chain set equals class_chains(n,m); same grid;
//    exact; < 60 s including the SNF reductions.
Outcome criterion_census() {
  Outcome o;
  const auto start = Clock::now();
  for (int n = 1; n <= 4 && o.passed; ++n)
    for (long m = 1; m <= 30; ++m) {
      try {
        const CensusReport census = classify(n, m);
        std::set<InvariantChain> seen;
        for (const auto& c : census.classes) seen.insert(c.chain);
        if (Int(static_cast<long>(seen.size())) != f_star(n, m)) {
          fail(o, "class count mismatch at n=" + std::to_string(n) + " m=" +
                      std::to_string(m));
          break;
        }
        const auto direct = class_chains(n, m);
        if (std::set<InvariantChain>(direct.begin(), direct.end()) != seen) {
          fail(o, "chain set mismatch at n=" + std::to_string(n) + " m=" +
                      std::to_string(m));
          break;
        }
      } catch (const std::exception& e) {
        fail(o, std::string("classify raised: ") + e.what());
        break;
      }
    }
  const double t = seconds_since(start);
  if (t >= 60.0) fail(o, "runtime " + std::to_string(t) + " s >= 60 s");
  return o;
}

// 4. Spot values: f_n(p) = 1 + p + ... + p^(n-1) for p in {2,3,5,7,11},
//    n <= 5; f_2(p^l) = 1 + ... + p^l for p in {2,3}, l <= 5;
//    f*_n(m) = 1 for all squarefree m <= 60, n <= 5. Exact.
Outcome criterion_spot_values() {
  Outcome o;
  for (long p : {2L, 3L, 5L, 7L, 11L})
    for (int n = 1; n <= 5; ++n) {
      Int expected = 0;
      for (int j = 0; j < n; ++j) expected += ipow(p, static_cast<unsigned long>(j));
      if (f_sum(n, p) != expected)
        fail(o, "f_" + std::to_string(n) + "(" + std::to_string(p) + ") wrong");
    }
  for (long p : {2L, 3L})
    for (unsigned long l = 1; l <= 5; ++l) {
      Int expected = 0;
      for (unsigned long j = 0; j <= l; ++j) expected += ipow(p, j);
      if (f_sum(2, ipow(p, l)) != expected)
        fail(o, "f_2(" + std::to_string(p) + "^" + std::to_string(l) + ") wrong");
    }
  for (long m = 1; m <= 60; ++m) {
    if (!factorize(m).squarefree()) continue;
    for (int n = 1; n <= 5; ++n)
      if (f_star(n, m) != 1)
        fail(o, "f*_" + std::to_string(n) + "(" + std::to_string(m) + ") != 1");
  }
  return o;
}

// 5. m^(n-1) <= f_n(m) <= m^n <= m^(n^2) over the criterion-1 grid, with
//    the strict gap f_n(m) < m^(n^2) for m >= 2, n >= 2.
Outcome criterion_bounds() {
  Outcome o;
  for (int n = 1; n <= 5 && o.passed; ++n)
    for (long m = 1; m <= 60; ++m) {
      const CountReport r = bounds_report(n, m);
      const bool sandwich = r.lower_bound <= r.f_sum && r.f_sum <= r.upper_bound &&
                            r.upper_bound <= r.siegel_bound;
      const bool strict = m < 2 || n < 2 || r.f_sum < r.siegel_bound;
      if (!sandwich || !strict) {
        fail(o, "bounds violated at n=" + std::to_string(n) + " m=" +
                    std::to_string(m));
        break;
      }
    }
  return o;
}

// 6. End-to-end through the CLI: equivalent "1,0;0,2" "2,0;0,1" reports
//    equal=false, equivalent=true, and emits a witness M with |det M| = 1
//    and hnf_reduce(A*M) = B's canonical form.
Outcome criterion_example_end_to_end() {
  Outcome o;
  const auto r = run_cli("equivalent \"1,0;0,2\" \"2,0;0,1\" --json");
  if (r.exit_code != 0) {
    fail(o, "CLI exited with " + std::to_string(r.exit_code));
    return o;
  }
  nlohmann::json env;
  try {
    env = nlohmann::json::parse(r.out);
  } catch (const std::exception& e) {
    fail(o, std::string("CLI output is not JSON: ") + e.what());
    return o;
  }
  if (env["result"]["equal"] != false) fail(o, "equal should be false");
  if (env["result"]["equivalent"] != true) fail(o, "equivalent should be true");
  if (!env["result"].contains("witness")) {
    fail(o, "no witness emitted");
    return o;
  }
  const IntMatrix w = parse_matrix(env["result"]["witness"].get<std::string>());
  const Int d = det(w);
  if (d != 1 && d != -1) fail(o, "witness determinant is not +-1");
  const IntMatrix a = parse_matrix("1,0;0,2");
  const IntMatrix b = parse_matrix("2,0;0,1");
  if (!(hnf_reduce(a * w) == hnf_reduce(b)))
    fail(o, "witness does not carry A onto B");
  return o;
}

// 7. Oracle agreement: snf chain = determinantal-divisor chain for every
//    2x2 integer matrix with entries in [-4,4] and det != 0, and
//    lattice equality = point-set verdict on 500 unimodular-twist pairs;
//    zero discrepancies; < 60 s.
Outcome criterion_oracle_agreement() {
  Outcome o;
  const auto start = Clock::now();
  long checked = 0;
  for (long a = -4; a <= 4 && o.passed; ++a)
    for (long b = -4; b <= 4 && o.passed; ++b)
      for (long c = -4; c <= 4 && o.passed; ++c)
        for (long d = -4; d <= 4; ++d) {
          if (a * d - b * c == 0) continue;
          IntMatrix m(2, 2);
          m << a, b, c, d;
          ++checked;
          if (!(snf_reduce(m).chain == oracle_snf(m))) {
            std::ostringstream msg;
            msg << "snf/oracle mismatch at " << render_matrix(m);
            fail(o, msg.str());
            break;
          }
        }
  if (checked == 0) fail(o, "no nonsingular matrices checked");

  std::mt19937_64 rng(20260809);
  for (int trial = 0; trial < 500 && o.passed; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 2);
    const IntMatrix basis = random_nonsingular(rng, n, -3, 3);
    const IntMatrix twisted = random_unimodular(rng, n, 5) * basis;
    Int need = 1;
    for (const IntMatrix& h : {hnf_reduce(basis).matrix(), hnf_reduce(twisted).matrix()})
      for (Eigen::Index i = 0; i < n; ++i)
        if (h(i, i) > need) need = h(i, i);
    const long radius = std::min(9L, std::max(2L, need.get_si() + 1));
    const bool oracle = oracle_equal(basis, twisted, PointBox{n, radius});
    const bool algebra =
        equals(sublattice_from_rows(basis), sublattice_from_rows(twisted));
    if (oracle != algebra || !algebra)
      fail(o, "equality verdicts diverge on twist pair " + std::to_string(trial));
  }
  const double t = seconds_since(start);
  if (t >= 60.0) fail(o, "runtime " + std::to_string(t) + " s >= 60 s");
  return o;
}

// 8. HNF canonicality: idempotence and hnf(W*A) = hnf(A) on 1,000 random
//    (A, W) pairs, n <= 4, entries bounded by 10; zero failures.
Outcome criterion_hnf_canonicality() {
  Outcome o;
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 1000 && o.passed; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const IntMatrix a = random_nonsingular(rng, n, -10, 10);
    const IntMatrix w = random_unimodular(rng, n);
    const HnfBasis h = hnf_reduce(a);
    if (!(hnf_reduce(h.matrix()) == h))
      fail(o, "idempotence failed on trial " + std::to_string(trial));
    if (!(hnf_reduce(w * a) == h))
      fail(o, "unimodular invariance failed on trial " + std::to_string(trial));
  }
  return o;
}

struct Criterion {
  std::string name;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"formula triple agreement (n<=5, m<=60, <5s)", criterion_triple_agreement},
      {"enumeration bijection (n<=4, m<=30, <30s)", criterion_enumeration_bijection},
      {"equivalence-class census (n<=4, m<=30, <60s)", criterion_census},
      {"prime/prime-power/squarefree spot values", criterion_spot_values},
      {"bound sandwich and strict gap", criterion_bounds},
      {"swapped-axes pair end-to-end via CLI", criterion_example_end_to_end},
      {"oracle agreement (exhaustive 2x2 + 500 twists, <60s)", criterion_oracle_agreement},
      {"HNF idempotence and invariance (1000 pairs)", criterion_hnf_canonicality},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double t = seconds_since(start);
    std::ostringstream line;
    line << (o.passed ? "PASS" : "FAIL") << "  " << (i + 1) << ". "
         << criteria[i].name << "  [" << t << " s]";
    if (!o.passed) line << "  -- " << o.detail;
    std::cout << line.str() << std::endl;
    if (!o.passed) ++failures;
  }
  if (failures == 0)
    std::cout << "all " << criteria.size() << " acceptance criteria passed" << std::endl;
  else
    std::cout << failures << " acceptance criteria FAILED" << std::endl;
  return failures;
}
