#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sublat/lattice.hpp"
#include "sublat/matrix_io.hpp"
#include "sublat/oracle.hpp"
#include "test_rng.hpp"

using namespace sublat;
using sublat::testing::random_nonsingular;
using sublat::testing::random_unimodular;

TEST_CASE("lattice_points_in_box: 2Z^2 in a 5x5 grid") {
  auto pts = lattice_points_in_box(parse_matrix("2,0;0,2"), PointBox{2, 2});
  CHECK(pts.size() == 9);
  for (const auto& p : pts) {
    CHECK(divides(2, p[0]));
    CHECK(divides(2, p[1]));
  }
  CHECK(pts.count({Int(-2), Int(2)}) == 1);
  CHECK(pts.count({Int(0), Int(0)}) == 1);
  CHECK(pts.count({Int(1), Int(0)}) == 0);
}

TEST_CASE("lattice_points_in_box: Z^2 itself") {
  auto pts = lattice_points_in_box(identity_matrix(2), PointBox{2, 1});
  CHECK(pts.size() == 9);
}

TEST_CASE("lattice_points_in_box guards") {
  CHECK_THROWS_AS(lattice_points_in_box(identity_matrix(4), PointBox{4, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(lattice_points_in_box(parse_matrix("1,2;2,4"), PointBox{2, 2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(lattice_points_in_box(identity_matrix(2), PointBox{3, 2}),
                  std::invalid_argument);
}

TEST_CASE("oracle_equal: examples") {
  // This run is the ground truth behind the hnf_reduce example.
  CHECK(oracle_equal(parse_matrix("4,2;2,2"), parse_matrix("2,0;0,2"), PointBox{2, 6}));
  CHECK_FALSE(oracle_equal(parse_matrix("1,0;0,2"), parse_matrix("2,0;0,1"), PointBox{2, 4}));
  IntMatrix a = parse_matrix("3,1;1,2");
  CHECK(oracle_equal(a, a, PointBox{2, 5}));
  CHECK(oracle_equal(parse_matrix("1,0;0,2"), parse_matrix("1,0;2,2"), PointBox{2, 6}));
}

TEST_CASE("oracle_equal is symmetric and reflexive") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix a = random_nonsingular(rng, 2, -3, 3);
    IntMatrix b = random_nonsingular(rng, 2, -3, 3);
    PointBox box{2, 6};
    CHECK(oracle_equal(a, a, box));
    CHECK(oracle_equal(a, b, box) == oracle_equal(b, a, box));
  }
}

TEST_CASE("oracle_snf: examples") {
  CHECK(oracle_snf(parse_matrix("1,0;0,2")).values() == std::vector<Int>{2, 1});
  CHECK(oracle_snf(parse_matrix("2,0;0,2")).values() == std::vector<Int>{2, 2});
  CHECK(oracle_snf(parse_matrix("2,0;1,1")).values() == std::vector<Int>{2, 1});
  CHECK_THROWS_AS(oracle_snf(parse_matrix("1,1;1,1")), std::invalid_argument);
}

TEST_CASE("oracle_snf agrees with snf_reduce") {
  // Exhaustive over a 2x2 subgrid, sampled for 3x3.
  for (long a = -4; a <= 4; ++a)
    for (long b = -4; b <= 4; ++b)
      for (long c = -4; c <= 4; ++c)
        for (long d = -4; d <= 4; ++d) {
          if (a * d - b * c == 0) continue;
          IntMatrix m(2, 2);
          m << a, b, c, d;
          CHECK(oracle_snf(m) == snf_reduce(m).chain);
        }
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix m = random_nonsingular(rng, 3, -4, 4);
    CHECK(oracle_snf(m) == snf_reduce(m).chain);
  }
}

TEST_CASE("oracle_equal agrees with lattice equality on twisted bases") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 2);
    IntMatrix a = random_nonsingular(rng, n, -3, 3);
    IntMatrix b = random_unimodular(rng, n, 5) * a;
    // Radius covering both canonical diagonals decides true equality.
    Int need = 1;
    for (const IntMatrix& h : {hnf_reduce(a).matrix(), hnf_reduce(b).matrix()})
      for (Eigen::Index i = 0; i < n; ++i)
        if (h(i, i) > need) need = h(i, i);
    long radius = std::max(2L, need.get_si() + 1);
    if (radius > 9) continue;  // keep the point clouds small
    PointBox box{n, radius};
    const bool oracle = oracle_equal(a, b, box);
    const bool algebra = equals(sublattice_from_rows(a), sublattice_from_rows(b));
    CHECK(oracle == algebra);
    CHECK(algebra);  // left-unimodular twist never changes the lattice
  }
}
