#pragma once

#include "sublat/arith.hpp"
#include "sublat/int.hpp"

namespace sublat {

/// All counts of index-m sublattices of Z^n, the class count, and the
/// m^(n-1) <= f <= m^n <= m^(n^2) bound values.
struct CountReport {
  int n = 0;
  Int m;
  Int f_recursive, f_sum, f_product, f_star;
  Int siegel_bound;  // m^(n^2)
  Int lower_bound;   // m^(n-1)
  Int upper_bound;   // m^n
  bool agree = false;
};

/// f_n(m) by the divisor recursion f_n(m) = sum_{d|m} d * f_{n-1}(d),
/// f_1(m) = 1.
Int f_recursive(int n, const Int& m);

/// f_n(m) as the sum over ordered factorizations d_1*...*d_n = m of
/// d_1^0 d_2^1 ... d_n^(n-1).
Int f_sum(int n, const Int& m);

/// f_n(m) as the product over primes p^a of m of
/// prod_{j=1..a} (p^(j+n-1)-1)/(p^j-1). Individual factors need not be
/// integral; each prime's contribution is evaluated as one exact division.
/// The equivalent form prod_{j=1..n-1} (p^(j+a)-1)/(p^j-1) is computed as
/// well and the two are asserted equal (std::logic_error on mismatch).
Int f_product(int n, const Int& m);

/// Number of unimodular-equivalence classes of index-m sublattices:
/// the product of p_n(a_i) over the prime exponents a_i of m.
Int f_star(int n, const Int& m);

/// Assembles every count plus the bound values; agree is the triple
/// equality f_recursive = f_sum = f_product.
CountReport bounds_report(int n, const Int& m);

}  // namespace sublat
