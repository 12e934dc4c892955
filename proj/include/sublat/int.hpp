#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace sublat {

/// Arbitrary-precision signed integer. Everything in this library is exact;
/// no floating point appears anywhere.
using Int = mpz_class;

/// base^exp, exp >= 0.
inline Int ipow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

/// Quotient rounded toward -infinity, so a - floor_div(a,b)*b lies in
/// [0, b) for b > 0.
inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

/// Nonnegative remainder of a mod b, for b > 0.
inline Int floor_mod(const Int& a, const Int& b) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline bool divides(const Int& d, const Int& a) {
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// Exact quotient; throws std::logic_error when b does not divide a.
inline Int exact_div(const Int& a, const Int& b, const char* what = "exact_div") {
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r != 0)
    throw std::logic_error(std::string(what) + ": division left a remainder");
  return q;
}

/// g = s*a + t*b with g = gcd(a,b) >= 0.
struct GcdExt {
  Int g, s, t;
};

inline GcdExt gcd_ext(const Int& a, const Int& b) {
  GcdExt r;
  mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  return r;
}

}  // namespace sublat
