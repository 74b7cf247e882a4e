#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "bingbound/core/error.hpp"

namespace bingbound {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Always `p/q`, including integers (`8/1`) and zero (`0/1`).
inline std::string format_rational(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Accepts `p/q` or a bare integer.
inline Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0 || r.get_den() == 0) {
    throw Error(ErrorKind::Parse, "not a rational number: '" + text + "'");
  }
  r.canonicalize();
  return r;
}

inline Integer floor_of(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

inline Integer ceil_of(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

inline Rational abs_of(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline std::uint64_t euler_totient(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

/// The rational with the smallest denominator strictly inside (lo, hi), lo >= 0.
/// Successive continued-fraction steps are Stern-Brocot mediants.
inline Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw Error(ErrorKind::DomainError, "empty interval");
  const Integer fl = floor_of(lo);
  const Integer next = fl + 1;
  if (Rational(next) < hi) {
    // lo in [fl, fl+1) and hi > fl+1.  If lo is exactly an integer the open
    // interval still excludes it, so fl+1 is the answer either way.
    return Rational(next);
  }
  const Rational a = lo - fl;
  const Rational b = hi - fl;
  if (a == 0) {
    // (0, b) with b <= 1: answer 1/(floor(1/b)+1)
    const Integer k = floor_of(Rational(1) / b) + 1;
    return Rational(fl) + Rational(1) / Rational(k);
  }
  const Rational inner = simplest_between(Rational(1) / b, Rational(1) / a);
  return Rational(fl) + Rational(1) / inner;
}

inline long to_long_checked(const Integer& z, const char* what) {
  if (!z.fits_slong_p()) throw Error(ErrorKind::DomainError, std::string(what) + " out of range");
  return z.get_si();
}

}  // namespace bingbound
