#pragma once

#include <gmp.h>
#include <mpfr.h>

#include <algorithm>
#include <string>
#include <utility>

#include "bingbound/core/arith.hpp"

namespace bingbound {

/// Owning MPFR value with an explicit precision.  Every result carries the
/// larger precision of its operands and is rounded to nearest.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t bits = 64) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }
  BigFloat(const Rational& q, mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN); }
  BigFloat(long value, mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_si(v_, value, MPFR_RNDN); }
  BigFloat(const BigFloat& o) { mpfr_init2(v_, o.precision()); mpfr_set(v_, o.v_, MPFR_RNDN); }
  BigFloat(BigFloat&& o) noexcept { mpfr_init2(v_, MPFR_PREC_MIN); mpfr_swap(v_, o.v_); }
  BigFloat& operator=(BigFloat o) noexcept { mpfr_swap(v_, o.v_); return *this; }
  ~BigFloat() { mpfr_clear(v_); }

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  int sign() const { return mpfr_sgn(v_); }

  Rational to_rational() const {
    Rational q;
    mpfr_get_q(q.get_mpq_t(), v_);
    return q;
  }

  static BigFloat pi(mpfr_prec_t bits) {
    BigFloat r(bits);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }

  /// 2^exponent, exact.
  static BigFloat pow2(long exponent, mpfr_prec_t bits) {
    BigFloat r(bits);
    mpfr_set_ui_2exp(r.v_, 1, exponent, MPFR_RNDN);
    return r;
  }

 private:
  mpfr_t v_;
};

namespace detail {
template <class Op>
BigFloat binary(const BigFloat& a, const BigFloat& b, Op op) {
  BigFloat r(std::max(a.precision(), b.precision()));
  op(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
template <class Op>
BigFloat unary(const BigFloat& a, Op op) {
  BigFloat r(a.precision());
  op(r.get(), a.get(), MPFR_RNDN);
  return r;
}
}  // namespace detail

inline BigFloat operator+(const BigFloat& a, const BigFloat& b) { return detail::binary(a, b, mpfr_add); }
inline BigFloat operator-(const BigFloat& a, const BigFloat& b) { return detail::binary(a, b, mpfr_sub); }
inline BigFloat operator*(const BigFloat& a, const BigFloat& b) { return detail::binary(a, b, mpfr_mul); }
inline BigFloat operator/(const BigFloat& a, const BigFloat& b) { return detail::binary(a, b, mpfr_div); }
inline BigFloat operator-(const BigFloat& a) { return detail::unary(a, mpfr_neg); }
inline BigFloat abs(const BigFloat& a) { return detail::unary(a, mpfr_abs); }
inline BigFloat sqrt(const BigFloat& a) { return detail::unary(a, mpfr_sqrt); }
inline BigFloat cos(const BigFloat& a) { return detail::unary(a, mpfr_cos); }
inline BigFloat sin(const BigFloat& a) { return detail::unary(a, mpfr_sin); }
inline BigFloat acos(const BigFloat& a) { return detail::unary(a, mpfr_acos); }
inline bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.get(), b.get()) != 0; }
inline bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.get(), b.get()) != 0; }

/// Fixed-point decimal with `digits` digits after the point.  `round_up`
/// selects the rounding direction so two calls bracket the value.
inline std::string to_decimal(const BigFloat& x, int digits, bool round_up) {
  // Scale to an integer with the requested number of fractional digits.
  BigFloat scale(1, x.precision() + 64);
  for (int i = 0; i < digits; ++i) scale = scale * BigFloat(10, scale.precision());
  BigFloat scaled(x.precision() + 64);
  mpfr_mul(scaled.get(), x.get(), scale.get(), MPFR_RNDN);
  mpfr_t rounded;
  mpfr_init2(rounded, scaled.precision());
  if (round_up) mpfr_ceil(rounded, scaled.get()); else mpfr_floor(rounded, scaled.get());
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), rounded, MPFR_RNDN);
  mpfr_clear(rounded);
  const bool negative = z < 0;
  if (negative) z = -z;
  std::string s = z.get_str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
  s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  return negative ? "-" + s : s;
}

struct BigComplex {
  BigFloat re;
  BigFloat im;
};

inline BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re + b.re, a.im + b.im}; }
inline BigComplex operator*(const BigComplex& a, const BigComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline BigFloat modulus(const BigComplex& z) { return sqrt(z.re * z.re + z.im * z.im); }

}  // namespace bingbound
