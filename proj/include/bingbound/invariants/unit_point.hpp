#pragma once

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "bingbound/core/bigfloat.hpp"
#include "bingbound/core/polynomial.hpp"

namespace bingbound {

/// Unit-circle point that is not a root of unity, known as a simple root z0 of
/// a square-free polynomial in z = t + 1/t together with the half plane.
struct AlgebraicAngle {
  Polynomial z_poly;   // square-free; z_poly(z_lo) and z_poly(z_hi) have opposite signs
  Rational z_lo, z_hi; // z_lo < z0 < z_hi, or z_lo == z_hi == z0 once hit exactly
  bool upper = true;   // theta in (0, 1/2); otherwise theta in (1/2, 1)
  Polynomial t_poly;   // vanishes at omega; square-free, used as field modulus
  unsigned refinements = 0;

  void refine() {
    ++refinements;
    if (z_lo == z_hi) return;
    Rational mid = (z_lo + z_hi) / 2;
    const Rational at_mid = z_poly(mid);
    if (at_mid == 0) {
      z_lo = z_hi = mid;
    } else if ((at_mid > 0) == (z_poly(z_lo) > 0)) {
      z_lo = mid;
    } else {
      z_hi = mid;
    }
  }

  Rational width() const { return z_hi - z_lo; }
};

/// Numerical value of omega with an absolute error bound.
struct OmegaApprox {
  BigComplex value;
  BigFloat error;
};

/// omega = e^{2 pi i theta}, with theta either an exact rational or an
/// algebraic angle.
class UnitPoint {
 public:
  explicit UnitPoint(Rational theta) : v_(std::move(theta)) {}
  explicit UnitPoint(AlgebraicAngle a) : v_(std::move(a)) {}

  bool is_rational() const { return std::holds_alternative<Rational>(v_); }
  const Rational& theta() const { return std::get<Rational>(v_); }
  const AlgebraicAngle& algebraic() const { return std::get<AlgebraicAngle>(v_); }
  AlgebraicAngle& algebraic() { return std::get<AlgebraicAngle>(v_); }

  /// Order of omega as a root of unity (the reduced denominator of theta).
  std::optional<Integer> root_order() const {
    if (!is_rational()) return std::nullopt;
    Rational t = theta() - Rational(floor_of(theta()));
    return t.get_den();
  }

  /// omega to `bits` bits; refines algebraic angles as needed.
  OmegaApprox omega(mpfr_prec_t bits) {
    const mpfr_prec_t work = bits + 32;
    if (is_rational()) {
      BigFloat arg = BigFloat::pi(work) * BigFloat(Rational(2 * theta()), work);
      return {BigComplex{cos(arg), sin(arg)}, BigFloat::pow2(-static_cast<long>(bits), work)};
    }
    AlgebraicAngle& a = algebraic();
    while (a.width() > 0 && BigFloat(a.width(), work) > BigFloat::pow2(-static_cast<long>(bits) - 4, work))
      a.refine();
    const BigFloat z(Rational((a.z_lo + a.z_hi) / 2), work);
    const BigFloat half = z / BigFloat(2L, work);
    const BigFloat one(1L, work);
    BigFloat s = sqrt(one - half * half);
    if (!a.upper) s = -s;
    // |dz| <= 2^{-bits-4}; d omega = dz/2 + d s, |ds| <= |z|/(4|s|) |dz|
    const BigFloat dz = BigFloat::pow2(-static_cast<long>(bits) - 4, work);
    const BigFloat err = dz * (one + abs(z) / (BigFloat(4L, work) * abs(s))) + BigFloat::pow2(-static_cast<long>(bits), work);
    return {BigComplex{half, s}, err};
  }

  /// Rational enclosure [lo, hi] of theta.  Exact for rational points.
  std::pair<Rational, Rational> theta_enclosure() const {
    if (is_rational()) return {theta(), theta()};
    const AlgebraicAngle& a = algebraic();
    const mpfr_prec_t prec = 96 + 2 * static_cast<mpfr_prec_t>(a.refinements);
    const BigFloat two_pi = BigFloat::pi(prec) * BigFloat(2L, prec);
    const BigFloat two(2L, prec);
    auto clamp = [&](const Rational& z) {
      // acos is defined on [-1, 1]; z/2 lies in (-1, 1) but endpoints of a
      // coarse interval may stray to +-2 exactly.
      Rational h = z / 2;
      if (h > 1) h = 1;
      if (h < -1) h = -1;
      return BigFloat(h, prec);
    };
    // acos is decreasing: the upper end of z gives the lower end of theta.
    Rational lo = (acos(clamp(a.z_hi)) / two_pi).to_rational();
    Rational hi = (acos(clamp(a.z_lo)) / two_pi).to_rational();
    const Rational slack = BigFloat::pow2(-static_cast<long>(prec) + 8, prec).to_rational();
    lo -= slack;
    hi += slack;
    if (a.upper) return {lo, hi};
    return {Rational(1 - hi), Rational(1 - lo)};
  }

  void refine() {
    if (!is_rational()) algebraic().refine();
  }

  /// Double-precision omega, 1 - omega computed without cancellation.
  std::complex<double> one_minus_omega_double() const {
    if (is_rational()) {
      const double t = theta().get_d();
      const double s = std::sin(M_PI * t);
      return {2.0 * s * s, -std::sin(2.0 * M_PI * t)};
    }
    const AlgebraicAngle& a = algebraic();
    const double z = Rational((a.z_lo + a.z_hi) / 2).get_d();
    const double h = z / 2.0;
    double s = std::sqrt(std::max(0.0, 1.0 - h * h));
    if (!a.upper) s = -s;
    return {1.0 - h, -s};
  }

 private:
  std::variant<Rational, AlgebraicAngle> v_;
};

}  // namespace bingbound
