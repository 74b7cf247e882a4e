#pragma once

#include <utility>

#include "bingbound/core/bigfloat.hpp"
#include "bingbound/core/error.hpp"
#include "bingbound/core/polynomial.hpp"
#include "bingbound/invariants/unit_point.hpp"

namespace bingbound {

/// Arithmetic in Q(omega), represented as Q[t]/(M) for a square-free M with
/// M(omega) = 0.  When M is reducible, zero tests split it on a gcd and keep
/// the factor vanishing at omega, so the ring behaves as the field.
class PointField {
 public:
  PointField(UnitPoint point, Polynomial modulus) : point_(std::move(point)), modulus_(modulus.monic()) {
    if (modulus_.degree() < 1) throw Error(ErrorKind::DomainError, "field modulus must have positive degree");
    t_inverse_ = inverse_mod(Polynomial{0, 1}, modulus_);
  }

  /// Q(zeta_b) for theta = a/b.
  static PointField cyclotomic(const Rational& theta) {
    UnitPoint p(theta);
    const Integer b = *p.root_order();
    if (!b.fits_ulong_p()) throw Error(ErrorKind::DomainError, "root order too large");
    return PointField(std::move(p), bingbound::cyclotomic(b.get_ui()));
  }

  const Polynomial& modulus() const { return modulus_; }
  const UnitPoint& point() const { return point_; }

  Polynomial reduce(const Polynomial& a) const { return a % modulus_; }
  Polynomial mul(const Polynomial& a, const Polynomial& b) const { return (a * b) % modulus_; }
  Polynomial omega() const { return Polynomial{0, 1} % modulus_; }
  Polynomial omega_inverse() const { return t_inverse_ % modulus_; }

  /// Complex conjugate: omega -> omega^{-1}.
  Polynomial conj(const Polynomial& a) const { return compose_mod(a, t_inverse_ % modulus_, modulus_); }

  bool is_zero(const Polynomial& a) {
    const Polynomial r = a % modulus_;
    if (r.is_zero()) return true;
    const Polynomial g = gcd(r, modulus_);
    if (g.degree() == 0) return false;
    const Polynomial cofactor = modulus_ / g;
    if (vanishes_first(g, cofactor)) {
      modulus_ = g;
      return true;
    }
    modulus_ = cofactor;
    return false;
  }

  Polynomial inverse(const Polynomial& a) {
    if (is_zero(a)) throw Error(ErrorKind::DomainError, "division by zero in Q(omega)");
    return inverse_mod(a % modulus_, modulus_);
  }

  /// Sign of a nonzero element whose value at omega is real.
  int sign_of_real(const Polynomial& a) {
    const Polynomial r = a % modulus_;
    for (mpfr_prec_t bits = 64; bits <= kMaxBits; bits *= 2) {
      auto [value, err] = evaluate(r, bits);
      if (abs(value.re) > err) return value.re.sign();
    }
    throw Error(ErrorKind::Inconsistent, "could not separate a field element from zero");
  }

  /// a(omega) with an absolute error bound.
  std::pair<BigComplex, BigFloat> evaluate(const Polynomial& a, mpfr_prec_t bits) {
    const mpfr_prec_t work = bits + 32;
    OmegaApprox w = point_.omega(bits);
    BigComplex acc{BigFloat(work), BigFloat(work)};
    BigFloat weight(work);
    const auto& c = a.coefficients();
    for (std::size_t k = c.size(); k-- > 0;) {
      acc = acc * w.value;
      acc.re = acc.re + BigFloat(c[k], work);
      weight = weight + abs(BigFloat(c[k], work)) * BigFloat(static_cast<long>(k) + 1, work);
    }
    // Perturbation of omega plus Horner rounding, with a factor of two to spare.
    const BigFloat rounding = BigFloat::pow2(-static_cast<long>(bits), work) * BigFloat(static_cast<long>(c.size()) + 2, work);
    const BigFloat err = BigFloat(2L, work) * weight * (BigFloat(3L, work) * w.error + rounding);
    return {std::move(acc), err};
  }

 private:
  static constexpr mpfr_prec_t kMaxBits = 1 << 16;

  // True when omega is a root of f; exactly one of f, g vanishes there.
  bool vanishes_first(const Polynomial& f, const Polynomial& g) {
    for (mpfr_prec_t bits = 64; bits <= kMaxBits; bits *= 2) {
      auto [fv, fe] = evaluate(f, bits);
      if (bingbound::modulus(fv) > fe) return false;
      auto [gv, ge] = evaluate(g, bits);
      if (bingbound::modulus(gv) > ge) return true;
    }
    throw Error(ErrorKind::Inconsistent, "could not locate omega among modulus factors");
  }

  UnitPoint point_;
  Polynomial modulus_;
  Polynomial t_inverse_;
};

}  // namespace bingbound
