#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "bingbound/invariants/point_field.hpp"
#include "bingbound/seifert/matrix.hpp"

namespace bingbound {

struct Inertia {
  long positive = 0;
  long negative = 0;
  long zero = 0;

  long signature() const { return positive - negative; }
  long nullity() const { return zero; }

  friend Inertia operator+(const Inertia& a, const Inertia& b) {
    return {a.positive + b.positive, a.negative + b.negative, a.zero + b.zero};
  }
  friend bool operator==(const Inertia& a, const Inertia& b) {
    return a.positive == b.positive && a.negative == b.negative && a.zero == b.zero;
  }
};

inline Inertia scaled(const Inertia& a, long n) { return {a.positive * n, a.negative * n, a.zero * n}; }
inline Inertia swapped(const Inertia& a) { return {a.negative, a.positive, a.zero}; }

/// (1 - omega) V + (1 - omega^{-1}) V^T with entries in the field.
inline std::vector<Polynomial> hermitian_form(const SeifertMatrix& v, const PointField& field) {
  const std::size_t n = v.size();
  const Polynomial one = Polynomial::constant(1);
  const Polynomial a = field.reduce(one - field.omega());
  const Polynomial abar = field.reduce(one - field.omega_inverse());
  std::vector<Polynomial> h(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h[i * n + j] = field.reduce(Rational(v(i, j)) * a + Rational(v(j, i)) * abar);
  return h;
}

/// Exact inertia of a Hermitian matrix over Q(omega) by symmetric
/// elimination: 1x1 pivots on nonzero diagonal entries, otherwise a 2x2 pivot
/// [[0, a], [conj(a), 0]] which contributes one positive and one negative.
inline Inertia exact_inertia(std::vector<Polynomial> h, std::size_t n, PointField& field) {
  Inertia result;
  std::vector<std::size_t> active(n);
  for (std::size_t i = 0; i < n; ++i) active[i] = i;
  auto at = [&](std::size_t i, std::size_t j) -> Polynomial& { return h[i * n + j]; };
  auto drop = [&](std::size_t idx) { active.erase(std::find(active.begin(), active.end(), idx)); };

  while (!active.empty()) {
    std::size_t pivot = n;
    for (std::size_t i : active)
      if (!field.is_zero(at(i, i))) {
        pivot = i;
        break;
      }
    if (pivot != n) {
      const Polynomial d = at(pivot, pivot);
      (field.sign_of_real(d) > 0 ? result.positive : result.negative) += 1;
      const Polynomial dinv = field.inverse(d);
      drop(pivot);
      for (std::size_t r : active) {
        if (field.is_zero(at(r, pivot))) continue;
        const Polynomial f = field.mul(at(r, pivot), dinv);
        for (std::size_t c : active) at(r, c) = field.reduce(at(r, c) - f * at(pivot, c));
      }
      continue;
    }
    std::size_t pi = n, pj = n;
    for (std::size_t x = 0; x < active.size() && pi == n; ++x)
      for (std::size_t y = x + 1; y < active.size(); ++y)
        if (!field.is_zero(at(active[x], active[y]))) {
          pi = active[x];
          pj = active[y];
          break;
        }
    if (pi == n) {
      result.zero += static_cast<long>(active.size());
      break;
    }
    result.positive += 1;
    result.negative += 1;
    // Pivot block P = [[0, a], [abar, 0]], P^{-1} = [[0, 1/abar], [1/a, 0]].
    const Polynomial ainv = field.inverse(at(pi, pj));
    const Polynomial abarinv = field.inverse(at(pj, pi));
    drop(pi);
    drop(pj);
    for (std::size_t r : active) {
      const Polynomial fi = field.mul(at(r, pj), ainv);
      const Polynomial fj = field.mul(at(r, pi), abarinv);
      if (fi.is_zero() && fj.is_zero()) continue;
      for (std::size_t c : active) at(r, c) = field.reduce(at(r, c) - fi * at(pi, c) - fj * at(pj, c));
    }
  }
  return result;
}

inline Inertia exact_inertia(const SeifertMatrix& v, PointField& field) {
  return exact_inertia(hermitian_form(v, field), v.size(), field);
}

/// Eigenvalue classification in double precision.  `certified` is set when
/// every eigenvalue is well clear of the rounding threshold, in which case the
/// inertia is exact (no zero eigenvalues).
struct NumericInertia {
  Inertia inertia;
  bool certified = false;
  double threshold = 0.0;
  double smallest = 0.0;  // smallest |eigenvalue|
};

inline NumericInertia numeric_inertia(const SeifertMatrix& v, std::complex<double> one_minus_omega) {
  NumericInertia out;
  const auto n = static_cast<Eigen::Index>(v.size());
  if (n == 0) {
    out.certified = true;
    return out;
  }
  Eigen::MatrixXcd h(n, n);
  double vmax = 0.0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const double vij = v(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).get_d();
      const double vji = v(static_cast<std::size_t>(j), static_cast<std::size_t>(i)).get_d();
      vmax = std::max(vmax, std::abs(vij));
      h(i, j) = one_minus_omega * vij + std::conj(one_minus_omega) * vji;
    }
  const double norm_inf = h.cwiseAbs().rowwise().sum().maxCoeff();
  out.threshold = std::ldexp(norm_inf, -30);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) return out;
  const Eigen::VectorXd& ev = solver.eigenvalues();
  out.smallest = ev.cwiseAbs().minCoeff();
  for (Eigen::Index k = 0; k < n; ++k) {
    if (std::abs(ev(k)) < out.threshold) ++out.inertia.zero;
    else if (ev(k) > 0) ++out.inertia.positive;
    else ++out.inertia.negative;
  }
  // Entries are exact integers up to 2^53; eigenvalues of the computed matrix
  // move by at most (entry error + solver backward error) in 2-norm.
  const double backward = 64.0 * static_cast<double>(n) * std::ldexp(1.0, -52) *
                          (h.norm() + 2.0 * std::abs(one_minus_omega) * vmax * static_cast<double>(n));
  out.certified = vmax < std::ldexp(1.0, 50) && backward < out.threshold && out.smallest > 4.0 * out.threshold;
  return out;
}

}  // namespace bingbound
