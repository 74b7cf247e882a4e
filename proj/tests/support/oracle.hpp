#pragma once

// Independent reference implementations used only by the tests.  Nothing here
// shares code with the production inertia or determinant paths.

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "bingbound/seifert/matrix.hpp"

namespace oracle {

struct Counts {
  long positive = 0, negative = 0, zero = 0;
  long signature() const { return positive - negative; }
};

/// Cyclic Jacobi rotations on a dense real symmetric matrix.
inline std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n) {
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0, total = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        total += at(i, j) * at(i, j);
        if (i != j) off += at(i, j) * at(i, j);
      }
    if (off <= 1e-30 * total || off == 0.0) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (at(p, q) == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * at(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = at(i, i);
  return ev;
}

/// Inertia of (1-w)V + (1-conj w)V^T at w = exp(2 pi i theta), from the real
/// symmetric embedding [[Re, -Im], [Im, Re]] whose spectrum doubles H's.
inline Counts inertia(const bingbound::SeifertMatrix& v, double theta, double rel_tol = 1e-9) {
  const std::size_t n = v.size();
  Counts c;
  if (n == 0) return c;
  const double re = 1.0 - std::cos(2.0 * M_PI * theta);
  const double im = -std::sin(2.0 * M_PI * theta);
  std::vector<double> m(4 * n * n);
  double norm = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double a = v(i, j).get_d(), b = v(j, i).get_d();
      const double hre = re * (a + b);
      const double him = im * (a - b);
      m[i * 2 * n + j] = hre;
      m[(i + n) * 2 * n + (j + n)] = hre;
      m[i * 2 * n + (j + n)] = -him;
      m[(i + n) * 2 * n + j] = him;
      norm = std::max(norm, std::fabs(hre) + std::fabs(him));
    }
  const auto ev = jacobi_eigenvalues(std::move(m), 2 * n);
  const double tol = rel_tol * std::max(norm * static_cast<double>(n), 1.0);
  for (double x : ev) {
    if (std::fabs(x) < tol) ++c.zero;
    else if (x > 0) ++c.positive;
    else ++c.negative;
  }
  c.positive /= 2;
  c.negative /= 2;
  c.zero /= 2;
  return c;
}

/// det(V - t V^T) by cofactor expansion over Z[t]; coefficients low to high.
/// Exponential in n, intended for n <= 8.
inline std::vector<long long> alexander_determinant(const bingbound::SeifertMatrix& v) {
  using Poly = std::vector<long long>;
  const std::size_t n = v.size();
  auto mul = [](const Poly& a, const Poly& b) {
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
  };
  auto add = [](Poly a, const Poly& b, long long sign) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += sign * b[i];
    return a;
  };
  std::vector<Poly> entry(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) entry[i * n + j] = {v(i, j).get_si(), -v(j, i).get_si()};
  std::function<Poly(std::vector<std::size_t>, std::size_t)> det = [&](std::vector<std::size_t> cols, std::size_t row) -> Poly {
    if (cols.empty()) return {1};
    Poly acc{0};
    for (std::size_t k = 0; k < cols.size(); ++k) {
      std::vector<std::size_t> rest = cols;
      rest.erase(rest.begin() + static_cast<long>(k));
      acc = add(acc, mul(entry[row * n + cols[k]], det(rest, row + 1)), k % 2 == 0 ? 1 : -1);
    }
    return acc;
  };
  std::vector<std::size_t> cols(n);
  for (std::size_t i = 0; i < n; ++i) cols[i] = i;
  Poly p = det(cols, 0);
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  return p;
}

}  // namespace oracle
