#pragma once

#include <string>
#include <vector>

#include "bingbound/core/polynomial.hpp"
#include "bingbound/seifert/evaluate.hpp"

namespace bingbound {

/// Laurent polynomial sum_k coeffs[k] t^(low + k), symmetric and normalized
/// so that Delta(1) = 1.
struct AlexanderPolynomial {
  long low = 0;
  std::vector<Integer> coeffs{1};

  long span() const { return static_cast<long>(coeffs.size()) - 1; }
  long high() const { return low + span(); }

  Integer at_one() const {
    Integer s = 0;
    for (const auto& c : coeffs) s += c;
    return s;
  }

  /// t^{-low} Delta(t), an ordinary polynomial with nonzero constant term.
  Polynomial shifted() const { return Polynomial::from_integers(coeffs); }

  /// Highest power first, e.g. "t - 1 + t^-1".
  std::string to_string() const {
    std::string out;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
      const Integer& c = coeffs[i];
      if (c == 0) continue;
      const long e = low + static_cast<long>(i);
      const Integer mag = abs(c);
      if (out.empty()) out += c < 0 ? "-" : "";
      else out += c < 0 ? " - " : " + ";
      const bool unit = mag == 1 && e != 0;
      if (!unit) out += mag.get_str();
      if (e != 0) out += e == 1 ? "t" : "t^" + std::to_string(e);
    }
    return out.empty() ? "0" : out;
  }

  friend bool operator==(const AlexanderPolynomial& a, const AlexanderPolynomial& b) {
    return a.low == b.low && a.coeffs == b.coeffs;
  }

  friend AlexanderPolynomial operator*(const AlexanderPolynomial& a, const AlexanderPolynomial& b) {
    AlexanderPolynomial r;
    r.low = a.low + b.low;
    r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs.size(); ++j) r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    return r;
  }

  /// Delta(t^{-1}).
  AlexanderPolynomial inverted() const {
    AlexanderPolynomial r;
    r.coeffs.assign(coeffs.rbegin(), coeffs.rend());
    r.low = -high();
    return r;
  }
};

/// t^{-g} det(V - t V^T), by interpolating exact determinants at t = 0..2g.
inline AlexanderPolynomial alexander_of_matrix(const SeifertMatrix& v) {
  const std::size_t n = v.size();
  if (n == 0) return {};
  const IntMatrix& m = v.matrix();
  const IntMatrix mt = m.transpose();
  // Newton divided differences on integer nodes, then expand.
  std::vector<Rational> dd(n + 1);
  for (std::size_t k = 0; k <= n; ++k) dd[k] = Rational(determinant(m - Integer(static_cast<long>(k)) * mt));
  for (std::size_t level = 1; level <= n; ++level)
    for (std::size_t k = n; k >= level; --k) dd[k] = (dd[k] - dd[k - 1]) / Rational(static_cast<long>(level));
  Polynomial p = Polynomial::constant(dd[n]);
  for (std::size_t k = n; k-- > 0;) p = p * Polynomial{-static_cast<long>(k), 1} + Polynomial::constant(dd[k]);

  AlexanderPolynomial a;
  std::size_t first = 0;
  while (first < n && p[first] == 0) ++first;
  a.coeffs.clear();
  for (std::size_t k = first; k <= static_cast<std::size_t>(p.degree()); ++k) {
    const Rational& c = p[k];
    if (c.get_den() != 1) throw Error(ErrorKind::Inconsistent, "non-integral Alexander coefficient");
    a.coeffs.push_back(c.get_num());
  }
  const long deg_lo = static_cast<long>(first);
  const long deg_hi = p.degree();
  if (deg_lo + deg_hi != static_cast<long>(n))
    throw Error(ErrorKind::Inconsistent, "Alexander polynomial is not symmetric about t^g");
  a.low = deg_lo - static_cast<long>(n / 2);
  if (a.at_one() != 1) throw Error(ErrorKind::Inconsistent, "Alexander polynomial has Delta(1) != 1");
  return a;
}

/// Through the expression: products over sums and multiples.
inline AlexanderPolynomial alexander(const KnotExpression& e, const KnotCatalog& catalog) {
  ExpressionFold<AlexanderPolynomial> fold{
      [&](const KnotExpression& leaf) { return alexander_of_matrix(leaf_matrix(leaf, catalog)); },
      [](const AlexanderPolynomial& a, const AlexanderPolynomial& b) { return a * b; },
      [](unsigned long n, const AlexanderPolynomial& a) {
        AlexanderPolynomial r, base = a;
        while (n > 0) {
          if (n & 1UL) r = r * base;
          n >>= 1;
          if (n > 0) base = base * base;
        }
        return r;
      },
      [](const AlexanderPolynomial& a) { return a; },
      [](const AlexanderPolynomial& a) { return a.inverted(); },
  };
  return fold(e);
}

/// Square-free polynomial in t whose roots are exactly the roots of Delta.
/// Built from the distinct leaves, never from the expanded product.
inline Polynomial alexander_root_polynomial(const KnotExpression& e, const KnotCatalog& catalog) {
  ExpressionFold<Polynomial> fold{
      [&](const KnotExpression& leaf) {
        return square_free_part(alexander_of_matrix(leaf_matrix(leaf, catalog)).shifted());
      },
      [](const Polynomial& a, const Polynomial& b) { return (a * b / gcd(a, b)).monic(); },
      [](unsigned long, const Polynomial& a) { return a; },
      [](const Polynomial& a) { return a; },
      [](const Polynomial& a) {
        // t^d a(1/t): reverse the coefficients.
        std::vector<Rational> c(a.coefficients().rbegin(), a.coefficients().rend());
        return Polynomial(std::move(c)).monic();
      },
  };
  return fold(e);
}

}  // namespace bingbound
