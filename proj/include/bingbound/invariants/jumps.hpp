#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "bingbound/core/arith.hpp"
#include "bingbound/core/bigfloat.hpp"
#include "bingbound/core/polynomial.hpp"
#include "bingbound/invariants/unit_point.hpp"

namespace bingbound {

namespace detail {

inline std::vector<Polynomial> sturm_chain(const Polynomial& p) {
  std::vector<Polynomial> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    Polynomial r = -(chain[chain.size() - 2] % chain.back());
    if (r.is_zero()) break;
    chain.push_back(std::move(r));
  }
  return chain;
}

inline int sign_variations(const std::vector<Polynomial>& chain, const Rational& x) {
  int count = 0, last = 0;
  for (const auto& q : chain) {
    const int s = sgn(q(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

/// Isolating intervals (lo, hi) for the real roots of the square-free `p` in
/// (lo, hi); p is nonzero at both ends of every interval returned.
inline void isolate(const Polynomial& p, const std::vector<Polynomial>& chain, Rational lo, Rational hi, int vlo,
                    int vhi, std::vector<std::pair<Rational, Rational>>& out) {
  const int roots = vlo - vhi;
  if (roots == 0) return;
  if (roots == 1) {
    out.emplace_back(std::move(lo), std::move(hi));
    return;
  }
  // Split near the midpoint at a point where p does not vanish.
  Rational mid = (lo + hi) / 2;
  for (long k = 3; p(mid) == 0; ++k) mid = lo + (hi - lo) * Rational(1, k);
  const int vmid = sign_variations(chain, mid);
  isolate(p, chain, lo, mid, vlo, vmid, out);
  isolate(p, chain, std::move(mid), std::move(hi), vmid, vhi, out);
}

}  // namespace detail

/// Real roots of a square-free polynomial inside the open interval (lo, hi),
/// with lo and hi not roots.  Intervals are sorted and disjoint.
inline std::vector<std::pair<Rational, Rational>> real_roots_in(const Polynomial& p, const Rational& lo,
                                                                const Rational& hi) {
  std::vector<std::pair<Rational, Rational>> out;
  if (p.degree() < 1) return out;
  const auto chain = detail::sturm_chain(p);
  detail::isolate(p, chain, lo, hi, detail::sign_variations(chain, lo), detail::sign_variations(chain, hi), out);
  return out;
}

/// A jump candidate of the signature function: a root of Delta on the unit
/// circle, theta in (0, 1).
struct JumpPoint {
  UnitPoint point;
  Polynomial defining;   // vanishes at omega, in t
  bool minimal = false;  // `defining` is the minimal polynomial

  bool is_rational() const { return point.is_rational(); }
};

/// Square-free root polynomial split into its cyclotomic factors (by index)
/// and the remaining part.
struct CyclotomicSplit {
  std::vector<std::uint64_t> indices;
  Polynomial rest;
};

inline CyclotomicSplit split_cyclotomic(const Polynomial& square_free) {
  CyclotomicSplit out{{}, square_free.monic()};
  // phi(n) <= deg bounds n by roughly deg^2; stop well beyond that.
  for (std::uint64_t n = 1; out.rest.degree() > 0; ++n) {
    const auto deg = static_cast<std::uint64_t>(out.rest.degree());
    if (n > 2 * deg * deg + 6) break;
    if (euler_totient(n) > deg) continue;
    const Polynomial phi = cyclotomic(n);
    auto [q, r] = divmod(out.rest, phi);
    if (r.is_zero()) {
      out.indices.push_back(n);
      out.rest = q.monic();
    }
  }
  return out;
}

/// All roots of the square-free `root_poly` on the unit circle, sorted by theta.
inline std::vector<JumpPoint> unit_circle_roots(const Polynomial& root_poly) {
  std::vector<JumpPoint> jumps;
  if (root_poly.degree() < 1) return jumps;
  const CyclotomicSplit split = split_cyclotomic(root_poly);
  for (std::uint64_t n : split.indices) {
    if (n <= 2) continue;  // t = +-1 lies on the real axis, theta in {0, 1/2}
    const Polynomial phi = cyclotomic(n);
    for (std::uint64_t k = 1; k < n; ++k)
      if (std::gcd(k, n) == 1)
        jumps.push_back({UnitPoint(make_rational(Integer(static_cast<unsigned long>(k)), Integer(static_cast<unsigned long>(n)))), phi, true});
  }

  Polynomial rest = split.rest;
  // Non-reciprocal leftovers cannot have roots on the unit circle other than
  // via a reciprocal factor; keep only gcd(rest, t^d rest(1/t)).
  if (rest.degree() > 0) {
    std::vector<Rational> rc(rest.coefficients().rbegin(), rest.coefficients().rend());
    rest = gcd(rest, Polynomial(std::move(rc)));
    // Drop t = +-1 factors, which belong to no jump.
    for (const Polynomial& f : {Polynomial{-1, 1}, Polynomial{1, 1}})
      while (rest.degree() > 0 && (rest % f).is_zero()) rest = rest / f;
  }
  if (rest.degree() > 0 && rest.degree() % 2 == 0) {
    const Polynomial z_poly = reciprocal_transform(rest);
    for (auto& [lo, hi] : real_roots_in(square_free_part(z_poly), Rational(-2), Rational(2))) {
      const bool quadratic = rest.degree() == 2;
      for (bool upper : {true, false}) {
        AlgebraicAngle a{square_free_part(z_poly), lo, hi, upper, rest, 0};
        jumps.push_back({UnitPoint(std::move(a)), rest, quadratic});
      }
    }
  }

  // Keep every enclosure strictly inside its half circle.
  for (auto& j : jumps) {
    if (j.is_rational()) continue;
    const Rational half(1, 2);
    for (int round = 0;; ++round) {
      auto [lo, hi] = j.point.theta_enclosure();
      if ((j.point.algebraic().upper && lo > 0 && hi < half) || (!j.point.algebraic().upper && lo > half && hi < 1))
        break;
      if (round > 4096) throw Error(ErrorKind::Inconsistent, "failed to separate a jump from 0 or 1/2");
      j.point.refine();
    }
  }

  // Refine until enclosures are pairwise disjoint, then sort.
  for (int round = 0;; ++round) {
    std::vector<std::pair<Rational, Rational>> enc;
    enc.reserve(jumps.size());
    for (const auto& j : jumps) enc.push_back(j.point.theta_enclosure());
    std::vector<std::size_t> order(jumps.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return enc[a].first < enc[b].first; });
    bool clean = true;
    for (std::size_t k = 0; k + 1 < order.size(); ++k) {
      if (!(enc[order[k]].second < enc[order[k + 1]].first)) {
        clean = false;
        jumps[order[k]].point.refine();
        jumps[order[k + 1]].point.refine();
      }
    }
    if (clean) {
      std::vector<JumpPoint> sorted;
      sorted.reserve(jumps.size());
      for (std::size_t k : order) sorted.push_back(std::move(jumps[k]));
      return sorted;
    }
    if (round > 4096) throw Error(ErrorKind::Inconsistent, "failed to separate signature jumps");
  }
}

/// Three-way comparison of a rational theta with a jump position; refines
/// algebraic jumps as needed.
inline int compare(const Rational& theta, JumpPoint& jump) {
  if (jump.is_rational()) return cmp(theta, jump.point.theta());
  for (int round = 0; round < 4096; ++round) {
    auto [lo, hi] = jump.point.theta_enclosure();
    if (theta < lo) return -1;
    if (theta > hi) return 1;
    jump.point.refine();
  }
  throw Error(ErrorKind::Inconsistent, "could not compare theta with an algebraic jump");
}

/// "lo..hi" decimal enclosure of theta, or the exact fraction.
inline std::string describe_theta(JumpPoint& jump, int digits) {
  if (jump.is_rational()) return format_rational(jump.point.theta());
  Rational tol(1);
  for (int i = 0; i <= digits; ++i) tol /= 10;
  for (int round = 0; round < 8192; ++round) {
    auto [lo, hi] = jump.point.theta_enclosure();
    if (hi - lo < tol) {
      const mpfr_prec_t bits = 64 + 4 * digits;
      return to_decimal(BigFloat(lo, bits), digits, false) + ".." + to_decimal(BigFloat(hi, bits), digits, true);
    }
    jump.point.refine();
  }
  throw Error(ErrorKind::Inconsistent, "could not refine jump enclosure");
}

}  // namespace bingbound
