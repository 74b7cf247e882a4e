#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bingbound/core/arith.hpp"

namespace bingbound {

/// Dense univariate polynomial with rational coefficients, stored from the
/// constant term upward.  The zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c_.emplace_back(v);
    trim();
  }

  static Polynomial constant(const Rational& v) { return Polynomial(std::vector<Rational>{v}); }
  static Polynomial monomial(std::size_t power, const Rational& coeff = 1) {
    std::vector<Rational> c(power + 1);
    c[power] = coeff;
    return Polynomial(std::move(c));
  }

  static Polynomial from_integers(const std::vector<Integer>& coeffs) {
    std::vector<Rational> c(coeffs.begin(), coeffs.end());
    return Polynomial(std::move(c));
  }

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rational& leading() const { return c_.back(); }
  const std::vector<Rational>& coefficients() const { return c_; }

  Rational operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

  Rational operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rational(static_cast<long>(i)));
    return Polynomial(std::move(d));
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    const Rational lead = leading();
    std::vector<Rational> m = c_;
    for (auto& v : m) v /= lead;
    return Polynomial(std::move(m));
  }

  /// Smallest positive integer multiple with coprime integer coefficients and
  /// positive leading coefficient.
  std::vector<Integer> primitive_integer() const {
    if (is_zero()) return {};
    Integer lcm_den = 1;
    for (const auto& v : c_) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), v.get_den_mpz_t());
    std::vector<Integer> out;
    Integer g = 0;
    for (const auto& v : c_) {
      Integer z = v.get_num() * (lcm_den / v.get_den());
      out.push_back(z);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    }
    const int sgn = out.back() < 0 ? -1 : 1;
    for (auto& z : out) z = z / g * sgn;
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] + b[i];
    return Polynomial(std::move(r));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] - b[i];
    return Polynomial(std::move(r));
  }
  friend Polynomial operator-(const Polynomial& a) { return Polynomial() - a; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(const Rational& s, const Polynomial& a) {
    std::vector<Rational> r = a.c_;
    for (auto& v : r) v *= s;
    return Polynomial(std::move(r));
  }

  /// Euclidean division; divisor must be nonzero.
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw Error(ErrorKind::DomainError, "polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial(), a};
    std::vector<Rational> rem = a.c_;
    std::vector<Rational> quo(a.c_.size() - b.c_.size() + 1);
    const Rational lead = b.leading();
    for (long k = static_cast<long>(quo.size()) - 1; k >= 0; --k) {
      const Rational q = rem[static_cast<std::size_t>(k) + b.c_.size() - 1] / lead;
      quo[static_cast<std::size_t>(k)] = q;
      if (q == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) rem[static_cast<std::size_t>(k) + j] -= q * b.c_[j];
    }
    rem.resize(b.c_.size() - 1);
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
  }
  friend Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }
  friend Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).first; }

  /// "t^2 - t + 1" style; `low_exponent` shifts exponents for Laurent output.
  std::string to_string(const std::string& var = "t", long low_exponent = 0) const {
    if (is_zero()) return "0";
    std::string out;
    for (long i = degree(); i >= 0; --i) {
      const Rational& v = c_[static_cast<std::size_t>(i)];
      if (v == 0) continue;
      const long e = i + low_exponent;
      const bool neg = v < 0;
      const Rational mag = neg ? Rational(-v) : v;
      if (out.empty()) out += neg ? "-" : "";
      else out += neg ? " - " : " + ";
      const bool unit = mag == 1;
      std::string coeff = mag.get_den() == 1 ? mag.get_num().get_str() : mag.get_str();
      if (e == 0) { out += coeff; continue; }
      if (!unit) out += coeff;
      out += var;
      if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

inline Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a % b;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

/// Inverse of `a` modulo `m`; requires gcd(a, m) = 1.
inline Polynomial inverse_mod(const Polynomial& a, const Polynomial& m) {
  Polynomial r0 = m, r1 = a % m;
  Polynomial s0, s1 = Polynomial::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Polynomial s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) throw Error(ErrorKind::DomainError, "polynomial not invertible modulo the modulus");
  return (Rational(1) / r0.leading()) * (s0 % m);
}

inline Polynomial square_free_part(const Polynomial& p) {
  if (p.degree() <= 0) return p.monic();
  return (p / gcd(p, p.derivative())).monic();
}

/// p(q(t)) mod m, by Horner.
inline Polynomial compose_mod(const Polynomial& p, const Polynomial& q, const Polynomial& m) {
  Polynomial acc;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = (acc * q + Polynomial::constant(*it)) % m;
  return acc;
}

inline Polynomial power(const Polynomial& p, unsigned long e) {
  Polynomial result = Polynomial::constant(1), base = p;
  while (e > 0) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

/// n-th cyclotomic polynomial, from prod_{d | n} (t^d - 1)^{mu(n/d)}.
inline Polynomial cyclotomic(std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::DomainError, "cyclotomic index must be positive");
  std::vector<std::uint64_t> primes;
  {
    std::uint64_t m = n;
    for (std::uint64_t p = 2; p * p <= m; ++p)
      if (m % p == 0) {
        primes.push_back(p);
        while (m % p == 0) m /= p;
      }
    if (m > 1) primes.push_back(m);
  }
  // Multiply numerator factors, then divide denominator factors; both are
  // sparse binomials so integer arithmetic on the coefficient vector suffices.
  std::vector<Integer> poly{1};
  auto multiply = [&](std::uint64_t d) {  // *(t^d - 1)
    std::vector<Integer> r(poly.size() + d);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      r[i + d] += poly[i];
      r[i] -= poly[i];
    }
    poly = std::move(r);
  };
  auto divide = [&](std::uint64_t d) {  // /(t^d - 1), exact
    const std::size_t out_size = poly.size() - d;
    std::vector<Integer> q(out_size);
    std::vector<Integer> rem = poly;
    for (std::size_t k = out_size; k-- > 0;) {
      q[k] = rem[k + d];
      rem[k + d] -= q[k];
      rem[k] += q[k];
    }
    poly = std::move(q);
  };
  const std::size_t subsets = std::size_t{1} << primes.size();
  std::vector<std::uint64_t> num, den;
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    std::uint64_t prod = 1;
    int bits = 0;
    for (std::size_t i = 0; i < primes.size(); ++i)
      if (mask & (std::size_t{1} << i)) {
        prod *= primes[i];
        ++bits;
      }
    (bits % 2 == 0 ? num : den).push_back(n / prod);
  }
  for (auto d : num) multiply(d);
  for (auto d : den) divide(d);
  // Sign: the construction yields (-1)^{#num - #den} * Phi_n.
  Polynomial result = Polynomial::from_integers(poly);
  if (result.leading() < 0) result = -result;
  return result;
}

/// Reciprocal polynomial D of even degree 2m with D(t) = t^m P(t + 1/t);
/// returns P.  Requires palindromic coefficients.
inline Polynomial reciprocal_transform(const Polynomial& d) {
  const long deg = d.degree();
  if (deg < 0 || deg % 2 != 0) throw Error(ErrorKind::DomainError, "reciprocal transform needs even degree");
  const auto m = static_cast<std::size_t>(deg / 2);
  for (std::size_t i = 0; i <= 2 * m; ++i)
    if (d[i] != d[2 * m - i]) throw Error(ErrorKind::DomainError, "polynomial is not palindromic");
  // t^k + t^-k = C_k(z): C_0 = 2, C_1 = z, C_{k+1} = z C_k - C_{k-1}.
  const Polynomial z = Polynomial::monomial(1);
  Polynomial result = Polynomial::constant(d[m]);
  Polynomial prev = Polynomial::constant(2), cur = z;
  for (std::size_t k = 1; k <= m; ++k) {
    result = result + d[m + k] * cur;
    Polynomial next = z * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return result;
}

}  // namespace bingbound
