#pragma once

#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bingbound/core/arith.hpp"

namespace bingbound {

/// Square matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), data_(n * n) {}

  /// Throws NotSquare on ragged or non-square input.
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows) {
    IntMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size())
        throw Error(ErrorKind::NotSquare, "row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                                              " entries, expected " + std::to_string(rows.size()));
      for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<Integer>> r;
    for (const auto& row : rows) r.emplace_back(row.begin(), row.end());
    return from_rows(r);
  }

  std::size_t size() const { return n_; }
  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  IntMatrix transpose() const {
    IntMatrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend IntMatrix operator-(const IntMatrix& a) {
    IntMatrix r(a.n_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = -a.data_[k];
    return r;
  }
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix r(a.n_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = a.data_[k] + b.data_[k];
    return r;
  }
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) { return a + (-b); }
  friend IntMatrix operator*(const Integer& s, const IntMatrix& a) {
    IntMatrix r(a.n_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = s * a.data_[k];
    return r;
  }
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) { return a.n_ == b.n_ && a.data_ == b.data_; }

  /// Block-diagonal sum diag(a, b).
  friend IntMatrix block_sum(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix r(a.n_ + b.n_);
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t j = 0; j < a.n_; ++j) r(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.n_; ++i)
      for (std::size_t j = 0; j < b.n_; ++j) r(a.n_ + i, a.n_ + j) = b(i, j);
    return r;
  }

  std::string to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) os << (j ? " " : "") << (*this)(i, j);
      os << '\n';
    }
    return os.str();
  }

 private:
  std::size_t n_ = 0;
  std::vector<Integer> data_;
};

/// Fraction-free Bareiss elimination; det of the 0x0 matrix is 1.
inline Integer determinant(IntMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(v);
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// Seifert matrix of a knot: even size and det(V - V^T) = 1.  Only
/// constructible through `validate` or operations that preserve validity.
class SeifertMatrix {
 public:
  SeifertMatrix() = default;  // the unknot (0x0)

  static SeifertMatrix validate(IntMatrix v) {
    if (v.size() % 2 != 0) throw Error(ErrorKind::OddSize, "Seifert matrix has odd size " + std::to_string(v.size()));
    const Integer d = determinant(v - v.transpose());
    if (d != 1)
      throw Error(ErrorKind::NotUnimodularIntersection, "det(V - V^T) = " + d.get_str() + ", expected 1");
    return SeifertMatrix(std::move(v));
  }

  const IntMatrix& matrix() const { return v_; }
  std::size_t size() const { return v_.size(); }
  std::size_t genus_bound() const { return v_.size() / 2; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return v_(i, j); }

  /// Orientation reversal: V^T.
  SeifertMatrix reversed() const { return SeifertMatrix(v_.transpose()); }
  /// Mirror image: -V^T.
  SeifertMatrix mirrored() const { return SeifertMatrix(-v_.transpose()); }
  /// Connected sum: block-diagonal sum.
  friend SeifertMatrix connected_sum(const SeifertMatrix& a, const SeifertMatrix& b) {
    return SeifertMatrix(block_sum(a.v_, b.v_));
  }
  friend bool operator==(const SeifertMatrix& a, const SeifertMatrix& b) { return a.v_ == b.v_; }

 private:
  explicit SeifertMatrix(IntMatrix v) : v_(std::move(v)) {}
  IntMatrix v_;
};

namespace detail {
/// (n x n) upper bidiagonal: 1 on the diagonal, -1 above it.
inline IntMatrix unipotent_band(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 1;
    if (i + 1 < n) m(i, i + 1) = -1;
  }
  return m;
}

inline IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix r(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      for (std::size_t k = 0; k < b.size(); ++k)
        for (std::size_t l = 0; l < b.size(); ++l) r(i * b.size() + k, j * b.size() + l) = a(i, j) * b(k, l);
  return r;
}
}  // namespace detail

/// Seifert matrix of the positive (p,q) torus knot, size (p-1)(q-1).  Built as
/// -(B_{p-1} (x) B_{q-1}) with B_k the unipotent band matrix; for p = 2 this
/// is the band matrix of the twisted-band surface, e.g. [[-1,1],[0,-1]] for T(2,3).
inline SeifertMatrix torus_knot(long p, long q) {
  if (p < 2 || q < 2) throw Error(ErrorKind::DomainError, "torus knot parameters must be >= 2");
  if (std::gcd(p, q) != 1)
    throw Error(ErrorKind::NotCoprime, "T(" + std::to_string(p) + "," + std::to_string(q) + ") is a link");
  const IntMatrix v = -detail::kronecker(detail::unipotent_band(static_cast<std::size_t>(p - 1)),
                                         detail::unipotent_band(static_cast<std::size_t>(q - 1)));
  return SeifertMatrix::validate(v);
}

/// Twist knot with k full twists in the twisted band: [[-1,1],[0,k]].
/// twist(-1) is the right-handed trefoil, twist(1) the figure eight, twist(0) the unknot.
inline SeifertMatrix twist_knot(long k) {
  return SeifertMatrix::validate(IntMatrix::from_rows({{-1, 1}, {0, k}}));
}

}  // namespace bingbound
