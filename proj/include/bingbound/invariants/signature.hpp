#pragma once

#include <complex>
#include <functional>
#include <future>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "bingbound/invariants/alexander.hpp"
#include "bingbound/invariants/inertia.hpp"
#include "bingbound/invariants/jumps.hpp"

namespace bingbound {

/// How inertia of H(omega) is obtained.  Auto uses certified double-precision
/// eigenvalues and escalates to exact arithmetic (or a plateau lookup) when an
/// eigenvalue is too close to zero to classify.
enum class InertiaMethod { Auto, Exact, Numeric };

/// H(omega) = (1 - omega) V + (1 - conj omega) V^T in double precision.
inline Eigen::MatrixXcd hermitian_form(const SeifertMatrix& v, std::complex<double> omega) {
  const auto n = static_cast<Eigen::Index>(v.size());
  const std::complex<double> a = 1.0 - omega;
  Eigen::MatrixXcd h(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      h(i, j) = a * v(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).get_d() +
                std::conj(a) * v(static_cast<std::size_t>(j), static_cast<std::size_t>(i)).get_d();
  return h;
}

class SignatureFunction;
SignatureFunction signature_function_of_matrix(const SeifertMatrix& v, InertiaMethod method);

namespace detail {

inline void check_theta(const Rational& theta) {
  if (theta <= 0 || theta >= 1)
    throw Error(ErrorKind::DomainError, "theta = " + format_rational(theta) + " is outside (0, 1)");
}

inline Inertia exact_cyclotomic_inertia(const SeifertMatrix& v, const Rational& theta) {
  PointField field = PointField::cyclotomic(theta);
  return exact_inertia(v, field);
}

// Rational theta, with plateau lookup disabled for the lookup's own samples.
inline Inertia matrix_inertia(const SeifertMatrix& v, const Rational& theta, InertiaMethod method, bool allow_lookup);

}  // namespace detail

/// Inertia of H(e^{2 pi i theta}) for one Seifert matrix.
inline Inertia matrix_inertia_at(const SeifertMatrix& v, const Rational& theta,
                                 InertiaMethod method = InertiaMethod::Auto) {
  return detail::matrix_inertia(v, theta, method, true);
}

/// Inertia at an arbitrary unit point (rational or algebraic angle).
inline Inertia matrix_inertia_at(const SeifertMatrix& v, UnitPoint& point,
                                 InertiaMethod method = InertiaMethod::Auto) {
  if (point.is_rational()) return matrix_inertia_at(v, point.theta(), method);
  if (v.size() == 0) return {};
  if (method != InertiaMethod::Exact) {
    const NumericInertia num = numeric_inertia(v, point.one_minus_omega_double());
    if (method == InertiaMethod::Numeric || num.certified) return num.inertia;
  }
  PointField field(point, point.algebraic().t_poly);
  return exact_inertia(v, field);
}

/// (signature, nullity) of H(omega) through the expression: additive over
/// sums and multiples, unchanged by reversal, negated by mirroring.
inline Inertia signature_at(const KnotExpression& e, const KnotCatalog& catalog, UnitPoint point,
                            InertiaMethod method = InertiaMethod::Auto) {
  if (point.is_rational()) detail::check_theta(point.theta());
  ExpressionFold<Inertia> fold{
      [&](const KnotExpression& leaf) { return matrix_inertia_at(leaf_matrix(leaf, catalog), point, method); },
      [](const Inertia& a, const Inertia& b) { return a + b; },
      [](unsigned long n, const Inertia& a) { return scaled(a, static_cast<long>(n)); },
      [](const Inertia& a) { return a; },
      [](const Inertia& a) { return swapped(a); },
  };
  return fold(e);
}

inline Inertia signature_at(const KnotExpression& e, const KnotCatalog& catalog, const Rational& theta,
                            InertiaMethod method = InertiaMethod::Auto) {
  return signature_at(e, catalog, UnitPoint(theta), method);
}

/// sigma_{a/p}(K), 0 < a < p.
inline long signature_at_rational(const KnotExpression& e, const KnotCatalog& catalog, long a, long p,
                                  InertiaMethod method = InertiaMethod::Auto) {
  if (p <= 0 || a <= 0 || a >= p)
    throw Error(ErrorKind::DomainError, "need 0 < a < p, got a = " + std::to_string(a) + ", p = " + std::to_string(p));
  return signature_at(e, catalog, make_rational(a, p), method).signature();
}

/// Signature at omega = -1.
inline long murasugi_signature(const KnotExpression& e, const KnotCatalog& catalog,
                               InertiaMethod method = InertiaMethod::Auto) {
  return signature_at(e, catalog, Rational(1, 2), method).signature();
}

struct SignatureJump {
  JumpPoint at;
  long signature = 0;
  long nullity = 0;
};

struct SignaturePlateau {
  Rational sample;  // rational point strictly inside the plateau
  long signature = 0;
};

/// Step function theta -> sigma_theta on (0, 1): sorted jumps and the
/// plateaus between them, plateaus.size() == jumps.size() + 1.
class SignatureFunction {
 public:
  std::vector<SignatureJump> jumps;
  std::vector<SignaturePlateau> plateaus{SignaturePlateau{Rational(1, 2), 0}};

  /// Index of the plateau containing theta, or the jump it hits as
  /// -(index + 1).
  long locate(const Rational& theta) {
    detail::check_theta(theta);
    for (std::size_t k = 0; k < jumps.size(); ++k) {
      const int c = compare(theta, jumps[k].at);
      if (c < 0) return static_cast<long>(k);
      if (c == 0) return -static_cast<long>(k) - 1;
    }
    return static_cast<long>(jumps.size());
  }

  /// Value at theta; at a jump this is the at-point value.
  Inertia at(const Rational& theta) {
    const long k = locate(theta);
    if (k < 0) {
      return from(jumps[static_cast<std::size_t>(-k - 1)]);
    }
    return from_plateau(plateaus[static_cast<std::size_t>(k)].signature);
  }

  long value_at(const Rational& theta) { return at(theta).signature(); }

  long left_limit(std::size_t jump) const { return plateaus.at(jump).signature; }
  long right_limit(std::size_t jump) const { return plateaus.at(jump + 1).signature; }

  bool identically_zero_on_plateaus() const {
    for (const auto& p : plateaus)
      if (p.signature != 0) return false;
    return true;
  }

  /// Plateau rows `theta_lo,theta_hi,signature` interleaved with jump rows
  /// `theta,signature,nullity`; algebraic jumps add a defining polynomial in
  /// a trailing `# ...` column.
  std::string to_csv(int digits = 12) {
    std::ostringstream os;
    os << "# plateau: theta_lo,theta_hi,signature; jump: theta,signature,nullity\n";
    auto lower = [&](std::size_t k) -> std::string {
      if (k == 0) return "0/1";
      return end_text(jumps[k - 1].at, digits, true);
    };
    auto upper = [&](std::size_t k) -> std::string {
      if (k == jumps.size()) return "1/1";
      return end_text(jumps[k].at, digits, false);
    };
    for (std::size_t k = 0; k < plateaus.size(); ++k) {
      os << lower(k) << ',' << upper(k) << ',' << plateaus[k].signature << '\n';
      if (k < jumps.size()) {
        SignatureJump& j = jumps[k];
        os << describe_theta(j.at, digits) << ',' << j.signature << ',' << j.nullity;
        if (!j.at.is_rational())
          os << ",# " << (j.at.minimal ? "minimal polynomial " : "defining polynomial ")
             << Polynomial::from_integers(j.at.defining.primitive_integer()).to_string("t");
        os << '\n';
      }
    }
    return os.str();
  }

 private:
  static Inertia from(const SignatureJump& j) {
    Inertia r;
    r.zero = j.nullity;
    if (j.signature > 0) r.positive = j.signature;
    else r.negative = -j.signature;
    return r;
  }
  static Inertia from_plateau(long s) {
    Inertia r;
    if (s > 0) r.positive = s;
    else r.negative = -s;
    return r;
  }
  static std::string end_text(JumpPoint& p, int digits, bool lower_end) {
    if (p.is_rational()) return format_rational(p.point.theta());
    const std::string both = describe_theta(p, digits);
    const auto dots = both.find("..");
    // The plateau's lower end is the jump's upper enclosure and vice versa.
    return lower_end ? both.substr(dots + 2) : both.substr(0, dots);
  }
};

namespace detail {

inline SignatureFunction build_signature_function(const Polynomial& root_poly,
                                                  const std::function<Inertia(UnitPoint)>& eval, bool parallel) {
  SignatureFunction f;
  std::vector<JumpPoint> points = unit_circle_roots(root_poly);
  // Sample each plateau at the simplest rational strictly between the
  // neighbouring jump enclosures.
  std::vector<Rational> samples;
  Rational left = 0;
  for (std::size_t k = 0; k <= points.size(); ++k) {
    Rational right = 1;
    if (k < points.size()) right = points[k].point.theta_enclosure().first;
    samples.push_back(simplest_between(left, right));
    if (k < points.size()) left = points[k].point.theta_enclosure().second;
  }
  f.plateaus.clear();
  std::vector<Inertia> values(samples.size());
  if (parallel && samples.size() > 1) {
    std::vector<std::future<Inertia>> tasks;
    for (const auto& s : samples) tasks.push_back(std::async(std::launch::async, eval, UnitPoint(s)));
    for (std::size_t k = 0; k < tasks.size(); ++k) values[k] = tasks[k].get();
  } else {
    for (std::size_t k = 0; k < samples.size(); ++k) values[k] = eval(UnitPoint(samples[k]));
  }
  for (std::size_t k = 0; k < samples.size(); ++k) {
    if (values[k].nullity() != 0)
      throw Error(ErrorKind::Inconsistent, "nonzero nullity at plateau sample " + format_rational(samples[k]));
    f.plateaus.push_back({samples[k], values[k].signature()});
  }
  for (auto& p : points) {
    const Inertia v = eval(p.point);
    f.jumps.push_back({std::move(p), v.signature(), v.nullity()});
  }
  return f;
}

inline Inertia matrix_inertia(const SeifertMatrix& v, const Rational& theta, InertiaMethod method, bool allow_lookup) {
  check_theta(theta);
  if (v.size() == 0) return {};
  if (method == InertiaMethod::Exact) return exact_cyclotomic_inertia(v, theta);
  const UnitPoint point(theta);
  const NumericInertia num = numeric_inertia(v, point.one_minus_omega_double());
  if (method == InertiaMethod::Numeric || num.certified) return num.inertia;
  const Integer b = theta.get_den();
  if (b <= 120 || !allow_lookup) return exact_cyclotomic_inertia(v, theta);
  // Large order: exact only when omega is an Alexander root, otherwise the
  // value is the plateau value around theta.
  const Polynomial roots = square_free_part(alexander_of_matrix(v).shifted());
  if (b.fits_ulong_p() && euler_totient(b.get_ui()) <= static_cast<std::uint64_t>(roots.degree()) &&
      (roots % cyclotomic(b.get_ui())).is_zero())
    return exact_cyclotomic_inertia(v, theta);
  SignatureFunction f = signature_function_of_matrix(v, InertiaMethod::Auto);
  return f.at(theta);
}

}  // namespace detail

inline SignatureFunction signature_function_of_matrix(const SeifertMatrix& v, InertiaMethod method) {
  return detail::build_signature_function(
      square_free_part(alexander_of_matrix(v).shifted()),
      [&](UnitPoint p) {
        if (p.is_rational()) return detail::matrix_inertia(v, p.theta(), method, false);
        return matrix_inertia_at(v, p, method);
      },
      false);
}

/// Levine-Tristram signature function of K, with jumps at every unit-circle
/// root of Delta.  Plateau samples may be evaluated concurrently.
inline SignatureFunction signature_function(const KnotExpression& e, const KnotCatalog& catalog,
                                            InertiaMethod method = InertiaMethod::Auto, bool parallel = false) {
  return detail::build_signature_function(
      alexander_root_polynomial(e, catalog),
      [&](UnitPoint p) { return signature_at(e, catalog, std::move(p), method); }, parallel);
}

}  // namespace bingbound
