#pragma once

#include <functional>
#include <string>
#include <vector>

#include "bingbound/invariants/signature.hpp"

namespace bingbound {

/// An additive, reversal-invariant knot invariant with |nu(K)| <= genus.
struct NuInvariant {
  std::string name;
  std::function<Rational(const KnotExpression&, const KnotCatalog&)> evaluate;
  bool additive = true;
  bool reverse_invariant = true;

  Rational operator()(const KnotExpression& e, const KnotCatalog& c) const { return evaluate(e, c); }
};

/// sigma(K) / 2 at omega = -1.
inline NuInvariant nu_sigma() {
  return {"sigma", [](const KnotExpression& e, const KnotCatalog& c) {
            return make_rational(murasugi_signature(e, c), 2);
          }};
}

/// sigma_{a/p}(K) / 2.
inline NuInvariant nu_sigma_p(long a, long p) {
  if (p <= 0 || a <= 0 || a >= p)
    throw Error(ErrorKind::DomainError, "sigma_p needs 0 < a < p");
  const Rational theta = make_rational(a, p);
  return {"sigma_p:" + format_rational(theta), [a, p](const KnotExpression& e, const KnotCatalog& c) {
            return make_rational(signature_at_rational(e, c, a, p), 2);
          }};
}

/// tau from the catalog and user table, extended over the expression.
inline NuInvariant nu_tau() {
  return {"tau", [](const KnotExpression& e, const KnotCatalog& c) {
            ExpressionFold<Rational> fold{
                [&](const KnotExpression& leaf) {
                  if (const auto* a = leaf.as<expr::Atom>()) return Rational(c.tau_for(a->name));
                  throw Error(ErrorKind::TauUnknownForAtom, "no tau value for a raw Seifert matrix");
                },
                [](const Rational& x, const Rational& y) { return Rational(x + y); },
                [](unsigned long n, const Rational& x) { return Rational(x * Rational(static_cast<long>(n))); },
                [](const Rational& x) { return x; },
                [](const Rational& x) { return Rational(-x); },
            };
            return fold(e);
          }};
}

/// sigma/2, sigma_{a/p}/2 and tau.
inline std::vector<NuInvariant> builtin_nus(long a = 1, long p = 3) { return {nu_sigma(), nu_sigma_p(a, p), nu_tau()}; }

/// "sigma", "tau" or "sigma_p:a/p".
inline NuInvariant parse_nu(const std::string& text) {
  if (text == "sigma") return nu_sigma();
  if (text == "tau") return nu_tau();
  const std::string prefix = "sigma_p:";
  if (text.rfind(prefix, 0) == 0) {
    const Rational theta = parse_rational(text.substr(prefix.size()));
    if (text.find('/') == std::string::npos) throw Error(ErrorKind::Parse, "sigma_p needs a fraction a/p");
    return nu_sigma_p(to_long_checked(theta.get_num(), "a"), to_long_checked(theta.get_den(), "p"));
  }
  throw Error(ErrorKind::Parse, "unknown nu '" + text + "' (expected sigma, tau or sigma_p:a/p)");
}

}  // namespace bingbound
