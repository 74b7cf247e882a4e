#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "bingbound/bing/covering.hpp"
#include "bingbound/invariants/genus.hpp"
#include "bingbound/invariants/nu.hpp"

namespace bingbound {

namespace detail {
inline Integer pow2(unsigned n) {
  Integer r = 1;
  r <<= n;
  return r;
}
}  // namespace detail

/// 2^n |nu(k)|, checked against |nu| of the companion 2^{n-1}(k # k^r).
inline Rational concordance_bound(const KnotExpression& k, unsigned n, const NuInvariant& nu,
                                  const KnotCatalog& catalog) {
  if (n < 1) throw Error(ErrorKind::DomainError, "iteration depth must be at least 1");
  const Rational direct = Rational(detail::pow2(n)) * abs_of(nu(k, catalog));
  const Reduction red = reduce_to_companion(n, k);
  const Rational via_companion = abs_of(nu(red.companion, catalog));
  if (direct != via_companion)
    throw Error(ErrorKind::Inconsistent, nu.name + ": 2^n|nu(K)| = " + format_rational(direct) +
                                             " but |nu(companion)| = " + format_rational(via_companion));
  return direct;
}

struct S3Bound {
  Integer lower;
  Integer upper;
  CertificateStatus status = CertificateStatus::Exact;
};

/// 2^n times the 3-genus certificate of k.
inline S3Bound s3_boundary_genus(const KnotExpression& k, unsigned n, const KnotCatalog& catalog) {
  if (n < 1) throw Error(ErrorKind::DomainError, "iteration depth must be at least 1");
  const GenusThreeCertificate g = g3_certify(k, catalog);
  const Integer scale = detail::pow2(n);
  return {scale * g.lower, scale * g.upper, g.status()};
}

struct B4Profile {
  std::vector<long> genera;
  long clasp = 2;
};

/// One genus-one component and 2^n - 1 discs; clasp number 2.
inline B4Profile b4_profile(unsigned n) {
  if (n < 1) throw Error(ErrorKind::DomainError, "iteration depth must be at least 1");
  if (n > 24) throw Error(ErrorKind::DomainError, "iteration depth too large for an explicit profile");
  B4Profile p;
  p.genera.assign(std::size_t{1} << n, 0);
  p.genera[0] = 1;
  return p;
}

struct OrderCheck {
  std::optional<bool> infinite;  // nullopt: undecided by signatures
  std::vector<std::string> notes;
};

namespace detail {
inline bool is_figure_eight(const KnotExpression& k) {
  if (const auto* r = k.as<expr::Reverse>()) return is_figure_eight(r->inner);
  if (const auto* m = k.as<expr::Mirror>()) return is_figure_eight(m->inner);
  const auto* a = k.as<expr::Atom>();
  return a && (a->name == "4_1" || a->name == "twist(1)");
}
}  // namespace detail

/// Infinite order in the algebraic concordance group if some plateau of the
/// signature function is nonzero; otherwise undecided.
inline OrderCheck infinite_order_check(const KnotExpression& k, const KnotCatalog& catalog) {
  OrderCheck out;
  const SignatureFunction f = signature_function(k, catalog);
  if (!f.identically_zero_on_plateaus()) {
    out.infinite = true;
    return out;
  }
  if (detail::is_figure_eight(k)) out.notes.push_back("FigureEightOpenProblem");
  return out;
}

struct NuResult {
  std::string name;
  std::optional<Rational> value;  // nu(k)
  std::optional<Rational> bound;  // 2^n |nu(k)|
  std::string error;
};

struct GenusBoundReport {
  std::string knot;
  unsigned n = 1;
  std::string nu_name;  // the nu attaining lower_concordance
  std::vector<NuResult> nus;
  std::string companion;
  std::string trace_digest;
  std::optional<Rational> lower_concordance;
  std::optional<S3Bound> s3;
  std::string s3_error;
  B4Profile b4;
  std::optional<bool> infinite_order;
  std::vector<std::string> notes;
};

/// Everything above for one knot.  Per-nu and per-bound failures are recorded
/// in the report instead of aborting it.
inline GenusBoundReport full_report(const KnotExpression& k, unsigned n, const std::vector<NuInvariant>& nus,
                                    const KnotCatalog& catalog) {
  GenusBoundReport r;
  r.knot = to_string(k);
  r.n = n;
  const Reduction red = reduce_to_companion(n, k);
  r.companion = to_string(red.companion);
  std::ostringstream trace;
  red.trace.write_jsonl(trace);
  r.trace_digest = fnv1a64_hex(trace.str());

  for (const auto& nu : nus) {
    NuResult res{nu.name, std::nullopt, std::nullopt, {}};
    try {
      res.value = nu(k, catalog);
      res.bound = concordance_bound(k, n, nu, catalog);
      if (!r.lower_concordance || *res.bound > *r.lower_concordance) {
        r.lower_concordance = res.bound;
        r.nu_name = nu.name;
      }
    } catch (const Error& e) {
      res.error = e.what();
    }
    r.nus.push_back(std::move(res));
  }

  try {
    r.s3 = s3_boundary_genus(k, n, catalog);
  } catch (const Error& e) {
    r.s3_error = e.what();
  }
  r.b4 = b4_profile(n);
  try {
    OrderCheck oc = infinite_order_check(k, catalog);
    r.infinite_order = oc.infinite;
    r.notes.insert(r.notes.end(), oc.notes.begin(), oc.notes.end());
  } catch (const Error& e) {
    r.notes.push_back(std::string("infinite_order: ") + std::string(to_string(e.kind())));
  }
  return r;
}

/// Stable field names; rationals as "p/q" strings, unknown values as "Unknown".
inline nlohmann::ordered_json to_json(const GenusBoundReport& r) {
  using nlohmann::ordered_json;
  const ordered_json unknown = "Unknown";
  ordered_json j;
  j["knot"] = r.knot;
  j["n"] = r.n;
  j["nu_name"] = r.nu_name.empty() ? unknown : ordered_json(r.nu_name);
  j["companion"] = r.companion;
  j["trace_digest"] = r.trace_digest;
  if (r.lower_concordance) {
    j["lower_concordance"] = format_rational(*r.lower_concordance);
    j["lower_concordance_int"] = floor_of(*r.lower_concordance).get_str();
  } else {
    j["lower_concordance"] = unknown;
    j["lower_concordance_int"] = unknown;
  }
  if (r.s3) {
    j["lower_s3"] = r.s3->lower.get_str();
    j["upper_s3"] = r.s3->upper.get_str();
    j["s3_status"] = to_string(r.s3->status);
  } else {
    j["lower_s3"] = unknown;
    j["upper_s3"] = unknown;
    j["s3_status"] = unknown;
  }
  j["b4_profile"] = {{"genera", r.b4.genera}, {"clasp", r.b4.clasp}};
  j["infinite_order"] = r.infinite_order ? ordered_json(*r.infinite_order) : unknown;
  ordered_json nus = ordered_json::array();
  for (const auto& nu : r.nus) {
    ordered_json e;
    e["name"] = nu.name;
    e["value"] = nu.value ? ordered_json(format_rational(*nu.value)) : unknown;
    e["bound"] = nu.bound ? ordered_json(format_rational(*nu.bound)) : unknown;
    if (!nu.error.empty()) e["error"] = nu.error;
    nus.push_back(std::move(e));
  }
  j["nus"] = std::move(nus);
  ordered_json notes = ordered_json::array();
  for (const auto& n : r.notes) notes.push_back(n);
  if (!r.s3_error.empty()) notes.push_back("s3: " + r.s3_error);
  j["notes"] = std::move(notes);
  return j;
}

}  // namespace bingbound
