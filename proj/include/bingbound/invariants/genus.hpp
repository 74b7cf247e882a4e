#pragma once

#include <algorithm>
#include <string>

#include "bingbound/invariants/alexander.hpp"

namespace bingbound {

enum class CertificateStatus { Exact, Interval };

inline std::string to_string(CertificateStatus s) { return s == CertificateStatus::Exact ? "Exact" : "Interval"; }

/// lower <= g3(K) <= upper.
struct GenusThreeCertificate {
  long lower = 0;
  long upper = 0;

  CertificateStatus status() const { return lower == upper ? CertificateStatus::Exact : CertificateStatus::Interval; }
  friend bool operator==(const GenusThreeCertificate& a, const GenusThreeCertificate& b) {
    return a.lower == b.lower && a.upper == b.upper;
  }
};

/// Per atom: lower = span(Delta)/2, upper = min(size(V)/2, catalog g3).  An
/// atom with a catalog g3 but no matrix counts as exactly g3.  The genus is
/// additive under connected sum, so certificates add.
inline GenusThreeCertificate g3_certify(const KnotExpression& e, const KnotCatalog& catalog) {
  ExpressionFold<GenusThreeCertificate> fold{
      [&](const KnotExpression& leaf) {
        std::optional<long> listed;
        if (const auto* a = leaf.as<expr::Atom>()) {
          listed = catalog.g3_for(a->name);
          const auto entry = catalog.resolve(a->name);
          if (!entry->matrix) {
            if (!listed) throw Error(ErrorKind::NoMatrixForAtom, "'" + a->name + "' has no Seifert matrix or genus");
            return GenusThreeCertificate{*listed, *listed};
          }
        }
        const SeifertMatrix v = leaf_matrix(leaf, catalog);
        GenusThreeCertificate c{alexander_of_matrix(v).span() / 2, static_cast<long>(v.genus_bound())};
        if (listed) c.upper = std::min(c.upper, *listed);
        if (c.lower > c.upper) throw Error(ErrorKind::Inconsistent, "catalog genus is below the Alexander bound");
        return c;
      },
      [](const GenusThreeCertificate& a, const GenusThreeCertificate& b) {
        return GenusThreeCertificate{a.lower + b.lower, a.upper + b.upper};
      },
      [](unsigned long n, const GenusThreeCertificate& a) {
        const auto k = static_cast<long>(n);
        return GenusThreeCertificate{a.lower * k, a.upper * k};
      },
      [](const GenusThreeCertificate& a) { return a; },
      [](const GenusThreeCertificate& a) { return a; },
  };
  return fold(e);
}

}  // namespace bingbound
