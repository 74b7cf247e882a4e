#pragma once

#include <cctype>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "bingbound/seifert/matrix.hpp"

namespace bingbound {

struct CatalogEntry {
  std::optional<SeifertMatrix> matrix;
  std::optional<long> g3;
  std::optional<long> tau;
};

/// Named knots plus the T(p,q) and twist(k) generators.  Immutable once built;
/// lookups are safe from any thread.
class KnotCatalog {
 public:
  /// unknot, 4_1, D(T(2,3)) (tau only), T(p,q) and twist(k) generators.
  static KnotCatalog shipped() {
    KnotCatalog c;
    c.entries_["unknot"] = CatalogEntry{SeifertMatrix(), 0, 0};
    c.entries_["4_1"] = CatalogEntry{SeifertMatrix::validate(IntMatrix::from_rows({{1, 1}, {0, -1}})), 1, std::nullopt};
    c.entries_["D(T(2,3))"] = CatalogEntry{std::nullopt, std::nullopt, 1};
    return c;
  }

  /// Fixed sweep used by batch runs and the oracle suites.
  static std::vector<std::string> standard_sample() {
    return {"unknot",  "4_1",      "T(2,3)",    "T(2,5)",   "T(2,7)",  "T(3,4)",
            "T(3,5)",  "twist(-2)", "twist(2)", "twist(3)", "twist(-3)", "D(T(2,3))"};
  }

  /// Entry for an atom name, resolving generators.  nullopt if unknown.
  std::optional<CatalogEntry> resolve(const std::string& name) const {
    CatalogEntry entry;
    bool found = false;
    if (auto it = entries_.find(name); it != entries_.end()) {
      entry = it->second;
      found = true;
    } else if (auto pq = parse_torus(name)) {
      entry.matrix = torus_knot(pq->first, pq->second);
      entry.g3 = (pq->first - 1) * (pq->second - 1) / 2;
      entry.tau = entry.g3;
      found = true;
    } else if (auto k = parse_twist(name)) {
      entry.matrix = twist_knot(*k);
      entry.g3 = *k == 0 ? 0 : 1;
      found = true;
    }
    if (auto it = tau_table_.find(name); it != tau_table_.end()) {
      entry.tau = it->second;
      found = true;
    }
    if (!found) return std::nullopt;
    return entry;
  }

  bool knows(const std::string& name) const { return resolve(name).has_value(); }

  SeifertMatrix matrix_for(const std::string& name) const {
    auto e = resolve(name);
    if (!e) throw Error(ErrorKind::UnknownAtom, "'" + name + "' is not in the catalog");
    if (!e->matrix) throw Error(ErrorKind::NoMatrixForAtom, "'" + name + "' has no Seifert matrix");
    return *e->matrix;
  }

  long tau_for(const std::string& name) const {
    auto e = resolve(name);
    if (!e) throw Error(ErrorKind::UnknownAtom, "'" + name + "' is not in the catalog");
    if (!e->tau) throw Error(ErrorKind::TauUnknownForAtom, "no tau value for '" + name + "'");
    return *e->tau;
  }

  std::optional<long> g3_for(const std::string& name) const {
    auto e = resolve(name);
    if (!e) throw Error(ErrorKind::UnknownAtom, "'" + name + "' is not in the catalog");
    return e->g3;
  }

  void add(const std::string& name, CatalogEntry entry) {
    if (!valid_identifier(name)) throw Error(ErrorKind::Parse, "invalid catalog identifier '" + name + "'");
    if (resolve(name)) warnings_.push_back("catalog entry '" + name + "' overrides the shipped definition");
    entries_[name] = std::move(entry);
  }

  /// `IDENTIFIER INTEGER` per line, '#' starts a comment.
  void load_tau_table(std::istream& in, const std::string& origin = "tau table") {
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      std::istringstream ls(line);
      std::string id, value, extra;
      if (!(ls >> id)) continue;
      if (!(ls >> value) || (ls >> extra))
        throw Error(ErrorKind::Parse, origin + " line " + std::to_string(lineno) + ": expected 'IDENTIFIER INTEGER'");
      Integer v;
      if (v.set_str(value, 10) != 0 || !v.fits_slong_p())
        throw Error(ErrorKind::Parse, origin + " line " + std::to_string(lineno) + ": bad integer '" + value + "'");
      if (auto shipped_entry = resolve(id); shipped_entry && shipped_entry->tau)
        warnings_.push_back(origin + ": tau(" + id + ") = " + value + " overrides shipped value " +
                            std::to_string(*shipped_entry->tau));
      tau_table_[id] = v.get_si();
    }
  }

  void load_tau_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Io, "cannot open tau table '" + path + "'");
    load_tau_table(in, path);
  }

  /// JSON object: name -> {"matrix": [[...]], "g3": int, "tau": int}, all fields optional.
  void load_catalog(std::istream& in, const std::string& origin = "catalog") {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::Parse, origin + ": " + e.what());
    }
    if (!doc.is_object()) throw Error(ErrorKind::Parse, origin + ": top level must be an object");
    for (const auto& [name, body] : doc.items()) {
      CatalogEntry entry;
      try {
        if (body.contains("matrix")) {
          std::vector<std::vector<Integer>> rows;
          for (const auto& row : body.at("matrix")) {
            std::vector<Integer> r;
            for (const auto& v : row) r.emplace_back(v.get<long>());
            rows.push_back(std::move(r));
          }
          entry.matrix = SeifertMatrix::validate(IntMatrix::from_rows(rows));
        }
        if (body.contains("g3")) entry.g3 = body.at("g3").get<long>();
        if (body.contains("tau")) entry.tau = body.at("tau").get<long>();
      } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Parse, origin + ": entry '" + name + "': " + e.what());
      }
      add(name, std::move(entry));
    }
  }

  void load_catalog_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Io, "cannot open catalog '" + path + "'");
    load_catalog(in, path);
  }

  const std::vector<std::string>& warnings() const { return warnings_; }

  static bool valid_identifier(const std::string& s) {
    if (s.empty()) return false;
    for (char ch : s)
      if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')) return false;
    return true;
  }

  static std::optional<std::pair<long, long>> parse_torus(const std::string& name) {
    long p = 0, q = 0;
    char tail = 0;
    if (name.size() < 6 || name.rfind("T(", 0) != 0) return std::nullopt;
    if (std::sscanf(name.c_str(), "T(%ld,%ld)%c", &p, &q, &tail) != 2) return std::nullopt;
    if (name != "T(" + std::to_string(p) + "," + std::to_string(q) + ")") return std::nullopt;
    return std::make_pair(p, q);
  }

  static std::optional<long> parse_twist(const std::string& name) {
    long k = 0;
    char tail = 0;
    if (name.rfind("twist(", 0) != 0) return std::nullopt;
    if (std::sscanf(name.c_str(), "twist(%ld)%c", &k, &tail) != 1) return std::nullopt;
    if (name != "twist(" + std::to_string(k) + ")") return std::nullopt;
    return k;
  }

 private:
  std::map<std::string, CatalogEntry> entries_;
  std::map<std::string, long> tau_table_;
  std::vector<std::string> warnings_;
};

}  // namespace bingbound
