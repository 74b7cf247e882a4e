#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "bingbound/bing/tree.hpp"
#include "bingbound/seifert/expression.hpp"
#include "bingbound/seifert/parser.hpp"

namespace bingbound {

/// Prune the cherry whose parent is at `loc`: its two leaves go, the parent
/// becomes a marked leaf.
inline BingTree apply_covering_B(const BingTree& t, const std::string& loc) {
  const BingTree::NodePtr n = t.node_at(loc);
  if (n->leaf() || !n->left->leaf() || !n->right->leaf())
    throw Error(ErrorKind::NotACherry, "node '" + loc + "' is not the parent of two leaves");
  if (loc.empty()) throw Error(ErrorKind::WouldTrivialize, "pruning the root cherry leaves the trivial tree");
  return t.replace(loc, BingTree::make_leaf()).with_mark(loc);
}

namespace detail {
// K # K^r, folding repeated doubling into a multiple: S = X # rev(X) and
// n*S become 2*S and 2n*S.  S # S^r and S # S agree up to reordering of
// summands, which # is insensitive to.
inline KnotExpression double_companion(const KnotExpression& k) {
  auto symmetric = [](const KnotExpression& e) {
    const auto* s = e.as<expr::Sum>();
    if (!s) return false;
    const auto* r = s->right.as<expr::Reverse>();
    return r && r->inner == s->left;
  };
  if (symmetric(k)) return KnotExpression::multiple(2, k);
  if (const auto* m = k.as<expr::Multiple>(); m && symmetric(m->inner))
    return KnotExpression::multiple(2 * m->count, m->inner);
  return KnotExpression::sum(k, KnotExpression::reverse(k));
}
}  // namespace detail

/// The leaf at depth one (`loc` is "L" or "R") is removed, the other child
/// becomes the root, and the knot doubles to K # K^r.  Consumes the mark.
inline std::pair<BingTree, KnotExpression> apply_covering_A(const BingTree& t, const std::string& loc,
                                                           const KnotExpression& k) {
  if (loc.size() != 1 || (loc != "L" && loc != "R") || !t.node_at(loc)->leaf())
    throw Error(ErrorKind::NotDepthOneLeaf, "node '" + loc + "' is not a leaf at depth 1");
  const BingTree::NodePtr other = loc == "L" ? t.root()->right : t.root()->left;
  return {BingTree(other), detail::double_companion(k)};
}

enum class CoveringRule { A, B };

inline std::string to_string(CoveringRule r) { return r == CoveringRule::A ? "A" : "B"; }

struct RewriteStep {
  CoveringRule rule;
  std::string marked;
  std::string tree_before, tree_after;
  std::string digest_before, digest_after;
  std::string knot_after;
};

struct RewriteTrace {
  std::string initial_tree;
  std::string initial_knot;
  std::vector<RewriteStep> steps;

  std::size_t count(CoveringRule r) const {
    std::size_t c = 0;
    for (const auto& s : steps) c += s.rule == r;
    return c;
  }

  /// One JSON object per line.
  void write_jsonl(std::ostream& out) const {
    for (std::size_t i = 0; i < steps.size(); ++i) {
      const RewriteStep& s = steps[i];
      nlohmann::ordered_json j;
      j["step"] = i + 1;
      j["rule"] = to_string(s.rule);
      j["marked"] = s.marked;
      j["tree_before"] = s.tree_before;
      j["tree_after"] = s.tree_after;
      j["digest_before"] = s.digest_before;
      j["digest_after"] = s.digest_after;
      j["knot_after"] = s.knot_after;
      out << j.dump() << '\n';
    }
  }

  static RewriteTrace read_jsonl(std::istream& in, const std::string& initial_tree, const std::string& initial_knot) {
    RewriteTrace t{initial_tree, initial_knot, {}};
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      try {
        const auto j = nlohmann::json::parse(line);
        const std::string rule = j.at("rule").get<std::string>();
        if (rule != "A" && rule != "B") throw Error(ErrorKind::Parse, "unknown rule '" + rule + "'");
        t.steps.push_back({rule == "A" ? CoveringRule::A : CoveringRule::B, j.at("marked").get<std::string>(),
                           j.at("tree_before").get<std::string>(), j.at("tree_after").get<std::string>(),
                           j.at("digest_before").get<std::string>(), j.at("digest_after").get<std::string>(),
                           j.at("knot_after").get<std::string>()});
      } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("trace line: ") + e.what());
      }
    }
    return t;
  }
};

struct Reduction {
  BingTree tree;
  KnotExpression companion;
  RewriteTrace trace;
};

namespace detail {
// Leftmost among the deepest cherries off the right spine, if any.
inline std::optional<std::string> next_cherry(const BingTree& t) {
  std::optional<std::string> best;
  for (const auto& c : t.cherries()) {
    if (c.find('L') == std::string::npos) continue;
    if (!best || c.size() > best->size()) best = c;
  }
  return best;
}
}  // namespace detail

/// Reduce (t, k) to the single-node tree.  Cherries off the right spine are
/// pruned first (leftmost deepest), leaving a right comb; A-steps then strip
/// the comb from the left.  For the full tree of depth n this takes
/// 2^n - n - 1 B-steps and n A-steps and ends at 2^{n-1} (k # k^r).
inline Reduction reduce_tree(BingTree t, KnotExpression k) {
  Reduction r{t, k, RewriteTrace{t.serialize(), to_string(k), {}}};
  while (!r.tree.is_single_node()) {
    RewriteStep step;
    step.tree_before = r.tree.serialize();
    step.digest_before = r.tree.digest();
    if (auto c = detail::next_cherry(r.tree)) {
      step.rule = CoveringRule::B;
      step.marked = *c;
      r.tree = apply_covering_B(r.tree, *c);
    } else {
      step.rule = CoveringRule::A;
      step.marked = "L";
      auto [tree, knot] = apply_covering_A(r.tree, "L", r.companion);
      r.tree = std::move(tree);
      r.companion = std::move(knot);
    }
    step.tree_after = r.tree.serialize();
    step.digest_after = r.tree.digest();
    step.knot_after = to_string(r.companion);
    r.trace.steps.push_back(std::move(step));
  }
  return r;
}

/// B_n(k) to its companion knot, n >= 1.
inline Reduction reduce_to_companion(unsigned n, const KnotExpression& k) {
  if (n < 1) throw Error(ErrorKind::DomainError, "iteration depth must be at least 1");
  return reduce_tree(full_tree(n), k);
}

/// Re-apply every step from the recorded start, checking each recorded tree,
/// digest and knot.  Returns the final tree and knot.
inline std::pair<BingTree, KnotExpression> replay(const RewriteTrace& trace) {
  BingTree t = BingTree::parse(trace.initial_tree);
  KnotExpression k = parse_expression(trace.initial_knot);
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const RewriteStep& s = trace.steps[i];
    const std::string where = "step " + std::to_string(i + 1);
    if (t.serialize() != s.tree_before || t.digest() != s.digest_before)
      throw Error(ErrorKind::TraceMismatch, where + ": tree before does not match");
    if (s.rule == CoveringRule::B) {
      t = apply_covering_B(t, s.marked);
    } else {
      auto [nt, nk] = apply_covering_A(t, s.marked, k);
      t = std::move(nt);
      k = std::move(nk);
    }
    if (t.serialize() != s.tree_after || t.digest() != s.digest_after)
      throw Error(ErrorKind::TraceMismatch, where + ": tree after does not match");
    if (to_string(k) != s.knot_after) throw Error(ErrorKind::TraceMismatch, where + ": knot after does not match");
  }
  return {t, k};
}

}  // namespace bingbound
