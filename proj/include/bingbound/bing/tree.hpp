#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bingbound/core/error.hpp"

namespace bingbound {

/// FNV-1a 64, as 16 hex digits.
inline std::string fnv1a64_hex(std::string_view data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

/// Rooted binary tree in which every internal node has two children.  Nodes
/// are addressed by root-relative paths over {L, R}; "" is the root.
/// Immutable: rewrites share untouched subtrees.
class BingTree {
 public:
  struct Node {
    std::shared_ptr<const Node> left, right;
    bool leaf() const { return !left; }
  };
  using NodePtr = std::shared_ptr<const Node>;

  BingTree() : root_(make_leaf()) {}
  explicit BingTree(NodePtr root, std::optional<std::string> mark = std::nullopt)
      : root_(std::move(root)), mark_(std::move(mark)) {}

  /// Complete tree of depth n (2^n leaves); n = 0 is the single node.
  static BingTree full(unsigned n) { return BingTree(full_node(n)); }

  const NodePtr& root() const { return root_; }
  const std::optional<std::string>& mark() const { return mark_; }
  BingTree with_mark(std::optional<std::string> m) const { return BingTree(root_, std::move(m)); }

  bool is_single_node() const { return root_->leaf(); }
  std::size_t leaf_count() const { return leaves(root_); }
  std::size_t depth() const { return depth_of(root_); }

  /// Throws BadLocator for malformed or dangling paths.
  NodePtr node_at(std::string_view loc) const {
    NodePtr n = root_;
    for (char c : loc) {
      if (c != 'L' && c != 'R') throw Error(ErrorKind::BadLocator, "locator must be over {L,R}: '" + std::string(loc) + "'");
      if (n->leaf()) throw Error(ErrorKind::BadLocator, "locator '" + std::string(loc) + "' runs past a leaf");
      n = c == 'L' ? n->left : n->right;
    }
    return n;
  }

  /// New tree with the subtree at `loc` replaced; the mark is dropped.
  BingTree replace(std::string_view loc, NodePtr sub) const {
    node_at(loc);
    return BingTree(replace_rec(root_, loc, std::move(sub)));
  }

  /// Internal nodes whose two children are leaves, in left-to-right order.
  std::vector<std::string> cherries() const {
    std::vector<std::string> out;
    collect_cherries(root_, "", out);
    return out;
  }

  /// "((* *) (* *))", with '!' after the marked node.
  std::string serialize() const {
    std::string out;
    write(root_, "", out);
    return out;
  }

  /// FNV-1a 64 of the serialization.
  std::string digest() const { return fnv1a64_hex(serialize()); }

  static BingTree parse(std::string_view text) {
    std::size_t pos = 0;
    std::optional<std::string> mark;
    std::string path;
    NodePtr root = parse_node(text, pos, path, mark);
    skip(text, pos);
    if (pos != text.size()) throw ParseError(pos, "trailing characters after tree");
    return BingTree(std::move(root), std::move(mark));
  }

  friend bool operator==(const BingTree& a, const BingTree& b) { return a.serialize() == b.serialize(); }

  static NodePtr make_leaf() { return std::make_shared<const Node>(); }
  static NodePtr make_node(NodePtr l, NodePtr r) { return std::make_shared<const Node>(Node{std::move(l), std::move(r)}); }

 private:
  static NodePtr full_node(unsigned n) {
    if (n == 0) return make_leaf();
    NodePtr child = full_node(n - 1);
    return make_node(child, child);
  }

  static std::size_t leaves(const NodePtr& n) { return n->leaf() ? 1 : leaves(n->left) + leaves(n->right); }
  static std::size_t depth_of(const NodePtr& n) {
    return n->leaf() ? 0 : 1 + std::max(depth_of(n->left), depth_of(n->right));
  }

  static NodePtr replace_rec(const NodePtr& n, std::string_view loc, NodePtr sub) {
    if (loc.empty()) return sub;
    if (loc.front() == 'L') return make_node(replace_rec(n->left, loc.substr(1), std::move(sub)), n->right);
    return make_node(n->left, replace_rec(n->right, loc.substr(1), std::move(sub)));
  }

  static void collect_cherries(const NodePtr& n, const std::string& path, std::vector<std::string>& out) {
    if (n->leaf()) return;
    if (n->left->leaf() && n->right->leaf()) {
      out.push_back(path);
      return;
    }
    collect_cherries(n->left, path + 'L', out);
    collect_cherries(n->right, path + 'R', out);
  }

  void write(const NodePtr& n, const std::string& path, std::string& out) const {
    if (n->leaf()) {
      out += '*';
    } else {
      out += '(';
      write(n->left, path + 'L', out);
      out += ' ';
      write(n->right, path + 'R', out);
      out += ')';
    }
    if (mark_ && *mark_ == path) out += '!';
  }

  static void skip(std::string_view s, std::size_t& pos) {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\n')) ++pos;
  }

  static NodePtr parse_node(std::string_view s, std::size_t& pos, std::string& path, std::optional<std::string>& mark) {
    skip(s, pos);
    if (pos >= s.size()) throw ParseError(pos, "unexpected end of tree");
    NodePtr n;
    if (s[pos] == '*') {
      ++pos;
      n = make_leaf();
    } else if (s[pos] == '(') {
      ++pos;
      path.push_back('L');
      NodePtr l = parse_node(s, pos, path, mark);
      path.back() = 'R';
      NodePtr r = parse_node(s, pos, path, mark);
      path.pop_back();
      skip(s, pos);
      if (pos >= s.size() || s[pos] != ')') throw ParseError(pos, "expected ')' (every internal node has two children)");
      ++pos;
      n = make_node(std::move(l), std::move(r));
    } else {
      throw ParseError(pos, std::string("unexpected '") + s[pos] + "' in tree");
    }
    if (pos < s.size() && s[pos] == '!') {
      if (mark) throw ParseError(pos, "more than one marked node");
      mark = path;
      ++pos;
    }
    return n;
  }

  NodePtr root_;
  std::optional<std::string> mark_;
};

inline BingTree full_tree(unsigned n) { return BingTree::full(n); }

}  // namespace bingbound
