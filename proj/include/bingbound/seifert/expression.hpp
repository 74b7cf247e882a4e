#pragma once

#include <memory>
#include <string>
#include <utility>
#include <variant>

#include "bingbound/seifert/matrix.hpp"

namespace bingbound {

class KnotExpression;

namespace expr {
struct Atom {
  std::string name;  // canonical identifier, e.g. "T(2,3)", "4_1", "twist(-1)"
};
struct RawMatrix {
  SeifertMatrix matrix;
  std::string source;  // file path, empty for in-memory matrices
};
struct Sum;
struct Reverse;
struct Mirror;
struct Multiple;
}  // namespace expr

/// Immutable symbolic knot term.  Copies share structure.
class KnotExpression {
 public:
  using Node = std::variant<expr::Atom, expr::RawMatrix, expr::Sum, expr::Reverse, expr::Mirror, expr::Multiple>;

  static KnotExpression atom(std::string name);
  static KnotExpression raw(SeifertMatrix m, std::string source = {});
  static KnotExpression unknot() { return atom("unknot"); }
  static KnotExpression sum(KnotExpression left, KnotExpression right);
  static KnotExpression reverse(KnotExpression inner);
  static KnotExpression mirror(KnotExpression inner);
  /// count >= 1
  static KnotExpression multiple(unsigned long count, KnotExpression inner);

  const Node& node() const;

  template <class T>
  const T* as() const;

 private:
  explicit KnotExpression(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

namespace expr {
struct Sum {
  KnotExpression left, right;
};
struct Reverse {
  KnotExpression inner;
};
struct Mirror {
  KnotExpression inner;
};
struct Multiple {
  unsigned long count;
  KnotExpression inner;
};
}  // namespace expr

inline const KnotExpression::Node& KnotExpression::node() const { return *node_; }

template <class T>
const T* KnotExpression::as() const {
  return std::get_if<T>(node_.get());
}

inline KnotExpression KnotExpression::atom(std::string name) {
  return KnotExpression(std::make_shared<const Node>(expr::Atom{std::move(name)}));
}
inline KnotExpression KnotExpression::raw(SeifertMatrix m, std::string source) {
  return KnotExpression(std::make_shared<const Node>(expr::RawMatrix{std::move(m), std::move(source)}));
}
inline KnotExpression KnotExpression::sum(KnotExpression left, KnotExpression right) {
  return KnotExpression(std::make_shared<const Node>(expr::Sum{std::move(left), std::move(right)}));
}
inline KnotExpression KnotExpression::reverse(KnotExpression inner) {
  return KnotExpression(std::make_shared<const Node>(expr::Reverse{std::move(inner)}));
}
inline KnotExpression KnotExpression::mirror(KnotExpression inner) {
  return KnotExpression(std::make_shared<const Node>(expr::Mirror{std::move(inner)}));
}
inline KnotExpression KnotExpression::multiple(unsigned long count, KnotExpression inner) {
  if (count == 0) throw Error(ErrorKind::DomainError, "multiple count must be positive");
  return KnotExpression(std::make_shared<const Node>(expr::Multiple{count, std::move(inner)}));
}

template <class... F>
struct overloaded : F... {
  using F::operator()...;
};
template <class... F>
overloaded(F...) -> overloaded<F...>;

namespace detail {
inline std::string matrix_literal(const IntMatrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    s += i ? ",[" : "[";
    for (std::size_t j = 0; j < m.size(); ++j) s += (j ? "," : "") + m(i, j).get_str();
    s += "]";
  }
  return s + "]";
}

// precedence: 0 = sum level, 1 = operand of '#' on the right / of 'n*'
inline std::string print(const KnotExpression& e, int context) {
  return std::visit(
      overloaded{
          [](const expr::Atom& a) { return a.name; },
          [](const expr::RawMatrix& r) {
            return r.source.empty() ? matrix_literal(r.matrix.matrix()) : "<file:" + r.source + ">";
          },
          [context](const expr::Sum& s) {
            std::string body = print(s.left, 0) + " # " + print(s.right, 1);
            return context == 0 ? body : "(" + body + ")";
          },
          [](const expr::Reverse& r) { return "rev(" + print(r.inner, 0) + ")"; },
          [](const expr::Mirror& m) { return "mirror(" + print(m.inner, 0) + ")"; },
          [](const expr::Multiple& m) { return std::to_string(m.count) + "*" + print(m.inner, 1); },
      },
      e.node());
}
}  // namespace detail

/// Canonical text form; re-parses to an equal expression.
inline std::string to_string(const KnotExpression& e) { return detail::print(e, 0); }

/// Structural equality.
inline bool operator==(const KnotExpression& a, const KnotExpression& b) { return to_string(a) == to_string(b); }

}  // namespace bingbound
