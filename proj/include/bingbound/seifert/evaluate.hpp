#pragma once

#include <functional>

#include "bingbound/seifert/catalog.hpp"
#include "bingbound/seifert/expression.hpp"

namespace bingbound {

/// Seifert matrix of a catalog atom or raw-matrix leaf.
inline SeifertMatrix leaf_matrix(const KnotExpression& leaf, const KnotCatalog& catalog) {
  if (const auto* r = leaf.as<expr::RawMatrix>()) return r->matrix;
  if (const auto* a = leaf.as<expr::Atom>()) return catalog.matrix_for(a->name);
  throw Error(ErrorKind::Inconsistent, "leaf_matrix called on a composite expression");
}

/// Sum -> block sum, Reverse -> V^T, Mirror -> -V^T, Multiple(n, K) -> n-fold
/// block sum of K (summands are not re-reversed).
inline SeifertMatrix evaluate(const KnotExpression& e, const KnotCatalog& catalog) {
  return std::visit(overloaded{
                        [&](const expr::Atom&) { return leaf_matrix(e, catalog); },
                        [&](const expr::RawMatrix&) { return leaf_matrix(e, catalog); },
                        [&](const expr::Sum& s) {
                          return connected_sum(evaluate(s.left, catalog), evaluate(s.right, catalog));
                        },
                        [&](const expr::Reverse& r) { return evaluate(r.inner, catalog).reversed(); },
                        [&](const expr::Mirror& m) { return evaluate(m.inner, catalog).mirrored(); },
                        [&](const expr::Multiple& m) {
                          const SeifertMatrix one = evaluate(m.inner, catalog);
                          SeifertMatrix acc = one;
                          for (unsigned long i = 1; i < m.count; ++i) acc = connected_sum(acc, one);
                          return acc;
                        },
                    },
                    e.node());
}

/// Structural fold used by the additive and multiplicative invariants.
/// `leaf` sees Atom and RawMatrix nodes; the other callbacks combine results.
template <class T>
struct ExpressionFold {
  std::function<T(const KnotExpression&)> leaf;
  std::function<T(const T&, const T&)> sum;
  std::function<T(unsigned long, const T&)> multiple;
  std::function<T(const T&)> reverse;
  std::function<T(const T&)> mirror;

  T operator()(const KnotExpression& e) const {
    return std::visit(overloaded{
                          [&](const expr::Atom&) { return leaf(e); },
                          [&](const expr::RawMatrix&) { return leaf(e); },
                          [&](const expr::Sum& s) { return sum((*this)(s.left), (*this)(s.right)); },
                          [&](const expr::Reverse& r) { return reverse((*this)(r.inner)); },
                          [&](const expr::Mirror& m) { return mirror((*this)(m.inner)); },
                          [&](const expr::Multiple& m) { return multiple(m.count, (*this)(m.inner)); },
                      },
                      e.node());
  }
};

}  // namespace bingbound
