#pragma once

// Deciding the neighbour-sum property on finite trees.
//
// For a root v0, g(leaf) = 0 and g(u) = sum over children c of (1 - g(c))^{-1}.
// A tree admits a nonzero f with f(x) = sum of f over the neighbours of x iff
// g(v0) = 1 for some choice of root v0. Witnesses are built top-down from such
// a root with f(c) = f(u) * (1 - g(c))^{-1}.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nsum/errors.hpp"
#include "nsum/ext_rat.hpp"
#include "nsum/graph.hpp"

namespace nsum {

/// g(u) for every vertex u, relative to the view's root.
struct SubtreeS {
  std::vector<ExtRat> g;

  const ExtRat& at_root(const RootedView& view) const { return g[view.root()]; }
};

/// Bottom-up pass in reverse breadth-first order.
inline SubtreeS compute_S(const RootedView& view) {
  SubtreeS out;
  out.g.assign(view.order(), ExtRat(0));
  auto order = view.bfs_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex u = *it;
    if (auto p = view.parent(u)) out.g[*p] += one_minus_inv(out.g[u]);
  }
  return out;
}

namespace detail {

// Sum of terms that are each finite or +inf, kept as (finite part, number of
// +inf terms) so a single term can be removed again.
struct TermSum {
  Rational finite{0};
  std::size_t inf_count = 0;

  void add(const ExtRat& term) {
    if (term.is_finite()) {
      finite += term.value();
    } else if (term.is_pos_inf()) {
      ++inf_count;
    } else {
      throw Error("negative infinite term in subtree sum");
    }
  }

  TermSum without(const ExtRat& term) const {
    TermSum out = *this;
    if (term.is_finite()) {
      out.finite -= term.value();
    } else {
      --out.inf_count;
    }
    return out;
  }

  ExtRat value() const { return inf_count ? ExtRat::pos_inf() : ExtRat(finite); }
};

}  // namespace detail

/// S_{1,k}(v) for every vertex v, by rerooting in O(n) ExtRat operations.
inline std::vector<ExtRat> s_at_all_roots(const Tree& t) {
  const std::size_t n = t.order();
  RootedView view(t, 0);
  auto order = view.bfs_order();

  std::vector<detail::TermSum> down(n);
  std::vector<ExtRat> down_term(n);  // (1 - g_down(v))^{-1}
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex u = *it;
    down_term[u] = one_minus_inv(down[u].value());
    if (auto p = view.parent(u)) down[*p].add(down_term[u]);
  }

  // up_term[v]: the parent's side seen from v, already passed through
  // one_minus_inv. Unused at the root.
  std::vector<ExtRat> up_term(n);
  std::vector<ExtRat> result(n);
  for (const Vertex u : order) {
    detail::TermSum full = down[u];
    if (view.parent(u)) full.add(up_term[u]);
    result[u] = full.value();
    for (const Vertex c : view.children(u)) {
      up_term[c] = one_minus_inv(full.without(down_term[c]).value());
    }
  }
  return result;
}

/// Reference for s_at_all_roots: compute_S once per root, O(n^2).
inline std::vector<ExtRat> s_at_all_roots_naive(const Tree& t) {
  std::vector<ExtRat> out;
  out.reserve(t.order());
  for (Vertex v = 0; v < t.order(); ++v) {
    RootedView view(t, v);
    out.push_back(compute_S(view).g[v]);
  }
  return out;
}

/// Lowest-indexed vertex whose root value is exactly 1.
inline std::optional<Vertex> first_ns_root(std::span<const ExtRat> s_values) {
  for (std::size_t v = 0; v < s_values.size(); ++v) {
    if (s_values[v].is_one()) return static_cast<Vertex>(v);
  }
  return std::nullopt;
}

/// The one-vertex tree has no solution: its only equation reads f(v) = 0.
inline bool satisfies_ns(const Tree& t) {
  if (t.order() < 2) return false;
  return first_ns_root(s_at_all_roots(t)).has_value();
}

struct Witness {
  std::vector<Rational> values;
};

/// Nonzero, and f(x) equals the sum over neighbours for every x.
inline bool verify_witness(const Graph& g, std::span<const Rational> values) {
  if (values.size() != g.order()) return false;
  bool nonzero = false;
  for (Vertex x = 0; x < g.order(); ++x) {
    if (values[x] != 0) nonzero = true;
    Rational sum = 0;
    for (Vertex y : g.neighbours(x)) sum += values[y];
    if (sum != values[x]) return false;
  }
  return nonzero;
}

inline bool verify_witness(const Graph& g, const Witness& w) { return verify_witness(g, w.values); }

/// Builds f with f(root) = 1. Requires S_{1,k}(root) = 1.
///
/// A child c with g(c) = 1 forces f(u) = 0 at its parent u. All such children
/// of u then carry the residual of u's equation: the lowest-indexed one gets
/// f(u) - f(parent(u)) - (sum of its other siblings), the rest get 0. Each of
/// them acts as a fresh root for its own subtree, since g(c) = 1.
inline Witness construct_witness(const Tree& t, Vertex root) {
  RootedView view(t, root);
  const SubtreeS s = compute_S(view);
  if (!s.g[root].is_one()) {
    throw PreconditionError("S at root " + std::to_string(root) + " is " + s.g[root].str() +
                            ", not 1");
  }
  Witness w;
  w.values.assign(t.order(), Rational(0));
  w.values[root] = 1;
  for (const Vertex u : view.bfs_order()) {
    const Rational& fu = w.values[u];
    auto kids = view.children(u);
    std::optional<Vertex> first_one;
    Rational assigned = 0;
    for (const Vertex c : kids) {
      if (s.g[c].is_one()) {
        if (!first_one) first_one = c;
        continue;
      }
      if (fu != 0) {
        const ExtRat factor = one_minus_inv(s.g[c]);
        w.values[c] = fu * factor.value();
        assigned += w.values[c];
      }
    }
    if (first_one) {
      if (fu != 0) {
        throw WitnessVerificationError("vertex " + std::to_string(u) +
                                       " has a child with g = 1 but nonzero value");
      }
      const auto p = view.parent(u);
      const Rational from_parent = p ? w.values[*p] : Rational(0);
      w.values[*first_one] = fu - from_parent - assigned;
    }
  }
  if (!verify_witness(t.graph(), w)) {
    throw WitnessVerificationError("constructed assignment fails the neighbour-sum equations");
  }
  return w;
}

// ---------------------------------------------------------------------------
// Floating-point diagnostic, mirroring a tolerance-based implementation.
// Never authoritative: used to find trees where a 1e-9 tolerance misclassifies.

namespace diagnostic {

inline double float_one_minus_inv(double s) {
  const double x = 1.0 - s;
  if (x == 0.0) return INFINITY;
  if (std::isinf(x)) return 0.0;
  return 1.0 / x;
}

inline std::vector<double> float_s_at_all_roots(const Tree& t) {
  std::vector<double> out;
  out.reserve(t.order());
  for (Vertex v = 0; v < t.order(); ++v) {
    RootedView view(t, v);
    std::vector<double> g(t.order(), 0.0);
    auto order = view.bfs_order();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      if (auto p = view.parent(*it)) g[*p] += float_one_minus_inv(g[*it]);
    }
    out.push_back(g[v]);
  }
  return out;
}

inline bool float_satisfies_ns(const Tree& t, double rel_tol = 1e-9) {
  for (double s : float_s_at_all_roots(t)) {
    if (std::isinf(s)) continue;
    if (std::abs(s - 1.0) <= rel_tol * std::max(std::abs(s), 1.0)) return true;
  }
  return false;
}

}  // namespace diagnostic

}  // namespace nsum
