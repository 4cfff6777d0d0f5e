#pragma once

// AHU canonical strings. Two trees are isomorphic iff their canonical forms
// are equal.

#include <algorithm>
#include <string>
#include <vector>

#include "nsum/graph.hpp"

namespace nsum {

/// Rooted canonical form: "(" + sorted child codes + ")".
inline std::string rooted_canonical_form(const Tree& t, Vertex root) {
  RootedView view(t, root);
  std::vector<std::string> code(t.order());
  auto order = view.bfs_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex u = *it;
    std::vector<std::string*> kids;
    for (Vertex c : view.children(u)) kids.push_back(&code[c]);
    std::sort(kids.begin(), kids.end(), [](const std::string* a, const std::string* b) { return *a < *b; });
    std::string s = "(";
    for (auto* k : kids) {
      s += *k;
      k->clear();
      k->shrink_to_fit();
    }
    s += ')';
    code[u] = std::move(s);
  }
  return std::move(code[root]);
}

/// One or two vertices whose removal leaves components of size <= n/2.
inline std::vector<Vertex> centroids(const Tree& t) {
  const std::size_t n = t.order();
  RootedView view(t, 0);
  std::vector<std::size_t> size(n, 1);
  auto order = view.bfs_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (auto p = view.parent(*it)) size[*p] += size[*it];
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    std::size_t largest = n - size[v];
    for (Vertex c : view.children(v)) largest = std::max(largest, size[c]);
    if (2 * largest <= n) out.push_back(v);
  }
  return out;
}

/// Free-tree canonical form: the smallest rooted form over the centroids.
inline std::string canonical_form(const Tree& t) {
  std::string best;
  for (Vertex c : centroids(t)) {
    std::string code = rooted_canonical_form(t, c);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

}  // namespace nsum
