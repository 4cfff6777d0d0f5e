#pragma once

// Test-only reference implementations, deliberately independent of the
// library code paths they check.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "nsum/canonical.hpp"
#include "nsum/graph.hpp"

namespace nsum::testing {

/// Labeled tree for a Pruefer sequence of length n - 2 over 0..n-1.
inline Tree prufer_decode(const std::vector<Vertex>& code) {
  const std::size_t n = code.size() + 2;
  std::vector<std::size_t> degree(n, 1);
  for (Vertex v : code) ++degree[v];
  Graph g(n);
  for (Vertex v : code) {
    Vertex leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    g.add_edge(leaf, v);
    --degree[leaf];
    --degree[v];
  }
  Vertex a = 0;
  while (degree[a] != 1) ++a;
  Vertex b = a + 1;
  while (degree[b] != 1) ++b;
  g.add_edge(a, b);
  return Tree(std::move(g));
}

/// canonical form -> number of labeled trees on n vertices with that shape,
/// over all n^(n-2) Pruefer sequences.
inline std::map<std::string, std::uint64_t> prufer_classes(std::size_t n) {
  std::map<std::string, std::uint64_t> out;
  if (n == 1) {
    out[canonical_form(Tree(Graph(1)))] = 1;
    return out;
  }
  std::vector<Vertex> code(n - 2, 0);
  while (true) {
    ++out[canonical_form(prufer_decode(code))];
    std::size_t i = 0;
    while (i < code.size() && ++code[i] == n) code[i++] = 0;
    if (i == code.size()) break;
  }
  return out;
}

/// Tree with its vertices relabeled by a random permutation.
inline Graph relabel(const Graph& g, std::mt19937_64& rng) {
  std::vector<Vertex> perm(g.order());
  for (Vertex v = 0; v < g.order(); ++v) perm[v] = v;
  for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng() % i]);
  Graph out(g.order());
  for (const auto& [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

inline Tree path_tree(std::size_t n) {
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return Tree(std::move(g));
}

}  // namespace nsum::testing
