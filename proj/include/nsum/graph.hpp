#pragma once

// Simple undirected graphs, trees, rooted views and the two text formats
// (edge lists and preorder level sequences).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nsum/errors.hpp"

namespace nsum {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adjacency_(n) {}

  static Graph from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  /// Keeps each adjacency list sorted. Rejects self-loops and repeated edges.
  void add_edge(Vertex u, Vertex v) {
    if (u >= order() || v >= order()) {
      throw Error("edge {" + std::to_string(u) + ", " + std::to_string(v) + "} out of range");
    }
    if (u == v) throw NonSimpleError("self-loop at vertex " + std::to_string(u));
    auto& nu = adjacency_[u];
    auto pos = std::lower_bound(nu.begin(), nu.end(), v);
    if (pos != nu.end() && *pos == v) {
      throw NonSimpleError("duplicate edge {" + std::to_string(u) + ", " + std::to_string(v) + "}");
    }
    nu.insert(pos, v);
    auto& nv = adjacency_[v];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++edge_count_;
  }

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edge_count_; }
  std::span<const Vertex> neighbours(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool has_edge(Vertex u, Vertex v) const {
    return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
  }

  /// Edges {u, v} with u < v, in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u) {
      for (Vertex v : adjacency_[u]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v : g.neighbours(u)) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == g.order();
}

/// Connected with n - 1 edges. The empty graph is not a tree.
inline bool is_tree(const Graph& g) {
  return g.order() > 0 && g.size() + 1 == g.order() && is_connected(g);
}

class Tree {
 public:
  explicit Tree(Graph g) : graph_(std::move(g)) {
    if (!is_tree(graph_)) throw NotATreeError("graph is not a tree");
  }

  /// parents[v] for v >= 1; vertex 0 is the root. Requires parents[v] < v.
  static Tree from_parents(std::span<const Vertex> parents) {
    Graph g(parents.size());
    for (Vertex v = 1; v < parents.size(); ++v) {
      if (parents[v] >= v) throw Error("parent array is not topologically ordered");
      g.add_edge(parents[v], v);
    }
    return Tree(std::move(g));
  }

  const Graph& graph() const noexcept { return graph_; }
  std::size_t order() const noexcept { return graph_.order(); }
  std::span<const Vertex> neighbours(Vertex v) const { return graph_.neighbours(v); }

  friend bool operator==(const Tree&, const Tree&) = default;

 private:
  Graph graph_;
};

/// Breadth-first rooted view: parent pointers, level partition and children
/// (ascending vertex index) for a fixed root.
class RootedView {
 public:
  static constexpr Vertex no_parent = std::numeric_limits<Vertex>::max();

  RootedView(const Tree& t, Vertex root) : root_(root) {
    const std::size_t n = t.order();
    if (root >= n) throw PreconditionError("root " + std::to_string(root) + " out of range");
    parent_.assign(n, no_parent);
    level_.assign(n, 0);
    order_.reserve(n);
    child_offset_.assign(n + 1, 0);
    children_.reserve(n ? n - 1 : 0);

    std::vector<char> seen(n, 0);
    order_.push_back(root);
    seen[root] = 1;
    for (std::size_t head = 0; head < order_.size(); ++head) {
      Vertex u = order_[head];
      for (Vertex v : t.neighbours(u)) {
        if (seen[v]) continue;
        seen[v] = 1;
        parent_[v] = u;
        level_[v] = level_[u] + 1;
        order_.push_back(v);
      }
    }
    // Children in ascending index: neighbour lists are sorted.
    for (Vertex v = 0; v < n; ++v) {
      if (parent_[v] != no_parent) ++child_offset_[parent_[v] + 1];
    }
    for (std::size_t v = 0; v < n; ++v) child_offset_[v + 1] += child_offset_[v];
    children_.resize(child_offset_[n]);
    std::vector<std::size_t> fill(child_offset_.begin(), child_offset_.end() - 1);
    for (Vertex v = 0; v < n; ++v) {
      if (parent_[v] != no_parent) children_[fill[parent_[v]]++] = v;
    }
    height_ = n ? level_[order_.back()] : 0;
  }

  Vertex root() const noexcept { return root_; }
  std::size_t order() const noexcept { return parent_.size(); }
  std::optional<Vertex> parent(Vertex v) const {
    return parent_[v] == no_parent ? std::nullopt : std::optional<Vertex>(parent_[v]);
  }
  Vertex parent_or_none(Vertex v) const { return parent_[v]; }
  std::span<const Vertex> children(Vertex v) const {
    return {children_.data() + child_offset_[v], children_.data() + child_offset_[v + 1]};
  }
  std::size_t level(Vertex v) const { return level_[v]; }
  /// Length of the longest path starting at the root.
  std::size_t eccentricity() const noexcept { return height_; }
  /// Vertices in breadth-first order; levels are contiguous.
  std::span<const Vertex> bfs_order() const noexcept { return order_; }

  /// A_j for j = 0..eccentricity().
  std::vector<std::vector<Vertex>> level_sets() const {
    std::vector<std::vector<Vertex>> sets(height_ + 1);
    for (Vertex v : order_) sets[level_[v]].push_back(v);
    return sets;
  }

 private:
  Vertex root_;
  std::vector<Vertex> parent_;
  std::vector<std::size_t> level_;
  std::vector<Vertex> order_;
  std::vector<std::size_t> child_offset_;
  std::vector<Vertex> children_;
  std::size_t height_ = 0;
};

inline RootedView root_at(const Tree& t, Vertex root) { return RootedView(t, root); }

// ---------------------------------------------------------------------------
// Edge-list text: one "u v" pair per line. A line holding a single index only
// declares that vertex (so "0" is the one-vertex tree). Blank lines and text
// after '#' are ignored. n = 1 + largest index mentioned.

inline Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  std::size_t n = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::istringstream in{std::string(line)};
    std::vector<std::uint64_t> ids;
    std::string token;
    while (in >> token) {
      if (token.find_first_not_of("0123456789") != std::string::npos || token.size() > 9) {
        throw ParseError(line_no, "expected a non-negative vertex index, got '" + token + "'");
      }
      ids.push_back(std::stoull(token));
    }
    if (ids.empty()) continue;
    if (ids.size() > 2) throw ParseError(line_no, "expected \"u v\"");
    for (auto id : ids) n = std::max<std::size_t>(n, id + 1);
    if (ids.size() == 2) edges.emplace_back(static_cast<Vertex>(ids[0]), static_cast<Vertex>(ids[1]));
  }
  return Graph::from_edges(n, edges);
}

inline std::string to_edge_list(const Graph& g) {
  std::string out;
  if (g.order() == 1) return "0\n";
  for (const auto& [u, v] : g.edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  // Isolated trailing vertices would otherwise be lost.
  if (g.order() > 0 && g.degree(static_cast<Vertex>(g.order() - 1)) == 0) {
    out += std::to_string(g.order() - 1) + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Level sequences: depths in preorder, first entry 0. Vertex i of the decoded
// tree is the i-th entry; its parent is the nearest earlier entry one level up.

using LevelSequence = std::vector<int>;

inline std::vector<Vertex> parents_from_levels(std::span<const int> levels) {
  if (levels.empty() || levels[0] != 0) throw Error("level sequence must start with 0");
  std::vector<Vertex> parents(levels.size(), 0);
  std::vector<Vertex> last_at_depth{0};
  for (std::size_t i = 1; i < levels.size(); ++i) {
    const int d = levels[i];
    if (d < 1 || static_cast<std::size_t>(d) > last_at_depth.size()) {
      throw Error("invalid level sequence at position " + std::to_string(i));
    }
    parents[i] = last_at_depth[d - 1];
    last_at_depth.resize(d);
    last_at_depth.push_back(static_cast<Vertex>(i));
  }
  return parents;
}

inline Tree tree_from_levels(std::span<const int> levels) {
  return Tree::from_parents(parents_from_levels(levels));
}

inline LevelSequence to_level_sequence(const RootedView& view) {
  LevelSequence out;
  out.reserve(view.order());
  std::vector<Vertex> stack{view.root()};
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    out.push_back(static_cast<int>(view.level(u)));
    auto kids = view.children(u);
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

inline LevelSequence parse_level_sequence(std::string_view text) {
  LevelSequence out;
  std::string cleaned(text);
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream in(cleaned);
  std::string token;
  while (in >> token) {
    if (token.find_first_not_of("0123456789") != std::string::npos || token.size() > 9) {
      throw ParseError(1, "bad level '" + token + "'");
    }
    out.push_back(std::stoi(token));
  }
  parents_from_levels(out);
  return out;
}

}  // namespace nsum
