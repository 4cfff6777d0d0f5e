#pragma once

// Breadth-first construction of neighbour-sum values on the first levels of a
// lazily described, locally finite infinite tree, and the finite window of the
// spine-with-pendant-paths tree that admits no solution.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nsum/errors.hpp"
#include "nsum/ext_rat.hpp"
#include "nsum/graph.hpp"
#include "nsum/linear_oracle.hpp"

namespace nsum {

using Handle = std::uint64_t;

struct LazyChild {
  Handle handle;
  bool internal;  // has at least one child of its own
};

/// A rooted, locally finite tree described one vertex at a time. children()
/// must be deterministic: the same handle always yields the same list.
class LazyTree {
 public:
  virtual ~LazyTree() = default;
  virtual Handle root() const = 0;
  virtual std::vector<LazyChild> children(Handle v) const = 0;
  virtual std::string name() const = 0;
};

/// Every vertex has two internal children.
class BinaryLazyTree final : public LazyTree {
 public:
  Handle root() const override { return 0; }
  std::vector<LazyChild> children(Handle v) const override { return {{2 * v + 1, true}, {2 * v + 2, true}}; }
  std::string name() const override { return "binary"; }
};

/// A one-ended infinite path.
class RayLazyTree final : public LazyTree {
 public:
  Handle root() const override { return 0; }
  std::vector<LazyChild> children(Handle v) const override { return {{v + 1, true}}; }
  std::string name() const override { return "path"; }
};

/// Two-way infinite spine v_n with a pendant path v_n - u_n - w_n at every n,
/// rooted at v_0. Fails the hypothesis at u_0, whose only child is a leaf.
class SpineLazyTree final : public LazyTree {
 public:
  enum class Part : std::uint64_t { spine = 0, middle = 1, leaf = 2 };

  static Handle encode(Part part, std::int64_t index) {
    return (static_cast<std::uint64_t>(part) << 62) | (static_cast<std::uint64_t>(index) & mask);
  }
  static Part part_of(Handle h) { return static_cast<Part>(h >> 62); }
  static std::int64_t index_of(Handle h) {
    auto raw = static_cast<std::int64_t>(h & mask);
    return (raw & sign_bit) ? raw - static_cast<std::int64_t>(mask) - 1 : raw;
  }

  Handle root() const override { return encode(Part::spine, 0); }
  std::vector<LazyChild> children(Handle h) const override {
    const std::int64_t n = index_of(h);
    switch (part_of(h)) {
      case Part::spine: {
        std::vector<LazyChild> out;
        if (n <= 0) out.push_back({encode(Part::spine, n - 1), true});
        if (n >= 0) out.push_back({encode(Part::spine, n + 1), true});
        out.push_back({encode(Part::middle, n), true});
        return out;
      }
      case Part::middle:
        return {{encode(Part::leaf, n), false}};
      case Part::leaf:
        break;
    }
    return {};
  }
  std::string name() const override { return "figure4"; }

 private:
  static constexpr std::uint64_t mask = (std::uint64_t{1} << 62) - 1;
  static constexpr std::int64_t sign_bit = std::int64_t{1} << 61;
};

/// Every internal vertex at level j has rules[j].internal internal children
/// followed by rules[j].leaves leaf children; the last rule repeats forever.
/// The handle of a vertex is its level.
class LevelRuleLazyTree final : public LazyTree {
 public:
  struct Rule {
    std::size_t internal;
    std::size_t leaves;
  };

  explicit LevelRuleLazyTree(std::vector<Rule> rules) : rules_(std::move(rules)) {
    if (rules_.empty()) throw InvalidSpec("level rules need at least one line");
    if (rules_.back().internal == 0) throw InvalidSpec("the repeating last rule must have internal children");
  }

  /// One "internal leaves" pair per line; '#' starts a comment.
  static LevelRuleLazyTree parse(std::string_view text) {
    std::vector<Rule> rules;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
      std::istringstream fields(line);
      long long internal = 0;
      long long leaves = 0;
      if (!(fields >> internal)) continue;
      std::string extra;
      if (!(fields >> leaves) || (fields >> extra) || internal < 0 || leaves < 0) {
        throw ParseError(line_no, "expected two non-negative counts \"internal leaves\"");
      }
      rules.push_back({static_cast<std::size_t>(internal), static_cast<std::size_t>(leaves)});
    }
    return LevelRuleLazyTree(std::move(rules));
  }

  Handle root() const override { return 0; }
  std::vector<LazyChild> children(Handle level) const override {
    const Rule& r = rules_[std::min<std::size_t>(level, rules_.size() - 1)];
    std::vector<LazyChild> out;
    for (std::size_t i = 0; i < r.internal; ++i) out.push_back({level + 1, true});
    for (std::size_t i = 0; i < r.leaves; ++i) out.push_back({level + 1, false});
    return out;
  }
  std::string name() const override { return "levels"; }

 private:
  std::vector<Rule> rules_;
};

/// Pseudo-random tree that always satisfies the hypothesis: each internal
/// vertex gets 1..max_internal internal and 0..max_leaves leaf children, in
/// shuffled order, drawn from a generator seeded by (seed, handle).
class RandomLazyTree final : public LazyTree {
 public:
  RandomLazyTree(std::uint64_t seed, std::size_t max_internal = 2, std::size_t max_leaves = 2)
      : seed_(seed), max_internal_(max_internal), max_leaves_(max_leaves) {
    if (max_internal == 0) throw InvalidSpec("random tree needs max_internal >= 1");
  }

  Handle root() const override { return 1; }
  std::vector<LazyChild> children(Handle v) const override {
    // Raw engine output only, so the shape is the same on every platform.
    std::mt19937_64 rng(mix(seed_ ^ mix(v)));
    const std::size_t internal = 1 + rng() % max_internal_;
    const std::size_t leaves = rng() % (max_leaves_ + 1);
    std::vector<LazyChild> out;
    for (std::size_t i = 0; i < internal + leaves; ++i) {
      out.push_back({mix(v * 0x100000001b3ULL + i + 1), i < internal});
    }
    for (std::size_t i = out.size(); i > 1; --i) std::swap(out[i - 1], out[rng() % i]);
    return out;
  }
  std::string name() const override { return "random"; }

 private:
  // splitmix64 finalizer
  static std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  std::uint64_t seed_;
  std::size_t max_internal_;
  std::size_t max_leaves_;
};

/// Built-in generators by CLI name: binary, path, figure4, random.
inline std::unique_ptr<LazyTree> make_lazy_tree(std::string_view name, std::uint64_t seed = 1) {
  if (name == "binary") return std::make_unique<BinaryLazyTree>();
  if (name == "path") return std::make_unique<RayLazyTree>();
  if (name == "figure4") return std::make_unique<SpineLazyTree>();
  if (name == "random") return std::make_unique<RandomLazyTree>(seed);
  throw InvalidSpec("unknown generator '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------

enum class SplitStrategy {
  even,   // every internal child gets target / |internal children|
  first,  // the first internal child takes the whole target
};

struct PrefixVertex {
  Handle handle;
  std::optional<std::size_t> parent;  // index into PrefixAssignment::vertices
  std::size_t level;
  bool internal;
  Rational value;
  std::vector<std::size_t> children;  // filled for levels < L only
};

struct PrefixAssignment {
  std::size_t levels = 0;                     // L
  std::vector<PrefixVertex> vertices;         // breadth-first
  std::vector<std::vector<std::size_t>> by_level;  // 0..L
};

/// Neighbour-sum equations hold at every vertex on levels 0..L-1 and the root
/// has value 1.
inline bool verify_prefix(const PrefixAssignment& a) {
  if (a.vertices.empty() || a.vertices[0].value != 1) return false;
  for (const auto& v : a.vertices) {
    if (v.level >= a.levels) continue;
    Rational sum = 0;
    if (v.parent) sum += a.vertices[*v.parent].value;
    for (auto c : v.children) sum += a.vertices[c].value;
    if (sum != v.value) return false;
  }
  return true;
}

/// Sets f(root) = 1 and proceeds level by level. A leaf child copies its
/// parent's value; the internal children of v share
///   (1 - #leaf children) f(v) - f(parent(v)).
inline PrefixAssignment construct_prefix(const LazyTree& tree, std::size_t levels,
                                         SplitStrategy split = SplitStrategy::even) {
  if (levels == 0) throw PreconditionError("levels must be positive");
  PrefixAssignment out;
  out.levels = levels;
  out.by_level.resize(levels + 1);
  out.vertices.push_back({tree.root(), std::nullopt, 0, true, Rational(1), {}});
  out.by_level[0].push_back(0);

  for (std::size_t level = 0; level < levels; ++level) {
    for (std::size_t idx : out.by_level[level]) {
      if (!out.vertices[idx].internal) continue;
      const auto kids = tree.children(out.vertices[idx].handle);
      if (kids.empty()) {
        throw InvalidSpec(tree.name() + ": vertex tagged internal has no children");
      }
      std::size_t leaves = 0;
      for (const auto& c : kids) leaves += c.internal ? 0 : 1;
      const std::size_t internal = kids.size() - leaves;
      if (internal == 0) {
        throw HypothesisViolation(tree.name() + ": vertex at level " + std::to_string(level) +
                                  " has only leaf children");
      }
      const Rational fv = out.vertices[idx].value;
      const auto parent = out.vertices[idx].parent;
      Rational target = (1 - static_cast<long long>(leaves)) * fv;
      if (parent) target -= out.vertices[*parent].value;

      const Rational even_share = target / static_cast<long long>(internal);
      bool first_internal = true;
      for (const auto& c : kids) {
        Rational value;
        if (!c.internal) {
          value = fv;
        } else if (split == SplitStrategy::even) {
          value = even_share;
        } else {
          value = first_internal ? target : Rational(0);
          first_internal = false;
        }
        const std::size_t child = out.vertices.size();
        out.vertices.push_back({c.handle, idx, level + 1, c.internal, std::move(value), {}});
        out.vertices[idx].children.push_back(child);
        out.by_level[level + 1].push_back(child);
      }
    }
  }
  if (!verify_prefix(out)) throw WitnessVerificationError("prefix assignment fails its equations");
  return out;
}

// ---------------------------------------------------------------------------

/// Window n in [-m, m] of the spine tree: v_n (spine), u_n (middle of the
/// pendant path) and w_n (its leaf).
struct WindowSystem {
  std::size_t m = 0;
  Graph graph;
  std::vector<std::string> labels;
  std::vector<Vertex> equations;  // vertices whose whole neighbourhood is inside
  KernelBasis kernel;

  Vertex spine(std::int64_t n) const { return static_cast<Vertex>(n + static_cast<std::int64_t>(m)); }
  Vertex middle(std::int64_t n) const { return static_cast<Vertex>(spine(n) + (2 * m + 1)); }
  Vertex leaf(std::int64_t n) const { return static_cast<Vertex>(spine(n) + 2 * (2 * m + 1)); }

  /// Every basis vector vanishes on the whole spine and on u_n, w_n for |n| < m.
  bool interior_forced_zero() const {
    const auto mm = static_cast<std::int64_t>(m);
    for (const auto& v : kernel.basis) {
      for (std::int64_t n = -mm; n <= mm; ++n) {
        if (v[spine(n)] != 0) return false;
        if (n > -mm && n < mm && (v[middle(n)] != 0 || v[leaf(n)] != 0)) return false;
      }
    }
    return true;
  }
};

/// Solution space of the equations of the window vertices that have all of
/// their neighbours inside the window.
inline WindowSystem counterexample_window(std::size_t m) {
  if (m < 2) throw PreconditionError("window half-width must be >= 2");
  WindowSystem w;
  w.m = m;
  const std::size_t width = 2 * m + 1;
  w.graph = Graph(3 * width);
  w.labels.resize(3 * width);
  const auto mm = static_cast<std::int64_t>(m);
  for (std::int64_t n = -mm; n <= mm; ++n) {
    w.labels[w.spine(n)] = "v" + std::to_string(n);
    w.labels[w.middle(n)] = "u" + std::to_string(n);
    w.labels[w.leaf(n)] = "w" + std::to_string(n);
    if (n > -mm) w.graph.add_edge(w.spine(n - 1), w.spine(n));
    w.graph.add_edge(w.spine(n), w.middle(n));
    w.graph.add_edge(w.middle(n), w.leaf(n));
  }
  for (Vertex x = 0; x < w.graph.order(); ++x) {
    const bool boundary_spine = (x == w.spine(-mm) || x == w.spine(mm));
    if (!boundary_spine) w.equations.push_back(x);
  }
  w.kernel = nullspace(ns_matrix(w.graph, w.equations));
  return w;
}

}  // namespace nsum
