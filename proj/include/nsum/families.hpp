#pragma once

// Named graph families with closed-form neighbour-sum predicates.

#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "nsum/errors.hpp"
#include "nsum/ext_rat.hpp"
#include "nsum/graph.hpp"

namespace nsum {

namespace family {

struct Path {
  std::size_t n;
};
struct Star {
  std::size_t leaves;
};
/// A center with `legs` pendant paths of `leg_length` vertices each.
struct Spider {
  std::size_t legs;
  std::size_t leg_length;
};
/// Root of degree d, every other vertex of degree d+1 or 1, all
/// root-to-leaf paths of length k.
struct LevelSymmetric {
  std::size_t d;
  std::size_t k;
};
struct Cycle {
  std::size_t n;
};
struct Complete {
  std::size_t n;
};
struct CompleteBipartite {
  std::size_t m;
  std::size_t n;
};
struct CompleteMultipartite {
  std::vector<std::size_t> parts;
};

}  // namespace family

using FamilySpec = std::variant<family::Path, family::Star, family::Spider, family::LevelSymmetric,
                                family::Cycle, family::Complete, family::CompleteBipartite,
                                family::CompleteMultipartite>;

namespace detail {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

inline void require_positive(std::size_t value, const char* what) {
  if (value == 0) throw InvalidSpec(std::string(what) + " must be >= 1");
}

}  // namespace detail

inline void validate(const FamilySpec& spec) {
  using detail::require_positive;
  std::visit(detail::overloaded{
                 [](const family::Path& f) { require_positive(f.n, "path order"); },
                 [](const family::Star& f) { require_positive(f.leaves, "star leaf count"); },
                 [](const family::Spider& f) {
                   require_positive(f.legs, "spider leg count");
                   require_positive(f.leg_length, "spider leg length");
                 },
                 [](const family::LevelSymmetric& f) {
                   require_positive(f.d, "level-symmetric d");
                   require_positive(f.k, "level-symmetric k");
                 },
                 [](const family::Cycle& f) {
                   if (f.n < 3) throw InvalidSpec("cycle order must be >= 3");
                 },
                 [](const family::Complete& f) { require_positive(f.n, "complete graph order"); },
                 [](const family::CompleteBipartite& f) {
                   require_positive(f.m, "bipartite part size");
                   require_positive(f.n, "bipartite part size");
                 },
                 [](const family::CompleteMultipartite& f) {
                   if (f.parts.empty()) throw InvalidSpec("multipartite graph needs at least one part");
                   for (auto p : f.parts) require_positive(p, "multipartite part size");
                 },
             },
             spec);
}

inline bool is_tree_family(const FamilySpec& spec) {
  return std::holds_alternative<family::Path>(spec) || std::holds_alternative<family::Star>(spec) ||
         std::holds_alternative<family::Spider>(spec) ||
         std::holds_alternative<family::LevelSymmetric>(spec);
}

namespace detail {

inline Graph complete_multipartite(const std::vector<std::size_t>& parts) {
  std::size_t n = 0;
  std::vector<std::size_t> part_of;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    n += parts[i];
    part_of.insert(part_of.end(), parts[i], i);
  }
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (part_of[u] != part_of[v]) g.add_edge(u, v);
    }
  }
  return g;
}

}  // namespace detail

/// Vertices are numbered in breadth-first order from the root or center.
inline Graph generate(const FamilySpec& spec) {
  validate(spec);
  return std::visit(
      detail::overloaded{
          [](const family::Path& f) {
            Graph g(f.n);
            for (Vertex v = 1; v < f.n; ++v) g.add_edge(v - 1, v);
            return g;
          },
          [](const family::Star& f) {
            Graph g(f.leaves + 1);
            for (Vertex v = 1; v <= f.leaves; ++v) g.add_edge(0, v);
            return g;
          },
          [](const family::Spider& f) {
            // Leg i, depth j (1-based) is vertex 1 + (j-1)*legs + i.
            Graph g(1 + f.legs * f.leg_length);
            for (std::size_t i = 0; i < f.legs; ++i) {
              Vertex above = 0;
              for (std::size_t j = 1; j <= f.leg_length; ++j) {
                const auto v = static_cast<Vertex>(1 + (j - 1) * f.legs + i);
                g.add_edge(above, v);
                above = v;
              }
            }
            return g;
          },
          [](const family::LevelSymmetric& f) {
            std::size_t n = 1;
            std::size_t width = 1;
            for (std::size_t j = 0; j < f.k; ++j) {
              width *= f.d;
              n += width;
            }
            Graph g(n);
            // Vertex v's children are the next d unused indices in BFS order.
            Vertex next = 1;
            for (Vertex v = 0; next < n; ++v) {
              for (std::size_t c = 0; c < f.d; ++c) g.add_edge(v, next++);
            }
            return g;
          },
          [](const family::Cycle& f) {
            Graph g(f.n);
            for (Vertex v = 1; v < f.n; ++v) g.add_edge(v - 1, v);
            g.add_edge(static_cast<Vertex>(f.n - 1), 0);
            return g;
          },
          [](const family::Complete& f) { return detail::complete_multipartite(std::vector<std::size_t>(f.n, 1)); },
          [](const family::CompleteBipartite& f) { return detail::complete_multipartite({f.m, f.n}); },
          [](const family::CompleteMultipartite& f) { return detail::complete_multipartite(f.parts); },
      },
      spec);
}

/// Convergent numerators and denominators of 1 - S for the level-symmetric
/// tree: a_j = a_{j-1} - d a_{j-2}, b_j = b_{j-1} - d b_{j-2}, with
/// a_{-1} = 1, a_0 = 1, b_{-1} = 0, b_0 = 1. Returns (a_k, b_k).
inline std::pair<Integer, Integer> level_sym_recurrence(std::size_t d, std::size_t k) {
  if (d == 0) throw InvalidSpec("level-symmetric d must be >= 1");
  Integer a_prev = 1, a = 1;
  Integer b_prev = 0, b = 1;
  for (std::size_t j = 1; j <= k; ++j) {
    Integer a_next = a - d * a_prev;
    Integer b_next = b - d * b_prev;
    a_prev = std::move(a);
    a = std::move(a_next);
    b_prev = std::move(b);
    b = std::move(b_next);
  }
  return {a, b};
}

/// Closed-form truth value, computed without the checker or the kernel.
inline bool expected_ns(const FamilySpec& spec) {
  validate(spec);
  return std::visit(
      detail::overloaded{
          [](const family::Path& f) { return f.n % 3 == 2; },
          [](const family::Star& f) { return f.leaves == 1; },
          [](const family::Spider& f) {
            // Along a leg read from its leaf, values go t, t, 0, -t, -t, 0, ...
            // Legs of length 2 mod 3 force the center to 0 and leave one
            // equation on the leg parameters; legs of length 1 mod 3 only close
            // up when there is a single leg (a path on 2 mod 3 vertices).
            if (f.leg_length % 3 == 2) return f.legs >= 2;
            if (f.leg_length % 3 == 1) return f.legs == 1;
            return false;
          },
          [](const family::LevelSymmetric& f) { return f.d == 1 && f.k % 3 == 1; },
          [](const family::Cycle& f) { return f.n % 6 == 0; },
          [](const family::Complete& f) { return f.n == 2; },
          [](const family::CompleteBipartite& f) { return f.m == 1 && f.n == 1; },
          [](const family::CompleteMultipartite& f) {
            return f.parts.size() == 2 && f.parts[0] == 1 && f.parts[1] == 1;
          },
      },
      spec);
}

/// Explicit period-6 solution on C_n (n a multiple of 6), vertices 0..n-1
/// taken as v_1..v_n: 1 if k = 0,1; 0 if k = 2,5; -1 if k = 3,4 (mod 6).
inline std::vector<Rational> cycle_witness(std::size_t n) {
  if (n % 6 != 0 || n == 0) throw InvalidSpec("cycle witness needs n a positive multiple of 6");
  static constexpr int pattern[6] = {1, 1, 0, -1, -1, 0};
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = pattern[(i + 1) % 6];
  return out;
}

// ---------------------------------------------------------------------------

inline std::string kind_name(const FamilySpec& spec) {
  static constexpr const char* names[] = {"path",  "star",     "spider",             "level-symmetric",
                                          "cycle", "complete", "complete-bipartite", "complete-multipartite"};
  return names[spec.index()];
}

/// Builds a spec from a CLI-style kind name and integer parameters.
inline FamilySpec parse_family(const std::string& kind, const std::vector<std::size_t>& params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count) {
      throw InvalidSpec(kind + " takes " + std::to_string(count) + " parameter(s), got " +
                        std::to_string(params.size()));
    }
  };
  FamilySpec spec;
  if (kind == "path") {
    need(1);
    spec = family::Path{params[0]};
  } else if (kind == "star") {
    need(1);
    spec = family::Star{params[0]};
  } else if (kind == "spider") {
    need(2);
    spec = family::Spider{params[0], params[1]};
  } else if (kind == "level-symmetric") {
    need(2);
    spec = family::LevelSymmetric{params[0], params[1]};
  } else if (kind == "cycle") {
    need(1);
    spec = family::Cycle{params[0]};
  } else if (kind == "complete") {
    need(1);
    spec = family::Complete{params[0]};
  } else if (kind == "complete-bipartite") {
    need(2);
    spec = family::CompleteBipartite{params[0], params[1]};
  } else if (kind == "complete-multipartite") {
    if (params.empty()) throw InvalidSpec("complete-multipartite needs at least one part size");
    spec = family::CompleteMultipartite{params};
  } else {
    throw InvalidSpec("unknown family '" + kind + "'");
  }
  validate(spec);
  return spec;
}

}  // namespace nsum
