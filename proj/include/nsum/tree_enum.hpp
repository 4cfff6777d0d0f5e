#pragma once

// Enumeration of free (unlabelled) trees.
//
// Every free tree has either one centroid, whose branches all have at most
// (n-1)/2 vertices, or two adjacent centroids splitting it into two halves of
// n/2 vertices. A unicentroidal tree is therefore a multiset of rooted trees
// with sizes summing to n-1 (each <= (n-1)/2), and a bicentroidal tree is an
// unordered pair of rooted trees on n/2 vertices. Both are listed without
// repetition by choosing rooted-tree indices from a catalog in non-increasing
// order, so no isomorphism test is ever needed.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "nsum/errors.hpp"
#include "nsum/graph.hpp"

namespace nsum {

/// All rooted trees up to a given size, grouped by size. Entry i is stored as a
/// level sequence with root depth 0.
class RootedCatalog {
 public:
  explicit RootedCatalog(std::size_t max_size) {
    size_end_.assign(max_size + 1, 0);
    if (max_size == 0) return;
    entries_.push_back({1, {0}});
    size_end_[1] = 1;
    for (std::size_t m = 2; m <= max_size; ++m) {
      LevelSequence seq{0};
      std::vector<Entry> fresh;
      extend(m - 1, entries_.size(), seq, [&](const LevelSequence& s) { fresh.push_back({m, s}); });
      entries_.insert(entries_.end(), fresh.begin(), fresh.end());
      size_end_[m] = entries_.size();
    }
  }

  std::size_t max_size() const noexcept { return size_end_.size() - 1; }
  std::size_t count() const noexcept { return entries_.size(); }
  std::size_t size_of(std::size_t index) const { return entries_[index].size; }
  std::span<const int> levels(std::size_t index) const { return entries_[index].levels; }

  /// One past the last index of size <= s.
  std::size_t end_of_size(std::size_t s) const { return size_end_[std::min(s, max_size())]; }
  /// First index of size exactly s.
  std::size_t begin_of_size(std::size_t s) const { return s <= 1 ? 0 : size_end_[s - 1]; }

  /// Appends, below a root at depth 0 already in `seq`, every multiset of
  /// catalog trees with total size `remaining` using indices < `limit`,
  /// calling emit(seq) for each. Indices are taken in non-increasing order.
  template <class Emit>
  void extend(std::size_t remaining, std::size_t limit, LevelSequence& seq, Emit&& emit) const {
    if (remaining == 0) {
      emit(static_cast<const LevelSequence&>(seq));
      return;
    }
    const std::size_t hi = std::min(limit, end_of_size(remaining));
    for (std::size_t idx = hi; idx-- > 0;) {
      const auto& e = entries_[idx];
      const std::size_t mark = seq.size();
      for (int d : e.levels) seq.push_back(d + 1);
      extend(remaining - e.size, idx + 1, seq, emit);
      seq.resize(mark);
    }
  }

 private:
  struct Entry {
    std::size_t size;
    LevelSequence levels;
  };
  std::vector<Entry> entries_;
  std::vector<std::size_t> size_end_;
};

/// Calls visit(levels) once per isomorphism class of trees on n vertices, in a
/// fixed order. The level sequence is rooted at a centroid.
template <class Visit>
void for_each_free_tree(std::size_t n, Visit&& visit) {
  if (n == 0) throw PreconditionError("tree order must be positive");
  const RootedCatalog catalog(n / 2);
  LevelSequence seq{0};
  if (n > 1) {
    const std::size_t cap = (n - 1) / 2;
    catalog.extend(n - 1, catalog.end_of_size(cap), seq, visit);
  } else {
    visit(static_cast<const LevelSequence&>(seq));
  }
  if (n % 2 == 0) {
    // Bicentroidal: first half rooted at 0, second half hung below it.
    const std::size_t half = n / 2;
    for (std::size_t a = catalog.begin_of_size(half); a < catalog.end_of_size(half); ++a) {
      for (std::size_t b = catalog.begin_of_size(half); b <= a; ++b) {
        seq.clear();
        auto la = catalog.levels(a);
        seq.assign(la.begin(), la.end());
        for (int d : catalog.levels(b)) seq.push_back(d + 1);
        visit(static_cast<const LevelSequence&>(seq));
      }
    }
  }
}

/// Only the trees whose position in the fixed order is congruent to `shard`
/// modulo `shards`.
template <class Visit>
void for_each_free_tree(std::size_t n, std::size_t shard, std::size_t shards, Visit&& visit) {
  if (shards == 0 || shard >= shards) throw PreconditionError("invalid shard");
  std::uint64_t position = 0;
  for_each_free_tree(n, [&](const LevelSequence& seq) {
    if (position++ % shards == shard) visit(seq);
  });
}

inline std::vector<Tree> enumerate_trees(std::size_t n) {
  std::vector<Tree> out;
  for_each_free_tree(n, [&](const LevelSequence& seq) { out.push_back(tree_from_levels(seq)); });
  return out;
}

inline std::uint64_t count_free_trees(std::size_t n) {
  std::uint64_t count = 0;
  for_each_free_tree(n, [&](const LevelSequence&) { ++count; });
  return count;
}

}  // namespace nsum
