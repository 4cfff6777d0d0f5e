#include <gtest/gtest.h>

#include "nsum/infinite_prefix.hpp"
#include "nsum/ns_checker.hpp"

namespace nsum {
namespace {

std::vector<Rational> level_values(const PrefixAssignment& a, std::size_t level) {
  std::vector<Rational> out;
  for (auto idx : a.by_level[level]) out.push_back(a.vertices[idx].value);
  return out;
}

TEST(Prefix, BinaryTree) {
  const auto a = construct_prefix(BinaryLazyTree{}, 3);
  EXPECT_EQ(level_values(a, 0), (std::vector<Rational>{1}));
  EXPECT_EQ(level_values(a, 1), (std::vector<Rational>(2, Rational(1, 2))));
  EXPECT_EQ(level_values(a, 2), (std::vector<Rational>(4, Rational(-1, 4))));
  EXPECT_EQ(level_values(a, 3), (std::vector<Rational>(8, Rational(-3, 8))));
  EXPECT_TRUE(verify_prefix(a));
}

TEST(Prefix, RayRepeatsThePathPattern) {
  const auto a = construct_prefix(RayLazyTree{}, 11);
  const std::vector<int> pattern = {1, 1, 0, -1, -1, 0};
  for (std::size_t level = 0; level <= 11; ++level) {
    EXPECT_EQ(level_values(a, level), (std::vector<Rational>{pattern[level % 6]})) << level;
  }
}

TEST(Prefix, SpineTreeViolatesHypothesis) {
  EXPECT_THROW(construct_prefix(SpineLazyTree{}, 4), HypothesisViolation);
  EXPECT_NO_THROW(construct_prefix(SpineLazyTree{}, 1));
}

TEST(Prefix, SpineHandlesRoundTrip) {
  using Part = SpineLazyTree::Part;
  for (std::int64_t n : {-1000000LL, -3LL, -1LL, 0LL, 1LL, 7LL, 1LL << 40}) {
    for (Part p : {Part::spine, Part::middle, Part::leaf}) {
      const Handle h = SpineLazyTree::encode(p, n);
      EXPECT_EQ(SpineLazyTree::index_of(h), n);
      EXPECT_EQ(SpineLazyTree::part_of(h), p);
    }
  }
}

TEST(Prefix, LevelRules) {
  const auto tree = LevelRuleLazyTree::parse("# comb\n1 2\n2 0\n1 1\n");
  const auto a = construct_prefix(tree, 6);
  EXPECT_EQ(level_values(a, 1), (std::vector<Rational>{-1, 1, 1}));
  EXPECT_EQ(level_values(a, 2), (std::vector<Rational>{-1, -1}));
  EXPECT_EQ(level_values(a, 3), (std::vector<Rational>{1, -1, 1, -1}));
  EXPECT_THROW(LevelRuleLazyTree::parse("1 2\n0 3\n"), InvalidSpec);
  EXPECT_THROW(LevelRuleLazyTree::parse(""), InvalidSpec);
  EXPECT_THROW(LevelRuleLazyTree::parse("1 2\n3\n"), ParseError);
  EXPECT_THROW(construct_prefix(LevelRuleLazyTree::parse("1 0\n0 2\n1 0\n"), 3), HypothesisViolation);
}

TEST(Prefix, FirstSplit) {
  const auto a = construct_prefix(BinaryLazyTree{}, 3, SplitStrategy::first);
  EXPECT_EQ(level_values(a, 1), (std::vector<Rational>{1, 0}));
  EXPECT_EQ(level_values(a, 2), (std::vector<Rational>{0, 0, -1, 0}));
  EXPECT_TRUE(verify_prefix(a));
}

TEST(PrefixProperty, RandomTreesSatisfyEquations) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const RandomLazyTree tree(seed);
    for (auto split : {SplitStrategy::even, SplitStrategy::first}) {
      const auto a = construct_prefix(tree, 8, split);
      EXPECT_TRUE(verify_prefix(a));
      EXPECT_EQ(a.vertices[0].value, 1);
    }
  }
}

TEST(PrefixProperty, LongerPrefixExtendsShorter) {
  for (const char* name : {"binary", "path", "random"}) {
    const auto tree = make_lazy_tree(name, 42);
    const auto shorter = construct_prefix(*tree, 6);
    const auto longer = construct_prefix(*tree, 8);
    for (std::size_t i = 0; i < shorter.vertices.size(); ++i) {
      EXPECT_EQ(shorter.vertices[i].handle, longer.vertices[i].handle);
      EXPECT_EQ(shorter.vertices[i].value, longer.vertices[i].value);
    }
  }
}

TEST(PrefixProperty, RandomShapeIsReproducible) {
  const RandomLazyTree a(7), b(7), c(8);
  EXPECT_EQ(construct_prefix(a, 6).vertices.size(), construct_prefix(b, 6).vertices.size());
  bool differs = false;
  for (Handle h = 1; h < 50 && !differs; ++h) differs = a.children(h).size() != c.children(h).size();
  EXPECT_TRUE(differs);
}

TEST(Prefix, Errors) {
  EXPECT_THROW(construct_prefix(BinaryLazyTree{}, 0), PreconditionError);
  EXPECT_THROW(make_lazy_tree("nope"), InvalidSpec);
}

// Basis frozen from an independent sympy nullspace of the same system.
TEST(Window, HalfWidthThree) {
  const auto w = counterexample_window(3);
  ASSERT_EQ(w.kernel.dim, 2u);
  std::vector<Rational> first(21, 0), second(21, 0);
  first[7] = first[14] = 1;
  second[13] = second[20] = 1;
  EXPECT_EQ(w.kernel.basis[0], first);
  EXPECT_EQ(w.kernel.basis[1], second);
  EXPECT_EQ(w.labels[w.middle(-3)], "u-3");
  EXPECT_EQ(w.labels[w.leaf(3)], "w3");
  EXPECT_EQ(w.equations.size(), 19u);
}

TEST(Window, HalfWidthFive) {
  const auto w = counterexample_window(5);
  ASSERT_EQ(w.kernel.dim, 2u);
  EXPECT_EQ(w.kernel.basis[0][11], 1);
  EXPECT_EQ(w.kernel.basis[0][22], 1);
  EXPECT_EQ(w.kernel.basis[1][21], 1);
  EXPECT_EQ(w.kernel.basis[1][32], 1);
}

TEST(Window, InteriorForcedToZero) {
  for (std::size_t m = 2; m <= 8; ++m) {
    const auto w = counterexample_window(m);
    EXPECT_EQ(w.kernel.dim, 2u) << m;
    EXPECT_TRUE(w.interior_forced_zero()) << m;
  }
  EXPECT_THROW(counterexample_window(1), PreconditionError);
}

}  // namespace
}  // namespace nsum
