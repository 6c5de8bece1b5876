#include <random>
#include <string>
#include <utility>

#include "compos/oracles.hpp"
#include "compos/quotient.hpp"
#include "gtest/gtest.h"

using namespace compos;

using SD = SetDiagram<std::string, std::string>;
using T = Tagged<std::string, std::string>;

TEST(UnionFind, MergesAndLogs) {
  UnionFind uf(5);
  EXPECT_TRUE(uf.unite(0, 1));
  EXPECT_TRUE(uf.unite(3, 4));
  EXPECT_FALSE(uf.unite(1, 0));
  EXPECT_TRUE(uf.unite(1, 4));
  EXPECT_EQ(uf.find(0), uf.find(3));
  EXPECT_NE(uf.find(2), uf.find(0));
  EXPECT_EQ(uf.merge_log().size(), 3u);
}

TEST(ColimitSet, SpanOfSingletons) {
  SD d;
  d.nodes = {{"G", {"l"}}, {"P", {"l"}}, {"S", {"l"}}};
  d.edges = {{"G", "P", {{"l", "l"}}}, {"G", "S", {{"l", "l"}}}};
  auto q = colimit_set(d);
  ASSERT_EQ(q.classes.size(), 1u);
  EXPECT_EQ(q.classes[0],
            (std::vector<T>{{"G", "l"}, {"P", "l"}, {"S", "l"}}));
}

TEST(ColimitSet, DisjointUnionWithoutEdges) {
  SD d;
  d.nodes = {{"A", {"x", "y"}}, {"B", {"x"}}};
  auto q = colimit_set(d);
  EXPECT_EQ(q.classes.size(), 3u);
  EXPECT_NE(q.injection.at({"A", "x"}), q.injection.at({"B", "x"}));
}

TEST(ColimitSet, ParallelEdgesIdentifyImages) {
  // Coequalizer of f, g: {1, 2} -> {a, b, c} with f = (a, b), g = (b, c).
  SD d;
  d.nodes = {{"S", {"1", "2"}}, {"T", {"a", "b", "c"}}};
  d.edges = {{"S", "T", {{"1", "a"}, {"2", "b"}}},
             {"S", "T", {{"1", "b"}, {"2", "c"}}}};
  auto q = colimit_set(d);
  ASSERT_EQ(q.classes.size(), 1u);
  EXPECT_EQ(q.classes[0].size(), 5u);
}

TEST(ColimitSet, ManySortedAsTaggedElements) {
  // Elements carrying their sort: (sort, name). Same names of different
  // sorts never merge unless an edge says so.
  using E = std::pair<int, std::string>;
  SetDiagram<std::string, E> d;
  d.nodes = {{"A", {{0, "x"}, {1, "x"}}}, {"B", {{0, "x"}, {1, "y"}}}};
  d.edges = {{"A", "B", {{{0, "x"}, {0, "x"}}, {{1, "x"}, {1, "y"}}}}};
  auto q = colimit_set(d);
  EXPECT_EQ(q.classes.size(), 2u);
  EXPECT_EQ(q.injection.at({"A", {1, "x"}}), q.injection.at({"B", {1, "y"}}));
  EXPECT_NE(q.injection.at({"A", {0, "x"}}), q.injection.at({"A", {1, "x"}}));
}

TEST(ColimitSet, ClassesOrderedByLeastMember) {
  SD d;
  d.nodes = {{"A", {"z"}}, {"B", {"a", "b"}}};
  d.edges = {{"A", "B", {{"z", "b"}}}};
  auto q = colimit_set(d);
  ASSERT_EQ(q.classes.size(), 2u);
  EXPECT_EQ(q.classes[0].front(), (T{"A", "z"}));
  EXPECT_EQ(q.classes[1], (std::vector<T>{{"B", "a"}}));
  EXPECT_EQ(q.merge_log.size(), 1u);
}

namespace {

SD random_set_diagram(std::mt19937_64& rng) {
  auto uni = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  SD d;
  int n = uni(1, 4);
  for (int i = 0; i < n; ++i) {
    auto& xs = d.nodes["N" + std::to_string(i)];
    for (int k = uni(0, 4); k > 0; --k) xs.push_back("x" + std::to_string(k));
  }
  for (int k = uni(0, 5); k > 0; --k) {
    std::string s = "N" + std::to_string(uni(0, n - 1));
    std::string t = "N" + std::to_string(uni(0, n - 1));
    const auto& src = d.nodes[s];
    const auto& tgt = d.nodes[t];
    if (!src.empty() && tgt.empty()) continue;
    SD::Edge e{s, t, {}};
    for (const auto& x : src)
      e.function[x] = tgt[static_cast<std::size_t>(uni(0, int(tgt.size()) - 1))];
    d.edges.push_back(std::move(e));
  }
  return d;
}

}  // namespace

TEST(ColimitSetProperties, MatchesTransitiveClosure) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 300; ++i) {
    SD d = random_set_diagram(rng);
    auto q = colimit_set(d);
    EXPECT_EQ(oracle::as_partition(q), oracle::closure_partition(d));
    for (const auto& [node, xs] : d.nodes)
      for (const auto& x : xs) {
        std::size_t c = q.injection.at({node, x});
        EXPECT_NE(std::find(q.classes[c].begin(), q.classes[c].end(), T{node, x}),
                  q.classes[c].end());
      }
    for (const auto& e : d.edges)
      for (const auto& [x, fx] : e.function)
        EXPECT_EQ(q.injection.at({e.source, x}), q.injection.at({e.target, fx}));
  }
}
