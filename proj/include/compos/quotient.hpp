#pragma once

// Colimits of finite diagrams of sets: the disjoint union of the node sets
// quotiented by the equivalence generated by the edge functions.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

namespace compos {

/// Disjoint-set forest over 0..n-1 with path compression and union by rank.
/// Every successful union is recorded in the merge log.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    std::size_t root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) x = std::exchange(parent_[x], root);
    return root;
  }

  bool unite(std::size_t a, std::size_t b) {
    std::size_t ra = find(a), rb = find(b);
    if (ra == rb) return false;
    if (rank_[ra] < rank_[rb]) std::swap(ra, rb);
    parent_[rb] = ra;
    if (rank_[ra] == rank_[rb]) ++rank_[ra];
    log_.emplace_back(a, b);
    return true;
  }

  std::size_t size() const { return parent_.size(); }
  const std::vector<std::pair<std::size_t, std::size_t>>& merge_log() const {
    return log_;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> rank_;
  std::vector<std::pair<std::size_t, std::size_t>> log_;
};

/// An element of the disjoint union: (node, local element).
template <class NodeId, class Elem>
struct Tagged {
  NodeId node;
  Elem elem;

  friend auto operator<=>(const Tagged&, const Tagged&) = default;
};

/// A diagram in Set. Node sets are keyed by node id; each edge carries a
/// function from its source set to its target set.
template <class NodeId, class Elem>
struct SetDiagram {
  struct Edge {
    NodeId source;
    NodeId target;
    std::map<Elem, Elem> function;
  };
  std::map<NodeId, std::vector<Elem>> nodes;
  std::vector<Edge> edges;
};

template <class NodeId, class Elem>
struct SetColimit {
  using Element = Tagged<NodeId, Elem>;
  /// Equivalence classes of the disjoint union. Members of a class are
  /// sorted, and classes are ordered by their least member.
  std::vector<std::vector<Element>> classes;
  /// Injection of each tagged element into its class index.
  std::map<Element, std::size_t> injection;
  /// Pairs merged by the union-find, in order.
  std::vector<std::pair<Element, Element>> merge_log;
};

/// Quotients the disjoint union of the node sets by the least equivalence
/// relating (i, x) and (j, f(x)) for every edge f: i -> j. Edge entries whose
/// source or image is not an element of the respective node are ignored.
template <class NodeId, class Elem>
SetColimit<NodeId, Elem> colimit_set(const SetDiagram<NodeId, Elem>& d) {
  using Element = Tagged<NodeId, Elem>;
  std::vector<Element> universe;
  std::map<Element, std::size_t> index;
  for (const auto& [node, elems] : d.nodes)
    for (const auto& x : elems)
      if (index.emplace(Element{node, x}, universe.size()).second)
        universe.push_back(Element{node, x});
  std::sort(universe.begin(), universe.end());
  for (std::size_t i = 0; i < universe.size(); ++i) index[universe[i]] = i;

  UnionFind uf(universe.size());
  for (const auto& edge : d.edges)
    for (const auto& [x, fx] : edge.function) {
      auto a = index.find(Element{edge.source, x});
      auto b = index.find(Element{edge.target, fx});
      if (a != index.end() && b != index.end()) uf.unite(a->second, b->second);
    }

  SetColimit<NodeId, Elem> out;
  std::map<std::size_t, std::size_t> class_of_root;
  // Universe is sorted, so classes come out ordered by least member.
  for (std::size_t i = 0; i < universe.size(); ++i) {
    auto [it, fresh] = class_of_root.emplace(uf.find(i), out.classes.size());
    if (fresh) out.classes.emplace_back();
    out.classes[it->second].push_back(universe[i]);
    out.injection.emplace(universe[i], it->second);
  }
  for (const auto& [a, b] : uf.merge_log())
    out.merge_log.emplace_back(universe[a], universe[b]);
  return out;
}

}  // namespace compos
