#pragma once

// Slow reference computations used to cross-check the library in tests and
// in the law checker.

#include <map>
#include <set>
#include <vector>

#include "compos/quotient.hpp"

namespace compos::oracle {

/// Partition of the disjoint union by the reflexive, symmetric, transitive
/// closure of the edge identifications, computed with Warshall's algorithm
/// on the full relation matrix.
template <class NodeId, class Elem>
std::set<std::set<Tagged<NodeId, Elem>>> closure_partition(
    const SetDiagram<NodeId, Elem>& d) {
  using Element = Tagged<NodeId, Elem>;
  std::vector<Element> elems;
  for (const auto& [node, xs] : d.nodes)
    for (const auto& x : xs) elems.push_back({node, x});
  const std::size_t n = elems.size();
  auto index_of = [&](const Element& e) -> std::size_t {
    for (std::size_t i = 0; i < n; ++i)
      if (elems[i] == e) return i;
    return n;
  };

  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) rel[i][i] = true;
  for (const auto& edge : d.edges)
    for (const auto& [x, fx] : edge.function) {
      std::size_t a = index_of({edge.source, x});
      std::size_t b = index_of({edge.target, fx});
      if (a == n || b == n) continue;
      rel[a][b] = rel[b][a] = true;
    }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (rel[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (rel[k][j]) rel[i][j] = true;

  std::set<std::set<Element>> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::set<Element> cls;
    for (std::size_t j = 0; j < n; ++j)
      if (rel[i][j]) cls.insert(elems[j]);
    out.insert(std::move(cls));
  }
  return out;
}

template <class NodeId, class Elem>
std::set<std::set<Tagged<NodeId, Elem>>> as_partition(
    const SetColimit<NodeId, Elem>& q) {
  std::set<std::set<Tagged<NodeId, Elem>>> out;
  for (const auto& cls : q.classes) out.emplace(cls.begin(), cls.end());
  return out;
}

}  // namespace compos::oracle
