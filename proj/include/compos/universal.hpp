#pragma once

// Brute-force check of the universal property of a colimit.
//
// The two-element set is a cogenerator of Set, so a cocone of sets is a
// colimit as soon as every cocone into a two-element set factors through it
// in exactly one way. The check below enumerates, sort by sort, every
// assignment of the diagram's tagged names to {0, 1}, keeps the ones that
// commute with the edges, and counts the apex maps into {0, 1} that factor
// them. The other two sorts are routed through the candidate's own legs. The
// test apex gets the least presentation that makes all test legs valid, and
// the factorizing map must be a valid component morphism into it.
//
// This is independent of the union-find construction: it looks only at the
// diagram and at the candidate cocone.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "compos/colimit.hpp"
#include "compos/error.hpp"

namespace compos {

namespace detail {

inline Name fresh_name(const Component& avoid, const std::string& stem) {
  Name candidate = stem;
  auto used = [&](const Name& n) {
    for (Sort s : kSorts)
      if (avoid.sig.names(s).count(n)) return true;
    return false;
  };
  while (used(candidate)) candidate = "_" + candidate;
  return candidate;
}

/// Least apex over which all the given leg signature morphisms are valid.
inline Component least_apex(const Diagram& d,
                            const std::map<Name, SignatureMorphism>& legs,
                            Signature sig) {
  Component apex;
  apex.name = "Test";
  apex.sig = std::move(sig);
  for (const auto& a : NameSet(apex.sig.actions)) apex.add_action(a);
  for (const auto& e : NameSet(apex.sig.events)) apex.add_event(e);
  for (const auto& [node, c] : d.nodes) {
    const auto& sigma = legs.at(node);
    for (const auto& [a, image] : sigma.actions) {
      apex.pres.prescription[image].insert_all(
          translate_set(sigma.variables, c.prescription(a)));
      apex.pres.description[image].insert_all(
          translate_set(sigma.variables, c.description(a)));
    }
    for (const auto& [e, image] : sigma.events)
      for (const auto& a : image_of(sigma.actions, c.observed(e)))
        apex.pres.observation[image].insert(a);
  }
  return apex;
}

}  // namespace detail

/// True iff `r` is a colimit of `d`. Every node must have at most `bound`
/// names per sort, otherwise BoundExceeded is thrown.
inline bool verify_universal_property(const ColimitResult& r, const Diagram& d,
                                      std::size_t bound = 5) {
  for (const auto& [node, c] : d.nodes)
    for (Sort s : kSorts)
      if (c.sig.names(s).size() > bound)
        throw Error(ErrorCode::BoundExceeded,
                    "node '" + node + "' has more than " +
                        std::to_string(bound) + " " + sort_keyword(s) +
                        " names");

  if (!check_cocone(d, r.cocone).ok()) return false;
  const Component& apex = r.apex();

  for (Sort s : kSorts) {
    std::vector<TaggedName> elems;
    for (const auto& [node, c] : d.nodes)
      for (const auto& n : c.sig.names(s)) elems.push_back({node, n});
    const std::vector<Name> apex_names(apex.sig.names(s).begin(),
                                       apex.sig.names(s).end());
    if (elems.size() > 20 || apex_names.size() > 20)
      throw Error(ErrorCode::BoundExceeded, "too many names to enumerate");

    std::map<TaggedName, std::size_t> index;
    for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = i;
    std::map<Name, std::size_t> apex_index;
    for (std::size_t i = 0; i < apex_names.size(); ++i)
      apex_index[apex_names[i]] = i;

    std::vector<std::pair<std::size_t, std::size_t>> identified;
    for (const auto& e : d.edges)
      for (const auto& [x, fx] : e.sigma.map(s))
        identified.emplace_back(index.at({e.source, x}),
                                index.at({e.target, fx}));

    // Which apex name each tagged name lands on under the candidate's legs.
    std::vector<std::size_t> landing(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) {
      const auto& leg = r.cocone.legs.at(elems[i].node).sigma.map(s);
      landing[i] = apex_index.at(leg.at(elems[i].elem));
    }

    const std::uint32_t n_cocones = 1u << elems.size();
    const std::uint32_t n_maps = 1u << apex_names.size();
    // Factorizing apex maps of each cocone, grouped by the cocone they yield.
    std::vector<std::vector<std::uint32_t>> factorizers(n_cocones);
    for (std::uint32_t u = 0; u < n_maps; ++u) {
      std::uint32_t composite = 0;
      for (std::size_t i = 0; i < elems.size(); ++i)
        if (u >> landing[i] & 1u) composite |= 1u << i;
      factorizers[composite].push_back(u);
    }

    const Name zero = detail::fresh_name(apex, std::string("t") + sort_keyword(s) + "0");
    const Name one = detail::fresh_name(apex, std::string("t") + sort_keyword(s) + "1");

    for (std::uint32_t cocone = 0; cocone < n_cocones; ++cocone) {
      bool commutes = true;
      for (const auto& [a, b] : identified)
        if ((cocone >> a & 1u) != (cocone >> b & 1u)) {
          commutes = false;
          break;
        }
      if (!commutes) continue;
      const auto& candidates = factorizers[cocone];
      if (candidates.empty()) return false;

      std::map<Name, SignatureMorphism> legs;
      for (const auto& [node, leg] : r.cocone.legs) {
        legs[node] = leg.sigma;
        legs[node].map(s).clear();
      }
      for (std::size_t i = 0; i < elems.size(); ++i)
        legs[elems[i].node].map(s)[elems[i].elem] =
            (cocone >> i & 1u) ? one : zero;
      Signature sig = apex.sig;
      sig.names(s) = {zero, one};
      Component test_apex = detail::least_apex(d, legs, std::move(sig));

      int valid = 0;
      for (std::uint32_t u : candidates) {
        SignatureMorphism sigma{identity_map(apex.sig.variables),
                                identity_map(apex.sig.actions),
                                identity_map(apex.sig.events)};
        sigma.map(s).clear();
        for (std::size_t k = 0; k < apex_names.size(); ++k)
          sigma.map(s)[apex_names[k]] = (u >> k & 1u) ? one : zero;
        if (validate_morphism({apex, test_apex, std::move(sigma)}).ok())
          if (++valid > 1) break;
      }
      if (valid != 1) return false;
    }
  }
  return true;
}

/// The colimit with one class of `sort` split in two: its least member is
/// separated from the others. None if every class is a singleton.
inline std::optional<ColimitResult> under_merged(const ColimitResult& r,
                                                 const Diagram& d, Sort sort) {
  auto classes = r.classes;
  auto& per_sort = classes[static_cast<int>(sort)];
  for (std::size_t i = 0; i < per_sort.size(); ++i) {
    if (per_sort[i].members.size() < 2) continue;
    NameClass alone{{}, {per_sort[i].members.front()}};
    per_sort[i].members.erase(per_sort[i].members.begin());
    per_sort.push_back(std::move(alone));
    return assemble_from_partition(d, std::move(classes), r.apex().name);
  }
  return std::nullopt;
}

/// The colimit with the first two classes of `sort` merged. None if there
/// are fewer than two.
inline std::optional<ColimitResult> over_merged(const ColimitResult& r,
                                                const Diagram& d, Sort sort) {
  auto classes = r.classes;
  auto& per_sort = classes[static_cast<int>(sort)];
  if (per_sort.size() < 2) return std::nullopt;
  auto& keep = per_sort[0].members;
  keep.insert(keep.end(), per_sort[1].members.begin(),
              per_sort[1].members.end());
  per_sort.erase(per_sort.begin() + 1);
  return assemble_from_partition(d, std::move(classes), r.apex().name);
}

}  // namespace compos
