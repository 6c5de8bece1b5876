#pragma once

// Architectural diagrams, their colimits (the composed system), cocone
// checks for environments, and mediating morphisms out of a colimit.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "compos/error.hpp"
#include "compos/model.hpp"
#include "compos/quotient.hpp"

namespace compos {

struct DiagramEdge {
  Name name;
  Name source;  // node name
  Name target;  // node name
  SignatureMorphism sigma;
};

/// A finite graph whose nodes are components and whose edges are component
/// morphisms between them.
struct Diagram {
  std::map<Name, Component> nodes;
  std::vector<DiagramEdge> edges;

  ComponentMorphism morphism(const DiagramEdge& e) const {
    return {nodes.at(e.source), nodes.at(e.target), e.sigma};
  }
  const DiagramEdge* edge(const Name& name) const {
    for (const auto& e : edges)
      if (e.name == name) return &e;
    return nullptr;
  }
};

struct Cocone {
  Component apex;
  std::map<Name, ComponentMorphism> legs;  // node name -> leg into apex
};

using TaggedName = Tagged<Name, Name>;  // (node, local name)

struct NameClass {
  Name representative;
  std::vector<TaggedName> members;  // sorted
};

struct ColimitResult {
  Cocone cocone;
  std::array<std::vector<NameClass>, 3> classes;  // indexed by Sort
  std::array<std::vector<std::pair<TaggedName, TaggedName>>, 3> merge_log;

  const Component& apex() const { return cocone.apex; }
  const std::vector<NameClass>& classes_of(Sort s) const {
    return classes[static_cast<int>(s)];
  }
};

inline Report validate_diagram(const Diagram& d) {
  Report r;
  for (const auto& [name, c] : d.nodes) {
    Report cr = validate_component(c);
    for (auto& diag : cr.diagnostics) {
      diag.subjects.insert(diag.subjects.begin(), name);
      r.diagnostics.push_back(std::move(diag));
    }
  }
  for (const auto& e : d.edges) {
    if (!d.nodes.count(e.source) || !d.nodes.count(e.target)) {
      r.add(DiagnosticKind::LegEndpointMismatch, {e.name},
            "edge '" + e.name + "' refers to an unknown node");
      continue;
    }
    Report mr = validate_morphism(d.morphism(e));
    for (auto& diag : mr.diagnostics) {
      diag.subjects.insert(diag.subjects.begin(), e.name);
      r.diagnostics.push_back(std::move(diag));
    }
  }
  return r;
}

/// The diagram of name sets of one sort.
inline SetDiagram<Name, Name> sort_diagram(const Diagram& d, Sort s) {
  SetDiagram<Name, Name> out;
  for (const auto& [name, c] : d.nodes) {
    const auto& names = c.sig.names(s);
    out.nodes[name] = std::vector<Name>(names.begin(), names.end());
  }
  for (const auto& e : d.edges)
    out.edges.push_back({e.source, e.target, e.sigma.map(s)});
  return out;
}

namespace detail {

/// Chooses apex names for the classes of all three sorts. A class is named
/// after its least (node, local) member. Where several classes would get the
/// same name, the one with the least member keeps it and the others are
/// suffixed with their node name (and a counter if that is still taken).
inline void name_classes(std::array<std::vector<NameClass>, 3>& classes) {
  struct Ref {
    int sort;
    std::size_t index;
  };
  std::map<Name, std::vector<Ref>> by_local;
  for (int s = 0; s < 3; ++s)
    for (std::size_t i = 0; i < classes[s].size(); ++i)
      by_local[classes[s][i].members.front().elem].push_back({s, i});

  NameSet taken;
  for (const auto& [local, refs] : by_local)
    if (refs.size() == 1) {
      classes[refs[0].sort][refs[0].index].representative = local;
      taken.insert(local);
    }
  for (auto& [local, refs] : by_local) {
    if (refs.size() == 1) continue;
    std::sort(refs.begin(), refs.end(), [&](const Ref& a, const Ref& b) {
      const auto& ma = classes[a.sort][a.index].members.front();
      const auto& mb = classes[b.sort][b.index].members.front();
      if (ma != mb) return ma < mb;
      return a.sort < b.sort;
    });
    for (const auto& ref : refs) {
      auto& cls = classes[ref.sort][ref.index];
      Name candidate = local;
      if (taken.count(candidate))
        candidate = local + "_" + cls.members.front().node;
      for (int k = 2; taken.count(candidate); ++k)
        candidate = local + "_" + cls.members.front().node + "_" +
                    std::to_string(k);
      cls.representative = candidate;
      taken.insert(candidate);
    }
  }
}

}  // namespace detail

/// Builds the cocone determined by a partition of the tagged names of every
/// sort: names each class, sends each node name to its class, and gives the
/// apex the union of the translated presentations of each class. The
/// partition need not be the colimit one, which lets tests build corrupted
/// "colimits".
inline ColimitResult assemble_from_partition(
    const Diagram& d, std::array<std::vector<NameClass>, 3> classes,
    const Name& apex_name) {
  for (auto& per_sort : classes)
    for (auto& cls : per_sort) std::sort(cls.members.begin(), cls.members.end());
  detail::name_classes(classes);

  ColimitResult r;
  std::map<Name, SignatureMorphism> legs;
  for (const auto& [node, _] : d.nodes) legs[node];
  Component& apex = r.cocone.apex;
  apex.name = apex_name;
  for (Sort s : kSorts)
    for (const auto& cls : classes[static_cast<int>(s)]) {
      apex.sig.names(s).insert(cls.representative);
      for (const auto& m : cls.members)
        legs[m.node].map(s)[m.elem] = cls.representative;
    }
  for (const auto& a : apex.sig.actions) apex.add_action(a);
  for (const auto& e : apex.sig.events) apex.add_event(e);

  for (const auto& [node, c] : d.nodes) {
    const auto& sigma = legs[node];
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
  for (const auto& [node, c] : d.nodes)
    r.cocone.legs.emplace(node, ComponentMorphism{c, apex, legs[node]});
  r.classes = std::move(classes);
  return r;
}

namespace detail {

inline std::array<std::vector<NameClass>, 3> colimit_partition(
    const Diagram& d,
    std::array<std::vector<std::pair<TaggedName, TaggedName>>, 3>* log) {
  std::array<std::vector<NameClass>, 3> classes;
  for (Sort s : kSorts) {
    auto q = colimit_set(sort_diagram(d, s));
    for (auto& members : q.classes)
      classes[static_cast<int>(s)].push_back({{}, std::move(members)});
    if (log) (*log)[static_cast<int>(s)] = std::move(q.merge_log);
  }
  return classes;
}

inline Name default_apex_name(const Diagram& d) {
  if (d.nodes.size() == 1) return d.nodes.begin()->second.name;
  return "System";
}

}  // namespace detail

/// Colimit of the signature part only: the apex signature and one signature
/// morphism per node.
inline std::pair<Signature, std::map<Name, SignatureMorphism>>
colimit_signature(const Diagram& d) {
  auto classes = detail::colimit_partition(d, nullptr);
  detail::name_classes(classes);
  Signature sig;
  std::map<Name, SignatureMorphism> legs;
  for (const auto& [node, _] : d.nodes) legs[node];
  for (Sort s : kSorts)
    for (const auto& cls : classes[static_cast<int>(s)]) {
      if (!sig.names(s).insert(cls.representative).second)
        throw Error(ErrorCode::NameCollision,
                    "apex name '" + cls.representative + "' assigned twice");
      for (const auto& m : cls.members)
        legs[m.node].map(s)[m.elem] = cls.representative;
    }
  return {std::move(sig), std::move(legs)};
}

/// The composed system of a diagram. Throws ValidationError if the diagram
/// is not valid. When `apex_name` is empty, a single-node diagram keeps its
/// component's name and anything else is called "System".
inline ColimitResult colimit_system(const Diagram& d,
                                    const Name& apex_name = {}) {
  Report report = validate_diagram(d);
  if (!report.ok())
    throw Error(ErrorCode::ValidationError,
                "invalid diagram: " + to_string(report.diagnostics.front()));
  std::array<std::vector<std::pair<TaggedName, TaggedName>>, 3> log;
  auto classes = detail::colimit_partition(d, &log);
  ColimitResult r = assemble_from_partition(
      d, std::move(classes),
      apex_name.empty() ? detail::default_apex_name(d) : apex_name);
  r.merge_log = std::move(log);
  return r;
}

/// Every leg valid and every edge commuting with the legs.
inline Report check_cocone(const Diagram& d, const Cocone& c) {
  Report r;
  for (const auto& [node, comp] : d.nodes) {
    auto it = c.legs.find(node);
    if (it == c.legs.end()) {
      r.add(DiagnosticKind::LegMissing, {node}, "no leg for node '" + node + "'");
      continue;
    }
    const auto& leg = it->second;
    if (!(leg.source == comp) || !(leg.target == c.apex)) {
      r.add(DiagnosticKind::LegEndpointMismatch, {node},
            "leg for '" + node + "' does not run from the node to the apex");
      continue;
    }
    for (const auto& diag : validate_morphism(leg).diagnostics) {
      std::vector<std::string> subjects{node};
      subjects.insert(subjects.end(), diag.subjects.begin(),
                      diag.subjects.end());
      r.add(DiagnosticKind::LegInvalid, std::move(subjects),
            "leg '" + node + "': " + to_string(diag));
    }
  }
  for (const auto& [node, _] : c.legs)
    if (!d.nodes.count(node))
      r.add(DiagnosticKind::LegEndpointMismatch, {node},
            "leg for '" + node + "', which is not a node of the diagram");
  if (r.has(DiagnosticKind::LegMissing) ||
      r.has(DiagnosticKind::LegEndpointMismatch))
    return r;

  for (const auto& e : d.edges) {
    const auto& from = c.legs.at(e.source).sigma;
    const auto& to = c.legs.at(e.target).sigma;
    for (Sort s : kSorts)
      for (const auto& [x, fx] : e.sigma.map(s)) {
        auto direct = from.map(s).find(x);
        auto around = to.map(s).find(fx);
        if (direct == from.map(s).end() || around == to.map(s).end() ||
            direct->second != around->second)
          r.add(DiagnosticKind::NotCommuting, {e.name, sort_keyword(s), x},
                "edge '" + e.name + "' does not commute at " +
                    sort_keyword(s) + " '" + x + "'");
      }
  }
  return r;
}

/// The morphism u from the colimit apex to the apex of `c` with
/// leg_r(i);u = leg_c(i) for every node i. Throws IllDefinedMediator when
/// members of one class are sent to different names, which cannot happen
/// when `c` passes check_cocone.
inline ComponentMorphism mediating_morphism(const ColimitResult& r,
                                            const Cocone& c) {
  SignatureMorphism u;
  for (Sort s : kSorts)
    for (const auto& cls : r.classes_of(s)) {
      std::optional<Name> image;
      for (const auto& m : cls.members) {
        auto leg = c.legs.find(m.node);
        if (leg == c.legs.end())
          throw Error(ErrorCode::IllDefinedMediator,
                      "no leg for node '" + m.node + "'");
        const auto& map = leg->second.sigma.map(s);
        auto it = map.find(m.elem);
        if (it == map.end())
          throw Error(ErrorCode::IllDefinedMediator,
                      "leg '" + m.node + "' has no image for '" + m.elem + "'");
        if (image && *image != it->second)
          throw Error(ErrorCode::IllDefinedMediator,
                      std::string(sort_keyword(s)) + " '" + cls.representative +
                          "' would map to both '" + *image + "' and '" +
                          it->second + "'");
        image = it->second;
      }
      if (image) u.map(s)[cls.representative] = *image;
    }

  ComponentMorphism mediator{r.apex(), c.apex, std::move(u)};
  for (const auto& [node, leg] : r.cocone.legs) {
    auto it = c.legs.find(node);
    if (it == c.legs.end() || !(compose(leg.sigma, mediator.sigma) ==
                                it->second.sigma))
      throw Error(ErrorCode::IllDefinedMediator,
                  "mediator does not factor the leg of '" + node + "'");
  }
  return mediator;
}

}  // namespace compos
