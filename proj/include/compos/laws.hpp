#pragma once

// Randomized checking of the category laws of components and morphisms,
// closure of validity under composition, soundness of the name quotient,
// and the universal property of computed colimits.

#include <cstdint>
#include <functional>
#include <sstream>
#include <string>

#include "compos/colimit.hpp"
#include "compos/dsl.hpp"
#include "compos/model.hpp"
#include "compos/oracles.hpp"
#include "compos/random.hpp"
#include "compos/universal.hpp"

namespace compos {

using ComposeFn =
    std::function<ComponentMorphism(const ComponentMorphism&, const ComponentMorphism&)>;

struct LawOptions {
  std::uint64_t seed = 42;
  std::size_t iterations = 200;
  std::size_t max_per_sort = 4;
  std::size_t max_nodes = 3;
  /// The composition under test. Replaceable so that a deliberately broken
  /// one can be shown to be caught.
  ComposeFn compose = [](const ComponentMorphism& a, const ComponentMorphism& b) {
    return compos::compose(a, b);
  };
};

struct LawOutcome {
  bool ok = true;
  std::size_t iterations_run = 0;
  std::string law;             // name of the first law that failed
  std::string counterexample;  // human-readable witness
};

inline std::string describe(const ComponentMorphism& m) {
  std::ostringstream out;
  out << "source:\n" << emit_component(m.source) << "target:\n"
      << emit_component(m.target) << "maps:\n";
  emit_map_lines(out, m.sigma);
  return out.str();
}

inline std::string describe(const Diagram& d) {
  std::ostringstream out;
  for (const auto& [node, c] : d.nodes)
    out << "component " << node << " {\n" << emit_component(c) << "}\n";
  for (const auto& e : d.edges) {
    out << "morphism " << e.name << " : " << e.source << " -> " << e.target
        << '\n';
    emit_map_lines(out, e.sigma);
  }
  return out.str();
}

inline LawOutcome check_laws(const LawOptions& opt) {
  LawOutcome out;
  RandomModels gen(opt.seed, opt.max_per_sort);
  auto fail = [&](std::string law, std::string witness) {
    out.ok = false;
    out.law = std::move(law);
    out.counterexample = std::move(witness);
    return out;
  };

  for (std::size_t it = 0; it < opt.iterations; ++it) {
    out.iterations_run = it + 1;
    auto chain = gen.chain(3);
    const auto& m1 = chain[0];
    const auto& m2 = chain[1];
    const auto& m3 = chain[2];

    for (const auto& m : chain)
      if (!validate_morphism(m).ok())
        return fail("generated morphism is valid", describe(m));

    if (!(opt.compose(identity(m1.source), m1) == m1))
      return fail("left identity", describe(m1));
    if (!(opt.compose(m1, identity(m1.target)) == m1))
      return fail("right identity", describe(m1));

    auto m12 = opt.compose(m1, m2);
    auto left = opt.compose(m12, m3);
    auto right = opt.compose(m1, opt.compose(m2, m3));
    if (!(left.sigma == right.sigma))
      return fail("associativity",
                  describe(m1) + describe(m2) + describe(m3));
    if (!validate_morphism(m12).ok())
      return fail("composition preserves validity",
                  describe(m1) + describe(m2));

    Diagram d = gen.diagram(opt.max_nodes);
    for (Sort s : kSorts) {
      auto sd = sort_diagram(d, s);
      if (oracle::as_partition(colimit_set(sd)) != oracle::closure_partition(sd))
        return fail(std::string("quotient soundness (") + sort_keyword(s) + ")",
                    describe(d));
    }

    ColimitResult r = colimit_system(d);
    if (!check_cocone(d, r.cocone).ok())
      return fail("colimit legs commute", describe(d));
    if (!verify_universal_property(r, d, opt.max_per_sort))
      return fail("universal property", describe(d));
    for (Sort s : kSorts)
      if (auto bad = under_merged(r, d, s);
          bad && verify_universal_property(*bad, d, opt.max_per_sort))
        return fail("under-merged quotient is rejected", describe(d));
  }
  return out;
}

/// A broken composition that forgets the event maps, for mutation testing.
inline ComponentMorphism compose_skipping_events(const ComponentMorphism& a,
                                                 const ComponentMorphism& b) {
  ComponentMorphism m = compose(a, b);
  m.sigma.events.clear();
  return m;
}

}  // namespace compos
