#pragma once

// Seeded generators of small components, morphisms and diagrams, used by
// the law checker and the property tests.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "compos/colimit.hpp"
#include "compos/model.hpp"

namespace compos {

class RandomModels {
 public:
  explicit RandomModels(std::uint64_t seed, std::size_t max_per_sort = 4)
      : rng_(seed), max_(max_per_sort) {}

  std::mt19937_64& engine() { return rng_; }

  std::size_t uniform(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

  template <class T>
  const T& pick(const std::vector<T>& xs) {
    return xs[uniform(0, xs.size() - 1)];
  }

  Formula formula(const std::vector<Name>& vars, int depth = 2) {
    if (vars.empty() || depth == 0 || chance(0.4)) {
      if (vars.empty()) return chance(0.5) ? Formula::truth() : Formula::falsity();
      if (chance(0.1)) return chance(0.5) ? Formula::truth() : Formula::falsity();
      Formula atom = Formula::symbol(pick(vars));
      return chance(0.4) ? Formula::negation(atom) : atom;
    }
    switch (uniform(0, 3)) {
      case 0: return Formula::negation(formula(vars, depth - 1));
      case 1:
        return Formula::conjunction(formula(vars, depth - 1),
                                    formula(vars, depth - 1));
      case 2:
        return Formula::disjunction(formula(vars, depth - 1),
                                    formula(vars, depth - 1));
      default:
        return Formula::implication(formula(vars, depth - 1),
                                    formula(vars, depth - 1));
    }
  }

  SentenceSet sentences(const std::vector<Name>& vars, std::size_t max = 2) {
    SentenceSet s;
    for (std::size_t k = uniform(0, max); k > 0; --k) s.insert(formula(vars));
    return s;
  }

  /// Literal-only sentences, so that the result can be executed.
  SentenceSet literals(const std::vector<Name>& vars, std::size_t max = 2) {
    SentenceSet s;
    if (vars.empty()) return s;
    for (std::size_t k = uniform(0, max); k > 0; --k) {
      Formula atom = Formula::symbol(pick(vars));
      s.insert(chance(0.5) ? Formula::negation(atom) : atom);
    }
    return s;
  }

  Signature signature(std::size_t min_per_sort = 0) {
    Signature sig;
    for (Sort s : kSorts) {
      const char* prefix = s == Sort::Variable ? "p" : s == Sort::Action ? "a" : "e";
      for (std::size_t k = uniform(min_per_sort, max_); k > 0; --k)
        sig.names(s).insert(prefix + std::to_string(k - 1));
    }
    return sig;
  }

  /// Random presentation over `sig`. With `observed_only`, actions that no
  /// event observes get empty prescription and description, which makes the
  /// component expressible in component syntax.
  Component component(const Name& name, Signature sig,
                      bool observed_only = false) {
    Component c;
    c.name = name;
    c.sig = std::move(sig);
    const std::vector<Name> vars(c.sig.variables.begin(), c.sig.variables.end());
    const std::vector<Name> acts(c.sig.actions.begin(), c.sig.actions.end());
    for (const auto& a : acts) {
      c.add_action(a);
      c.pres.prescription[a] = sentences(vars);
      c.pres.description[a] = sentences(vars);
    }
    for (const auto& e : NameSet(c.sig.events)) {
      c.add_event(e);
      for (const auto& a : acts)
        if (chance(0.4)) c.pres.observation[e].insert(a);
    }
    if (observed_only) {
      NameSet observed;
      for (const auto& [_, as] : c.pres.observation)
        observed.insert(as.begin(), as.end());
      for (const auto& a : acts)
        if (!observed.count(a)) {
          c.pres.prescription[a] = {};
          c.pres.description[a] = {};
        }
    }
    return c;
  }

  Component component(const Name& name = "C") {
    return component(name, signature());
  }

  /// A random total map from `from` into the non-empty set `to`.
  NameMap map_into(const NameSet& from, const NameSet& to) {
    const std::vector<Name> targets(to.begin(), to.end());
    NameMap m;
    for (const auto& n : from) m[n] = pick(targets);
    return m;
  }

  /// A random valid morphism out of `source` into a fresh component whose
  /// presentation extends the translated one.
  ComponentMorphism extension(const Component& source, const Name& name) {
    Signature sig;
    SignatureMorphism sigma;
    for (Sort s : kSorts) {
      const char* prefix = s == Sort::Variable ? "q" : s == Sort::Action ? "b" : "f";
      std::size_t lo = source.sig.names(s).empty() ? 0 : 1;
      for (std::size_t k = uniform(lo, max_); k > 0; --k)
        sig.names(s).insert(prefix + std::to_string(k - 1));
      sigma.map(s) = sig.names(s).empty() ? NameMap{}
                                           : map_into(source.sig.names(s),
                                                      sig.names(s));
    }
    Component target = component(name, std::move(sig));
    absorb(target, source, sigma);
    return {source, std::move(target), std::move(sigma)};
  }

  /// m1: C0 -> C1, ..., composable and valid.
  std::vector<ComponentMorphism> chain(std::size_t length) {
    std::vector<ComponentMorphism> out;
    Component current = component("C0");
    for (std::size_t i = 1; i <= length; ++i) {
      out.push_back(extension(current, "C" + std::to_string(i)));
      current = out.back().target;
    }
    return out;
  }

  /// A diagram with up to `max_nodes` nodes. Edges only run from earlier to
  /// later nodes, which still produces spans, cospans and parallel pairs.
  Diagram diagram(std::size_t max_nodes = 3) {
    Diagram d;
    std::vector<Name> names;
    const std::size_t n = uniform(1, max_nodes);
    for (std::size_t j = 0; j < n; ++j) {
      Name node = "N" + std::to_string(j);
      Signature sig = signature(chance(0.8) ? 1 : 0);
      Component c = component(node, sig);
      std::vector<DiagramEdge> incoming;
      for (const auto& from : names) {
        std::size_t copies = chance(0.6) ? (chance(0.2) ? 2 : 1) : 0;
        for (std::size_t k = 0; k < copies; ++k) {
          const Component& src = d.nodes.at(from);
          bool possible = true;
          for (Sort s : kSorts)
            if (!src.sig.names(s).empty() && sig.names(s).empty()) possible = false;
          if (!possible) continue;
          SignatureMorphism sigma;
          for (Sort s : kSorts)
            if (!sig.names(s).empty())
              sigma.map(s) = map_into(src.sig.names(s), sig.names(s));
          absorb(c, src, sigma);
          incoming.push_back({from + "_" + node + "_" + std::to_string(k), from,
                              node, std::move(sigma)});
        }
      }
      d.nodes.emplace(node, std::move(c));
      for (auto& e : incoming) d.edges.push_back(std::move(e));
      names.push_back(node);
    }
    return d;
  }

  /// Adds the translation of `source`'s presentation to `target`.
  static void absorb(Component& target, const Component& source,
                     const SignatureMorphism& sigma) {
    for (const auto& a : source.sig.actions) {
      const auto& image = sigma.actions.at(a);
      target.pres.prescription[image].insert_all(
          translate_set(sigma.variables, source.prescription(a)));
      target.pres.description[image].insert_all(
          translate_set(sigma.variables, source.description(a)));
    }
    for (const auto& e : source.sig.events)
      for (const auto& a : image_of(sigma.actions, source.observed(e)))
        target.pres.observation[sigma.events.at(e)].insert(a);
  }

 private:
  std::mt19937_64 rng_;
  std::size_t max_;
};

}  // namespace compos
