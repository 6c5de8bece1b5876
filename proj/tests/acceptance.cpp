// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "compos/cli.hpp"
#include "compos/oracles.hpp"
#include "compos/random.hpp"
#include "fixtures.hpp"

using namespace compos;
using namespace compos::test;

namespace {

// Wall-clock limits, in seconds.
constexpr double kLimitHunting = 1.0;
constexpr double kLimitLaws = 10.0;
constexpr double kLimitUniversal = 60.0;
constexpr double kLimitQuotient = 10.0;
constexpr double kLimitSensitivity = 5.0;
constexpr double kLimitSimulation = 1.0;

constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

int failures = 0;

void criterion(const char* id, const char* title, double limit,
               const std::function<Outcome()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.note = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit > 0 && secs >= limit) {
    o.require(false, "took " + std::to_string(secs) + " s, limit " +
                         std::to_string(limit) + " s");
    o.ok = false;
  }
  if (!o.ok) ++failures;
  std::printf("%s %s  %-48s %8.3f s%s%s\n", o.ok ? "PASS" : "FAIL", id, title,
              secs, o.note.empty() ? "" : "  ", o.note.c_str());
  std::fflush(stdout);
}

Outcome ac1_hunting() {
  Outcome o;
  auto dir = std::filesystem::temp_directory_path() / "compos_acceptance";
  std::filesystem::create_directories(dir);
  auto out = dir / "hunting.compos";
  std::ostringstream sink;
  int status = cli::cmd_compose(model_path("hunting.diagram"), out.string(), "",
                                sink, sink);
  o.require(status == 0, "cmd_compose exit " + std::to_string(status) + ": " + sink.str());
  if (!o.ok) return o;
  Component composed = parse_component(read_text_file(out));
  Component monolith = load("hunting.compos");
  o.require(components_isomorphic(composed, monolith).has_value(), "not isomorphic");
  const Component& c = composed;
  o.require(c.sig.variables == NameSet{"h", "l", "a", "t"}, "P");
  o.require(c.sig.actions == NameSet{"bh", "ld", "am", "st", "dt"}, "A");
  o.require(c.sig.events == NameSet{"e1", "e2", "e3", "e4"}, "E");
  o.require(c.prescription("ld") == parse_sentences("h, !l"), "pi(ld)");
  o.require(c.prescription("st") == parse_sentences("l, a"), "pi(st)");
  o.require(c.description("st") == parse_sentences("!l, !a"), "delta(st)");
  o.require(c.observed("e4") == NameSet{"st", "dt"}, "epsilon(e4)");
  return o;
}

Outcome ac2_laws() {
  Outcome o;
  RandomModels gen(kSeed, 4);
  for (int i = 0; i < 200 && o.ok; ++i) {
    auto ch = gen.chain(3);
    const auto& f = ch[0];
    const auto& g = ch[1];
    const auto& h = ch[2];
    for (const auto& m : ch)
      o.require(validate_morphism(m).ok(), "generated morphism invalid");
    o.require(compose(identity(f.source), f).sigma == f.sigma, "left identity");
    o.require(compose(f, identity(f.target)).sigma == f.sigma, "right identity");
    auto left = compose(compose(f, g), h);
    auto right = compose(f, compose(g, h));
    o.require(left.sigma == right.sigma, "associativity");
    for (const auto& m : {compose(f, g), compose(g, h), left})
      o.require(validate_morphism(m).ok(), "composite invalid");
  }
  return o;
}

Outcome ac3_universal() {
  Outcome o;
  RandomModels gen(kSeed + 3, 4);
  for (int i = 0; i < 50 && o.ok; ++i) {
    Diagram d = gen.diagram(3);
    auto r = colimit_system(d);
    o.require(verify_universal_property(r, d), "colimit rejected #" + std::to_string(i));
    // One deliberately under-merged quotient; a diagram without any merged
    // class has no such quotient, so over-merge instead.
    std::optional<ColimitResult> bad;
    for (Sort s : kSorts)
      if (!bad) bad = under_merged(r, d, s);
    for (Sort s : kSorts)
      if (!bad) bad = over_merged(r, d, s);
    if (bad) o.require(!verify_universal_property(*bad, d), "corrupted quotient accepted #" + std::to_string(i));
  }
  return o;
}

Outcome ac4_quotient() {
  Outcome o;
  RandomModels gen(kSeed + 4, 4);
  for (int i = 0; i < 100 && o.ok; ++i) {
    Diagram d = gen.diagram(3);
    for (Sort s : kSorts) {
      auto sd = sort_diagram(d, s);
      o.require(oracle::as_partition(colimit_set(sd)) == oracle::closure_partition(sd),
                "partition mismatch #" + std::to_string(i));
    }
  }
  return o;
}

// Names whose inclusion fails under sigma, recomputed from scratch.
NameSet broken_by(const ComponentMorphism& m) {
  NameSet out;
  const auto& src = m.source;
  const auto& tgt = m.target;
  for (const auto& a : src.sig.actions) {
    const Name& b = m.sigma.actions.at(a);
    for (const auto& [part, whole] :
         {std::pair{&src.pres.prescription, &tgt.pres.prescription},
          std::pair{&src.pres.description, &tgt.pres.description}}) {
      auto have = part->count(a) ? part->at(a) : SentenceSet{};
      auto room = whole->count(b) ? whole->at(b) : SentenceSet{};
      for (const auto& f : have)
        for (const auto& g : SentenceSet{translate_formula(m.sigma.variables, f)})
          if (!room.contains(g)) out.insert(a);
    }
  }
  for (const auto& e : src.sig.events) {
    NameSet room = tgt.observed(m.sigma.events.at(e));
    for (const auto& a : src.observed(e))
      if (!room.count(m.sigma.actions.at(a))) out.insert(e);
  }
  return out;
}

bool names_subject(const Report& r, const Name& n) {
  for (const auto& d : r.diagnostics)
    if (!d.subjects.empty() && d.subjects.front() == n) return true;
  return false;
}

Outcome ac5_sensitivity() {
  Outcome o;
  Diagram d = hunting_diagram();
  auto r = colimit_system(d);
  std::size_t breaking = 0;
  for (const auto& [node, leg] : r.cocone.legs) {
    o.require(validate_morphism(leg).ok(), "leg " + node + " invalid");
    for (Sort s : {Sort::Action, Sort::Event})
      for (const auto& [x, image] : leg.sigma.map(s))
        for (const auto& other : r.apex().sig.names(s)) {
          if (other == image) continue;
          ComponentMorphism mutant = leg;
          mutant.sigma.map(s)[x] = other;
          NameSet expected = broken_by(mutant);
          Report rep = validate_morphism(mutant);
          const std::string where = node + " " + x + "->" + other;
          o.require(rep.ok() == expected.empty(), "verdict differs at " + where);
          for (const auto& n : expected)
            o.require(names_subject(rep, n), "no diagnostic names " + n + " at " + where);
          if (!expected.empty()) ++breaking;
        }
  }
  o.require(breaking > 0, "no breaking mutation found");
  if (o.ok) o.note = std::to_string(breaking) + " breaking mutations rejected";
  return o;
}

Outcome ac6_mediator() {
  Outcome o;
  auto doc = hunting_document();
  const Cocone& world = doc.environments.at("World");
  auto r = colimit_system(doc.diagram);
  o.require(world.apex.sig.variables.size() == r.apex().sig.variables.size() + 1,
            "World is not the apex plus one variable");
  auto u = mediating_morphism(r, world);
  for (Sort s : kSorts)
    for (const auto& n : r.apex().sig.names(s))
      o.require(u.sigma.map(s).at(n) == n, "mediator is not the inclusion at " + n);
  o.require(validate_morphism(u).ok(), "mediator invalid");
  for (const auto& [node, leg] : r.cocone.legs)
    o.require(compose(leg.sigma, u.sigma) == world.legs.at(node).sigma,
              "leg " + node + " does not factor");

  RandomModels gen(kSeed + 6, 4);
  for (int i = 0; i < 100 && o.ok; ++i) {
    Diagram d = gen.diagram(3);
    auto rr = colimit_system(d);
    auto ext = gen.extension(rr.apex(), "Env");
    Cocone c{ext.target, {}};
    for (const auto& [node, leg] : rr.cocone.legs) c.legs.emplace(node, compose(leg, ext));
    o.require(check_cocone(d, c).ok(), "random cocone invalid");
    try {
      auto v = mediating_morphism(rr, c);
      o.require(v.sigma == ext.sigma, "mediator is not the extension");
    } catch (const Error& e) {
      o.require(e.code() != ErrorCode::IllDefinedMediator, "IllDefinedMediator reached");
      throw;
    }
  }
  return o;
}

Outcome ac7_simulation() {
  Outcome o;
  Component h = load("hunting.compos");
  const SentenceSet init = parse_sentences("!h, !l, !a, t");
  Trace t = run(h, init, {"e1", "e2", "e3", "e4"});
  o.require(t.final_state() == State{{"h", true}, {"l", false}, {"a", false}, {"t", false}},
            "final state " + render_state("end", t.final_state()));
  auto w = reachable(h, init, parse_sentences("!t"), 4);
  o.require(w && w->length() == 4, "no 4-step witness");
  o.require(!reachable(h, init, parse_sentences("!t"), 3), "witness at bound 3");
  return o;
}

Outcome ac8_round_trip() {
  Outcome o;
  auto fixpoint = [&](const std::string& text, const std::string& what) {
    Component once = parse_component(text, what);
    Component twice = parse_component(emit_component(once), what);
    o.require(once == twice, "not a fixpoint: " + what);
  };
  for (const char* f : {"hunting.compos", "pilgrim.compos", "shotgun.compos", "turkey.compos"})
    fixpoint(read_text_file(model_path(f)), f);
  RandomModels gen(kSeed + 8, 4);
  for (int i = 0; i < 100; ++i)
    fixpoint(emit_component(gen.component("R" + std::to_string(i), gen.signature(), true)),
             "random #" + std::to_string(i));
  return o;
}

}  // namespace

int main() {
  criterion("AC1", "hunting composition matches the monolith", kLimitHunting, ac1_hunting);
  criterion("AC2", "category laws on 200 chains", kLimitLaws, ac2_laws);
  criterion("AC3", "universal property on 50 diagrams", kLimitUniversal, ac3_universal);
  criterion("AC4", "union-find equals relational closure", kLimitQuotient, ac4_quotient);
  criterion("AC5", "morphism checker names broken inclusions", kLimitSensitivity, ac5_sensitivity);
  criterion("AC6", "mediator is the inclusion; never ill-defined", 0, ac6_mediator);
  criterion("AC7", "simulation narrative and bounded search", kLimitSimulation, ac7_simulation);
  criterion("AC8", "parse/emit/parse fixpoint", 0, ac8_round_trip);
  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
