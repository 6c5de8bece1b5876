#pragma once

// Execution of a component as a guarded-event transition system over
// boolean states. An event is enabled when the guards of all the actions it
// observes hold; firing it applies all their effects in one step.

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "compos/error.hpp"
#include "compos/logic.hpp"
#include "compos/model.hpp"

namespace compos {

struct TraceStep {
  Name event;
  State state;

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct Trace {
  State initial;
  std::vector<TraceStep> steps;

  const State& final_state() const {
    return steps.empty() ? initial : steps.back().state;
  }
  std::size_t length() const { return steps.size(); }
};

/// All valuations of the component's variables satisfying `init`, in
/// lexicographic order of their bit patterns. Throws Unsatisfiable when
/// there are none.
inline std::vector<State> initial_states(const Component& c,
                                         const SentenceSet& init) {
  for (const auto& sym : symbols_of(init))
    if (!c.sig.variables.count(sym))
      throw Error(ErrorCode::UnassignedSymbol,
                  "initial constraint mentions '" + sym +
                      "', which is not a variable of '" + c.name + "'");
  const std::vector<Name> vars(c.sig.variables.begin(), c.sig.variables.end());
  if (vars.size() > 24)
    throw Error(ErrorCode::BoundExceeded, "too many variables to enumerate");
  std::vector<State> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << vars.size());
       ++bits) {
    State s;
    for (std::size_t i = 0; i < vars.size(); ++i)
      s[vars[i]] = (bits >> (vars.size() - 1 - i)) & 1u;
    if (eval(init, s)) out.push_back(std::move(s));
  }
  if (out.empty())
    throw Error(ErrorCode::Unsatisfiable,
                "no state of '" + c.name + "' satisfies " + to_string(init));
  return out;
}

inline bool event_enabled(const Component& c, const State& s, const Name& e) {
  for (const auto& a : c.observed(e))
    if (!eval(c.prescription(a), s)) return false;
  return true;
}

inline NameSet enabled_events(const Component& c, const State& s) {
  NameSet out;
  for (const auto& e : c.sig.events)
    if (event_enabled(c, s, e)) out.insert(e);
  return out;
}

/// The state after `e`. Effects must be literals; unmentioned variables keep
/// their value.
inline State fire(const Component& c, const State& s, const Name& e) {
  if (!c.sig.events.count(e))
    throw Error(ErrorCode::NotEnabled, "'" + e + "' is not an event of '" +
                                           c.name + "'");
  if (!event_enabled(c, s, e))
    throw Error(ErrorCode::NotEnabled, "event '" + e + "' is not enabled");
  std::map<Name, bool> assigned;
  for (const auto& a : c.observed(e))
    for (const auto& f : c.description(a)) {
      if (!f.is_literal())
        throw Error(ErrorCode::NonLiteralEffect,
                    "effect '" + to_string(f) + "' of action '" + a +
                        "' is not a literal");
      bool value = f.kind() == Formula::Kind::Symbol;
      const Name& var = value ? f.name() : f.lhs().name();
      auto [it, fresh] = assigned.emplace(var, value);
      if (!fresh && it->second != value)
        throw Error(ErrorCode::ConflictingEffects,
                    "event '" + e + "' sets '" + var + "' both ways");
    }
  State next = s;
  for (const auto& [var, value] : assigned) {
    auto it = next.find(var);
    if (it == next.end())
      throw Error(ErrorCode::UnassignedSymbol,
                  "effect mentions unknown variable '" + var + "'");
    it->second = value;
  }
  return next;
}

/// Fires `schedule` from the single state satisfying `init`.
inline Trace run(const Component& c, const SentenceSet& init,
                 const std::vector<Name>& schedule) {
  auto starts = initial_states(c, init);
  if (starts.size() != 1)
    throw Error(ErrorCode::AmbiguousInitial,
                std::to_string(starts.size()) +
                    " states satisfy the initial constraint; exactly one is "
                    "needed");
  Trace t{starts.front(), {}};
  State current = t.initial;
  for (const auto& e : schedule) {
    current = fire(c, current, e);
    t.steps.push_back({e, current});
  }
  return t;
}

/// Breadth-first search for a shortest trace of at most `bound` steps
/// ending in a state that satisfies `goal`. Events are tried in
/// lexicographic order, so the witness is deterministic.
inline std::optional<Trace> reachable(const Component& c,
                                      const SentenceSet& init,
                                      const SentenceSet& goal,
                                      std::size_t bound) {
  std::vector<State> starts;
  try {
    starts = initial_states(c, init);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Unsatisfiable) return std::nullopt;
    throw;
  }

  struct Visit {
    State state;
    std::size_t parent;  // index into `seen`, or npos for roots
    Name event;
    std::size_t depth;
  };
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<Visit> seen;
  std::set<State> visited;
  std::deque<std::size_t> queue;
  for (auto& s : starts)
    if (visited.insert(s).second) {
      seen.push_back({std::move(s), npos, {}, 0});
      queue.push_back(seen.size() - 1);
    }

  while (!queue.empty()) {
    std::size_t at = queue.front();
    queue.pop_front();
    if (eval(goal, seen[at].state)) {
      std::vector<std::size_t> path;
      for (std::size_t k = at; k != npos; k = seen[k].parent) path.push_back(k);
      Trace t{seen[path.back()].state, {}};
      for (auto it = path.rbegin() + 1; it != path.rend(); ++it)
        t.steps.push_back({seen[*it].event, seen[*it].state});
      return t;
    }
    if (seen[at].depth == bound) continue;
    for (const auto& e : enabled_events(c, seen[at].state)) {
      State next = fire(c, seen[at].state, e);
      if (!visited.insert(next).second) continue;
      seen.push_back({std::move(next), at, e, seen[at].depth + 1});
      queue.push_back(seen.size() - 1);
    }
  }
  return std::nullopt;
}

/// `<label>: a=0 h=1 ...` with variables in lexicographic order.
inline std::string render_state(const std::string& label, const State& s) {
  std::string out = label + ":";
  for (const auto& [var, value] : s) out += " " + var + "=" + (value ? "1" : "0");
  return out;
}

/// One line for the initial state (labelled `init`) and one per step.
inline std::string render_trace(const Trace& t) {
  std::string out = render_state("init", t.initial) + "\n";
  for (const auto& step : t.steps) out += render_state(step.event, step.state) + "\n";
  return out;
}

}  // namespace compos
