#pragma once

// Components, signature morphisms and component morphisms, with validity
// checks and composition.

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "compos/error.hpp"
#include "compos/logic.hpp"
#include "compos/names.hpp"

namespace compos {

enum class Sort { Variable = 0, Action = 1, Event = 2 };

inline constexpr std::array<Sort, 3> kSorts = {Sort::Variable, Sort::Action,
                                               Sort::Event};

/// Keyword used for the sort in map lines of diagram files.
inline const char* sort_keyword(Sort s) {
  switch (s) {
    case Sort::Variable: return "var";
    case Sort::Action: return "action";
    case Sort::Event: return "event";
  }
  return "";
}

struct Signature {
  NameSet variables;
  NameSet actions;
  NameSet events;

  const NameSet& names(Sort s) const {
    switch (s) {
      case Sort::Variable: return variables;
      case Sort::Action: return actions;
      default: return events;
    }
  }
  NameSet& names(Sort s) {
    return const_cast<NameSet&>(std::as_const(*this).names(s));
  }

  friend bool operator==(const Signature&, const Signature&) = default;
};

struct Presentation {
  std::map<Name, SentenceSet> prescription;  // guard of each action
  std::map<Name, SentenceSet> description;   // effect of each action
  std::map<Name, NameSet> observation;       // actions observed by each event

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

struct Component {
  Name name;
  Signature sig;
  Presentation pres;

  /// Adds an action with empty prescription and description if absent.
  void add_action(const Name& a) {
    sig.actions.insert(a);
    pres.prescription.try_emplace(a);
    pres.description.try_emplace(a);
  }
  void add_event(const Name& e) {
    sig.events.insert(e);
    pres.observation.try_emplace(e);
  }
  void add_variable(const Name& p) { sig.variables.insert(p); }

  const SentenceSet& prescription(const Name& a) const {
    return lookup(pres.prescription, a);
  }
  const SentenceSet& description(const Name& a) const {
    return lookup(pres.description, a);
  }
  const NameSet& observed(const Name& e) const {
    static const NameSet empty;
    auto it = pres.observation.find(e);
    return it == pres.observation.end() ? empty : it->second;
  }

  friend bool operator==(const Component&, const Component&) = default;

 private:
  static const SentenceSet& lookup(const std::map<Name, SentenceSet>& m,
                                   const Name& a) {
    static const SentenceSet empty;
    auto it = m.find(a);
    return it == m.end() ? empty : it->second;
  }
};

/// Three total name maps; one per sort.
struct SignatureMorphism {
  NameMap variables;
  NameMap actions;
  NameMap events;

  const NameMap& map(Sort s) const {
    switch (s) {
      case Sort::Variable: return variables;
      case Sort::Action: return actions;
      default: return events;
    }
  }
  NameMap& map(Sort s) {
    return const_cast<NameMap&>(std::as_const(*this).map(s));
  }

  friend bool operator==(const SignatureMorphism&,
                         const SignatureMorphism&) = default;
};

/// A signature morphism between two components. The translations of
/// prescriptions, descriptions and observations are induced by `sigma`.
struct ComponentMorphism {
  Component source;
  Component target;
  SignatureMorphism sigma;

  friend bool operator==(const ComponentMorphism&,
                         const ComponentMorphism&) = default;
};

// ---------------------------------------------------------------------------
// Diagnostics

enum class DiagnosticKind {
  InvalidName,
  NameSetsOverlap,
  PresentationDomainMismatch,
  UnknownSymbol,
  ObservedActionUnknown,
  NotTotal,
  ImageOutOfRange,
  PrescriptionNotPreserved,
  DescriptionNotPreserved,
  ObservationNotPreserved,
  LegMissing,
  LegEndpointMismatch,
  LegInvalid,
  NotCommuting,
  UndeclaredAction,
  UndeclaredEvent,
};

inline const char* diagnostic_kind_name(DiagnosticKind k) {
  switch (k) {
    case DiagnosticKind::InvalidName: return "InvalidName";
    case DiagnosticKind::NameSetsOverlap: return "NameSetsOverlap";
    case DiagnosticKind::PresentationDomainMismatch:
      return "PresentationDomainMismatch";
    case DiagnosticKind::UnknownSymbol: return "UnknownSymbol";
    case DiagnosticKind::ObservedActionUnknown: return "ObservedActionUnknown";
    case DiagnosticKind::NotTotal: return "NotTotal";
    case DiagnosticKind::ImageOutOfRange: return "ImageOutOfRange";
    case DiagnosticKind::PrescriptionNotPreserved:
      return "PrescriptionNotPreserved";
    case DiagnosticKind::DescriptionNotPreserved:
      return "DescriptionNotPreserved";
    case DiagnosticKind::ObservationNotPreserved:
      return "ObservationNotPreserved";
    case DiagnosticKind::LegMissing: return "LegMissing";
    case DiagnosticKind::LegEndpointMismatch: return "LegEndpointMismatch";
    case DiagnosticKind::LegInvalid: return "LegInvalid";
    case DiagnosticKind::NotCommuting: return "NotCommuting";
    case DiagnosticKind::UndeclaredAction: return "UndeclaredAction";
    case DiagnosticKind::UndeclaredEvent: return "UndeclaredEvent";
  }
  return "Unknown";
}

/// Stable code printed by the CLI: V0xx for errors, W0xx for warnings.
inline std::string diagnostic_code(DiagnosticKind k) {
  int n = static_cast<int>(k) + 1;
  bool warning =
      k == DiagnosticKind::UndeclaredAction || k == DiagnosticKind::UndeclaredEvent;
  std::string digits = std::to_string(n);
  return std::string(warning ? "W" : "V") +
         std::string(3 - std::min<std::size_t>(3, digits.size()), '0') +
         digits;
}

enum class Severity { Error, Warning };

struct Diagnostic {
  DiagnosticKind kind;
  /// Names the diagnostic is about, most specific last. For example
  /// ObservedActionUnknown carries {event, action}.
  std::vector<std::string> subjects;
  std::string message;
  Severity severity = Severity::Error;

  bool mentions(const std::string& name) const {
    return std::find(subjects.begin(), subjects.end(), name) != subjects.end();
  }
};

inline std::string to_string(const Diagnostic& d) {
  std::string out = diagnostic_kind_name(d.kind);
  out += '(';
  for (std::size_t i = 0; i < d.subjects.size(); ++i) {
    if (i) out += ", ";
    out += d.subjects[i];
  }
  out += ')';
  if (!d.message.empty()) out += ": " + d.message;
  return out;
}

/// Result of a validation: one diagnostic per violation found.
struct Report {
  std::vector<Diagnostic> diagnostics;

  bool ok() const {
    return std::none_of(diagnostics.begin(), diagnostics.end(),
                        [](const Diagnostic& d) {
                          return d.severity == Severity::Error;
                        });
  }
  void add(DiagnosticKind k, std::vector<std::string> subjects,
           std::string message = {}) {
    diagnostics.push_back({k, std::move(subjects), std::move(message)});
  }
  void append(const Report& other) {
    diagnostics.insert(diagnostics.end(), other.diagnostics.begin(),
                       other.diagnostics.end());
  }
  bool has(DiagnosticKind k) const {
    return std::any_of(diagnostics.begin(), diagnostics.end(),
                       [k](const Diagnostic& d) { return d.kind == k; });
  }
  bool has(DiagnosticKind k, const std::string& subject) const {
    return std::any_of(diagnostics.begin(), diagnostics.end(),
                       [&](const Diagnostic& d) {
                         return d.kind == k && d.mentions(subject);
                       });
  }
};

/// Thrown where a valid value is required but validation found errors.
class ValidationFailure : public Error {
 public:
  ValidationFailure(const std::string& what, Report report)
      : Error(ErrorCode::ValidationError, what), report_(std::move(report)) {}

  const Report& report() const noexcept { return report_; }

 private:
  Report report_;
};

// ---------------------------------------------------------------------------
// Validation

inline Report validate_component(const Component& c) {
  Report r;
  const auto& sig = c.sig;
  for (Sort s : kSorts)
    for (const auto& n : sig.names(s))
      if (!is_valid_name(n))
        r.add(DiagnosticKind::InvalidName, {n}, "not a usable identifier");

  std::map<Name, int> seen;
  for (Sort s : kSorts)
    for (const auto& n : sig.names(s)) ++seen[n];
  for (const auto& [n, count] : seen)
    if (count > 1)
      r.add(DiagnosticKind::NameSetsOverlap, {n},
            "name used for more than one of variables, actions and events");

  auto check_domain = [&](const auto& m, const NameSet& expected,
                          const char* what) {
    for (const auto& [k, _] : m)
      if (!expected.count(k))
        r.add(DiagnosticKind::PresentationDomainMismatch, {k},
              std::string(what) + " given for an undeclared name");
    for (const auto& n : expected)
      if (!m.count(n))
        r.add(DiagnosticKind::PresentationDomainMismatch, {n},
              std::string("no ") + what);
  };
  check_domain(c.pres.prescription, sig.actions, "prescription");
  check_domain(c.pres.description, sig.actions, "description");
  check_domain(c.pres.observation, sig.events, "observation set");

  auto check_symbols = [&](const std::map<Name, SentenceSet>& m,
                           const char* what) {
    for (const auto& [a, sentences] : m)
      for (const auto& sym : symbols_of(sentences))
        if (!sig.variables.count(sym))
          r.add(DiagnosticKind::UnknownSymbol, {a, sym},
                std::string(what) + " of '" + a + "' mentions '" + sym +
                    "', which is not a variable");
  };
  check_symbols(c.pres.prescription, "prescription");
  check_symbols(c.pres.description, "description");

  for (const auto& [e, acts] : c.pres.observation)
    for (const auto& a : acts)
      if (!sig.actions.count(a))
        r.add(DiagnosticKind::ObservedActionUnknown, {e, a},
              "event '" + e + "' observes '" + a + "', which is not an action");
  return r;
}

/// Totality and range of the name maps only.
inline Report validate_signature_morphism(const Signature& from,
                                          const Signature& to,
                                          const SignatureMorphism& sigma) {
  Report r;
  for (Sort s : kSorts) {
    const auto& m = sigma.map(s);
    for (const auto& n : from.names(s))
      if (!m.count(n))
        r.add(DiagnosticKind::NotTotal, {sort_keyword(s), n},
              "no image for " + std::string(sort_keyword(s)) + " '" + n + "'");
    for (const auto& [k, v] : m) {
      if (!from.names(s).count(k))
        r.add(DiagnosticKind::NotTotal, {sort_keyword(s), k},
              "'" + k + "' is mapped but is not a source name");
      else if (!to.names(s).count(v))
        r.add(DiagnosticKind::ImageOutOfRange, {sort_keyword(s), k, v},
              "image '" + v + "' of '" + k + "' is not a target name");
    }
  }
  return r;
}

/// Checks totality and the three preservation inclusions.
inline Report validate_morphism(const ComponentMorphism& m) {
  const auto& src = m.source;
  const auto& dst = m.target;
  Report r = validate_signature_morphism(src.sig, dst.sig, m.sigma);
  if (!r.ok()) return r;

  for (const auto& a : src.sig.actions) {
    const auto& image = m.sigma.actions.at(a);
    if (!translate_set(m.sigma.variables, src.prescription(a))
             .subset_of(dst.prescription(image)))
      r.add(DiagnosticKind::PrescriptionNotPreserved, {a, image},
            "prescription of '" + a + "' is not included in that of '" +
                image + "'");
    if (!translate_set(m.sigma.variables, src.description(a))
             .subset_of(dst.description(image)))
      r.add(DiagnosticKind::DescriptionNotPreserved, {a, image},
            "description of '" + a + "' is not included in that of '" +
                image + "'");
  }
  for (const auto& e : src.sig.events) {
    const auto& image = m.sigma.events.at(e);
    const auto& observed = dst.observed(image);
    for (const auto& a : image_of(m.sigma.actions, src.observed(e)))
      if (!observed.count(a)) {
        r.add(DiagnosticKind::ObservationNotPreserved, {e, image},
              "actions observed by '" + e + "' are not observed by '" +
                  image + "'");
        break;
      }
  }
  return r;
}

inline ComponentMorphism identity(const Component& c) {
  return {c, c,
          {identity_map(c.sig.variables), identity_map(c.sig.actions),
           identity_map(c.sig.events)}};
}

inline SignatureMorphism compose(const SignatureMorphism& first,
                                 const SignatureMorphism& second) {
  return {compose_maps(first.variables, second.variables),
          compose_maps(first.actions, second.actions),
          compose_maps(first.events, second.events)};
}

/// first;second
inline ComponentMorphism compose(const ComponentMorphism& first,
                                 const ComponentMorphism& second) {
  if (!(first.target == second.source))
    throw Error(ErrorCode::NonComposable,
                "target '" + first.target.name + "' of the first morphism is "
                "not the source '" + second.source.name + "' of the second");
  for (Sort s : kSorts)
    for (const auto& [from, mid] : first.sigma.map(s))
      if (!second.sigma.map(s).count(mid))
        throw Error(ErrorCode::NonComposable,
                    "'" + mid + "' has no image under the second morphism");
  return {first.source, second.target, compose(first.sigma, second.sigma)};
}

namespace detail {

template <class Accept>
bool search_bijections(const std::vector<Name>& from,
                       const std::vector<std::vector<Name>>& candidates,
                       std::size_t i, NameMap& current, NameSet& used,
                       const Accept& accept) {
  if (i == from.size()) return accept(current);
  for (const auto& c : candidates[i]) {
    if (used.count(c)) continue;
    used.insert(c);
    current[from[i]] = c;
    if (search_bijections(from, candidates, i + 1, current, used, accept))
      return true;
    current.erase(from[i]);
    used.erase(c);
  }
  return false;
}

}  // namespace detail

/// Searches for a renaming of names under which `a` and `b` have identical
/// presentations. The search is exhaustive, so only use it on small
/// components.
inline std::optional<ComponentMorphism> components_isomorphic(
    const Component& a, const Component& b) {
  for (Sort s : kSorts)
    if (a.sig.names(s).size() != b.sig.names(s).size()) return std::nullopt;

  const std::vector<Name> vars(a.sig.variables.begin(), a.sig.variables.end());
  const std::vector<Name> acts(a.sig.actions.begin(), a.sig.actions.end());
  const std::vector<Name> evts(a.sig.events.begin(), a.sig.events.end());

  // Cheap invariants prune the variable search: a variable's image must occur
  // in the same number of guard and effect sentences.
  auto occurrences = [](const Component& c, const Name& v) {
    std::pair<int, int> count{0, 0};
    for (const auto& [_, s] : c.pres.prescription)
      for (const auto& f : s) count.first += symbols_of(f).count(v);
    for (const auto& [_, s] : c.pres.description)
      for (const auto& f : s) count.second += symbols_of(f).count(v);
    return count;
  };
  std::vector<std::vector<Name>> var_candidates;
  for (const auto& v : vars) {
    std::vector<Name> cs;
    for (const auto& w : b.sig.variables)
      if (occurrences(a, v) == occurrences(b, w)) cs.push_back(w);
    var_candidates.push_back(std::move(cs));
  }

  SignatureMorphism found;
  NameMap var_map;
  NameSet used_vars;
  bool ok = detail::search_bijections(
      vars, var_candidates, 0, var_map, used_vars, [&](const NameMap& vm) {
        std::vector<std::vector<Name>> act_candidates;
        for (const auto& x : acts) {
          std::vector<Name> cs;
          auto pi = translate_set(vm, a.prescription(x));
          auto de = translate_set(vm, a.description(x));
          for (const auto& y : b.sig.actions)
            if (pi == b.prescription(y) && de == b.description(y))
              cs.push_back(y);
          if (cs.empty()) return false;
          act_candidates.push_back(std::move(cs));
        }
        NameMap act_map;
        NameSet used_acts;
        return detail::search_bijections(
            acts, act_candidates, 0, act_map, used_acts,
            [&](const NameMap& am) {
              std::vector<std::vector<Name>> evt_candidates;
              for (const auto& e : evts) {
                std::vector<Name> cs;
                auto obs = image_of(am, a.observed(e));
                for (const auto& f : b.sig.events)
                  if (obs == b.observed(f)) cs.push_back(f);
                if (cs.empty()) return false;
                evt_candidates.push_back(std::move(cs));
              }
              NameMap evt_map;
              NameSet used_evts;
              return detail::search_bijections(
                  evts, evt_candidates, 0, evt_map, used_evts,
                  [&](const NameMap& em) {
                    found = {vm, am, em};
                    return true;
                  });
            });
      });
  if (!ok) return std::nullopt;
  return ComponentMorphism{a, b, found};
}

}  // namespace compos
