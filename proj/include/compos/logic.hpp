#pragma once

// Propositional sentences over variable names, their translation along
// renamings, and evaluation in boolean states.

#include <algorithm>
#include <compare>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "compos/error.hpp"
#include "compos/names.hpp"

namespace compos {

/// Immutable propositional formula. Copies share structure.
class Formula {
 public:
  enum class Kind { True, False, Symbol, Not, And, Or, Implies };

  static Formula truth() { return Formula(make(Kind::True, {}, {}, {})); }
  static Formula falsity() { return Formula(make(Kind::False, {}, {}, {})); }
  static Formula symbol(Name name) {
    return Formula(make(Kind::Symbol, std::move(name), {}, {}));
  }
  static Formula negation(Formula f) {
    return Formula(make(Kind::Not, {}, std::move(f.node_), {}));
  }
  static Formula conjunction(Formula l, Formula r) {
    return binary(Kind::And, std::move(l), std::move(r));
  }
  static Formula disjunction(Formula l, Formula r) {
    return binary(Kind::Or, std::move(l), std::move(r));
  }
  static Formula implication(Formula l, Formula r) {
    return binary(Kind::Implies, std::move(l), std::move(r));
  }
  static Formula binary(Kind kind, Formula l, Formula r) {
    return Formula(make(kind, {}, std::move(l.node_), std::move(r.node_)));
  }

  Kind kind() const { return node_->kind; }
  const Name& name() const { return node_->name; }
  /// Operand of a negation, or left operand of a binary connective.
  Formula lhs() const { return Formula(node_->lhs); }
  Formula rhs() const { return Formula(node_->rhs); }

  bool is_binary() const {
    return kind() == Kind::And || kind() == Kind::Or ||
           kind() == Kind::Implies;
  }
  /// A variable or the negation of a variable.
  bool is_literal() const {
    return kind() == Kind::Symbol ||
           (kind() == Kind::Not && node_->lhs->kind == Kind::Symbol);
  }

  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
    return compare(a.node_.get(), b.node_.get());
  }
  friend bool operator==(const Formula& a, const Formula& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

 private:
  struct Node {
    Kind kind;
    Name name;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
  };
  using NodePtr = std::shared_ptr<const Node>;

  explicit Formula(NodePtr n) : node_(std::move(n)) {}

  static NodePtr make(Kind k, Name n, NodePtr l, NodePtr r) {
    return std::make_shared<const Node>(
        Node{k, std::move(n), std::move(l), std::move(r)});
  }

  static std::strong_ordering compare(const Node* a, const Node* b) {
    if (a == b) return std::strong_ordering::equal;
    if (auto c = a->kind <=> b->kind; c != 0) return c;
    switch (a->kind) {
      case Kind::True:
      case Kind::False:
        return std::strong_ordering::equal;
      case Kind::Symbol:
        return a->name <=> b->name;
      case Kind::Not:
        return compare(a->lhs.get(), b->lhs.get());
      default:
        if (auto c = compare(a->lhs.get(), b->lhs.get()); c != 0) return c;
        return compare(a->rhs.get(), b->rhs.get());
    }
  }

  NodePtr node_;
};

namespace detail {

inline int precedence(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Implies: return 1;
    case Formula::Kind::Or: return 2;
    case Formula::Kind::And: return 3;
    case Formula::Kind::Not: return 4;
    default: return 5;
  }
}

inline const char* operator_text(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::And: return "\\and";
    case Formula::Kind::Or: return "\\or";
    case Formula::Kind::Implies: return "\\implies";
    default: return "";
  }
}

inline void render_into(const Formula& f, std::string& out) {
  using K = Formula::Kind;
  auto wrapped = [&out](const Formula& sub, bool parens) {
    if (parens) out += '(';
    render_into(sub, out);
    if (parens) out += ')';
  };
  switch (f.kind()) {
    case K::True: out += "True"; return;
    case K::False: out += "False"; return;
    case K::Symbol: out += f.name(); return;
    case K::Not:
      out += "\\not ";
      wrapped(f.lhs(), f.lhs().is_binary());
      return;
    default: break;
  }
  const int p = precedence(f.kind());
  const int pl = precedence(f.lhs().kind());
  const int pr = precedence(f.rhs().kind());
  // \and and \or associate to the left, \implies to the right.
  const bool right_assoc = f.kind() == K::Implies;
  wrapped(f.lhs(), right_assoc ? pl <= p : pl < p);
  out += ' ';
  out += operator_text(f.kind());
  out += ' ';
  wrapped(f.rhs(), right_assoc ? pr < p : pr <= p);
}

inline void collect_symbols(const Formula& f, NameSet& out) {
  switch (f.kind()) {
    case Formula::Kind::Symbol: out.insert(f.name()); return;
    case Formula::Kind::True:
    case Formula::Kind::False: return;
    case Formula::Kind::Not: collect_symbols(f.lhs(), out); return;
    default:
      collect_symbols(f.lhs(), out);
      collect_symbols(f.rhs(), out);
  }
}

}  // namespace detail

/// Concrete syntax with the minimum number of parentheses.
inline std::string to_string(const Formula& f) {
  std::string out;
  detail::render_into(f, out);
  return out;
}

inline NameSet symbols_of(const Formula& f) {
  NameSet out;
  detail::collect_symbols(f, out);
  return out;
}

/// Replaces every symbol s by rename(s). Throws UnmappedSymbol when a symbol
/// has no image.
inline Formula translate_formula(const NameMap& rename, const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::True:
    case K::False:
      return f;
    case K::Symbol: {
      auto it = rename.find(f.name());
      if (it == rename.end())
        throw Error(ErrorCode::UnmappedSymbol,
                    "symbol '" + f.name() + "' has no image");
      return Formula::symbol(it->second);
    }
    case K::Not:
      return Formula::negation(translate_formula(rename, f.lhs()));
    default:
      return Formula::binary(f.kind(), translate_formula(rename, f.lhs()),
                             translate_formula(rename, f.rhs()));
  }
}

/// A finite set of sentences kept in canonical form: top-level conjunctions
/// are split into separate members, the constant True is dropped, and
/// members are unique up to syntactic equality.
class SentenceSet {
 public:
  using const_iterator = std::set<Formula>::const_iterator;

  SentenceSet() = default;
  SentenceSet(std::initializer_list<Formula> fs) {
    for (const auto& f : fs) insert(f);
  }

  void insert(const Formula& f) {
    switch (f.kind()) {
      case Formula::Kind::True:
        return;
      case Formula::Kind::And:
        insert(f.lhs());
        insert(f.rhs());
        return;
      default:
        members_.insert(f);
    }
  }

  void insert_all(const SentenceSet& other) {
    members_.insert(other.members_.begin(), other.members_.end());
  }

  bool contains(const Formula& f) const { return members_.count(f) > 0; }

  /// this ⊆ other
  bool subset_of(const SentenceSet& other) const {
    for (const auto& f : members_)
      if (!other.contains(f)) return false;
    return true;
  }

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const_iterator begin() const { return members_.begin(); }
  const_iterator end() const { return members_.end(); }

  /// Members ordered by their rendered text.
  std::vector<std::string> rendered() const {
    std::vector<std::string> out;
    for (const auto& f : members_) out.push_back(to_string(f));
    std::sort(out.begin(), out.end());
    return out;
  }

  friend bool operator==(const SentenceSet&, const SentenceSet&) = default;
  friend auto operator<=>(const SentenceSet& a, const SentenceSet& b) {
    return a.members_ <=> b.members_;
  }

 private:
  std::set<Formula> members_;
};

inline SentenceSet canonicalize(const SentenceSet& s) {
  SentenceSet out;
  for (const auto& f : s) out.insert(f);
  return out;
}

inline NameSet symbols_of(const SentenceSet& s) {
  NameSet out;
  for (const auto& f : s) detail::collect_symbols(f, out);
  return out;
}

inline SentenceSet translate_set(const NameMap& rename, const SentenceSet& s) {
  SentenceSet out;
  for (const auto& f : s) out.insert(translate_formula(rename, f));
  return out;
}

/// "a, b, c", or "True" for the empty set.
inline std::string to_string(const SentenceSet& s) {
  if (s.empty()) return "True";
  std::string out;
  for (const auto& text : s.rendered()) {
    if (!out.empty()) out += ", ";
    out += text;
  }
  return out;
}

using State = std::map<Name, bool>;

inline bool eval(const Formula& f, const State& state) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::True: return true;
    case K::False: return false;
    case K::Symbol: {
      auto it = state.find(f.name());
      if (it == state.end())
        throw Error(ErrorCode::UnassignedSymbol,
                    "symbol '" + f.name() + "' is not assigned");
      return it->second;
    }
    case K::Not: return !eval(f.lhs(), state);
    case K::And: return eval(f.lhs(), state) && eval(f.rhs(), state);
    case K::Or: return eval(f.lhs(), state) || eval(f.rhs(), state);
    case K::Implies: return !eval(f.lhs(), state) || eval(f.rhs(), state);
  }
  return false;
}

/// Conjunction of all members.
inline bool eval(const SentenceSet& s, const State& state) {
  for (const auto& f : s)
    if (!eval(f, state)) return false;
  return true;
}

}  // namespace compos
