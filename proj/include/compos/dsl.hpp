#pragma once

// Reader and writer for component texts (.compos) and diagram files
// (.diagram).
//
// Component grammar:
//
//   component  = "component" IDENT "variables" [identlist ":" "bool"]
//                "actions" [identlist] "events" [identlist]
//                "*[" { block } "]"
//   block      = IDENT ":" rule { rule }
//   rule       = IDENT ":" sentences ("-->" | "->") sentences
//   sentences  = formula { "," formula }
//   formula    = disj [ "\implies" formula ]
//   disj       = conj { "\or" conj }
//   conj       = unary { "\and" unary }
//   unary      = "\not" unary | "True" | "False" | IDENT | "(" formula ")"
//
// "--" starts a comment that runs to the end of the line. The connectives
// also have the spellings ¬ ! / ∧ & / ∨ | / ⊃ =>.

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "compos/colimit.hpp"
#include "compos/error.hpp"
#include "compos/logic.hpp"
#include "compos/model.hpp"

namespace compos {

struct SourcePos {
  int line = 1;
  int column = 1;
};

/// SyntaxError (or another parse-time error) with its position in the source.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::string origin, SourcePos pos,
             const std::string& message)
      : Error(code, origin + ":" + std::to_string(pos.line) + ":" +
                        std::to_string(pos.column) + ": " + message),
        origin_(std::move(origin)),
        pos_(pos),
        detail_(message) {}

  const std::string& origin() const noexcept { return origin_; }
  SourcePos position() const noexcept { return pos_; }
  /// The message without the position prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string origin_;
  SourcePos pos_;
  std::string detail_;
};

namespace dsl {

enum class Tok {
  Ident,
  Comma,
  Colon,
  Arrow,
  Open,   // *[
  Close,  // ]
  LParen,
  RParen,
  Not,
  And,
  Or,
  Implies,
  End,
};

inline const char* describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Comma: return "','";
    case Tok::Colon: return "':'";
    case Tok::Arrow: return "'-->'";
    case Tok::Open: return "'*['";
    case Tok::Close: return "']'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Not: return "'\\not'";
    case Tok::And: return "'\\and'";
    case Tok::Or: return "'\\or'";
    case Tok::Implies: return "'\\implies'";
    case Tok::End: return "end of input";
  }
  return "token";
}

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

/// Splits a source text into tokens. Identifiers include keywords; the
/// parser tells them apart by text.
inline std::vector<Token> tokenize(std::string_view src,
                                   const std::string& origin) {
  std::vector<Token> out;
  SourcePos pos;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < src.size(); ++k, ++i) {
      // UTF-8 continuation bytes do not start a new column.
      if (src[i] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else if ((static_cast<unsigned char>(src[i]) & 0xC0) != 0x80) {
        ++pos.column;
      }
    }
  };
  auto starts = [&](std::string_view s) { return src.substr(i, s.size()) == s; };
  auto word_char = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_';
  };

  struct Spelling {
    std::string_view text;
    Tok kind;
  };
  static constexpr Spelling spellings[] = {
      {"-->", Tok::Arrow},     {"->", Tok::Arrow},    {"*[", Tok::Open},
      {"]", Tok::Close},       {",", Tok::Comma},     {":", Tok::Colon},
      {"(", Tok::LParen},      {")", Tok::RParen},    {"\\not", Tok::Not},
      {"\\and", Tok::And},     {"\\or", Tok::Or},     {"\\implies", Tok::Implies},
      {"¬", Tok::Not},    {"!", Tok::Not},       {"∧", Tok::And},
      {"&", Tok::And},         {"∨", Tok::Or},   {"|", Tok::Or},
      {"⊃", Tok::Implies}, {"=>", Tok::Implies},
  };

  while (i < src.size()) {
    char c = src[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (starts("--") && !starts("-->")) {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    SourcePos at = pos;
    if (word_char(c) && !(c >= '0' && c <= '9')) {
      std::size_t j = i;
      while (j < src.size() && word_char(src[j])) ++j;
      std::string text(src.substr(i, j - i));
      advance(j - i);
      out.push_back({Tok::Ident, std::move(text), at});
      continue;
    }
    bool matched = false;
    for (const auto& s : spellings) {
      if (!starts(s.text)) continue;
      // \not must not swallow the start of a longer word such as \nothing.
      if (s.text.front() == '\\' && i + s.text.size() < src.size() &&
          word_char(src[i + s.text.size()]))
        continue;
      out.push_back({s.kind, std::string(s.text), at});
      advance(s.text.size());
      matched = true;
      break;
    }
    if (!matched) {
      std::size_t len = 1;
      auto uc = static_cast<unsigned char>(c);
      if (uc >= 0xF0) len = 4;
      else if (uc >= 0xE0) len = 3;
      else if (uc >= 0xC0) len = 2;
      throw ParseError(ErrorCode::SyntaxError, origin, at,
                       "unexpected character '" +
                           std::string(src.substr(i, len)) + "'");
    }
  }
  out.push_back({Tok::End, "", pos});
  return out;
}

class Parser {
 public:
  Parser(std::string_view src, std::string origin)
      : origin_(std::move(origin)), toks_(tokenize(src, origin_)) {}

  const Token& peek(std::size_t k = 0) const {
    return toks_[std::min(at_ + k, toks_.size() - 1)];
  }
  bool at_end() const { return peek().kind == Tok::End; }
  bool at_keyword(std::string_view kw) const {
    return peek().kind == Tok::Ident && peek().text == kw;
  }

  [[noreturn]] void fail(const Token& t, const std::string& expected) const {
    std::string found =
        t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(ErrorCode::SyntaxError, origin_, t.pos,
                     "expected " + expected + ", found " + found);
  }

  Token expect(Tok kind) {
    if (peek().kind != kind) fail(peek(), describe(kind));
    return toks_[at_++];
  }
  Token expect_keyword(std::string_view kw) {
    if (!at_keyword(kw)) fail(peek(), "'" + std::string(kw) + "'");
    return toks_[at_++];
  }
  /// An identifier that is not a keyword.
  Token expect_name(const std::string& what = "identifier") {
    if (peek().kind != Tok::Ident || is_keyword(peek().text)) fail(peek(), what);
    return toks_[at_++];
  }
  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++at_;
    return true;
  }

  Formula formula() {
    Formula lhs = disjunction();
    if (accept(Tok::Implies)) return Formula::implication(lhs, formula());
    return lhs;
  }

  SentenceSet sentences() {
    SentenceSet out;
    out.insert(formula());
    while (accept(Tok::Comma)) out.insert(formula());
    return out;
  }

  const std::string& origin() const { return origin_; }

 private:
  Formula disjunction() {
    Formula f = conjunction();
    while (accept(Tok::Or)) f = Formula::disjunction(f, conjunction());
    return f;
  }
  Formula conjunction() {
    Formula f = unary();
    while (accept(Tok::And)) f = Formula::conjunction(f, unary());
    return f;
  }
  Formula unary() {
    if (accept(Tok::Not)) return Formula::negation(unary());
    if (accept(Tok::LParen)) {
      Formula f = formula();
      expect(Tok::RParen);
      return f;
    }
    if (at_keyword("True")) {
      ++at_;
      return Formula::truth();
    }
    if (at_keyword("False")) {
      ++at_;
      return Formula::falsity();
    }
    return Formula::symbol(expect_name("formula").text);
  }

  std::string origin_;
  std::vector<Token> toks_;
  std::size_t at_ = 0;
};

}  // namespace dsl

inline Formula parse_formula(std::string_view text,
                             const std::string& origin = "<formula>") {
  dsl::Parser p(text, origin);
  Formula f = p.formula();
  if (!p.at_end()) p.fail(p.peek(), "end of formula");
  return f;
}

/// Comma-separated formulas, as in guards and effects.
inline SentenceSet parse_sentences(std::string_view text,
                                   const std::string& origin = "<sentences>") {
  dsl::Parser p(text, origin);
  SentenceSet s = p.sentences();
  if (!p.at_end()) p.fail(p.peek(), "',' or end of input");
  return s;
}

/// A component as read from text, before validation, with the warnings and
/// source positions gathered while reading.
struct ParsedComponent {
  Component component;
  std::vector<Diagnostic> warnings;
  /// Where each declared or used name first appears.
  std::map<Name, SourcePos> positions;
  SourcePos start;
};

/// Reads a component without validating it. Throws ParseError on syntax
/// errors.
inline ParsedComponent parse_component_unchecked(
    std::string_view text, const std::string& origin = "<component>") {
  using dsl::Tok;
  dsl::Parser p(text, origin);
  ParsedComponent out;
  Component& c = out.component;
  auto note = [&out](const dsl::Token& t) {
    out.positions.try_emplace(t.text, t.pos);
  };

  out.start = p.expect_keyword("component").pos;
  c.name = p.expect_name("component name").text;

  auto ident_list = [&](std::vector<dsl::Token>& into) {
    if (p.peek().kind != Tok::Ident || is_keyword(p.peek().text)) return;
    into.push_back(p.expect_name());
    while (p.accept(Tok::Comma)) into.push_back(p.expect_name());
  };

  std::vector<dsl::Token> vars, acts, evts;
  p.expect_keyword("variables");
  ident_list(vars);
  if (!vars.empty()) {
    p.expect(Tok::Colon);
    p.expect_keyword("bool");
  }
  p.expect_keyword("actions");
  ident_list(acts);
  p.expect_keyword("events");
  ident_list(evts);

  for (const auto& t : vars) {
    note(t);
    c.add_variable(t.text);
  }
  NameSet declared_actions, declared_events;
  for (const auto& t : acts) {
    note(t);
    declared_actions.insert(t.text);
    c.add_action(t.text);
  }
  for (const auto& t : evts) {
    note(t);
    declared_events.insert(t.text);
    c.add_event(t.text);
  }

  p.expect(Tok::Open);
  auto starts_block = [&p] {
    return p.peek(0).kind == Tok::Ident && p.peek(1).kind == Tok::Colon &&
           p.peek(2).kind == Tok::Ident && p.peek(3).kind == Tok::Colon;
  };
  auto starts_rule = [&p] {
    return p.peek(0).kind == Tok::Ident && !is_keyword(p.peek(0).text) &&
           p.peek(1).kind == Tok::Colon;
  };
  while (p.peek().kind != Tok::Close) {
    if (p.peek(0).kind != Tok::Ident || p.peek(1).kind != Tok::Colon)
      p.fail(p.peek(), "event block or ']'");
    auto event = p.expect_name("event name");
    p.expect(Tok::Colon);
    note(event);
    if (!declared_events.count(event.text) && !c.sig.events.count(event.text))
      out.warnings.push_back(
          {DiagnosticKind::UndeclaredEvent, {event.text},
           "event '" + event.text + "' is not listed under 'events'",
           Severity::Warning});
    c.add_event(event.text);
    do {
      auto action = p.expect_name("action name");
      p.expect(Tok::Colon);
      note(action);
      SentenceSet guard = p.sentences();
      p.expect(Tok::Arrow);
      SentenceSet effect = p.sentences();
      if (!declared_actions.count(action.text) &&
          !c.sig.actions.count(action.text))
        out.warnings.push_back(
            {DiagnosticKind::UndeclaredAction, {action.text},
             "action '" + action.text + "' is not listed under 'actions'",
             Severity::Warning});
      c.add_action(action.text);
      c.pres.prescription[action.text].insert_all(guard);
      c.pres.description[action.text].insert_all(effect);
      c.pres.observation[event.text].insert(action.text);
    } while (!starts_block() && starts_rule());
  }
  p.expect(Tok::Close);
  if (!p.at_end()) p.fail(p.peek(), "end of input after ']'");
  return out;
}

/// Reads and validates a component. Throws ParseError on syntax errors and
/// ValidationFailure if the component is not valid.
inline Component parse_component(std::string_view text,
                                 const std::string& origin = "<component>") {
  ParsedComponent parsed = parse_component_unchecked(text, origin);
  Report r = validate_component(parsed.component);
  if (!r.ok()) {
    std::string what = origin + ": invalid component '" +
                       parsed.component.name +
                       "': " + to_string(r.diagnostics.front());
    throw ValidationFailure(what, std::move(r));
  }
  return std::move(parsed.component);
}

namespace detail {

inline std::string join(const NameSet& names, const char* sep = ", ") {
  std::string out;
  for (const auto& n : names) {
    if (!out.empty()) out += sep;
    out += n;
  }
  return out;
}

}  // namespace detail

/// Canonical text of a component: sections in the usual order, names and
/// sentences sorted. Events observing nothing and actions observed by no
/// event appear only in the declarations, so a presentation attached to an
/// unobserved action is not written out.
inline std::string emit_component(const Component& c) {
  std::ostringstream out;
  out << "component " << c.name << "\n\n";
  out << "variables";
  if (!c.sig.variables.empty())
    out << ' ' << detail::join(c.sig.variables) << " : bool";
  out << "\nactions";
  if (!c.sig.actions.empty()) out << ' ' << detail::join(c.sig.actions);
  out << "\nevents";
  if (!c.sig.events.empty()) out << ' ' << detail::join(c.sig.events);
  out << "\n\n*[";

  bool first_block = true;
  for (const auto& e : c.sig.events) {
    const auto& observed = c.observed(e);
    if (observed.empty()) continue;
    if (!first_block) out << "\n\n  ";
    std::string head = " " + e + ": ";
    out << head;
    bool first_rule = true;
    for (const auto& a : observed) {
      if (!first_rule) out << "\n  " << std::string(head.size(), ' ');
      out << a << ": " << to_string(c.prescription(a)) << " --> "
          << to_string(c.description(a));
      first_rule = false;
    }
    first_block = false;
  }
  out << " ]\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Diagram files
//
//   component <node> <path>          component <node> {
//                                      ...component text...
//                                    }
//   morphism <edge> : <src> -> <dst>
//     var <x> -> <y>
//     action <a> -> <b>
//     event <e> -> <f>
//   environment <env> <path>         (or inline, as for components)
//   leg <node> -> <env>
//     var|action|event lines as above

struct DiagramDocument {
  Diagram diagram;
  std::map<Name, Cocone> environments;
};

/// Reads the file at a path relative to the diagram's directory.
using FileReader = std::function<std::string(const std::string& path)>;

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorCode::IoError, "cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace detail {

struct LineToken {
  std::string text;
  SourcePos pos;
};

inline std::vector<LineToken> split_diagram_line(std::string_view line,
                                                 int line_no) {
  std::vector<LineToken> out;
  std::size_t i = 0;
  int col = 1;
  auto col_at = [&](std::size_t k) {
    int c = 1;
    for (std::size_t j = 0; j < k; ++j)
      if ((static_cast<unsigned char>(line[j]) & 0xC0) != 0x80) ++c;
    return c;
  };
  while (i < line.size()) {
    char ch = line[i];
    if (ch == ' ' || ch == '\t' || ch == '\r') {
      ++i;
      continue;
    }
    if (line.substr(i, 2) == "--" && line.substr(i, 3) != "-->") break;
    col = col_at(i);
    if (line.substr(i, 2) == "->") {
      out.push_back({"->", {line_no, col}});
      i += 2;
      continue;
    }
    if (ch == ':' || ch == '{' || ch == '}') {
      out.push_back({std::string(1, ch), {line_no, col}});
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
           line[j] != '\r' && line[j] != ':' && line.substr(j, 2) != "->")
      ++j;
    out.push_back({std::string(line.substr(i, j - i)), {line_no, col}});
    i = j;
  }
  return out;
}

}  // namespace detail

/// Reads a diagram file, loading referenced components through `read`.
/// Every edge is checked for totality and validity. Environment legs are
/// only resolved; use check_cocone to validate them.
inline DiagramDocument parse_diagram(std::string_view text,
                                     const std::string& origin,
                                     const FileReader& read) {
  DiagramDocument doc;
  auto fail = [&](ErrorCode code, SourcePos pos, const std::string& msg)
      -> void { throw ParseError(code, origin, pos, msg); };

  std::vector<std::string> lines;
  {
    std::string current;
    for (char ch : text) {
      if (ch == '\n') {
        lines.push_back(std::move(current));
        current.clear();
      } else {
        current += ch;
      }
    }
    lines.push_back(std::move(current));
  }

  struct PendingMap {
    enum class Owner { Edge, Leg } owner;
    Name name;  // edge name, or node name for legs
    Name env;   // environment, for legs
    SourcePos pos;
    SignatureMorphism sigma;
    std::map<std::pair<Sort, Name>, SourcePos> entry_pos;
  };
  std::vector<PendingMap> maps;
  std::vector<std::pair<Name, Name>> edge_ends;  // per edge map: source, target
  std::map<Name, SourcePos> node_pos;

  auto load_component = [&](const std::string& label, const Name& who,
                            std::string body, SourcePos pos) {
    try {
      return parse_component(body, label);
    } catch (const ValidationFailure& e) {
      throw ParseError(ErrorCode::ValidationError, origin, pos,
                       "component '" + who + "' is invalid: " +
                           to_string(e.report().diagnostics.front()));
    }
  };

  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const int line_no = static_cast<int>(ln) + 1;
    auto toks = detail::split_diagram_line(lines[ln], line_no);
    if (toks.empty()) continue;
    const auto& head = toks[0].text;
    auto need = [&](std::size_t k, const std::string& what) {
      if (toks.size() <= k)
        fail(ErrorCode::SyntaxError,
             {line_no, static_cast<int>(lines[ln].size()) + 1},
             "expected " + what);
      return toks[k];
    };
    auto expect_text = [&](std::size_t k, const std::string& text) {
      auto t = need(k, "'" + text + "'");
      if (t.text != text)
        fail(ErrorCode::SyntaxError, t.pos,
             "expected '" + text + "', found '" + t.text + "'");
    };
    auto expect_count = [&](std::size_t n) {
      if (toks.size() > n)
        fail(ErrorCode::SyntaxError, toks[n].pos,
             "unexpected '" + toks[n].text + "'");
    };

    if (head == "component" || head == "environment") {
      auto name = need(1, "a name");
      if (!is_valid_name(name.text))
        fail(ErrorCode::SyntaxError, name.pos,
             "'" + name.text + "' is not a valid name");
      auto where = need(2, "a path or '{'");
      std::string body, label;
      if (where.text == "{") {
        expect_count(3);
        std::size_t close = ln + 1;
        while (close < lines.size()) {
          auto t = detail::split_diagram_line(lines[close], 0);
          if (t.size() == 1 && t[0].text == "}") break;
          ++close;
        }
        if (close == lines.size())
          fail(ErrorCode::SyntaxError, where.pos, "unterminated '{'");
        for (std::size_t k = ln + 1; k < close; ++k) body += lines[k] + "\n";
        label = origin + ":" + std::to_string(line_no + 1);
        ln = close;
      } else {
        expect_count(3);
        body = read(where.text);
        label = where.text;
      }
      Component c = load_component(label, name.text, std::move(body), name.pos);
      if (head == "component") {
        if (!doc.diagram.nodes.emplace(name.text, std::move(c)).second)
          fail(ErrorCode::SyntaxError, name.pos,
               "node '" + name.text + "' declared twice");
        node_pos[name.text] = name.pos;
      } else {
        Cocone cocone;
        cocone.apex = std::move(c);
        if (!doc.environments.emplace(name.text, std::move(cocone)).second)
          fail(ErrorCode::SyntaxError, name.pos,
               "environment '" + name.text + "' declared twice");
      }
    } else if (head == "morphism") {
      auto edge = need(1, "an edge name");
      expect_text(2, ":");
      auto src = need(3, "a source node");
      expect_text(4, "->");
      auto dst = need(5, "a target node");
      expect_count(6);
      for (const auto& end : {src, dst})
        if (!doc.diagram.nodes.count(end.text))
          fail(ErrorCode::UnresolvedReference, end.pos,
               "unknown node '" + end.text + "'");
      for (const auto& m : maps)
        if (m.owner == PendingMap::Owner::Edge && m.name == edge.text)
          fail(ErrorCode::SyntaxError, edge.pos,
               "edge '" + edge.text + "' declared twice");
      maps.push_back({PendingMap::Owner::Edge, edge.text, {}, edge.pos, {}, {}});
      edge_ends.emplace_back(src.text, dst.text);
    } else if (head == "leg") {
      auto node = need(1, "a node name");
      expect_text(2, "->");
      auto env = need(3, "an environment name");
      expect_count(4);
      if (!doc.diagram.nodes.count(node.text))
        fail(ErrorCode::UnresolvedReference, node.pos,
             "unknown node '" + node.text + "'");
      if (!doc.environments.count(env.text))
        fail(ErrorCode::UnresolvedReference, env.pos,
             "unknown environment '" + env.text + "'");
      maps.push_back({PendingMap::Owner::Leg, node.text, env.text, node.pos, {}, {}});
      edge_ends.emplace_back(node.text, "");
    } else if (head == "var" || head == "action" || head == "event") {
      if (maps.empty())
        fail(ErrorCode::SyntaxError, toks[0].pos,
             "map line outside a morphism or leg");
      Sort sort = head == "var"      ? Sort::Variable
                  : head == "action" ? Sort::Action
                                     : Sort::Event;
      auto from = need(1, "a name");
      expect_text(2, "->");
      auto to = need(3, "a name");
      expect_count(4);
      auto& m = maps.back();
      if (!m.sigma.map(sort).emplace(from.text, to.text).second)
        fail(ErrorCode::SyntaxError, from.pos,
             "'" + from.text + "' mapped twice");
      m.entry_pos[{sort, from.text}] = from.pos;
    } else {
      fail(ErrorCode::SyntaxError, toks[0].pos,
           "expected 'component', 'morphism', 'environment', 'leg' or a map "
           "line, found '" + head + "'");
    }
  }

  for (std::size_t k = 0; k < maps.size(); ++k) {
    auto& m = maps[k];
    const Component& source = doc.diagram.nodes.at(edge_ends[k].first);
    const Component& target =
        m.owner == PendingMap::Owner::Edge
            ? doc.diagram.nodes.at(edge_ends[k].second)
            : doc.environments.at(m.env).apex;
    const std::string what = m.owner == PendingMap::Owner::Edge
                                 ? "edge '" + m.name + "'"
                                 : "leg '" + m.name + "'";
    for (Sort s : kSorts)
      for (const auto& [from, to] : m.sigma.map(s)) {
        auto pos = m.entry_pos.at({s, from});
        if (!source.sig.names(s).count(from))
          fail(ErrorCode::UnresolvedReference, pos,
               what + ": '" + from + "' is not a " + sort_keyword(s) +
                   " of '" + source.name + "'");
        if (!target.sig.names(s).count(to))
          fail(ErrorCode::UnresolvedReference, pos,
               what + ": '" + to + "' is not a " + sort_keyword(s) + " of '" +
                   target.name + "'");
      }
    if (m.owner == PendingMap::Owner::Leg) {
      auto& cocone = doc.environments.at(m.env);
      if (cocone.legs.count(m.name))
        fail(ErrorCode::SyntaxError, m.pos,
             "second leg for node '" + m.name + "'");
      cocone.legs.emplace(m.name,
                          ComponentMorphism{source, target, std::move(m.sigma)});
      continue;
    }
    for (Sort s : kSorts)
      for (const auto& n : source.sig.names(s))
        if (!m.sigma.map(s).count(n))
          fail(ErrorCode::TotalityViolation, m.pos,
               what + " has no image for " + sort_keyword(s) + " '" + n + "'");
    DiagramEdge edge{m.name, edge_ends[k].first, edge_ends[k].second,
                     std::move(m.sigma)};
    Report r = validate_morphism(doc.diagram.morphism(edge));
    if (!r.ok())
      fail(ErrorCode::ValidationError, m.pos,
           what + " is not a component morphism: " +
               to_string(r.diagnostics.front()));
    doc.diagram.edges.push_back(std::move(edge));
  }
  return doc;
}

/// Reads a diagram file from disk; component paths resolve against the
/// diagram's directory.
inline DiagramDocument load_diagram(const std::filesystem::path& path) {
  std::string text = read_text_file(path);
  auto base = path.parent_path();
  return parse_diagram(text, path.string(), [base](const std::string& rel) {
    return read_text_file(base / rel);
  });
}

inline void emit_map_lines(std::ostream& out, const SignatureMorphism& sigma,
                           const std::string& indent = "  ") {
  for (Sort s : kSorts)
    for (const auto& [from, to] : sigma.map(s))
      out << indent << sort_keyword(s) << ' ' << from << " -> " << to << '\n';
}

/// The legs of a cocone as `leg` blocks into `apex_name`.
inline std::string emit_legs(const Cocone& c, const Name& apex_name) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [node, leg] : c.legs) {
    if (!first) out << '\n';
    out << "leg " << node << " -> " << apex_name << '\n';
    emit_map_lines(out, leg.sigma);
    first = false;
  }
  return out.str();
}

}  // namespace compos
