#pragma once

// Subcommands of the `compos` tool. Each writes to the given streams and
// returns the process exit code: 0 success, 1 validation failure, 2 usage or
// I/O error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "compos/colimit.hpp"
#include "compos/dsl.hpp"
#include "compos/laws.hpp"
#include "compos/simulator.hpp"

namespace compos::cli {

enum Exit : int { kOk = 0, kInvalid = 1, kUsage = 2 };

struct Style {
  bool color = false;

  std::string error() const { return paint("error", "31"); }
  std::string warning() const { return paint("warning", "33"); }
  std::string paint(const std::string& s, const char* code) const {
    return color ? "\033[" + std::string(code) + "m" + s + "\033[0m" : s;
  }
};

namespace detail {

inline int exit_for(const Error& e) {
  return e.code() == ErrorCode::IoError ? kUsage : kInvalid;
}

inline void print_error(std::ostream& err, const Style& st, const Error& e) {
  err << st.error() << ' ' << error_code_label(e.code()) << ' '
      << error_code_name(e.code()) << ": " << e.what() << '\n';
}

inline void print_diagnostic(std::ostream& out, const Style& st,
                             const std::string& path,
                             std::optional<SourcePos> pos, const Diagnostic& d) {
  out << path;
  if (pos) out << ':' << pos->line << ':' << pos->column;
  out << ": "
      << (d.severity == Severity::Warning ? st.warning() : st.error()) << ' '
      << diagnostic_code(d.kind) << ' ' << to_string(d) << '\n';
}

inline int check_component_file(const std::string& path, std::ostream& out,
                                const Style& st) {
  std::string text = read_text_file(path);
  ParsedComponent parsed = parse_component_unchecked(text, path);
  for (const auto& w : parsed.warnings) {
    std::optional<SourcePos> pos;
    if (auto it = parsed.positions.find(w.subjects.front());
        it != parsed.positions.end())
      pos = it->second;
    print_diagnostic(out, st, path, pos, w);
  }
  Report r = validate_component(parsed.component);
  for (const auto& d : r.diagnostics) {
    std::optional<SourcePos> pos = parsed.start;
    for (auto it = d.subjects.rbegin(); it != d.subjects.rend(); ++it)
      if (auto p = parsed.positions.find(*it); p != parsed.positions.end()) {
        pos = p->second;
        break;
      }
    print_diagnostic(out, st, path, pos, d);
  }
  if (!r.ok()) return kInvalid;
  out << path << ": ok (component " << parsed.component.name << ")\n";
  return kOk;
}

inline int check_diagram_file(const std::string& path, std::ostream& out,
                              const Style& st) {
  DiagramDocument doc = load_diagram(path);
  int status = kOk;
  for (const auto& [env, cocone] : doc.environments) {
    Report r = check_cocone(doc.diagram, cocone);
    for (const auto& d : r.diagnostics)
      print_diagnostic(out, st, path + " [environment " + env + "]",
                       std::nullopt, d);
    if (!r.ok()) status = kInvalid;
  }
  if (status == kOk)
    out << path << ": ok (" << doc.diagram.nodes.size() << " nodes, "
        << doc.diagram.edges.size() << " edges, "
        << doc.environments.size() << " environments)\n";
  return status;
}

inline bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace detail

inline int cmd_check(const std::vector<std::string>& paths, std::ostream& out,
                     std::ostream& err, const Style& st = {}) {
  int status = kOk;
  for (const auto& path : paths) {
    int one = kOk;
    try {
      one = detail::ends_with(path, ".diagram")
                ? detail::check_diagram_file(path, out, st)
                : detail::check_component_file(path, out, st);
    } catch (const Error& e) {
      detail::print_error(err, st, e);
      one = detail::exit_for(e);
    }
    status = std::max(status, one);
  }
  return status;
}

inline int cmd_fmt(const std::string& path, std::ostream& out,
                   std::ostream& err, const Style& st = {}) {
  try {
    out << emit_component(parse_component(read_text_file(path), path));
    return kOk;
  } catch (const Error& e) {
    detail::print_error(err, st, e);
    return detail::exit_for(e);
  }
}

/// Writes the colimit apex to `output` (stdout if empty) and, for a file
/// output, its legs to the same path with extension `.legs`.
inline int cmd_compose(const std::string& diagram_path,
                       const std::string& output, const std::string& apex_name,
                       std::ostream& out, std::ostream& err,
                       const Style& st = {}) {
  try {
    DiagramDocument doc = load_diagram(diagram_path);
    ColimitResult r = colimit_system(doc.diagram, apex_name);
    std::string text = emit_component(r.apex());
    if (output.empty()) {
      out << text;
      return kOk;
    }
    std::filesystem::path legs_path(output);
    legs_path.replace_extension(".legs");
    for (const auto& [path, body] :
         {std::pair{std::filesystem::path(output), text},
          std::pair{legs_path, emit_legs(r.cocone, r.apex().name)}}) {
      std::ofstream f(path, std::ios::binary);
      if (!(f << body))
        throw Error(ErrorCode::IoError, "cannot write '" + path.string() + "'");
    }
    out << "wrote " << output << " and " << legs_path.string() << '\n';
    return kOk;
  } catch (const Error& e) {
    detail::print_error(err, st, e);
    return detail::exit_for(e);
  }
}

inline int cmd_mediate(const std::string& diagram_path,
                       const std::string& environment, std::ostream& out,
                       std::ostream& err, const Style& st = {}) {
  try {
    DiagramDocument doc = load_diagram(diagram_path);
    auto env = doc.environments.find(environment);
    if (env == doc.environments.end()) {
      err << st.error() << ": no environment '" << environment
          << "' is declared in " << diagram_path << '\n';
      return kUsage;
    }
    Report r = check_cocone(doc.diagram, env->second);
    if (!r.ok()) {
      const Diagnostic* first = &r.diagnostics.front();
      for (const auto& d : r.diagnostics)
        if (d.kind == DiagnosticKind::NotCommuting) {
          first = &d;
          break;
        }
      err << st.error() << ' ' << diagnostic_code(first->kind) << ' '
          << to_string(*first) << '\n';
      return kInvalid;
    }
    ColimitResult colimit = colimit_system(doc.diagram);
    ComponentMorphism u = mediating_morphism(colimit, env->second);
    out << "mediator " << colimit.apex().name << " -> " << environment << '\n';
    emit_map_lines(out, u.sigma);
    return kOk;
  } catch (const Error& e) {
    detail::print_error(err, st, e);
    return detail::exit_for(e);
  }
}

struct SimulateOptions {
  std::string component_path;
  std::string init;  // comma-separated literals
  std::vector<std::string> schedule;
  std::optional<std::string> reach;
  std::size_t bound = 10;
};

inline int cmd_simulate(const SimulateOptions& opt, std::ostream& out,
                        std::ostream& err, const Style& st = {}) {
  Component c;
  SentenceSet init;
  try {
    c = parse_component(read_text_file(opt.component_path), opt.component_path);
  } catch (const Error& e) {
    detail::print_error(err, st, e);
    return detail::exit_for(e);
  }
  try {
    if (!opt.init.empty()) init = parse_sentences(opt.init, "--init");
    for (const auto& f : init)
      if (!f.is_literal())
        throw Error(ErrorCode::SyntaxError,
                    "--init expects literals, got '" + to_string(f) + "'");
  } catch (const Error& e) {
    detail::print_error(err, st, e);
    return kUsage;
  }

  try {
    if (opt.reach) {
      SentenceSet goal;
      try {
        goal = parse_sentences(*opt.reach, "--reach");
      } catch (const Error& e) {
        detail::print_error(err, st, e);
        return kUsage;
      }
      auto witness = reachable(c, init, goal, opt.bound);
      if (!witness) {
        out << "no witness within " << opt.bound << " steps\n";
        return kInvalid;
      }
      out << render_trace(*witness);
      return kOk;
    }
    auto starts = initial_states(c, init);
    if (starts.size() != 1)
      throw Error(ErrorCode::AmbiguousInitial,
                  std::to_string(starts.size()) +
                      " states satisfy --init; list every variable");
    State current = starts.front();
    out << render_state("init", current) << '\n';
    for (const auto& e : opt.schedule) {
      current = fire(c, current, e);
      out << render_state(e, current) << '\n';
    }
    return kOk;
  } catch (const Error& e) {
    detail::print_error(err, st, e);
    return detail::exit_for(e);
  }
}

struct LawsCliOptions {
  std::uint64_t seed = 42;
  std::size_t iterations = 200;
  /// Name of a deliberately broken operation to substitute, or empty.
  std::string inject;
};

inline int cmd_laws(const LawsCliOptions& opt, std::ostream& out,
                    std::ostream& err, const Style& st = {}) {
  LawOptions lo;
  lo.seed = opt.seed;
  lo.iterations = opt.iterations;
  if (opt.inject == "compose-skip-events") {
    lo.compose = compose_skipping_events;
  } else if (!opt.inject.empty()) {
    err << st.error() << ": unknown fault '" << opt.inject << "'\n";
    return kUsage;
  }
  LawOutcome r = check_laws(lo);
  if (!r.ok) {
    out << "FAILED law '" << r.law << "' at iteration " << r.iterations_run
        << " (seed " << opt.seed << ")\ncounterexample:\n"
        << r.counterexample;
    return kInvalid;
  }
  out << "all laws hold over " << r.iterations_run << " iterations (seed "
      << opt.seed << ")\n";
  return kOk;
}

}  // namespace compos::cli
