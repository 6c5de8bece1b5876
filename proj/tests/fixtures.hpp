#pragma once

#include <string>

#include "compos/compos.hpp"
#include "compos/laws.hpp"

namespace compos::test {

inline std::string model_path(const std::string& file) {
  return std::string(COMPOS_MODELS_DIR) + "/hunting/" + file;
}

inline Component load(const std::string& file) {
  return parse_component(read_text_file(model_path(file)), file);
}

inline Formula sym(const std::string& n) { return Formula::symbol(n); }
inline Formula neg(const Formula& f) { return Formula::negation(f); }
inline Formula conj(const Formula& a, const Formula& b) {
  return Formula::conjunction(a, b);
}

/// Morphism given by identity on every source name.
inline ComponentMorphism inclusion(const Component& from, const Component& to) {
  return {from, to,
          {identity_map(from.sig.variables), identity_map(from.sig.actions),
           identity_map(from.sig.events)}};
}

inline DiagramDocument hunting_document(const std::string& file = "hunting.diagram") {
  return load_diagram(model_path(file));
}

inline Diagram hunting_diagram() { return hunting_document().diagram; }

}  // namespace compos::test
