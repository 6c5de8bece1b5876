#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>

namespace compos {

using Name = std::string;
using NameSet = std::set<Name>;
using NameMap = std::map<Name, Name>;

/// Identifiers: a letter or underscore followed by letters, digits, underscores.
inline bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto alpha = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(s.front())) return false;
  for (char c : s)
    if (!alpha(c) && !digit(c)) return false;
  return true;
}

inline bool is_keyword(std::string_view s) {
  return s == "component" || s == "variables" || s == "actions" ||
         s == "events" || s == "bool" || s == "True" || s == "False";
}

/// Names usable as variables, actions or events.
inline bool is_valid_name(std::string_view s) {
  return is_identifier(s) && !is_keyword(s);
}

inline NameMap identity_map(const NameSet& names) {
  NameMap m;
  for (const auto& n : names) m.emplace(n, n);
  return m;
}

/// first;second. Entries whose intermediate image is missing from `second`
/// are dropped, so the result is total only when `second` covers the image.
inline NameMap compose_maps(const NameMap& first, const NameMap& second) {
  NameMap out;
  for (const auto& [from, mid] : first) {
    auto it = second.find(mid);
    if (it != second.end()) out.emplace(from, it->second);
  }
  return out;
}

inline NameSet image_of(const NameMap& m, const NameSet& names) {
  NameSet out;
  for (const auto& n : names) {
    auto it = m.find(n);
    if (it != m.end()) out.insert(it->second);
  }
  return out;
}

}  // namespace compos
