#pragma once

#include <filesystem>
#include <string>

#include "refine/formats.hpp"
#include "refine/lts.hpp"

namespace refine::testing {

inline Lts lts(const std::string& text) { return parse_lts(text, "<test>"); }

inline Lts fixture(const std::string& name) {
  auto path = std::filesystem::path(REFINE_FIXTURE_DIR) / name;
  return parse_lts(read_text_file(path), path.string());
}

inline Word word(const Lts& l, const std::string& text) { return parse_word(text, l.alphabet()); }

inline ActionSet set_of(const Alphabet& a, std::initializer_list<std::string> labels) {
  ActionSet x(a.size());
  for (const auto& l : labels) x.insert(a.id(l));
  return x;
}

}  // namespace refine::testing
