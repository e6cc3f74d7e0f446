#pragma once

#include <string>
#include <vector>

#include "rhombus/csd.hpp"
#include "rhombus/text_io.hpp"

namespace fixtures {

/// The 16-tiling super-domain for n=5 read off the raising-flip diagram: each
/// vertex collects the flip labels along a shortest path from the standard tiling.
inline const std::vector<std::string>& example3_lists() {
  static const std::vector<std::string> lists{
      "{}",
      "234",
      "234,235",
      "134,234",
      "134,234,235",
      "124,134,234",
      "234,235,245",
      "124,134,234,235",
      "134,234,235,245",
      "134,135,234,235",
      "134,135,234,235,245",
      "124,134,135,234,235",
      "134,135,145,234,235,245",
      "124,125,134,135,234,235",
      "123,124,134,234",
      "234,235,245,345",
  };
  return lists;
}

inline rhombus::SuperDomain example3_domain() {
  std::vector<rhombus::Tiling> members;
  for (const auto& list : example3_lists())
    members.emplace_back(rhombus::parse_triple_list(list, 5));
  return rhombus::SuperDomain(5, std::move(members));
}

inline rhombus::Tiling tiling(const std::string& text, int n = 0) {
  return rhombus::Tiling(n ? rhombus::parse_inversion_set(text, n)
                           : rhombus::parse_inversion_set(text));
}

inline rhombus::SuperDomain domain(int n, const std::vector<std::string>& texts) {
  std::vector<rhombus::Tiling> members;
  for (const auto& t : texts) members.push_back(tiling(t, n));
  return rhombus::SuperDomain(n, std::move(members));
}

}  // namespace fixtures
