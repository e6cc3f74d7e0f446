#include "rhombus/config.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "rhombus/lambda.hpp"

namespace rhombus {

namespace {

int env_int(const char* name, int fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  try {
    return std::stoi(raw);
  } catch (const std::exception&) {
    return fallback;
  }
}

}  // namespace

int color_cap() {
  static const int cap = std::clamp(env_int("RHOMBUS_N_CAP", kMaxColors), 3, kMaxColors);
  return cap;
}

int enumeration_cap() {
  static const int cap = std::clamp(env_int("RHOMBUS_ENUM_CAP", 8), 3, color_cap());
  return cap;
}

void require_color_count(int n) {
  if (n < 3 || n > color_cap())
    throw std::out_of_range("color count " + std::to_string(n) + " outside [3, " +
                            std::to_string(color_cap()) + "]");
}

}  // namespace rhombus
