#pragma once

namespace rhombus {

/// Largest accepted color count. Defaults to kMaxColors; the RHOMBUS_N_CAP
/// environment variable may lower it.
int color_cap();

/// Largest n for which enumerate_all and everything built on it will run.
/// Defaults to 8; RHOMBUS_ENUM_CAP overrides (never above color_cap()).
int enumeration_cap();

/// Throws std::out_of_range unless 3 <= n <= color_cap().
void require_color_count(int n);

}  // namespace rhombus
