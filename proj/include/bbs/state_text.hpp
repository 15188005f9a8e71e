#pragma once

// Compact run-length text for states: segments "w" or "w^n" joined by '.',
// e.g. "1122111111222222.1^154".

#include <string>
#include <string_view>

#include "bbs/crystal.hpp"

namespace bbs {

State parse_state(std::string_view text);

// Runs longer than kCompactRun letters become "c^n" segments; everything
// else is written plainly. States with no such run print as a plain word.
inline constexpr std::size_t kCompactRun = 8;
std::string format_state(const State& p);

}  // namespace bbs
