#include "bbs/state_text.hpp"

#include <charconv>
#include <vector>

#include <fmt/format.h>

#include "bbs/error.hpp"

namespace bbs {

State parse_state(std::string_view text) {
  std::vector<Letter> letters;
  std::size_t pos = 0;
  auto fail = [&](std::size_t at, std::string_view why) {
    throw Error(ErrorCode::ParseError, fmt::format("{} at position {} in '{}'", why, at, text));
  };
  if (text.empty()) fail(0, "empty state");
  while (true) {
    const std::size_t start = pos;
    std::vector<Letter> word;
    while (pos < text.size() && (text[pos] == '1' || text[pos] == '2')) {
      word.push_back(text[pos] == '1' ? Letter::Empty : Letter::Ball);
      ++pos;
    }
    if (word.empty()) fail(start, "expected a word over {1,2}");
    std::size_t repeat = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      const char* first = text.data() + pos;
      const char* last = text.data() + text.size();
      auto [ptr, ec] = std::from_chars(first, last, repeat);
      if (ec != std::errc() || ptr == first) fail(pos, "expected a repeat count");
      if (repeat == 0) fail(pos, "repeat count must be positive");
      pos += static_cast<std::size_t>(ptr - first);
    }
    for (std::size_t r = 0; r < repeat; ++r) letters.insert(letters.end(), word.begin(), word.end());
    if (pos == text.size()) break;
    if (text[pos] != '.') fail(pos, "expected '.' or end of input");
    ++pos;
  }
  return State(std::move(letters));
}

std::string format_state(const State& p) {
  const std::string plain = p.to_string();
  std::vector<std::string> segments;
  std::string pending;
  std::size_t i = 0;
  while (i < plain.size()) {
    std::size_t j = i;
    while (j < plain.size() && plain[j] == plain[i]) ++j;
    const std::size_t run = j - i;
    if (run > kCompactRun) {
      if (!pending.empty()) segments.push_back(std::exchange(pending, {}));
      segments.push_back(fmt::format("{}^{}", plain[i], run));
    } else {
      pending.append(plain, i, run);
    }
    i = j;
  }
  if (!pending.empty()) segments.push_back(pending);
  std::string out;
  for (std::size_t s = 0; s < segments.size(); ++s) {
    if (s) out.push_back('.');
    out += segments[s];
  }
  return out;
}

}  // namespace bbs
