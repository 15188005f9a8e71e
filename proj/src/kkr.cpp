#include "bbs/kkr.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "bbs/error.hpp"

namespace bbs {

namespace {

struct String {
  std::int64_t length;
  std::int64_t rigging;
};

std::vector<std::int64_t> lengths_of(const std::vector<String>& strings) {
  std::vector<std::int64_t> out;
  out.reserve(strings.size());
  for (const auto& s : strings) out.push_back(s.length);
  return out;
}

std::vector<std::int64_t> parse_int_list(std::string_view text, std::string_view field) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string token(text.substr(pos, comma - pos));
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, fmt::format("bad integer '{}' in field {}", token, field));
    }
    pos = comma + 1;
  }
  return out;
}

}  // namespace

RiggedConfiguration RiggedConfiguration::make(std::int64_t length, std::vector<std::int64_t> parts,
                                              std::vector<std::int64_t> riggings) {
  if (parts.size() != riggings.size()) {
    throw Error(ErrorCode::DimensionMismatch, "parts and riggings differ in length");
  }
  for (auto part : parts) {
    if (part <= 0) throw Error(ErrorCode::InvalidRigging, "parts must be positive");
  }
  std::vector<std::pair<std::int64_t, std::int64_t>> rows;
  for (std::size_t i = 0; i < parts.size(); ++i) rows.emplace_back(parts[i], riggings[i]);
  std::sort(rows.begin(), rows.end());
  RiggedConfiguration rc;
  rc.length = length;
  for (const auto& [part, rigging] : rows) {
    rc.parts.push_back(part);
    rc.riggings.push_back(rigging);
  }
  return rc;
}

std::int64_t RiggedConfiguration::ball_count() const {
  return std::accumulate(parts.begin(), parts.end(), std::int64_t{0});
}

std::int64_t vacancy_number(const std::vector<std::int64_t>& parts, std::int64_t i, std::int64_t length) {
  std::int64_t sum = 0;
  for (auto j : parts) sum += std::min(i, j);
  return length - 2 * sum;
}

std::vector<std::int64_t> vacancy_vector(const std::vector<std::int64_t>& parts, std::int64_t length) {
  std::vector<std::int64_t> p;
  p.reserve(parts.size());
  for (auto i : parts) {
    p.push_back(vacancy_number(parts, i, length));
    if (p.back() < 0) {
      throw Error(ErrorCode::NegativeVacancy,
                  fmt::format("p_{} = {} < 0 for mu = {{{}}}, L = {}", i, p.back(),
                              fmt::join(parts, ","), length));
    }
  }
  return p;
}

void validate(const RiggedConfiguration& rc) {
  if (rc.parts.size() != rc.riggings.size()) {
    throw Error(ErrorCode::DimensionMismatch, "parts and riggings differ in length");
  }
  const auto p = vacancy_vector(rc.parts, rc.length);
  for (std::size_t s = 0; s < rc.parts.size(); ++s) {
    if (rc.parts[s] <= 0) throw Error(ErrorCode::InvalidRigging, "parts must be positive");
    if (rc.riggings[s] < 0 || rc.riggings[s] > p[s]) {
      throw Error(ErrorCode::InvalidRigging,
                  fmt::format("rigging {} of part {} outside [0, {}]", rc.riggings[s], rc.parts[s], p[s]));
    }
  }
}

RiggedConfiguration kkr_forward(const State& highest, TieBreak tie) {
  if (!is_highest(highest)) {
    throw Error(ErrorCode::NotHighest, highest.to_string());
  }
  std::vector<String> strings;
  for (std::size_t idx = 0; idx < highest.size(); ++idx) {
    if (highest[idx] == Letter::Empty) continue;
    const auto k = static_cast<std::int64_t>(idx) + 1;
    const auto lengths = lengths_of(strings);

    // Longest string singular with respect to the first k-1 letters.
    std::ptrdiff_t chosen = -1;
    for (std::size_t s = 0; s < strings.size(); ++s) {
      if (strings[s].rigging != vacancy_number(lengths, strings[s].length, k - 1)) continue;
      if (chosen < 0 || strings[s].length > strings[chosen].length ||
          (tie == TieBreak::Topmost && strings[s].length == strings[chosen].length)) {
        chosen = static_cast<std::ptrdiff_t>(s);
      }
    }
    if (chosen < 0) {
      strings.push_back({0, 0});
      chosen = static_cast<std::ptrdiff_t>(strings.size()) - 1;
    }
    ++strings[chosen].length;
    strings[chosen].rigging = vacancy_number(lengths_of(strings), strings[chosen].length, k);
  }

  std::vector<std::int64_t> parts, riggings;
  for (const auto& s : strings) {
    parts.push_back(s.length);
    riggings.push_back(s.rigging);
  }
  auto rc = RiggedConfiguration::make(static_cast<std::int64_t>(highest.size()), std::move(parts),
                                      std::move(riggings));
  validate(rc);
  return rc;
}

State kkr_inverse(const RiggedConfiguration& rc) {
  validate(rc);
  if (rc.length <= 0) throw Error(ErrorCode::InvalidState, "L must be positive");
  std::vector<String> strings;
  for (std::size_t s = 0; s < rc.parts.size(); ++s) strings.push_back({rc.parts[s], rc.riggings[s]});

  std::vector<Letter> word(static_cast<std::size_t>(rc.length), Letter::Empty);
  for (std::int64_t k = rc.length; k >= 1; --k) {
    const auto lengths = lengths_of(strings);
    std::ptrdiff_t chosen = -1;
    for (std::size_t s = 0; s < strings.size(); ++s) {
      if (strings[s].rigging != vacancy_number(lengths, strings[s].length, k)) continue;
      if (chosen < 0 || strings[s].length <= strings[chosen].length) {
        chosen = static_cast<std::ptrdiff_t>(s);
      }
    }
    if (chosen < 0) continue;
    word[static_cast<std::size_t>(k - 1)] = Letter::Ball;
    if (--strings[chosen].length == 0) {
      strings.erase(strings.begin() + chosen);
    } else {
      strings[chosen].rigging = vacancy_number(lengths_of(strings), strings[chosen].length, k - 1);
    }
  }
  if (!strings.empty()) {
    throw Error(ErrorCode::InternalSingularityFailure, "strings left over after the inverse scan");
  }
  return State(std::move(word));
}

RiggedConfiguration concat_rc(const RiggedConfiguration& q, const RiggedConfiguration& r) {
  validate(q);
  validate(r);
  std::vector<std::int64_t> parts = q.parts;
  std::vector<std::int64_t> riggings = q.riggings;
  for (std::size_t s = 0; s < r.parts.size(); ++s) {
    parts.push_back(r.parts[s]);
    riggings.push_back(r.riggings[s] + vacancy_number(q.parts, r.parts[s], q.length));
  }
  return RiggedConfiguration::make(q.length + r.length, std::move(parts), std::move(riggings));
}

HighestDecomposition decompose_to_highest(const State& p) {
  const auto n = static_cast<std::int64_t>(p.size());
  for (std::int64_t d = 0; d < n; ++d) {
    State candidate = cyclic_shift(p, -d);
    if (is_highest(candidate)) return {d, std::move(candidate)};
  }
  throw Error(ErrorCode::NoHighestRotation, p.to_string());
}

std::string format_rigged_configuration(const RiggedConfiguration& rc) {
  return fmt::format("L={}\nmu={}\nrigging={}\n", rc.length, fmt::join(rc.parts, ","),
                     fmt::join(rc.riggings, ","));
}

RiggedConfiguration parse_rigged_configuration(std::string_view text) {
  std::optional<std::int64_t> length;
  std::optional<std::vector<std::int64_t>> parts, riggings;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '[') break;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::ParseError, fmt::format("expected key=value, got '{}'", line));
    const std::string key = line.substr(0, eq);
    const std::string_view value = std::string_view(line).substr(eq + 1);
    if (key == "L") {
      auto v = parse_int_list(value, key);
      if (v.size() != 1) throw Error(ErrorCode::ParseError, "L takes one integer");
      length = v[0];
    } else if (key == "mu") {
      parts = parse_int_list(value, key);
    } else if (key == "rigging") {
      riggings = parse_int_list(value, key);
    } else {
      throw Error(ErrorCode::ParseError, fmt::format("unknown field '{}'", key));
    }
  }
  if (!length || !parts || !riggings) throw Error(ErrorCode::ParseError, "need fields L, mu and rigging");
  auto rc = RiggedConfiguration::make(*length, std::move(*parts), std::move(*riggings));
  validate(rc);
  return rc;
}

}  // namespace bbs
