#include "bbs/crystal.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "bbs/error.hpp"

namespace bbs {

State::State(std::vector<Letter> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw Error(ErrorCode::InvalidState, "a state needs at least one box");
}

State State::from_string(std::string_view word) {
  std::vector<Letter> letters;
  letters.reserve(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) {
    switch (word[i]) {
      case '1': letters.push_back(Letter::Empty); break;
      case '2': letters.push_back(Letter::Ball); break;
      default:
        throw Error(ErrorCode::InvalidState,
                    fmt::format("unexpected character '{}' at position {}", word[i], i));
    }
  }
  return State(std::move(letters));
}

State State::vacuum(std::size_t length) { return State(std::vector<Letter>(length, Letter::Empty)); }

std::string State::to_string() const {
  std::string out;
  out.reserve(letters_.size());
  for (Letter b : letters_) out.push_back(b == Letter::Empty ? '1' : '2');
  return out;
}

std::pair<Letter, Carrier> apply_r(const Carrier& c, Letter b) {
  Carrier next = c;
  if (b == Letter::Empty) {
    if (c.empties == c.capacity) return {Letter::Empty, next};
    ++next.empties;
    --next.balls;
    return {Letter::Ball, next};
  }
  if (c.balls == c.capacity) return {Letter::Ball, next};
  --next.empties;
  ++next.balls;
  return {Letter::Empty, next};
}

CarrierPassResult carrier_pass(const Carrier& start, const State& p) {
  std::vector<Letter> out;
  out.reserve(p.size());
  Carrier c = start;
  for (Letter b : p.letters()) {
    auto [emitted, next] = apply_r(c, b);
    out.push_back(emitted);
    c = next;
  }
  return {State(std::move(out)), c};
}

CarrierPassResult carrier_pass(std::int64_t l, const State& p) {
  if (l <= 0) throw Error(ErrorCode::InvalidState, "carrier capacity must be positive");
  return carrier_pass(Carrier::empty(l), p);
}

void require_admissible(const State& p) {
  const std::size_t m = ball_count(p);
  if (p.size() < 2 * m) {
    throw Error(ErrorCode::InvalidState,
                fmt::format("state {} has L = {} < 2M = {}", p.to_string(), p.size(), 2 * m));
  }
}

State time_evolution(std::int64_t l, const State& p) {
  require_admissible(p);
  const Carrier v = carrier_pass(l, p).carrier;
  auto [next, back] = carrier_pass(v, p);
  if (back != v) {
    throw Error(ErrorCode::WellDefinednessViolation,
                fmt::format("T_{} on {}: carrier ({},{}) came back as ({},{})", l, p.to_string(),
                            v.empties, v.balls, back.empties, back.balls));
  }
  return next;
}

State time_evolution(std::int64_t l, const State& p, std::int64_t steps) {
  State q = p;
  for (std::int64_t t = 0; t < steps; ++t) q = time_evolution(l, q);
  return q;
}

State cyclic_shift(const State& p, std::int64_t d) {
  const auto n = static_cast<std::int64_t>(p.size());
  const std::int64_t r = ((d % n) + n) % n;
  std::vector<Letter> out(p.letters());
  std::rotate(out.begin(), out.end() - r, out.end());
  return State(std::move(out));
}

bool is_highest(const State& p) {
  std::int64_t excess = 0;
  for (Letter b : p.letters()) {
    excess += b == Letter::Empty ? 1 : -1;
    if (excess < 0) return false;
  }
  return true;
}

std::size_t ball_count(const State& p) {
  return static_cast<std::size_t>(std::count(p.letters().begin(), p.letters().end(), Letter::Ball));
}

}  // namespace bbs
