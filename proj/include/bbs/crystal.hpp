#pragma once

// States of the periodic box-ball system and the carrier dynamics.
//
// A state is a word b_1 ... b_L over {1, 2} (1 = empty box, 2 = ball). Time
// evolutions T_l are defined by carrying an element of B_l through the word
// with the combinatorial R : B_l (x) B_1 -> B_1 (x) B_l.

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bbs {

enum class Letter : std::uint8_t { Empty = 1, Ball = 2 };

// Capacity used for T_infinity. Any capacity larger than the ball count gives
// the same dynamics, so the sentinel only needs to be large.
inline constexpr std::int64_t kInfinity = std::numeric_limits<std::int32_t>::max();

// An element (x1, x2) of B_l with x1 + x2 = l.
struct Carrier {
  std::int64_t capacity = 1;
  std::int64_t empties = 1;
  std::int64_t balls = 0;

  static Carrier empty(std::int64_t l) { return Carrier{l, l, 0}; }
  bool valid() const { return capacity > 0 && empties >= 0 && balls >= 0 && empties + balls == capacity; }
  friend bool operator==(const Carrier&, const Carrier&) = default;
};

class State {
 public:
  State() = default;
  explicit State(std::vector<Letter> letters);
  // Parses a plain word over {'1','2'}.
  static State from_string(std::string_view word);
  static State vacuum(std::size_t length);

  std::size_t size() const { return letters_.size(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::string to_string() const;

  friend bool operator==(const State&, const State&) = default;
  friend auto operator<=>(const State&, const State&) = default;

 private:
  std::vector<Letter> letters_;
};

// R : (c, b) -> (b', c').
std::pair<Letter, Carrier> apply_r(const Carrier& c, Letter b);

struct CarrierPassResult {
  State emitted;
  Carrier carrier;
};

CarrierPassResult carrier_pass(std::int64_t l, const State& p);
CarrierPassResult carrier_pass(const Carrier& start, const State& p);

// T_l(p). Throws WellDefinednessViolation when the second pass does not return
// the carrier it started with, and InvalidState when L < 2M.
State time_evolution(std::int64_t l, const State& p);
State time_evolution(std::int64_t l, const State& p, std::int64_t steps);

// T_1^d(p); d may be negative.
State cyclic_shift(const State& p, std::int64_t d);

bool is_highest(const State& p);
std::size_t ball_count(const State& p);

// Throws InvalidState if L < 2M.
void require_admissible(const State& p);

}  // namespace bbs
