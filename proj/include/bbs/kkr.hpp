#pragma once

// Rigged configurations and the sl2 Kerov-Kirillov-Reshetikhin bijection
// between highest states of B_1^{(x)L} and rigged configurations.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bbs/crystal.hpp"

namespace bbs {

// Parts i_1 <= ... <= i_g paired with riggings J_i. Storage is normalized:
// parts ascending and, within a block of equal parts, riggings weakly
// increasing (the "upward" order of a Young diagram drawn longest row on top).
struct RiggedConfiguration {
  std::int64_t length = 0;
  std::vector<std::int64_t> parts;
  std::vector<std::int64_t> riggings;

  // Sorts into normalized order; does not check riggings against vacancies.
  static RiggedConfiguration make(std::int64_t length, std::vector<std::int64_t> parts,
                                  std::vector<std::int64_t> riggings);

  std::size_t size() const { return parts.size(); }
  std::int64_t ball_count() const;

  friend bool operator==(const RiggedConfiguration&, const RiggedConfiguration&) = default;
};

// p_i = L - 2 sum_j min(i, j).
std::int64_t vacancy_number(const std::vector<std::int64_t>& parts, std::int64_t i, std::int64_t length);

// One vacancy per part. Throws NegativeVacancy if any is negative.
std::vector<std::int64_t> vacancy_vector(const std::vector<std::int64_t>& parts, std::int64_t length);

// Throws InvalidRigging / NegativeVacancy unless 0 <= J_i <= p_i for all parts.
void validate(const RiggedConfiguration& rc);

// Which of several equal-length singular strings the forward scan lengthens.
// The resulting configuration is the same either way; the switch exists so
// that this can be tested.
enum class TieBreak { Topmost, Bottommost };

RiggedConfiguration kkr_forward(const State& highest, TieBreak tie = TieBreak::Topmost);
State kkr_inverse(const RiggedConfiguration& rc);

// Rigged configuration of q (x) r from those of q and r.
RiggedConfiguration concat_rc(const RiggedConfiguration& q, const RiggedConfiguration& r);

struct HighestDecomposition {
  std::int64_t shift = 0;  // d with p = T_1^d(p_+)
  State highest;
};

// Smallest d in [0, L) such that T_1^{-d}(p) is highest.
HighestDecomposition decompose_to_highest(const State& p);

// Text form:
//   L=14
//   mu=1,2,3
//   rigging=0,4,1
// Lines after a "[...]" section header are ignored by the parser.
std::string format_rigged_configuration(const RiggedConfiguration& rc);
RiggedConfiguration parse_rigged_configuration(std::string_view text);

}  // namespace bbs
