#pragma once

// Self-checks over exhaustive small systems and seeded random instances,
// grouped by module. Backs the `verify` CLI subcommand.

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "bbs/crystal.hpp"
#include "bbs/kkr.hpp"
#include "bbs/lattice.hpp"

namespace bbs {

// Every state of length L with L >= 2M.
std::vector<State> admissible_states(std::int64_t length);

// Every strictly increasing partition mu with 2 |mu| <= L.
std::vector<IntVector> distinct_part_contents(std::int64_t length);

// A uniformly chosen partition of a random M <= L/2 (repeated parts allowed),
// with riggings drawn uniformly from [0, p_i].
RiggedConfiguration random_rigged_configuration(std::mt19937_64& rng, std::int64_t length);

struct VerifyOptions {
  std::int64_t max_length = 10;
  std::uint64_t seed = 0;
};

struct SuiteReport {
  std::string name;
  std::size_t checks = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

SuiteReport verify_crystal(const VerifyOptions& opts);
SuiteReport verify_kkr(const VerifyOptions& opts);
SuiteReport verify_theta(const VerifyOptions& opts);
SuiteReport verify_scattering(const VerifyOptions& opts);
SuiteReport verify_tau(const VerifyOptions& opts);
SuiteReport verify_bethe(const VerifyOptions& opts);

inline constexpr std::string_view kSuiteNames[] = {"crystal", "kkr", "theta", "scattering", "tau", "bethe"};

// `suite` is one of kSuiteNames or "all".
std::vector<SuiteReport> run_suites(std::string_view suite, const VerifyOptions& opts);

}  // namespace bbs
