#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "bbs/crystal.hpp"
#include "bbs/error.hpp"
#include "bbs/kkr.hpp"
#include "bbs/scattering.hpp"
#include "bbs/state_text.hpp"
#include "bbs/tau.hpp"
#include "bbs/verify.hpp"

using bbs::ActionAngle;
using bbs::IntVector;
using bbs::State;
using bbs::TauContext;

namespace {

State s(const char* w) { return State::from_string(w); }

// tau by listing all of {0,1}^g, written independently of the library
std::int64_t tau_oracle(const IntVector& parts, const IntVector& rig, int r, std::int64_t k) {
  std::int64_t best = 0;
  const std::size_t g = parts.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << g); ++mask) {
    std::int64_t v = 0;
    for (std::size_t i = 0; i < g; ++i) {
      if (!(mask >> i & 1)) continue;
      v += rig[i] + r * parts[i] - k;
      for (std::size_t j = 0; j < g; ++j)
        if (mask >> j & 1) v += std::min(parts[i], parts[j]);
    }
    best = std::min(best, v);
  }
  return -best;
}

}  // namespace

TEST_CASE("tau function examples") {
  const TauContext empty{{}, {}, std::nullopt};
  for (std::int64_t k = -3; k <= 3; ++k) {
    CHECK(bbs::ud_tau_infinite(empty, 0, k) == 0);
    CHECK(bbs::ud_tau_infinite(empty, 1, k) == 0);
  }
  const TauContext one{{1}, {0}, 2};
  CHECK(bbs::ud_tau_infinite(one, 0, 0) == 0);
  CHECK(bbs::ud_tau_infinite(one, 0, 1) == 0);
  CHECK(bbs::ud_tau_infinite(one, 0, 2) == 1);
  for (std::int64_t k = 0; k <= 2; ++k) CHECK(bbs::ud_tau_infinite(one, 1, k) == 0);
  CHECK(bbs::ud_tau_infinite({{1, 2, 3}, {0, 4, 1}, 14}, 0, 0) == 0);

  std::mt19937_64 rng(1);
  for (int i = 0; i < 300; ++i) {
    const auto rc = bbs::random_rigged_configuration(rng, 2 + static_cast<std::int64_t>(rng() % 13));
    const auto ctx = TauContext::from(rc);
    for (std::int64_t k = 0; k <= rc.length; ++k)
      for (int r : {0, 1}) CHECK(bbs::ud_tau_infinite(ctx, r, k) == tau_oracle(rc.parts, rc.riggings, r, k));
  }
}

TEST_CASE("tau functions invert the rigged configuration") {
  CHECK(bbs::kkr_via_tau({{1}, {0}, 2}) == s("12"));
  CHECK(bbs::kkr_via_tau({{1, 2, 3}, {8, 4, 1}, 14}) == s("11112221112212"));
  CHECK(bbs::kkr_via_tau({{}, {}, 3}) == s("111"));
  CHECK_THROWS_AS(bbs::kkr_via_tau({{1}, {0}, std::nullopt}), bbs::Error);

  std::mt19937_64 rng(42);
  for (int i = 0; i < 1000; ++i) {
    const auto rc = bbs::random_rigged_configuration(rng, 1 + static_cast<std::int64_t>(rng() % 14));
    CHECK(bbs::kkr_via_tau(TauContext::from(rc)) == bbs::kkr_inverse(rc));
  }
}

TEST_CASE("states from angles") {
  CHECK(bbs::state_from_angle({{1, 2, 3}, 14, {1002, 2006, 2003}}) == s("11112221112212"));
  CHECK(bbs::state_from_angle({{1, 2, 3}, 14, {2, 6, 3}}) == s("22121111222111"));
  CHECK(bbs::format_state(bbs::state_from_angle({{2, 6}, 170, {0, 0}})) == "1122111111222222.1^154");
  CHECK(bbs::format_state(bbs::state_from_angle({{2, 6}, 170, {140, 420}})) == "1^94.222222.1^38.22.1^30");
  CHECK(bbs::state_from_angle({{}, 5, {}}) == s("11111"));
  CHECK_THROWS_AS(bbs::state_from_angle({{1, 1}, 10, {0, 0}}), bbs::Error);
}

TEST_CASE("shift covariance") {
  const IntVector mu{1, 2, 3};
  const auto h1 = bbs::h_vector(mu, 1);
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<std::int64_t> d(-500, 500);
  for (int i = 0; i < 100; ++i) {
    ActionAngle a{mu, 14, {d(rng), d(rng), d(rng)}};
    const auto p = bbs::state_from_angle(a);
    CHECK(bbs::ball_count(p) == 6);
    for (std::size_t j = 0; j < 3; ++j) a.angle[j] += h1[j];
    CHECK(bbs::state_from_angle(a) == bbs::cyclic_shift(p, 1));
  }
}

TEST_CASE("initial value problem") {
  CHECK(bbs::solve_ivp(s("22121111222111"), {{2, 1000}}) == s("11112221112212"));
  CHECK(bbs::solve_ivp(s("22121111222111"), {{3, 1000}}) == s("12211122111122"));
  CHECK(bbs::time_evolution(3, s("22121111222111"), 1000) == s("12211122111122"));
  CHECK(bbs::solve_ivp(s("22121111222111"), {}) == s("22121111222111"));
  CHECK(bbs::solve_ivp(s("22121111222111"), {{2, 3}, {bbs::kInfinity, 2}, {1, 5}}) ==
        bbs::time_evolution(1, bbs::time_evolution(bbs::kInfinity, bbs::time_evolution(2, s("22121111222111"), 3), 2),
                            5));
  CHECK_THROWS_AS(bbs::solve_ivp(s("1212"), {{1, 1}}), bbs::Error);

  for (std::int64_t len = 1; len <= 9; ++len) {
    for (const auto& p : bbs::admissible_states(len)) {
      const auto mu = bbs::kkr_forward(bbs::decompose_to_highest(p).highest).parts;
      bool distinct = true;
      for (std::size_t i = 1; i < mu.size(); ++i) distinct = distinct && mu[i] != mu[i - 1];
      if (!distinct) continue;
      for (std::int64_t l = 1; l <= 4; ++l)
        for (std::int64_t t = 0; t <= 3; ++t) CHECK(bbs::solve_ivp(p, {{l, t}}) == bbs::time_evolution(l, p, t));
    }
  }
}

TEST_CASE("softened field") {
  const ActionAngle fig{{2, 6}, 170, {0, 0}};
  for (std::int64_t k : {1, 17, 90, 170})
    for (std::int64_t t : {0, 35, 70}) {
      const double u = bbs::soften_u(fig, k, t, 7.0);
      CHECK(u > 0.0);
      CHECK(std::isfinite(u));
      CHECK(bbs::soften_u(fig, k + 170, t, 7.0) == doctest::Approx(u).epsilon(1e-9));
      CHECK(bbs::log_soften_u(fig, k, t, 7.0) == doctest::Approx(std::log(u)).epsilon(1e-12));
    }

  const auto grid = bbs::soften_grid({{1, 2}, 10, {0, 1}}, 3, 1.5);
  CHECK(grid.values.size() == 40);
  CHECK(grid.at(4, 2) == doctest::Approx(bbs::soften_u({{1, 2}, 10, {0, 1}}, 4, 2, 1.5)).epsilon(1e-14));
  std::ostringstream a, b;
  bbs::write_soft_grid_csv(a, grid);
  bbs::write_soft_grid_csv(b, bbs::soften_grid({{1, 2}, 10, {0, 1}}, 3, 1.5));
  CHECK(a.str() == b.str());
  CHECK(a.str().rfind("k,t,u\n1,0,", 0) == 0);
  std::size_t lines = 0;
  for (char c : a.str()) lines += c == '\n';
  CHECK(lines == 41);
}

TEST_CASE("softened field approaches the box occupancy") {
  // small eps and a well separated configuration: eps log u is already close
  const ActionAngle a{{1, 3}, 16, {2, 5}};
  const auto p = bbs::state_from_angle(a);
  for (std::int64_t k = 1; k <= 16; ++k) {
    const double x = p[static_cast<std::size_t>(k - 1)] == bbs::Letter::Ball ? 1.0 : 0.0;
    CHECK(std::abs(0.02 * bbs::log_soften_u(a, k, 0, 0.02) - x) < 0.15);
  }
}
