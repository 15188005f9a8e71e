#pragma once

// Ultradiscrete tau functions and the theta-function solution of the initial
// value problem.

#include <cstdint>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "bbs/crystal.hpp"
#include "bbs/kkr.hpp"
#include "bbs/scattering.hpp"

namespace bbs {

// Rigged-configuration data for the infinite-lattice tau function. Parts are
// weakly increasing; equal parts are allowed here.
struct TauContext {
  IntVector parts;
  IntVector riggings;
  std::optional<std::int64_t> length;

  static TauContext from(const RiggedConfiguration& rc) { return {rc.parts, rc.riggings, rc.length}; }
};

// tau_r(k) = -min_{n in {0,1}^g} { sum_i (J_i + r i - k) n_i + sum_{i,j} min(i,j) n_i n_j }.
std::int64_t ud_tau_infinite(const TauContext& ctx, int r, std::int64_t k);

// Box occupancies y(k) = tau_0(k) - tau_0(k-1) - tau_1(k) + tau_1(k-1), k = 1..L.
State kkr_via_tau(const TauContext& ctx);

// The state whose action-angle variable is `a`, from second differences of
// the ultradiscrete theta function.
State state_from_angle(const ActionAngle& a);

// A schedule entry (l, t) applies T_l^t; use kInfinity for T_infinity.
using Schedule = std::vector<std::pair<std::int64_t, std::int64_t>>;

State solve_ivp(const State& p, const Schedule& schedule);

// ln u(k, t) for the softened field at temperature eps.
double log_soften_u(const ActionAngle& a, std::int64_t k, std::int64_t t, double eps,
                    int radius = kDefaultSoftRadius);
double soften_u(const ActionAngle& a, std::int64_t k, std::int64_t t, double eps,
                int radius = kDefaultSoftRadius);

// u(k, t) for 1 <= k <= L, 0 <= t <= t_max, stored k-major.
struct SoftGrid {
  std::int64_t length = 0;
  std::int64_t t_max = 0;
  std::vector<double> values;

  double at(std::int64_t k, std::int64_t t) const {
    return values[static_cast<std::size_t>((k - 1) * (t_max + 1) + t)];
  }
};

SoftGrid soften_grid(const ActionAngle& a, std::int64_t t_max, double eps, int radius = kDefaultSoftRadius);

// CSV with header "k,t,u", one row per grid point in k-major order.
void write_soft_grid_csv(std::ostream& out, const SoftGrid& grid);

}  // namespace bbs
