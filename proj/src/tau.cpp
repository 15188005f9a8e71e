#include "bbs/tau.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "bbs/error.hpp"
#include "bbs/theta.hpp"

namespace bbs {

namespace {

State occupancies_to_state(const std::vector<std::int64_t>& occupancy, const char* what) {
  std::vector<Letter> letters;
  letters.reserve(occupancy.size());
  for (std::size_t k = 0; k < occupancy.size(); ++k) {
    if (occupancy[k] != 0 && occupancy[k] != 1) {
      throw Error(ErrorCode::NonBinaryOccupancy,
                  fmt::format("{}: box {} has occupancy {}", what, k + 1, occupancy[k]));
    }
    letters.push_back(occupancy[k] == 1 ? Letter::Ball : Letter::Empty);
  }
  return State(std::move(letters));
}

// log theta at I + t h_inf - p/2 - k h_1 + r h_inf for k = 0..L, r = 0, 1.
struct SoftColumn {
  std::vector<double> r0, r1;
};

SoftColumn soft_column(const BetheMatrix& m, const IntVector& angle, double eps, int radius) {
  const std::size_t g = m.genus();
  SoftColumn col;
  col.r0.resize(static_cast<std::size_t>(m.length) + 1);
  col.r1.resize(col.r0.size());
  std::vector<double> z(g);
  for (std::int64_t k = 0; k <= m.length; ++k) {
    for (int r = 0; r <= 1; ++r) {
      for (std::size_t i = 0; i < g; ++i) {
        z[i] = static_cast<double>(angle[i]) - static_cast<double>(m.vacancies[i]) / 2.0 -
               static_cast<double>(k) + static_cast<double>(r * m.parts[i]);
      }
      (r == 0 ? col.r0 : col.r1)[static_cast<std::size_t>(k)] = log_riemann_theta_soft(m.a, z, eps, radius);
    }
  }
  return col;
}

double log_u_from_column(const SoftColumn& c, std::size_t k) {
  return c.r0[k] + c.r1[k - 1] - c.r0[k - 1] - c.r1[k];
}

}  // namespace

std::int64_t ud_tau_infinite(const TauContext& ctx, int r, std::int64_t k) {
  const std::size_t g = ctx.parts.size();
  if (ctx.riggings.size() != g) throw Error(ErrorCode::DimensionMismatch, "parts and riggings differ in length");
  if (g >= 63) throw Error(ErrorCode::CapExceeded, "too many strings for subset enumeration");
  std::int64_t best = 0;  // n = 0
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g); ++mask) {
    std::int64_t value = 0;
    for (std::size_t i = 0; i < g; ++i) {
      if (!(mask >> i & 1)) continue;
      value += ctx.riggings[i] + r * ctx.parts[i] - k;
      for (std::size_t j = 0; j < g; ++j) {
        if (mask >> j & 1) value += std::min(ctx.parts[i], ctx.parts[j]);
      }
    }
    best = std::min(best, value);
  }
  return -best;
}

State kkr_via_tau(const TauContext& ctx) {
  if (!ctx.length || *ctx.length <= 0) throw Error(ErrorCode::InvalidState, "kkr_via_tau needs a system size");
  const std::int64_t length = *ctx.length;
  std::vector<std::int64_t> tau0(static_cast<std::size_t>(length) + 1), tau1(tau0.size());
  for (std::int64_t k = 0; k <= length; ++k) {
    tau0[static_cast<std::size_t>(k)] = ud_tau_infinite(ctx, 0, k);
    tau1[static_cast<std::size_t>(k)] = ud_tau_infinite(ctx, 1, k);
  }
  std::vector<std::int64_t> y(static_cast<std::size_t>(length));
  for (std::size_t k = 1; k <= y.size(); ++k) y[k - 1] = tau0[k] - tau0[k - 1] - tau1[k] + tau1[k - 1];
  return occupancies_to_state(y, "kkr_via_tau");
}

State state_from_angle(const ActionAngle& a) {
  if (a.length <= 0) throw Error(ErrorCode::InvalidState, "L must be positive");
  const BetheMatrix m = build_A(a.parts, a.length);
  if (a.angle.size() != m.genus()) throw Error(ErrorCode::DimensionMismatch, "angle has the wrong length");
  const auto size = static_cast<std::size_t>(a.length) + 1;
  std::vector<std::int64_t> theta0(size), theta1(size);
  for (std::int64_t k = 0; k <= a.length; ++k) {
    theta0[static_cast<std::size_t>(k)] = ud_theta(m, theta_argument(m, a.angle, k, 0)).doubled;
    theta1[static_cast<std::size_t>(k)] = ud_theta(m, theta_argument(m, a.angle, k, 1)).doubled;
  }
  std::vector<std::int64_t> x(static_cast<std::size_t>(a.length));
  for (std::size_t k = 1; k < size; ++k) {
    const std::int64_t doubled = theta0[k] - theta0[k - 1] - theta1[k] + theta1[k - 1];
    x[k - 1] = doubled % 2 == 0 ? doubled / 2 : -1;
  }
  return occupancies_to_state(x, "state_from_angle");
}

State solve_ivp(const State& p, const Schedule& schedule) {
  ActionAngle a = direct_scattering(p);
  for (const auto& [l, t] : schedule) {
    if (l <= 0) throw Error(ErrorCode::InvalidState, "carrier capacity must be positive");
    a = evolve_angle(a, l, t);
  }
  return state_from_angle(a);
}

double log_soften_u(const ActionAngle& a, std::int64_t k, std::int64_t t, double eps, int radius) {
  const BetheMatrix m = build_A(a.parts, a.length);
  const IntVector angle = evolve_angle(a, kInfinity, t).angle;
  std::vector<double> z(m.genus());
  auto log_theta = [&](std::int64_t kk, int r) {
    for (std::size_t i = 0; i < z.size(); ++i) {
      z[i] = static_cast<double>(angle[i]) - static_cast<double>(m.vacancies[i]) / 2.0 -
             static_cast<double>(kk) + static_cast<double>(r * m.parts[i]);
    }
    return log_riemann_theta_soft(m.a, z, eps, radius);
  };
  return log_theta(k, 0) + log_theta(k - 1, 1) - log_theta(k - 1, 0) - log_theta(k, 1);
}

double soften_u(const ActionAngle& a, std::int64_t k, std::int64_t t, double eps, int radius) {
  return std::exp(log_soften_u(a, k, t, eps, radius));
}

SoftGrid soften_grid(const ActionAngle& a, std::int64_t t_max, double eps, int radius) {
  if (t_max < 0) throw Error(ErrorCode::InvalidState, "t_max must be non-negative");
  const BetheMatrix m = build_A(a.parts, a.length);
  SoftGrid grid{a.length, t_max, std::vector<double>(static_cast<std::size_t>(a.length * (t_max + 1)))};
  for (std::int64_t t = 0; t <= t_max; ++t) {
    const SoftColumn col = soft_column(m, evolve_angle(a, kInfinity, t).angle, eps, radius);
    for (std::int64_t k = 1; k <= a.length; ++k) {
      grid.values[static_cast<std::size_t>((k - 1) * (t_max + 1) + t)] =
          std::exp(log_u_from_column(col, static_cast<std::size_t>(k)));
    }
  }
  return grid;
}

void write_soft_grid_csv(std::ostream& out, const SoftGrid& grid) {
  out << "k,t,u\n";
  for (std::int64_t k = 1; k <= grid.length; ++k) {
    for (std::int64_t t = 0; t <= grid.t_max; ++t) {
      out << fmt::format("{},{},{}\n", k, t, grid.at(k, t));
    }
  }
}

}  // namespace bbs
