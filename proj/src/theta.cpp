#include "bbs/theta.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include <fmt/format.h>

#include "bbs/crystal.hpp"
#include "bbs/error.hpp"
#include "bbs/kkr.hpp"

namespace bbs {

namespace {

// A = L D L^T with L unit lower triangular. Returns false if some pivot is
// not positive.
bool ldl(const IntMatrix& a, std::vector<double>& lower, std::vector<double>& diag) {
  const std::size_t n = a.rows();
  lower.assign(n * n, 0.0);
  diag.assign(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    double d = static_cast<double>(a(j, j));
    for (std::size_t k = 0; k < j; ++k) d -= lower[j * n + k] * lower[j * n + k] * diag[k];
    if (!(d > 0.0)) return false;
    diag[j] = d;
    lower[j * n + j] = 1.0;
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = static_cast<double>(a(i, j));
      for (std::size_t k = 0; k < j; ++k) s -= lower[i * n + k] * lower[j * n + k] * diag[k];
      lower[i * n + j] = s / d;
    }
  }
  return true;
}

// Solves A x = b with the LDL factors.
std::vector<double> ldl_solve(const std::vector<double>& lower, const std::vector<double>& diag,
                              std::vector<double> b) {
  const std::size_t n = diag.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < i; ++k) b[i] -= lower[i * n + k] * b[k];
  for (std::size_t i = 0; i < n; ++i) b[i] /= diag[i];
  for (std::size_t i = n; i-- > 0;)
    for (std::size_t k = i + 1; k < n; ++k) b[i] -= lower[k * n + i] * b[k];
  return b;
}

// n^T A n + n^T w, exact.
std::int64_t doubled_objective(const IntMatrix& a, const IntVector& w, const IntVector& n) {
  __int128 acc = 0;
  const std::size_t g = n.size();
  for (std::size_t i = 0; i < g; ++i) {
    if (n[i] == 0) continue;
    __int128 row = 0;
    for (std::size_t j = 0; j < g; ++j) row += static_cast<__int128>(a(i, j)) * n[j];
    acc += static_cast<__int128>(n[i]) * (row + w[i]);
  }
  if (acc > INT64_MAX || acc < INT64_MIN) throw std::overflow_error("theta objective overflow");
  return static_cast<std::int64_t>(acc);
}

}  // namespace

HalfIntVector HalfIntVector::from_integers(const IntVector& v) {
  HalfIntVector out;
  out.doubled.reserve(v.size());
  for (auto x : v) out.doubled.push_back(2 * x);
  return out;
}

std::vector<double> HalfIntVector::values() const {
  std::vector<double> out;
  out.reserve(doubled.size());
  for (auto x : doubled) out.push_back(static_cast<double>(x) / 2.0);
  return out;
}

BetheMatrix build_A(const IntVector& parts, std::int64_t length) {
  for (std::size_t s = 1; s < parts.size(); ++s) {
    if (parts[s] <= parts[s - 1]) {
      throw Error(ErrorCode::RepeatedParts, "parts must be strictly increasing");
    }
  }
  for (auto part : parts) {
    if (part <= 0) throw Error(ErrorCode::InvalidRigging, "parts must be positive");
  }
  BetheMatrix m{parts, length, IntMatrix(parts.size(), parts.size()), vacancy_vector(parts, length)};
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = 0; j < parts.size(); ++j) {
      m.a(i, j) = (i == j ? m.vacancies[i] : 0) + 2 * std::min(parts[i], parts[j]);
    }
  }
  for (auto minor : leading_minors(m.a)) {
    if (minor <= 0) throw Error(ErrorCode::NotPositiveDefinite, "A has a non-positive leading minor");
  }
  return m;
}

IntVector h_vector(const IntVector& parts, std::int64_t l) {
  IntVector h;
  h.reserve(parts.size());
  for (auto i : parts) h.push_back(std::min(i, l));
  return h;
}

ThetaMinimum ud_theta_minimize(const IntMatrix& a, const HalfIntVector& z) {
  const std::size_t g = z.size();
  if (a.rows() != g || a.cols() != g) throw Error(ErrorCode::DimensionMismatch, "theta: A and z differ in size");
  if (g == 0) return {HalfInt{0}, {}};

  std::vector<double> lower, diag;
  if (!ldl(a, lower, diag)) throw Error(ErrorCode::NotPositiveDefinite, "theta: A is not positive definite");

  const IntVector& w = z.doubled;  // objective is n^T A n + n^T w = 2 Q(n)
  std::vector<double> neg_half_w(g);
  for (std::size_t i = 0; i < g; ++i) neg_half_w[i] = -static_cast<double>(w[i]) / 2.0;
  const std::vector<double> center = ldl_solve(lower, diag, neg_half_w);

  double center_value = 0.0;  // 2 Q(x*) = -z^T A^{-1} z
  for (std::size_t i = 0; i < g; ++i) center_value += center[i] * static_cast<double>(w[i]) / 2.0;

  IntVector best_n(g);
  for (std::size_t i = 0; i < g; ++i) best_n[i] = static_cast<std::int64_t>(std::llround(center[i]));
  std::int64_t best = doubled_objective(a, w, best_n);

  // Only strictly better points matter; 2Q is an integer, so search
  // (n - x*)^T A (n - x*) <= best - 1 - 2Q(x*) with half a unit of slack.
  auto radius = [&] { return static_cast<double>(best) - 1.0 - center_value + 0.5; };

  IntVector n(g, 0);
  std::function<void(std::size_t, double)> descend = [&](std::size_t level, double used) {
    // level counts down from g; coordinate i = level - 1.
    const std::size_t i = level - 1;
    double c = center[i];
    for (std::size_t j = i + 1; j < g; ++j) c -= lower[j * g + i] * (static_cast<double>(n[j]) - center[j]);
    const double room = radius() - used;
    if (room < 0.0) return;
    const double half_width = std::sqrt(room / diag[i]);
    const auto lo = static_cast<std::int64_t>(std::ceil(c - half_width));
    const auto hi = static_cast<std::int64_t>(std::floor(c + half_width));
    for (std::int64_t v = lo; v <= hi; ++v) {
      const double delta = static_cast<double>(v) - c;
      const double next_used = used + diag[i] * delta * delta;
      if (next_used > radius()) continue;
      n[i] = v;
      if (i == 0) {
        const std::int64_t value = doubled_objective(a, w, n);
        if (value < best) {
          best = value;
          best_n = n;
        }
      } else {
        descend(level - 1, next_used);
      }
    }
  };
  descend(g, 0.0);
  return {HalfInt{-best}, best_n};
}

HalfInt ud_theta(const IntMatrix& a, const HalfIntVector& z) { return ud_theta_minimize(a, z).value; }

HalfIntVector theta_argument(const BetheMatrix& m, const IntVector& angle, std::int64_t k, int r) {
  if (angle.size() != m.genus()) throw Error(ErrorCode::DimensionMismatch, "angle has the wrong length");
  const std::int64_t top = m.parts.empty() ? 0 : m.parts.back();
  HalfIntVector z;
  z.doubled.resize(m.genus());
  for (std::size_t i = 0; i < m.genus(); ++i) {
    const std::int64_t h_inf = std::min(m.parts[i], top);
    z.doubled[i] = 2 * angle[i] - m.vacancies[i] - 2 * k + 2 * r * h_inf;
  }
  return z;
}

HalfInt quadratic_form_cL(const BetheMatrix& bm, const IntVector& angle, std::int64_t k, int r,
                          const IntVector& m) {
  if (m.size() != bm.genus()) throw Error(ErrorCode::DimensionMismatch, "m has the wrong length");
  const HalfIntVector z = theta_argument(bm, angle, k, r);
  return HalfInt{doubled_objective(bm.a, z.doubled, m)};
}

double log_riemann_theta_soft(const IntMatrix& a, const std::vector<double>& z, double eps, int radius) {
  const std::size_t g = z.size();
  if (!(eps > 0.0)) throw Error(ErrorCode::InvalidState, "eps must be positive");
  if (radius < 1) throw Error(ErrorCode::RadiusTooSmall, "radius must be at least 1");
  if (a.rows() != g) throw Error(ErrorCode::DimensionMismatch, "theta: A and z differ in size");
  if (g == 0) return 0.0;

  std::vector<double> lower, diag;
  if (!ldl(a, lower, diag)) throw Error(ErrorCode::NotPositiveDefinite, "theta: A is not positive definite");
  std::vector<double> neg_z(g);
  for (std::size_t i = 0; i < g; ++i) neg_z[i] = -z[i];
  const std::vector<double> center = ldl_solve(lower, diag, neg_z);
  IntVector base(g);
  for (std::size_t i = 0; i < g; ++i) base[i] = static_cast<std::int64_t>(std::llround(center[i]));

  // Two passes: find the largest exponent, then accumulate relative to it.
  std::vector<double> exponents;
  std::vector<char> on_shell;
  IntVector offset(g, -radius);
  IntVector n(g);
  while (true) {
    bool shell = false;
    for (std::size_t i = 0; i < g; ++i) {
      n[i] = base[i] + offset[i];
      shell = shell || offset[i] == -radius || offset[i] == radius;
    }
    double q = 0.0;
    for (std::size_t i = 0; i < g; ++i) {
      double row = 0.0;
      for (std::size_t j = 0; j < g; ++j) row += static_cast<double>(a(i, j)) * static_cast<double>(n[j]);
      q += static_cast<double>(n[i]) * (0.5 * row + z[i]);
    }
    exponents.push_back(-q / eps);
    on_shell.push_back(shell ? 1 : 0);

    std::size_t pos = 0;
    while (pos < g && ++offset[pos] > radius) offset[pos++] = -radius;
    if (pos == g) break;
  }
  const double top = *std::max_element(exponents.begin(), exponents.end());
  double total = 0.0, shell_total = 0.0;
  for (std::size_t s = 0; s < exponents.size(); ++s) {
    const double term = std::exp(exponents[s] - top);
    total += term;
    if (on_shell[s]) shell_total += term;
  }
  if (shell_total > kSoftTailTolerance * total) {
    throw Error(ErrorCode::RadiusTooSmall,
                fmt::format("outer shell carries {:.3g} of the theta sum at radius {}", shell_total / total, radius));
  }
  return top + std::log(total);
}

double riemann_theta_soft(const IntMatrix& a, const std::vector<double>& z, double eps, int radius) {
  return std::exp(log_riemann_theta_soft(a, z, eps, radius));
}

}  // namespace bbs
