#include "bbs/scattering.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "bbs/error.hpp"

namespace bbs {

namespace {

void require_distinct(const IntVector& parts) {
  for (std::size_t s = 1; s < parts.size(); ++s) {
    if (parts[s] == parts[s - 1]) {
      throw Error(ErrorCode::RepeatedParts,
                  fmt::format("soliton content {{{}}} has equal amplitudes", fmt::join(parts, ",")));
    }
  }
}

}  // namespace

ActionAngle direct_scattering(const State& p) {
  require_admissible(p);
  const auto [d, highest] = decompose_to_highest(p);
  const RiggedConfiguration rc = kkr_forward(highest);
  require_distinct(rc.parts);
  ActionAngle a{rc.parts, rc.length, rc.riggings};
  for (auto& v : a.angle) v += d;
  return a;
}

ActionAngle evolve_angle(const ActionAngle& a, std::int64_t l, std::int64_t t) {
  ActionAngle out = a;
  const IntVector h = h_vector(a.parts, l);
  for (std::size_t i = 0; i < h.size(); ++i) out.angle[i] += t * h[i];
  return out;
}

bool angle_equal_mod_gamma(const ActionAngle& a, const ActionAngle& b) {
  if (a.parts != b.parts || a.length != b.length) {
    throw Error(ErrorCode::DimensionMismatch, "angles belong to different (mu, L)");
  }
  const BetheMatrix m = build_A(a.parts, a.length);
  IntVector diff(a.genus());
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = a.angle[i] - b.angle[i];
  const auto x = solve(m.a, diff);
  return std::all_of(x.begin(), x.end(), [](const Rational& r) { return r.is_integer(); });
}

std::optional<AngleDecomposition> decompose_angle_at(const ActionAngle& a, std::int64_t d) {
  constexpr std::int64_t kHalfWidth = 2;
  const BetheMatrix m = build_A(a.parts, a.length);
  const std::size_t g = a.genus();
  IntVector base = a.angle;
  for (auto& v : base) v -= d;
  if (g == 0) return AngleDecomposition{d, RiggedConfiguration{a.length, {}, {}}, {}};

  const auto exact = solve(m.a, base);
  IntVector center(g);
  for (std::size_t i = 0; i < g; ++i) center[i] = static_cast<std::int64_t>(std::llround(exact[i].to_double()));

  IntVector offset(g, -kHalfWidth);
  IntVector n(g);
  while (true) {
    for (std::size_t i = 0; i < g; ++i) n[i] = center[i] + offset[i];
    const IntVector an = m.a * n;
    bool ok = true;
    IntVector rigging(g);
    for (std::size_t i = 0; i < g && ok; ++i) {
      rigging[i] = base[i] - an[i];
      ok = rigging[i] >= 0 && rigging[i] <= m.vacancies[i];
    }
    if (ok) return AngleDecomposition{d, RiggedConfiguration{a.length, a.parts, rigging}, n};

    // lexicographic odometer, last coordinate fastest
    std::size_t pos = g;
    while (pos > 0) {
      --pos;
      if (++offset[pos] <= kHalfWidth) break;
      offset[pos] = -kHalfWidth;
      if (pos == 0) return std::nullopt;
    }
  }
}

AngleDecomposition canonicalize(const ActionAngle& a) {
  for (std::int64_t d = 0; d < a.length; ++d) {
    if (auto found = decompose_angle_at(a, d)) return *found;
  }
  throw Error(ErrorCode::NotFound,
              fmt::format("no rigged-configuration representative for I = ({})", fmt::join(a.angle, ",")));
}

State inverse_scattering(const ActionAngle& a) {
  const AngleDecomposition dec = canonicalize(a);
  return cyclic_shift(kkr_inverse(dec.rc), dec.shift);
}

}  // namespace bbs
