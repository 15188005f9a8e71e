#include "bbs/bethe.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "bbs/error.hpp"
#include "bbs/kkr.hpp"
#include "bbs/lattice.hpp"
#include "bbs/tau.hpp"

namespace bbs {

namespace {

void require_cap(std::int64_t length) {
  if (length > kMaxBetheLength) {
    throw Error(ErrorCode::CapExceeded, fmt::format("L = {} exceeds the 2^L cap L <= {}", length, kMaxBetheLength));
  }
}

// A^{-1}(J - p/2), not reduced.
std::vector<Rational> raw_root(const BetheMatrix& m, const IntVector& rigging) {
  if (rigging.size() != m.genus()) throw Error(ErrorCode::DimensionMismatch, "rigging has the wrong length");
  std::vector<Rational> rhs(m.genus());
  for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] = Rational(rigging[i]) - Rational(m.vacancies[i], 2);
  return solve(m.a, rhs);
}

}  // namespace

BetheRoot bethe_root(const IntVector& parts, std::int64_t length, const IntVector& rigging) {
  const BetheMatrix m = build_A(parts, length);
  BetheRoot root{raw_root(m, rigging)};
  for (auto& x : root.u) x = x.frac();
  return root;
}

Rational bethe_eigenvalue_phase(const IntVector& parts, std::int64_t length, const IntVector& rigging,
                                std::int64_t l) {
  const BetheRoot root = bethe_root(parts, length, rigging);
  const IntVector h = h_vector(parts, l);
  Rational phase(0);
  for (std::size_t i = 0; i < h.size(); ++i) phase += Rational(h[i]) * (root.u[i] + Rational(1, 2));
  return phase.frac();
}

std::complex<double> unit_phase(const Rational& turns) {
  // Reduce first so the angle passed to cos/sin stays in [0, 2 pi).
  const double angle = 2.0 * std::numbers::pi * turns.frac().to_double();
  return {std::cos(angle), std::sin(angle)};
}

std::complex<double> bethe_eigenvalue(const IntVector& parts, std::int64_t length, const IntVector& rigging,
                                      std::int64_t l) {
  return unit_phase(bethe_eigenvalue_phase(parts, length, rigging, l));
}

std::size_t basis_index(const State& p) {
  std::size_t index = 0;
  for (Letter b : p.letters()) index = (index << 1) | (b == Letter::Ball ? 1u : 0u);
  return index;
}

State basis_state(std::size_t index, std::size_t length) {
  std::vector<Letter> letters(length);
  for (std::size_t i = 0; i < length; ++i) {
    letters[i] = (index >> (length - 1 - i) & 1) ? Letter::Ball : Letter::Empty;
  }
  return State(std::move(letters));
}

AngleGroup::AngleGroup(const IntVector& parts, std::int64_t length)
    : matrix_(build_A(parts, length)) {
  require_cap(length);
  representatives_ = coset_representatives(hermite_lower(matrix_.a));
  monomials_.reserve(representatives_.size());
  for (const auto& angle : representatives_) {
    monomials_.push_back(state_from_angle(ActionAngle{parts, length, angle}));
  }
}

Rational AngleGroup::coefficient_phase(const IntVector& angle, const IntVector& rigging) const {
  const auto root = raw_root(matrix_, rigging);
  Rational phase(0);
  for (std::size_t i = 0; i < angle.size(); ++i) phase -= Rational(angle[i]) * (root[i] + Rational(1, 2));
  return phase.frac();
}

BetheVector bethe_vector(const AngleGroup& group, const IntVector& rigging) {
  const std::int64_t length = group.matrix().length;
  BetheVector v{length, ComplexVector(std::size_t{1} << length)};
  for (std::size_t s = 0; s < group.order(); ++s) {
    v.coefficients[basis_index(group.monomials()[s])] +=
        unit_phase(group.coefficient_phase(group.representatives()[s], rigging));
  }
  return v;
}

BetheVector bethe_vector(const IntVector& parts, std::int64_t length, const IntVector& rigging) {
  return bethe_vector(AngleGroup(parts, length), rigging);
}

ComplexVector apply_time_evolution(std::int64_t l, const ComplexVector& v, std::size_t length) {
  ComplexVector out(v.size());
  for (std::size_t index = 0; index < v.size(); ++index) {
    if (v[index] == std::complex<double>{}) continue;
    out[basis_index(time_evolution(l, basis_state(index, length)))] += v[index];
  }
  return out;
}

std::complex<double> inner_product(const ComplexVector& a, const ComplexVector& b) {
  std::complex<double> acc{};
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

double verify_eigenrelation(const AngleGroup& group, const IntVector& rigging, std::int64_t l) {
  const auto& m = group.matrix();
  const BetheVector v = bethe_vector(group, rigging);
  const ComplexVector tv = apply_time_evolution(l, v.coefficients, static_cast<std::size_t>(m.length));
  const std::complex<double> lambda = bethe_eigenvalue(m.parts, m.length, rigging, l);
  double residual = 0.0, norm = 0.0;
  for (std::size_t i = 0; i < tv.size(); ++i) {
    residual += std::norm(tv[i] - lambda * v.coefficients[i]);
    norm += std::norm(v.coefficients[i]);
  }
  return std::sqrt(residual / norm);
}

double verify_eigenrelation(const IntVector& parts, std::int64_t length, const IntVector& rigging,
                            std::int64_t l) {
  return verify_eigenrelation(AngleGroup(parts, length), rigging, l);
}

ComplexVector monomial_from_bethe_basis(const AngleGroup& group, const IntVector& angle) {
  const std::int64_t length = group.matrix().length;
  ComplexVector out(std::size_t{1} << length);
  const double scale = 1.0 / static_cast<double>(group.order());
  for (const auto& rigging : group.representatives()) {
    const BetheVector v = bethe_vector(group, rigging);
    const std::complex<double> weight = std::conj(unit_phase(group.coefficient_phase(angle, rigging))) * scale;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += weight * v.coefficients[i];
  }
  return out;
}

ComplexVector monomial_from_bethe_basis(const ActionAngle& a) {
  return monomial_from_bethe_basis(AngleGroup(a.parts, a.length), a.angle);
}

std::vector<State> states_with_content(const IntVector& parts, std::int64_t length) {
  std::int64_t balls = 0;
  for (auto part : parts) balls += part;
  std::vector<State> out;
  if (length <= 0 || 2 * balls > length) return out;
  if (length > 62) throw Error(ErrorCode::CapExceeded, "exhaustive enumeration is limited to L <= 62");

  // Walk all L-bit words with exactly `balls` set bits (Gosper's hack).
  const auto n = static_cast<std::size_t>(length);
  auto consider = [&](std::uint64_t word) {
    const State p = basis_state(word, n);
    const auto [d, highest] = decompose_to_highest(p);
    if (kkr_forward(highest).parts == parts) out.push_back(p);
  };
  if (balls == 0) {
    consider(0);
    return out;
  }
  std::uint64_t word = (std::uint64_t{1} << balls) - 1;
  const std::uint64_t limit = std::uint64_t{1} << length;
  while (word < limit) {
    consider(word);
    const std::uint64_t c = word & -word;
    const std::uint64_t r = word + c;
    word = (((r ^ word) >> 2) / c) | r;
  }
  return out;
}

StateCount state_count_check(const IntVector& parts, std::int64_t length) {
  const BetheMatrix m = build_A(parts, length);
  StateCount result{determinant(m.a), static_cast<std::int64_t>(states_with_content(parts, length).size())};
  // L p_{i_1} ... p_{i_{g-1}}; the empty content has det A = 1.
  std::int64_t product = m.genus() == 0 ? 1 : length;
  for (std::size_t s = 0; s + 1 < m.genus(); ++s) product *= m.vacancies[s];
  if (result.determinant != product) {
    throw Error(ErrorCode::Mismatch, fmt::format("det A = {} but L p_1...p_(g-1) = {}", result.determinant, product));
  }
  if (result.determinant != result.count) {
    throw Error(ErrorCode::Mismatch, fmt::format("det A = {} but |P(mu)| = {} for mu = {{{}}}, L = {}",
                                                 result.determinant, result.count, fmt::join(parts, ","), length));
  }
  return result;
}

}  // namespace bbs
