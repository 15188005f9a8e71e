#pragma once

// q = 0 Bethe vectors: joint eigenvectors of the commuting time evolutions on
// (C^2)^{(x)L}, built as character sums over the angle group Z^g / A Z^g.

#include <complex>
#include <cstdint>
#include <vector>

#include "bbs/crystal.hpp"
#include "bbs/rational.hpp"
#include "bbs/scattering.hpp"
#include "bbs/theta.hpp"

namespace bbs {

inline constexpr std::int64_t kMaxBetheLength = 20;

// u with A u = J - p/2, each component reduced into [0, 1).
struct BetheRoot {
  std::vector<Rational> u;
};

BetheRoot bethe_root(const IntVector& parts, std::int64_t length, const IntVector& rigging);

// Lambda_l(J) = exp(2 pi i phase); the phase h_l^T (u + h_1/2) mod 1.
Rational bethe_eigenvalue_phase(const IntVector& parts, std::int64_t length, const IntVector& rigging,
                                std::int64_t l);
std::complex<double> bethe_eigenvalue(const IntVector& parts, std::int64_t length, const IntVector& rigging,
                                      std::int64_t l);

std::complex<double> unit_phase(const Rational& turns);

// Index of a state in the 2^L basis: b_1 is the most significant bit and the
// letter 2 is bit value 1.
std::size_t basis_index(const State& p);
State basis_state(std::size_t index, std::size_t length);

using ComplexVector = std::vector<std::complex<double>>;

// The angle group of (mu, L) with its monomial states p(I) cached.
class AngleGroup {
 public:
  AngleGroup(const IntVector& parts, std::int64_t length);

  const BetheMatrix& matrix() const { return matrix_; }
  const std::vector<IntVector>& representatives() const { return representatives_; }
  const std::vector<State>& monomials() const { return monomials_; }
  std::size_t order() const { return representatives_.size(); }

  // Phase of c_{I,J} = exp(-2 pi i I^T (A^{-1}(J - p/2) + h_1/2)), mod 1.
  Rational coefficient_phase(const IntVector& angle, const IntVector& rigging) const;

 private:
  BetheMatrix matrix_;
  std::vector<IntVector> representatives_;
  std::vector<State> monomials_;
};

struct BetheVector {
  std::int64_t length = 0;
  ComplexVector coefficients;  // dimension 2^L
};

BetheVector bethe_vector(const AngleGroup& group, const IntVector& rigging);
BetheVector bethe_vector(const IntVector& parts, std::int64_t length, const IntVector& rigging);

// T_l extended linearly to (C^2)^{(x)L}.
ComplexVector apply_time_evolution(std::int64_t l, const ComplexVector& v, std::size_t length);

// || T_l |J> - Lambda_l(J) |J> || / || |J> ||.
double verify_eigenrelation(const AngleGroup& group, const IntVector& rigging, std::int64_t l);
double verify_eigenrelation(const IntVector& parts, std::int64_t length, const IntVector& rigging,
                            std::int64_t l);

// p(I) = (1/|J|) sum_J conj(c_{I,J}) |J>.
ComplexVector monomial_from_bethe_basis(const AngleGroup& group, const IntVector& angle);
ComplexVector monomial_from_bethe_basis(const ActionAngle& a);

std::complex<double> inner_product(const ComplexVector& a, const ComplexVector& b);

// All states of length L whose soliton content is exactly `parts`.
std::vector<State> states_with_content(const IntVector& parts, std::int64_t length);

struct StateCount {
  std::int64_t determinant = 0;
  std::int64_t count = 0;
};

// det A next to the exhaustive |P(mu)|. Throws Mismatch if they differ or if
// det A != L p_{i_1} ... p_{i_{g-1}}.
StateCount state_count_check(const IntVector& parts, std::int64_t length);

}  // namespace bbs
