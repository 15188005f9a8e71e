#pragma once

// The period matrix A, the ultradiscrete Riemann theta function
//   Theta(z) = -min_{n in Z^g} { n^T A n / 2 + n^T z },
// and the classical theta sum it is the eps -> 0 limit of.

#include <cstdint>
#include <vector>

#include "bbs/lattice.hpp"

namespace bbs {

// A number in (1/2)Z stored as twice its value.
struct HalfInt {
  std::int64_t doubled = 0;

  static HalfInt from_integer(std::int64_t v) { return HalfInt{2 * v}; }
  double value() const { return static_cast<double>(doubled) / 2.0; }
  bool is_integer() const { return doubled % 2 == 0; }

  friend HalfInt operator+(HalfInt a, HalfInt b) { return {a.doubled + b.doubled}; }
  friend HalfInt operator-(HalfInt a, HalfInt b) { return {a.doubled - b.doubled}; }
  friend bool operator==(const HalfInt&, const HalfInt&) = default;
  friend auto operator<=>(const HalfInt&, const HalfInt&) = default;
};

// A vector in ((1/2)Z)^g stored as twice its value.
struct HalfIntVector {
  IntVector doubled;

  static HalfIntVector from_integers(const IntVector& v);
  std::size_t size() const { return doubled.size(); }
  std::vector<double> values() const;
  friend bool operator==(const HalfIntVector&, const HalfIntVector&) = default;
};

struct BetheMatrix {
  IntVector parts;      // strictly increasing
  std::int64_t length;  // L
  IntMatrix a;
  IntVector vacancies;

  std::size_t genus() const { return parts.size(); }
};

// A_ij = delta_ij p_i + 2 min(i, j). Throws RepeatedParts, NegativeVacancy or
// NotPositiveDefinite.
BetheMatrix build_A(const IntVector& parts, std::int64_t length);

// (min(i, l))_{i in mu}; pass kInfinity for h_infinity.
IntVector h_vector(const IntVector& parts, std::int64_t l);

struct ThetaMinimum {
  HalfInt value;      // Theta(z)
  IntVector argmin;   // one minimizing n
};

ThetaMinimum ud_theta_minimize(const IntMatrix& a, const HalfIntVector& z);
HalfInt ud_theta(const IntMatrix& a, const HalfIntVector& z);
inline HalfInt ud_theta(const BetheMatrix& m, const HalfIntVector& z) { return ud_theta(m.a, z); }

// The argument I - p/2 - k h_1 + r h_infinity used throughout the state formula.
HalfIntVector theta_argument(const BetheMatrix& m, const IntVector& angle, std::int64_t k, int r);

// c_L(m) = m^T (I - p/2 - k h_1 + r h_infinity) + m^T A m / 2.
HalfInt quadratic_form_cL(const BetheMatrix& bm, const IntVector& angle, std::int64_t k, int r,
                          const IntVector& m);

inline constexpr int kDefaultSoftRadius = 12;
inline constexpr double kSoftTailTolerance = 1e-12;

// log of sum_{n} exp(-(n^T A n / 2 + n^T z) / eps) over the box of half-width
// `radius` around round(-A^{-1} z). Throws RadiusTooSmall when the outermost
// shell of the box carries more than kSoftTailTolerance of the total.
double log_riemann_theta_soft(const IntMatrix& a, const std::vector<double>& z, double eps,
                              int radius = kDefaultSoftRadius);
double riemann_theta_soft(const IntMatrix& a, const std::vector<double>& z, double eps,
                          int radius = kDefaultSoftRadius);

}  // namespace bbs
