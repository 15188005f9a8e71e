#pragma once

// Action-angle variables of the periodic box-ball system. The action is the
// soliton content mu (distinct parts only); the angle is an integer vector
// taken modulo the lattice A Z^g.

#include <cstdint>
#include <optional>

#include "bbs/crystal.hpp"
#include "bbs/kkr.hpp"
#include "bbs/theta.hpp"

namespace bbs {

struct ActionAngle {
  IntVector parts;       // strictly increasing
  std::int64_t length = 0;
  IntVector angle;       // a representative of the class mod A Z^g

  std::size_t genus() const { return parts.size(); }
  friend bool operator==(const ActionAngle&, const ActionAngle&) = default;
};

// Phi(p) = J + d h_1 where p = T_1^d(p_+) and phi(p_+) = (mu, J).
ActionAngle direct_scattering(const State& p);

// I + t h_l.
ActionAngle evolve_angle(const ActionAngle& a, std::int64_t l, std::int64_t t);

bool angle_equal_mod_gamma(const ActionAngle& a, const ActionAngle& b);

struct AngleDecomposition {
  std::int64_t shift = 0;   // d
  RiggedConfiguration rc;   // (mu, J) with 0 <= J <= p
  IntVector lattice;        // n with I = J + d h_1 + A n

  friend bool operator==(const AngleDecomposition&, const AngleDecomposition&) = default;
};

// Representative with a prescribed d, searching n in a box of half-width 2
// around A^{-1}(I - d h_1).
std::optional<AngleDecomposition> decompose_angle_at(const ActionAngle& a, std::int64_t d);

// First decomposition found scanning d = 0, 1, ..., L-1. Throws NotFound.
AngleDecomposition canonicalize(const ActionAngle& a);

// T_1^d(phi^{-1}(J)) for the canonical decomposition.
State inverse_scattering(const ActionAngle& a);

}  // namespace bbs
