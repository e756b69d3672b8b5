#pragma once

#include <array>

#include "dwedge/algebra.hpp"

namespace dwedge {

/// Levi-Civita symbol as a materialized 27-entry table, eps[0][1][2] = +1.
extern const std::array<std::array<std::array<int, 3>, 3>, 3> kLeviCivita3;

/// Classic 3-D cross product, component formula.
Vector cross3(const Vector& a, const Vector& b);

/// Axial vector -> antisymmetric matrix: Omega_ij = -sum_k eps_ijk w_k.
Bivector to_bivector(const Vector& w);

/// Antisymmetric matrix -> axial vector: w_i = -1/2 sum_jk eps_ijk Omega_jk.
/// Exact inverse of to_bivector.
Vector to_axial(const Bivector& m);

}  // namespace dwedge
