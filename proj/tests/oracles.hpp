// Test-only oracles, kept independent of the library code paths they check.
#pragma once

#include <cmath>
#include <vector>

#include "dwedge/algebra.hpp"
#include "dwedge/mechanics.hpp"

namespace oracles {

using dwedge::Bivector;
using dwedge::LinearMap;
using dwedge::Particle;
using dwedge::Vector;

// Component-by-component moment formula, written as a plain loop.
inline std::vector<std::vector<double>> wedge_components(const Vector& r,
                                                         const Vector& f) {
  int n = r.dim();
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = f[i] * r[j] - r[i] * f[j];
  return m;
}

// Determinant by recursive cofactor expansion (small matrices only).
inline double det_cofactor(const std::vector<std::vector<double>>& a) {
  std::size_t n = a.size();
  if (n == 1) return a[0][0];
  double sum = 0.0;
  double sign = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<std::vector<double>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<double> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != col) row.push_back(a[i][j]);
      minor.push_back(row);
    }
    sum += sign * a[0][col] * det_cofactor(minor);
    sign = -sign;
  }
  return sum;
}

inline double det_columns(const std::vector<Vector>& vs) {
  std::size_t n = vs.size();
  std::vector<std::vector<double>> a(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = vs[j][static_cast<int>(i)];
  return det_cofactor(a);
}

// Unsigned k-volume via the Gram determinant, with its own det routine.
inline double gram_volume(const std::vector<Vector>& vs) {
  std::size_t k = vs.size();
  std::vector<std::vector<double>> g(k, std::vector<double>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) g[i][j] = dwedge::dot(vs[i], vs[j]);
  double d = det_cofactor(g);
  return d > 0.0 ? std::sqrt(d) : 0.0;
}

// One Gram-Schmidt step: f minus its projection on r.
inline Vector gram_schmidt_perp(const Vector& f, const Vector& r) {
  return f - r * (dwedge::dot(r, f) / dwedge::dot(r, r));
}

// Classical 3-D inertia matrix, integrand written entry by entry:
// diag (y^2+z^2, z^2+x^2, x^2+y^2), off-diagonals -xy, -zx, -yz.
inline LinearMap classical_inertia_3d(const std::vector<Particle>& particles,
                                      const Vector& pole) {
  LinearMap out(3);
  for (const Particle& p : particles) {
    double x = p.position[0] - pole[0];
    double y = p.position[1] - pole[1];
    double z = p.position[2] - pole[2];
    out(0, 0) += p.mass * (y * y + z * z);
    out(1, 1) += p.mass * (z * z + x * x);
    out(2, 2) += p.mass * (x * x + y * y);
    out(0, 1) += p.mass * (-x * y);
    out(1, 0) += p.mass * (-x * y);
    out(0, 2) += p.mass * (-z * x);
    out(2, 0) += p.mass * (-z * x);
    out(1, 2) += p.mass * (-y * z);
    out(2, 1) += p.mass * (-y * z);
  }
  return out;
}

// Rotation about a unit axis in 3-D, axis-vector Rodrigues form.
inline LinearMap rotation_about_axis_3d(const Vector& axis, double angle) {
  double c = std::cos(angle), s = std::sin(angle);
  LinearMap r(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = (1.0 - c) * axis[i] * axis[j];
  for (int i = 0; i < 3; ++i) r(i, i) += c;
  r(0, 1) += -s * axis[2];
  r(1, 0) += s * axis[2];
  r(0, 2) += s * axis[1];
  r(2, 0) += -s * axis[1];
  r(1, 2) += -s * axis[0];
  r(2, 1) += s * axis[0];
  return r;
}

inline double max_entry_diff(const LinearMap& a, const LinearMap& b) {
  return (a - b).max_abs();
}

inline double rel_diff(const Bivector& a, const Bivector& b) {
  double scale = std::max({1.0, a.max_abs(), b.max_abs()});
  return (a - b).max_abs() / scale;
}

inline double rel_diff(const Vector& a, const Vector& b) {
  double scale = std::max({1.0, a.max_abs(), b.max_abs()});
  return (a - b).max_abs() / scale;
}

}  // namespace oracles
