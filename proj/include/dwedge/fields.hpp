#pragma once

#include <functional>

#include "dwedge/algebra.hpp"

namespace dwedge {

/// Evaluatable map (x, t) -> vector. Static fields ignore t; a single
/// time-dependent signature keeps Faraday's law uniform.
struct VectorField {
  int dim;
  std::function<Vector(const Vector&, double)> eval;
};

/// Evaluatable map (x, t) -> antisymmetric matrix.
struct BivectorField {
  int dim;
  std::function<Bivector(const Vector&, double)> eval;
};

/// Step size for central differences: 1e-5 * max(1, |x|_inf).
double default_step(const Vector& x);

/// N-D curl by central differences: [curl v]_ij = dv_i/dx_j - dv_j/dx_i.
/// Exactly antisymmetrized. Throws NumericalError naming the stencil point
/// if the field evaluates non-finite there.
Bivector curl(const VectorField& field, const Vector& x, double t, double h);

/// curl(E) + dB/dt by central differences; near zero for fields satisfying
/// Faraday's law in tensor form.
Bivector faraday_residual(const VectorField& e, const BivectorField& b,
                          const Vector& x, double t, double h, double dt);

/// Magnetic force on a charge: -charge * B . v. Does no work: v . F = 0.
Vector lorentz_force(double charge, const Bivector& b, const Vector& v);

}  // namespace dwedge
