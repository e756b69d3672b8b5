#pragma once

#include <vector>

#include "dwedge/algebra.hpp"

namespace dwedge {

struct Particle {
  double mass;  // > 0
  Vector position;
  Vector velocity;
};

/// Finite set of point masses sharing one dimension; stands in for a
/// continuum body, with integrals becoming mass-weighted sums.
class PointMassBody {
 public:
  explicit PointMassBody(std::vector<Particle> particles);

  int dim() const { return dim_; }
  double total_mass() const { return total_mass_; }
  const std::vector<Particle>& particles() const { return particles_; }
  Vector center_of_mass() const;

 private:
  std::vector<Particle> particles_;
  int dim_ = 0;
  double total_mass_ = 0.0;
};

/// A plane rotation taking from_dir towards to_dir by angle radians.
struct RotationSpec {
  Vector from_dir;
  Vector to_dir;
  double angle;
};

/// Moment of force f applied at arm r about the origin of r.
Bivector torque(const Vector& r, const Vector& f);

/// Second-moment matrix sum_p m_p (x_p - pole)(x_p - pole)^T.
/// Symmetric positive semidefinite. The classical 3-D inertia matrix is
/// trace(I) Id - I.
LinearMap inertia_matrix(const PointMassBody& body, const Vector& pole);

/// sum_p (x_p - pole) dw (m_p v_p).
Bivector angular_momentum(const PointMassBody& body, const Vector& pole);

/// Rigid-body angular momentum about a pole:
///   m (x_g - pole) dw v_pole + I omega - (I omega)^T.
Bivector rigid_angular_momentum(double total_mass, const Vector& x_g,
                                const Vector& pole, const Vector& v_pole,
                                const LinearMap& inertia,
                                const Bivector& omega);

/// Velocity field of a rigid motion: v_ref + omega . (x - x_ref).
Vector rigid_velocity(const Bivector& omega, const Vector& x,
                      const Vector& x_ref, const Vector& v_ref);

/// Power transferred by torque m at angular velocity omega: 1/2 m : omega.
double power(const Bivector& m, const Bivector& omega);

/// Unit generator of the plane rotation taking from_dir towards to_dir.
/// Satisfies G^3 = -G and ||G||_F = sqrt(2).
Bivector rotation_generator(const RotationSpec& spec);

/// exp(angle * g) . x in closed form, valid for simple generators
/// (g^3 = -g). Throws NumericalError otherwise.
Vector rotate(const Bivector& g, double angle, const Vector& x);

/// The orthogonal matrix exp(angle * g) itself.
LinearMap rotation_matrix(const Bivector& g, double angle);

}  // namespace dwedge
