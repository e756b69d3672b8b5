#include "dwedge/mechanics.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace dwedge {

namespace {

void require_same_dim(int a, int b, const char* op) {
  if (a != b) {
    throw DimensionError(std::string(op) + ": dimension mismatch (" +
                         std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

LinearMap as_matrix(const Bivector& b) {
  LinearMap m(b.dim());
  for (int i = 0; i < b.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j) m(i, j) = b(i, j);
  return m;
}

}  // namespace

PointMassBody::PointMassBody(std::vector<Particle> particles)
    : particles_(std::move(particles)) {
  if (particles_.empty()) {
    throw DimensionError("PointMassBody: needs at least one particle");
  }
  dim_ = particles_[0].position.dim();
  for (const Particle& p : particles_) {
    if (p.mass <= 0.0) throw NumericalError("PointMassBody: mass must be > 0");
    require_same_dim(p.position.dim(), dim_, "PointMassBody");
    require_same_dim(p.velocity.dim(), dim_, "PointMassBody");
    total_mass_ += p.mass;
  }
}

Vector PointMassBody::center_of_mass() const {
  Vector c = Vector::zero(dim_);
  for (const Particle& p : particles_) c = c + p.position * p.mass;
  return c * (1.0 / total_mass_);
}

Bivector torque(const Vector& r, const Vector& f) { return doublewedge(r, f); }

LinearMap inertia_matrix(const PointMassBody& body, const Vector& pole) {
  require_same_dim(body.dim(), pole.dim(), "inertia_matrix");
  int n = body.dim();
  LinearMap out(n);
  for (const Particle& p : body.particles()) {
    Vector d = p.position - pole;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out(i, j) += p.mass * d[i] * d[j];
  }
  return out;
}

Bivector angular_momentum(const PointMassBody& body, const Vector& pole) {
  require_same_dim(body.dim(), pole.dim(), "angular_momentum");
  Bivector out(body.dim());
  for (const Particle& p : body.particles()) {
    out = out + doublewedge(p.position - pole, p.velocity * p.mass);
  }
  return out;
}

Bivector rigid_angular_momentum(double total_mass, const Vector& x_g,
                                const Vector& pole, const Vector& v_pole,
                                const LinearMap& inertia,
                                const Bivector& omega) {
  require_same_dim(x_g.dim(), pole.dim(), "rigid_angular_momentum");
  require_same_dim(x_g.dim(), v_pole.dim(), "rigid_angular_momentum");
  require_same_dim(x_g.dim(), inertia.dim(), "rigid_angular_momentum");
  require_same_dim(x_g.dim(), omega.dim(), "rigid_angular_momentum");
  int n = x_g.dim();
  Bivector out = doublewedge((x_g - pole) * total_mass, v_pole);
  LinearMap iw = inertia * as_matrix(omega);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      out.add(i, j, iw(i, j) - iw(j, i));
  return out;
}

Vector rigid_velocity(const Bivector& omega, const Vector& x,
                      const Vector& x_ref, const Vector& v_ref) {
  return v_ref + apply(omega, x - x_ref);
}

double power(const Bivector& m, const Bivector& omega) {
  return 0.5 * contraction(m, omega);
}

Bivector rotation_generator(const RotationSpec& spec) {
  const Vector& a = spec.from_dir;
  const Vector& b = spec.to_dir;
  require_same_dim(a.dim(), b.dim(), "rotation_generator");
  double na = norm(a);
  double nb = norm(b);
  if (na <= kAbsTol || nb <= kAbsTol) {
    throw NumericalError("rotation_generator: degenerate rotation plane");
  }
  double cosab = dot(a, b) / (na * nb);
  double sin2 = 1.0 - cosab * cosab;
  if (sin2 <= 1e-18) {  // sine of angle between directions > 1e-9
    throw NumericalError("rotation_generator: degenerate rotation plane");
  }
  Vector a_hat = a * (1.0 / na);
  Vector b_perp = perpendicular_component(b, a);
  return doublewedge(a_hat, b_perp * (1.0 / norm(b_perp)));
}

LinearMap rotation_matrix(const Bivector& g, double angle) {
  int n = g.dim();
  LinearMap gm = as_matrix(g);
  LinearMap g2 = gm * gm;
  LinearMap g3 = g2 * gm;
  double scale = gm.max_abs();
  double err = (g3 + gm).max_abs();
  if (err > 1e-9 * std::max(1.0, scale * scale * scale)) {
    throw NumericalError("rotate: not a simple rotation generator");
  }
  LinearMap r = LinearMap::identity(n) + gm * std::sin(angle) +
                g2 * (1.0 - std::cos(angle));
  return r;
}

Vector rotate(const Bivector& g, double angle, const Vector& x) {
  require_same_dim(g.dim(), x.dim(), "rotate");
  return rotation_matrix(g, angle) * x;
}

}  // namespace dwedge
