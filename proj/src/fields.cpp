#include "dwedge/fields.hpp"

#include <cmath>
#include <sstream>
#include <string>

namespace dwedge {

namespace {

std::string describe_point(const Vector& x, double t) {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < x.dim(); ++i) os << (i ? ", " : "") << x[i];
  os << "; t=" << t << ")";
  return os.str();
}

Vector eval_checked(const VectorField& field, const Vector& x, double t) {
  Vector v = field.eval(x, t);
  if (v.dim() != field.dim) {
    throw DimensionError("field returned dimension " + std::to_string(v.dim()) +
                         ", declared " + std::to_string(field.dim));
  }
  for (int i = 0; i < v.dim(); ++i) {
    if (!std::isfinite(v[i])) {
      throw NumericalError("field evaluates non-finite at " +
                           describe_point(x, t));
    }
  }
  return v;
}

}  // namespace

double default_step(const Vector& x) {
  return 1e-5 * std::max(1.0, x.max_abs());
}

Bivector curl(const VectorField& field, const Vector& x, double t, double h) {
  if (x.dim() != field.dim) {
    throw DimensionError("curl: point dimension " + std::to_string(x.dim()) +
                         " vs field dimension " + std::to_string(field.dim));
  }
  if (!(h > 0.0)) throw NumericalError("curl: step must be > 0");
  int n = field.dim;
  // Partial derivatives dv_i/dx_j, one stencil pair per direction.
  std::vector<double> grad(static_cast<std::size_t>(n) * n);
  for (int j = 0; j < n; ++j) {
    Vector xp = x;
    Vector xm = x;
    xp[j] += h;
    xm[j] -= h;
    Vector vp = eval_checked(field, xp, t);
    Vector vm = eval_checked(field, xm, t);
    for (int i = 0; i < n; ++i) grad[i * n + j] = (vp[i] - vm[i]) / (2.0 * h);
  }
  Bivector out(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      out.set(i, j, grad[i * n + j] - grad[j * n + i]);
  return out;
}

Bivector faraday_residual(const VectorField& e, const BivectorField& b,
                          const Vector& x, double t, double h, double dt) {
  if (e.dim != b.dim) {
    throw DimensionError("faraday_residual: E dim " + std::to_string(e.dim) +
                         " vs B dim " + std::to_string(b.dim));
  }
  if (!(dt > 0.0)) throw NumericalError("faraday_residual: dt must be > 0");
  Bivector rot = curl(e, x, t, h);
  Bivector bdot = (b.eval(x, t + dt) - b.eval(x, t - dt)) * (1.0 / (2.0 * dt));
  return rot + bdot;
}

Vector lorentz_force(double charge, const Bivector& b, const Vector& v) {
  return apply(b, v) * (-charge);
}

}  // namespace dwedge
