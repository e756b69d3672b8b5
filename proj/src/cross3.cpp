#include "dwedge/cross3.hpp"

#include <string>

namespace dwedge {

namespace {

std::array<std::array<std::array<int, 3>, 3>, 3> build_levi_civita() {
  std::array<std::array<std::array<int, 3>, 3>, 3> eps{};
  eps[0][1][2] = eps[1][2][0] = eps[2][0][1] = +1;
  eps[0][2][1] = eps[2][1][0] = eps[1][0][2] = -1;
  return eps;
}

void require_dim3(int d, const char* op) {
  if (d != 3) {
    throw DimensionError(std::string(op) + ": requires dimension 3, got " +
                         std::to_string(d));
  }
}

}  // namespace

const std::array<std::array<std::array<int, 3>, 3>, 3> kLeviCivita3 =
    build_levi_civita();

Vector cross3(const Vector& a, const Vector& b) {
  require_dim3(a.dim(), "cross3");
  require_dim3(b.dim(), "cross3");
  return Vector{a[1] * b[2] - a[2] * b[1],  //
                a[2] * b[0] - a[0] * b[2],  //
                a[0] * b[1] - a[1] * b[0]};
}

Bivector to_bivector(const Vector& w) {
  require_dim3(w.dim(), "to_bivector");
  Bivector m(3);
  // Literal double sum so the table itself is exercised.
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s -= kLeviCivita3[i][j][k] * w[k];
      m.set(i, j, s);
    }
  }
  return m;
}

Vector to_axial(const Bivector& m) {
  require_dim3(m.dim(), "to_axial");
  Vector w = Vector::zero(3);
  for (int i = 0; i < 3; ++i) {
    double s = 0.0;
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) s += kLeviCivita3[i][j][k] * m(j, k);
    w[i] = -0.5 * s;
  }
  return w;
}

}  // namespace dwedge
