#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "dwedge/errors.hpp"

namespace dwedge {

/// Default comparison tolerances: relative 1e-12 against the largest
/// magnitude involved, with an absolute floor of 1e-15.
inline constexpr double kRelTol = 1e-12;
inline constexpr double kAbsTol = 1e-15;

/// |a - b| <= max(abs_floor, rel * scale), scale defaulting to max(|a|,|b|).
bool close(double a, double b, double rel = kRelTol, double abs_floor = kAbsTol);

class Vector {
 public:
  Vector() = default;
  Vector(std::initializer_list<double> c);
  explicit Vector(std::vector<double> c);

  static Vector zero(int dim);
  static Vector unit(int dim, int axis);

  int dim() const { return static_cast<int>(c_.size()); }
  double operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  double& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  const std::vector<double>& components() const { return c_; }

  Vector operator+(const Vector& o) const;
  Vector operator-(const Vector& o) const;
  Vector operator*(double s) const;
  friend Vector operator*(double s, const Vector& v) { return v * s; }

  double max_abs() const;

 private:
  std::vector<double> c_;
};

double dot(const Vector& a, const Vector& b);
double norm(const Vector& v);

/// Antisymmetric N x N matrix. Stored dense row-major; all writes go
/// through set(), which keeps A_ij = -A_ji and a zero diagonal.
class Bivector {
 public:
  Bivector() = default;
  explicit Bivector(int dim);

  int dim() const { return dim_; }
  double operator()(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * dim_ + j];
  }
  /// Writes entry (i,j) and its negated mirror. i == j requires v == 0.
  void set(int i, int j, double v);
  void add(int i, int j, double v) { set(i, j, (*this)(i, j) + v); }

  Bivector operator+(const Bivector& o) const;
  Bivector operator-(const Bivector& o) const;
  Bivector operator-() const;
  Bivector operator*(double s) const;
  friend Bivector operator*(double s, const Bivector& b) { return b * s; }

  double max_abs() const;
  const std::vector<double>& entries() const { return a_; }

 private:
  int dim_ = 0;
  std::vector<double> a_;
};

/// General dense N x N real matrix.
class LinearMap {
 public:
  LinearMap() = default;
  explicit LinearMap(int dim);
  static LinearMap identity(int dim);

  int dim() const { return dim_; }
  double operator()(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * dim_ + j];
  }
  double& operator()(int i, int j) {
    return a_[static_cast<std::size_t>(i) * dim_ + j];
  }

  LinearMap operator+(const LinearMap& o) const;
  LinearMap operator-(const LinearMap& o) const;
  LinearMap operator*(const LinearMap& o) const;
  Vector operator*(const Vector& v) const;
  LinearMap operator*(double s) const;
  friend LinearMap operator*(double s, const LinearMap& m) { return m * s; }
  LinearMap transposed() const;

  double max_abs() const;

 private:
  int dim_ = 0;
  std::vector<double> a_;
};

/// N-D cross product of r and f: the bivector with entries f_i r_j - r_i f_j.
/// The first argument is the radius-like operand, so in dim 3 the result is
/// the hodge dual of cross3(r, f).
Bivector doublewedge(const Vector& r, const Vector& f);

/// Matrix-vector action m . c.
Vector apply(const Bivector& m, const Vector& c);

/// Full contraction sum_ij a_ij b_ij (no 1/2 factor).
double contraction(const Bivector& a, const Bivector& b);

/// Cyclic 3-indices product A_ij c_k + A_jk c_i + A_ki c_j. Indices 0-based,
/// distinct, in range.
double three_index_product(const Bivector& a, const Vector& c, int i, int j,
                           int k);

/// Congruence transform L . m . L^T, re-antisymmetrized exactly.
Bivector transform(const LinearMap& l, const Bivector& m);

/// Signed determinant of the matrix whose columns are the N given
/// N-dimensional vectors. LU with partial pivoting.
double hypervolume(const std::vector<Vector>& vs);

/// Unsigned k-volume sqrt(det(G^T G)) of k vectors in dimension N >= k.
double gram_volume(const std::vector<Vector>& vs);

/// Component of f perpendicular to r, computed as (1/r^2) [r dw f] . r.
/// Throws NumericalError for a degenerate (near-zero) axis.
Vector perpendicular_component(const Vector& f, const Vector& r);

/// Numerical rank by Gaussian elimination with partial pivoting; rows with
/// max entry <= tol count as zero.
int matrix_rank(int rows, int cols, std::vector<double> a, double tol);
int matrix_rank(const Bivector& m, double tol);

}  // namespace dwedge
