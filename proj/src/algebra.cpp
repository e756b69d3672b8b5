#include "dwedge/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace dwedge {

namespace {

void require_finite(const std::vector<double>& c, const char* what) {
  for (double v : c) {
    if (!std::isfinite(v)) {
      throw NumericalError(std::string(what) + " has a non-finite component");
    }
  }
}

void require_same_dim(int a, int b, const char* op) {
  if (a != b) {
    throw DimensionError(std::string(op) + ": dimension mismatch (" +
                         std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

}  // namespace

bool close(double a, double b, double rel, double abs_floor) {
  double scale = std::max(std::abs(a), std::abs(b));
  return std::abs(a - b) <= std::max(abs_floor, rel * scale);
}

Vector::Vector(std::initializer_list<double> c) : c_(c) {
  require_finite(c_, "Vector");
}

Vector::Vector(std::vector<double> c) : c_(std::move(c)) {
  require_finite(c_, "Vector");
}

Vector Vector::zero(int dim) {
  return Vector(std::vector<double>(static_cast<std::size_t>(dim), 0.0));
}

Vector Vector::unit(int dim, int axis) {
  Vector v = zero(dim);
  v[axis] = 1.0;
  return v;
}

Vector Vector::operator+(const Vector& o) const {
  require_same_dim(dim(), o.dim(), "Vector+");
  Vector r = *this;
  for (int i = 0; i < dim(); ++i) r[i] += o[i];
  return r;
}

Vector Vector::operator-(const Vector& o) const {
  require_same_dim(dim(), o.dim(), "Vector-");
  Vector r = *this;
  for (int i = 0; i < dim(); ++i) r[i] -= o[i];
  return r;
}

Vector Vector::operator*(double s) const {
  Vector r = *this;
  for (int i = 0; i < dim(); ++i) r[i] *= s;
  return r;
}

double Vector::max_abs() const {
  double m = 0.0;
  for (double v : c_) m = std::max(m, std::abs(v));
  return m;
}

double dot(const Vector& a, const Vector& b) {
  require_same_dim(a.dim(), b.dim(), "dot");
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

double norm(const Vector& v) { return std::sqrt(dot(v, v)); }

Bivector::Bivector(int dim)
    : dim_(dim), a_(static_cast<std::size_t>(dim) * dim, 0.0) {
  if (dim < 1) throw DimensionError("Bivector: dim must be >= 1");
}

void Bivector::set(int i, int j, double v) {
  if (i == j) {
    if (v != 0.0) throw NumericalError("Bivector: nonzero diagonal entry");
    return;
  }
  a_[static_cast<std::size_t>(i) * dim_ + j] = v;
  a_[static_cast<std::size_t>(j) * dim_ + i] = -v;
}

Bivector Bivector::operator+(const Bivector& o) const {
  require_same_dim(dim_, o.dim_, "Bivector+");
  Bivector r = *this;
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] += o.a_[k];
  return r;
}

Bivector Bivector::operator-(const Bivector& o) const {
  require_same_dim(dim_, o.dim_, "Bivector-");
  Bivector r = *this;
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] -= o.a_[k];
  return r;
}

Bivector Bivector::operator-() const { return *this * -1.0; }

Bivector Bivector::operator*(double s) const {
  Bivector r = *this;
  for (double& v : r.a_) v *= s;
  return r;
}

double Bivector::max_abs() const {
  double m = 0.0;
  for (double v : a_) m = std::max(m, std::abs(v));
  return m;
}

LinearMap::LinearMap(int dim)
    : dim_(dim), a_(static_cast<std::size_t>(dim) * dim, 0.0) {
  if (dim < 1) throw DimensionError("LinearMap: dim must be >= 1");
}

LinearMap LinearMap::identity(int dim) {
  LinearMap m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

LinearMap LinearMap::operator+(const LinearMap& o) const {
  require_same_dim(dim_, o.dim_, "LinearMap+");
  LinearMap r = *this;
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] += o.a_[k];
  return r;
}

LinearMap LinearMap::operator-(const LinearMap& o) const {
  require_same_dim(dim_, o.dim_, "LinearMap-");
  LinearMap r = *this;
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] -= o.a_[k];
  return r;
}

LinearMap LinearMap::operator*(const LinearMap& o) const {
  require_same_dim(dim_, o.dim_, "LinearMap*");
  LinearMap r(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int k = 0; k < dim_; ++k) {
      double aik = (*this)(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < dim_; ++j) r(i, j) += aik * o(k, j);
    }
  return r;
}

Vector LinearMap::operator*(const Vector& v) const {
  require_same_dim(dim_, v.dim(), "LinearMap*Vector");
  Vector r = Vector::zero(dim_);
  for (int i = 0; i < dim_; ++i) {
    double s = 0.0;
    for (int j = 0; j < dim_; ++j) s += (*this)(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

LinearMap LinearMap::operator*(double s) const {
  LinearMap r = *this;
  for (double& v : r.a_) v *= s;
  return r;
}

LinearMap LinearMap::transposed() const {
  LinearMap r(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) r(i, j) = (*this)(j, i);
  return r;
}

double LinearMap::max_abs() const {
  double m = 0.0;
  for (double v : a_) m = std::max(m, std::abs(v));
  return m;
}

Bivector doublewedge(const Vector& r, const Vector& f) {
  require_same_dim(r.dim(), f.dim(), "doublewedge");
  int n = r.dim();
  Bivector m(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) m.set(i, j, f[i] * r[j] - r[i] * f[j]);
  return m;
}

Vector apply(const Bivector& m, const Vector& c) {
  require_same_dim(m.dim(), c.dim(), "apply");
  int n = m.dim();
  Vector r = Vector::zero(n);
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += m(i, j) * c[j];
    r[i] = s;
  }
  return r;
}

double contraction(const Bivector& a, const Bivector& b) {
  require_same_dim(a.dim(), b.dim(), "contraction");
  int n = a.dim();
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s += a(i, j) * b(i, j);
  return s;
}

double three_index_product(const Bivector& a, const Vector& c, int i, int j,
                           int k) {
  require_same_dim(a.dim(), c.dim(), "three_index_product");
  int n = a.dim();
  for (int idx : {i, j, k}) {
    if (idx < 0 || idx >= n) {
      throw DimensionError("three_index_product: index " +
                           std::to_string(idx) + " out of range [0, " +
                           std::to_string(n) + ")");
    }
  }
  if (i == j || j == k || i == k) {
    throw DimensionError("three_index_product: indices must be distinct");
  }
  return a(i, j) * c[k] + a(j, k) * c[i] + a(k, i) * c[j];
}

Bivector transform(const LinearMap& l, const Bivector& m) {
  require_same_dim(l.dim(), m.dim(), "transform");
  int n = l.dim();
  LinearMap mm(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mm(i, j) = m(i, j);
  LinearMap t = l * mm * l.transposed();
  // L A L^T drifts off exact antisymmetry in floating point.
  Bivector r(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) r.set(i, j, 0.5 * (t(i, j) - t(j, i)));
  return r;
}

namespace {

// LU with partial pivoting; returns the signed determinant.
double lu_determinant(int n, std::vector<double>& a) {
  double det = 1.0;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int row = col + 1; row < n; ++row) {
      if (std::abs(a[row * n + col]) > std::abs(a[pivot * n + col]))
        pivot = row;
    }
    if (a[pivot * n + col] == 0.0) return 0.0;
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(a[pivot * n + j], a[col * n + j]);
      det = -det;
    }
    det *= a[col * n + col];
    for (int row = col + 1; row < n; ++row) {
      double factor = a[row * n + col] / a[col * n + col];
      for (int j = col; j < n; ++j) a[row * n + j] -= factor * a[col * n + j];
    }
  }
  return det;
}

}  // namespace

double hypervolume(const std::vector<Vector>& vs) {
  if (vs.empty()) throw DimensionError("hypervolume: no vectors given");
  int n = vs[0].dim();
  if (static_cast<int>(vs.size()) != n) {
    throw DimensionError("hypervolume: need exactly " + std::to_string(n) +
                         " vectors of dimension " + std::to_string(n) +
                         ", got " + std::to_string(vs.size()));
  }
  std::vector<double> a(static_cast<std::size_t>(n) * n);
  for (int j = 0; j < n; ++j) {
    require_same_dim(vs[j].dim(), n, "hypervolume");
    for (int i = 0; i < n; ++i) a[i * n + j] = vs[j][i];
  }
  return lu_determinant(n, a);
}

double gram_volume(const std::vector<Vector>& vs) {
  if (vs.empty()) throw DimensionError("gram_volume: no vectors given");
  int k = static_cast<int>(vs.size());
  int n = vs[0].dim();
  if (k > n) {
    throw DimensionError("gram_volume: " + std::to_string(k) +
                         " vectors exceed dimension " + std::to_string(n));
  }
  std::vector<double> g(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i) {
    require_same_dim(vs[i].dim(), n, "gram_volume");
    for (int j = 0; j < k; ++j) g[i * k + j] = dot(vs[i], vs[j]);
  }
  double d = lu_determinant(k, g);
  return d > 0.0 ? std::sqrt(d) : 0.0;
}

Vector perpendicular_component(const Vector& f, const Vector& r) {
  require_same_dim(f.dim(), r.dim(), "perpendicular_component");
  double r2 = dot(r, r);
  if (r.max_abs() <= 1e-12 * std::max(1.0, f.max_abs())) {
    throw NumericalError("perpendicular_component: degenerate axis");
  }
  return apply(doublewedge(r, f), r) * (1.0 / r2);
}

int matrix_rank(int rows, int cols, std::vector<double> a, double tol) {
  int rank = 0;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int pivot = row;
    for (int r = row + 1; r < rows; ++r) {
      if (std::abs(a[r * cols + col]) > std::abs(a[pivot * cols + col]))
        pivot = r;
    }
    if (std::abs(a[pivot * cols + col]) <= tol) continue;
    if (pivot != row) {
      for (int j = 0; j < cols; ++j)
        std::swap(a[pivot * cols + j], a[row * cols + j]);
    }
    for (int r = row + 1; r < rows; ++r) {
      double factor = a[r * cols + col] / a[row * cols + col];
      for (int j = col; j < cols; ++j)
        a[r * cols + j] -= factor * a[row * cols + j];
    }
    ++rank;
    ++row;
  }
  return rank;
}

int matrix_rank(const Bivector& m, double tol) {
  return matrix_rank(m.dim(), m.dim(), m.entries(), tol);
}

}  // namespace dwedge
