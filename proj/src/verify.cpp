#include "dwedge/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "dwedge/cross3.hpp"
#include "dwedge/rng.hpp"

namespace dwedge {

namespace {

double rel_err(double lhs, double rhs) {
  double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
  return std::abs(lhs - rhs) / scale;
}

double rel_err(const Vector& lhs, const Vector& rhs) {
  double scale = std::max({1.0, lhs.max_abs(), rhs.max_abs()});
  return (lhs - rhs).max_abs() / scale;
}

double rel_err(const Bivector& lhs, const Bivector& rhs) {
  double scale = std::max({1.0, lhs.max_abs(), rhs.max_abs()});
  return (lhs - rhs).max_abs() / scale;
}

// Cofactor matrix of a 3x3 map; satisfies (La) x (Lb) = cof(L) (a x b).
LinearMap cofactor3(const LinearMap& l) {
  LinearMap c(3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      int i1 = (i + 1) % 3, i2 = (i + 2) % 3;
      int j1 = (j + 1) % 3, j2 = (j + 2) % 3;
      c(i, j) = l(i1, j1) * l(i2, j2) - l(i1, j2) * l(i2, j1);
    }
  }
  return c;
}

using InstanceFn = std::function<double(SplitMix64&, int dim)>;

IdentityCheck run_check(const std::string& name, const std::vector<int>& dims,
                        int instances, double tol, std::uint64_t seed,
                        const InstanceFn& fn) {
  IdentityCheck out{name, dims, instances, 0.0, false};
  SplitMix64 rng(seed);
  for (int dim : dims) {
    for (int k = 0; k < instances; ++k) {
      out.max_error = std::max(out.max_error, fn(rng, dim));
    }
  }
  out.pass = out.max_error < tol;
  return out;
}

}  // namespace

std::vector<IdentityCheck> run_identity_suite(std::uint64_t seed,
                                              const std::vector<int>& dims,
                                              int instances_per_dim,
                                              double tol) {
  std::vector<IdentityCheck> out;
  const std::vector<int> dim3{3};
  // Each check gets its own decorrelated stream.
  std::uint64_t s = seed;
  auto next_seed = [&s] { return SplitMix64(s++).next_u64(); };

  out.push_back(run_check(
      "moment_component_formula", dims, instances_per_dim, tol, next_seed(),
      [](SplitMix64& rng, int n) {
        Vector r = rng.next_vector(n), f = rng.next_vector(n);
        Bivector m = doublewedge(r, f);
        double err = 0.0;
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            err = std::max(err, rel_err(m(i, j), f[i] * r[j] - r[i] * f[j]));
        return err;
      }));

  out.push_back(run_check(
      "bivector_action", dims, instances_per_dim, tol, next_seed(),
      [](SplitMix64& rng, int n) {
        Vector r = rng.next_vector(n), f = rng.next_vector(n);
        Vector c = rng.next_vector(n);
        Vector lhs = apply(doublewedge(r, f), c);
        Vector rhs = f * dot(r, c) - r * dot(f, c);
        return rel_err(lhs, rhs);
      }));

  out.push_back(run_check(
      "hodge_moment_3d", dim3, instances_per_dim, tol, next_seed(),
      [](SplitMix64& rng, int n) {
        Vector r = rng.next_vector(n), f = rng.next_vector(n);
        return rel_err(to_axial(doublewedge(r, f)), cross3(r, f));
      }));

  out.push_back(run_check(
      "matrix_action_3d", dim3, instances_per_dim, tol, next_seed(),
      [](SplitMix64& rng, int n) {
        Vector m = rng.next_vector(n), c = rng.next_vector(n);
        return rel_err(cross3(m, c), apply(to_bivector(m), c));
      }));

  out.push_back(run_check(
      "triple_product_3d", dim3, instances_per_dim, tol, next_seed(),
      [](SplitMix64& rng, int n) {
        Vector a = rng.next_vector(n), b = rng.next_vector(n);
        Vector c = rng.next_vector(n);
        double lhs = dot(cross3(a, b), c);
        double rhs = three_index_product(doublewedge(a, b), c, 2, 1, 0);
        return rel_err(lhs, rhs);
      }));

  out.push_back(run_check(
      "cyclic_triple_3d", dim3, instances_per_dim, tol, next_seed(),
      [](SplitMix64& rng, int n) {
        Vector a = rng.next_vector(n), b = rng.next_vector(n);
        Vector c = rng.next_vector(n);
        double ab = three_index_product(doublewedge(a, b), c, 2, 1, 0);
        double bc = three_index_product(doublewedge(b, c), a, 2, 1, 0);
        double ca = three_index_product(doublewedge(c, a), b, 2, 1, 0);
        return std::max(rel_err(ab, bc), rel_err(ab, ca));
      }));

  out.push_back(run_check(
      "transform_covariance", dims, instances_per_dim, tol, next_seed(),
      [](SplitMix64& rng, int n) {
        Vector a = rng.next_vector(n), b = rng.next_vector(n);
        LinearMap l = rng.next_matrix(n);
        Bivector lhs = doublewedge(l * a, l * b);
        Bivector rhs = transform(l, doublewedge(a, b));
        return rel_err(lhs, rhs);
      }));

  out.push_back(run_check(
      "transform_cofactor_3d", dim3, instances_per_dim, tol, next_seed(),
      [](SplitMix64& rng, int n) {
        Vector a = rng.next_vector(n), b = rng.next_vector(n);
        LinearMap l = rng.next_matrix(n);
        Vector lhs = cross3(l * a, l * b);
        Vector rhs = cofactor3(l) * cross3(a, b);
        return rel_err(lhs, rhs);
      }));

  out.push_back(run_check(
      "lagrange_contraction", dims, instances_per_dim, tol, next_seed(),
      [](SplitMix64& rng, int n) {
        Vector a = rng.next_vector(n), b = rng.next_vector(n);
        Vector c = rng.next_vector(n), d = rng.next_vector(n);
        double lhs =
            0.5 * contraction(doublewedge(a, b), doublewedge(c, d));
        double rhs = dot(a, c) * dot(b, d) - dot(a, d) * dot(b, c);
        return rel_err(lhs, rhs);
      }));

  out.push_back(run_check(
      "power_3d", dim3, instances_per_dim, tol, next_seed(),
      [](SplitMix64& rng, int n) {
        Vector m = rng.next_vector(n), w = rng.next_vector(n);
        double lhs = dot(m, w);
        double rhs = 0.5 * contraction(to_bivector(m), to_bivector(w));
        return rel_err(lhs, rhs);
      }));

  return out;
}

}  // namespace dwedge
