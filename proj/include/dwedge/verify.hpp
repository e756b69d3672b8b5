#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dwedge/algebra.hpp"

namespace dwedge {

struct IdentityCheck {
  std::string name;
  std::vector<int> dims;  // dims actually exercised
  int instances;          // random instances per dim
  double max_error;       // worst relative error observed
  bool pass;
};

/// Runs the cross-product identity suite on seeded random data: the moment
/// component formula, the bivector-vector action, the hodge and triple
/// product equivalences in dim 3, transform covariance, the Lagrange
/// contraction identity and the two power expressions. Dimension-generic
/// identities run over `dims`; 3-D-specific ones run in dim 3.
std::vector<IdentityCheck> run_identity_suite(std::uint64_t seed,
                                              const std::vector<int>& dims,
                                              int instances_per_dim,
                                              double tol = 1e-10);

}  // namespace dwedge
