// Acceptance suite: one pass/fail line per criterion.
// Usage: acceptance <path-to-cli> <tests-source-dir>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dwedge/cross3.hpp"
#include "dwedge/fields.hpp"
#include "dwedge/mechanics.hpp"
#include "dwedge/rng.hpp"
#include "dwedge/verify.hpp"
#include "oracles.hpp"

using namespace dwedge;

namespace {

std::string g_cli;
std::string g_dir;

double rel(double err, double scale) { return err / std::max(1.0, scale); }

// --- criterion 1: hodge equivalence, 1000 seeded pairs in dim 3 ----------
bool hodge_equivalence(std::string& detail) {
  SplitMix64 rng(1001);
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    Vector a = rng.next_vector(3), b = rng.next_vector(3);
    worst = std::max(worst,
                     oracles::rel_diff(to_axial(doublewedge(a, b)), cross3(a, b)));
  }
  detail = "max rel err " + std::to_string(worst);
  return worst < 1e-12;
}

// --- criterion 2: identity suite, 200 instances, dims {2,3,4,7} ----------
bool identity_suite(std::string& detail) {
  double worst = 0.0;
  bool ok = true;
  for (const IdentityCheck& c : run_identity_suite(2002, {2, 3, 4, 7}, 200)) {
    worst = std::max(worst, c.max_error);
    ok = ok && c.pass;
  }
  detail = "max rel err " + std::to_string(worst);
  return ok && worst < 1e-10;
}

// --- criterion 3: algebraic properties, dims 1..8 ------------------------
bool algebraic_properties(std::string& detail) {
  SplitMix64 rng(3003);
  for (int dim = 1; dim <= 8; ++dim) {
    for (int k = 0; k < 50; ++k) {
      Vector a = rng.next_vector(dim), b = rng.next_vector(dim);
      Vector c = rng.next_vector(dim);
      Bivector ab = doublewedge(a, b), ba = doublewedge(b, a);
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
          if (ab(i, j) != -ba(i, j)) {
            detail = "anticommutativity not exact";
            return false;
          }
      if (oracles::rel_diff(doublewedge(a, b + c),
                            doublewedge(a, b) + doublewedge(a, c)) > 1e-12) {
        detail = "distributivity";
        return false;
      }
      double alpha = rng.next_in(-3, 3), beta = rng.next_in(-3, 3);
      if (oracles::rel_diff(doublewedge(a * alpha, b * beta),
                            doublewedge(a, b) * (alpha * beta)) > 1e-12) {
        detail = "scalar compatibility";
        return false;
      }
    }
  }
  detail = "anticommutativity exact; distributivity and scaling within 1e-12";
  return true;
}

// --- criterion 4: common-perpendicular space has dimension N-2 -----------
bool indeterminacy(std::string& detail) {
  SplitMix64 rng(4004);
  for (int dim : {3, 4, 5, 6}) {
    for (int k = 0; k < 100; ++k) {
      Vector a = rng.next_vector(dim), b = rng.next_vector(dim);
      std::vector<double> rows(2 * static_cast<std::size_t>(dim));
      for (int j = 0; j < dim; ++j) {
        rows[j] = a[j];
        rows[dim + j] = b[j];
      }
      if (matrix_rank(2, dim, rows, 1e-9) != 2) {
        detail = "unexpected rank in dim " + std::to_string(dim);
        return false;
      }
    }
  }
  detail = "nullspace dimension N-2 for N in {3,4,5,6}";
  return true;
}

// --- criterion 5: rigid-body consistency ---------------------------------
bool rigid_bodies(std::string& detail) {
  SplitMix64 rng(5005);
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    int dim = 3 + static_cast<int>(rng.next_u64() % 3);  // 3..5
    int count = 2 + static_cast<int>(rng.next_u64() % 31);
    Bivector omega(dim);
    for (int i = 0; i < dim; ++i)
      for (int j = i + 1; j < dim; ++j) omega.set(i, j, rng.next_in(-1, 1));
    Vector pole = rng.next_vector(dim), v_pole = rng.next_vector(dim);
    std::vector<Particle> ps;
    for (int p = 0; p < count; ++p) {
      Particle q;
      q.mass = rng.next_in(0.1, 2.0);
      q.position = rng.next_vector(dim, -2, 2);
      q.velocity = rigid_velocity(omega, q.position, pole, v_pole);
      ps.push_back(std::move(q));
    }
    PointMassBody body(ps);
    Bivector by_sum = angular_momentum(body, pole);
    Bivector rigid = rigid_angular_momentum(
        body.total_mass(), body.center_of_mass(), pole, v_pole,
        inertia_matrix(body, pole), omega);
    worst = std::max(worst, oracles::rel_diff(by_sum, rigid));
    if (dim == 3) {
      // Classical oracle about the center of mass.
      Vector x_g = body.center_of_mass();
      Vector v_g = rigid_velocity(omega, x_g, pole, v_pole);
      LinearMap i_g = inertia_matrix(body, x_g);
      double trace = i_g(0, 0) + i_g(1, 1) + i_g(2, 2);
      LinearMap classical = LinearMap::identity(3) * trace - i_g;
      Vector expected = classical * to_axial(omega);
      Bivector l_g = rigid_angular_momentum(body.total_mass(), x_g, x_g, v_g,
                                            i_g, omega);
      worst = std::max(worst, oracles::rel_diff(to_axial(l_g), expected));
    }
  }
  detail = "max rel err " + std::to_string(worst);
  return worst < 1e-10;
}

// --- criterion 6: curl order, stencil equivalence, Faraday ---------------
bool curl_criteria(std::string& detail) {
  // (a) curl of gradients converges at order ~2 under h-halving.
  std::vector<VectorField> grads;
  grads.push_back({2, [](const Vector& x, double) {
                     return Vector{std::cos(x[0]) * std::cos(2 * x[1]),
                                   -2 * std::sin(x[0]) * std::sin(2 * x[1])};
                   }});
  grads.push_back({3, [](const Vector& x, double) {
                     double e = std::exp(x[0] * x[1] * x[2]);
                     return Vector{e * x[1] * x[2], e * x[0] * x[2],
                                   e * x[0] * x[1]};
                   }});
  grads.push_back({3, [](const Vector& x, double) {
                     double c = std::cos(x[0] + 2 * x[1] + 3 * x[2]);
                     return Vector{c, 2 * c, 3 * c};
                   }});
  std::vector<Vector> points{Vector{0.4, -0.3}, Vector{0.5, 0.7, -0.6},
                             Vector{0.1, 0.2, 0.3}};
  for (std::size_t f = 0; f < grads.size(); ++f) {
    double h = 0.05;
    double e0 = curl(grads[f], points[f], 0.0, h).max_abs();
    double e1 = curl(grads[f], points[f], 0.0, h / 2).max_abs();
    double e2 = curl(grads[f], points[f], 0.0, h / 4).max_abs();
    for (double ratio : {e0 / e1, e1 / e2}) {
      double order = std::log2(ratio);
      if (order < 2.0 / 1.5 || order > 2.0 * 1.5) {
        detail = "observed order " + std::to_string(order);
        return false;
      }
    }
  }
  // (b) dim-3 curl matches the component formula on the same stencil.
  VectorField smooth{3, [](const Vector& x, double) {
                       return Vector{std::sin(x[1] * x[2]),
                                     std::cos(x[0] + x[2]),
                                     std::exp(0.3 * x[0] * x[1])};
                     }};
  SplitMix64 rng(6006);
  for (int k = 0; k < 20; ++k) {
    Vector x = rng.next_vector(3);
    double h = 1e-4;
    Vector axial = to_axial(curl(smooth, x, 0.0, h));
    auto d = [&](int comp, int dir) {
      Vector xp = x, xm = x;
      xp[dir] += h;
      xm[dir] -= h;
      return (smooth.eval(xp, 0.0)[comp] - smooth.eval(xm, 0.0)[comp]) /
             (2.0 * h);
    };
    if (axial[0] != d(2, 1) - d(1, 2) || axial[1] != d(0, 2) - d(2, 0) ||
        axial[2] != d(1, 0) - d(0, 1)) {
      detail = "dim-3 stencil mismatch";
      return false;
    }
  }
  // (c) plane-wave Faraday residual is O(h^2 + dt^2).
  VectorField e{3, [](const Vector& x, double t) {
                  return Vector{0.0, std::sin(x[0] - t), 0.0};
                }};
  BivectorField b{3, [](const Vector& x, double t) {
                    return to_bivector(Vector{0.0, 0.0, std::sin(x[0] - t)});
                  }};
  Vector x{0.7, 0.0, 0.0};
  double r1 = faraday_residual(e, b, x, 0.4, 1e-2, 4e-3).max_abs();
  double r2 = faraday_residual(e, b, x, 0.4, 5e-3, 2e-3).max_abs();
  if (!(r1 < 1e-3) || r1 / r2 < 3.0 || r1 / r2 > 5.0) {
    detail = "faraday residual ratio " + std::to_string(r1 / r2);
    return false;
  }
  detail = "order ~2, exact 3-D stencil match, Faraday O(h^2+dt^2)";
  return true;
}

// --- criterion 7: Lorentz force --------------------------------------------
bool lorentz(std::string& detail) {
  SplitMix64 rng(7007);
  double worst = 0.0;
  for (int k = 0; k < 500; ++k) {
    double q = rng.next_in(-2, 2);
    Vector bv = rng.next_vector(3), v = rng.next_vector(3);
    worst = std::max(worst,
                     oracles::rel_diff(lorentz_force(q, to_bivector(bv), v),
                                       cross3(bv, v) * (-q)));
  }
  if (worst >= 1e-12) {
    detail = "3-D oracle max rel err " + std::to_string(worst);
    return false;
  }
  for (int dim = 2; dim <= 8; ++dim) {
    for (int k = 0; k < 50; ++k) {
      Bivector b(dim);
      for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) b.set(i, j, rng.next_in(-1, 1));
      Vector v = rng.next_vector(dim);
      Vector f = lorentz_force(rng.next_in(-2, 2), b, v);
      if (rel(std::abs(dot(v, f)), v.max_abs() * f.max_abs()) > 1e-12) {
        detail = "magnetic force did work in dim " + std::to_string(dim);
        return false;
      }
    }
  }
  detail = "3-D oracle within 1e-12; v.F = 0 in dims 2..8";
  return true;
}

// --- criterion 8: perpendicular component ---------------------------------
bool perpendicular(std::string& detail) {
  SplitMix64 rng(8008);
  for (int dim = 2; dim <= 8; ++dim) {
    for (int k = 0; k < 50; ++k) {
      Vector f = rng.next_vector(dim), r = rng.next_vector(dim);
      Vector perp = perpendicular_component(f, r);
      if (rel(std::abs(dot(r, perp)), norm(r) * norm(f)) > 1e-12) {
        detail = "not orthogonal in dim " + std::to_string(dim);
        return false;
      }
      Vector twice = perpendicular_component(perp, r);
      if (oracles::rel_diff(twice, perp) > 1e-12) {
        detail = "not idempotent in dim " + std::to_string(dim);
        return false;
      }
    }
  }
  detail = "orthogonality and idempotence within 1e-12, dims 2..8";
  return true;
}

// --- criterion 9: CLI golden files and byte stability ----------------------
std::string strip_elapsed(const std::string& text) {
  std::istringstream in(text);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("elapsed_ms", 0) == 0) continue;
    out << line << "\n";
  }
  return out.str();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool cli_golden(std::string& detail) {
  struct Job {
    std::string subcommand;
    std::string scenario;
  };
  std::vector<Job> jobs{{"moment", "moment"},
                        {"inertia", "inertia"},
                        {"angular-momentum", "angular_momentum"},
                        {"power", "power"},
                        {"volume", "volume"},
                        {"volume", "volume_det"},
                        {"curl", "curl"},
                        {"lorentz", "lorentz"},
                        {"verify", "verify"}};
  for (const Job& job : jobs) {
    std::string in = g_dir + "/data/" + job.scenario + ".scn";
    std::string out1 = "acceptance_" + job.scenario + "_1.out";
    std::string out2 = "acceptance_" + job.scenario + "_2.out";
    for (const std::string& out : {out1, out2}) {
      std::string cmd = "\"" + g_cli + "\" " + job.subcommand + " --in \"" +
                        in + "\" --out \"" + out + "\"";
      if (std::system(cmd.c_str()) != 0) {
        detail = "nonzero exit for " + job.scenario;
        return false;
      }
    }
    std::string a = strip_elapsed(slurp(out1));
    std::string b = strip_elapsed(slurp(out2));
    if (a.empty() || a != b) {
      detail = "output not byte-stable for " + job.scenario;
      return false;
    }
    std::string golden = slurp(g_dir + "/golden/" + job.scenario + ".golden");
    if (a != golden) {
      detail = "golden mismatch for " + job.scenario;
      return false;
    }
    std::remove(out1.c_str());
    std::remove(out2.c_str());
  }
  std::string cmd = "\"" + g_cli + "\" verify --seed 42 > acceptance_verify_stdout.out";
  if (std::system(cmd.c_str()) != 0) {
    detail = "verify --seed 42 exited nonzero";
    return false;
  }
  std::remove("acceptance_verify_stdout.out");
  detail = "all subcommand outputs byte-stable and matching goldens";
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <cli-path> <tests-source-dir>\n";
    return 2;
  }
  g_cli = argv[1];
  g_dir = argv[2];

  struct Criterion {
    const char* description;
    std::function<bool(std::string&)> fn;
  };
  std::vector<Criterion> criteria{
      {"hodge equivalence (1000 random 3-D pairs, 1e-12)", hodge_equivalence},
      {"identity suite (200 instances, dims 2/3/4/7, 1e-10)", identity_suite},
      {"algebraic properties (dims 1..8)", algebraic_properties},
      {"common-perpendicular dimension N-2 (dims 3..6)", indeterminacy},
      {"rigid-body consistency (50 bodies, dims 3..5, 1e-10)", rigid_bodies},
      {"curl order, 3-D equivalence, Faraday residual", curl_criteria},
      {"Lorentz force oracle and zero work (1e-12)", lorentz},
      {"perpendicular component (dims 2..8, 1e-12)", perpendicular},
      {"CLI golden files byte-stable; verify --seed 42 exits 0", cli_golden},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    bool ok = false;
    try {
      ok = criteria[i].fn(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": "
              << criteria[i].description << " -- " << detail << "\n";
    if (!ok) ++failures;
  }
  std::cout << (failures == 0 ? "ALL CRITERIA PASSED"
                              : std::to_string(failures) + " CRITERIA FAILED")
            << "\n";
  return failures == 0 ? 0 : 1;
}
