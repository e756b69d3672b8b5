#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dwedge/algebra.hpp"
#include "dwedge/cross3.hpp"
#include "dwedge/fields.hpp"
#include "dwedge/mechanics.hpp"
#include "dwedge/scenario.hpp"
#include "dwedge/verify.hpp"

namespace py = pybind11;

namespace {

using Rows = std::vector<std::vector<double>>;

dwedge::Vector vec(const std::vector<double>& c) { return dwedge::Vector(c); }

Rows rows_of(const dwedge::Bivector& b) {
  Rows out(static_cast<std::size_t>(b.dim()),
           std::vector<double>(static_cast<std::size_t>(b.dim())));
  for (int i = 0; i < b.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j) out[i][j] = b(i, j);
  return out;
}

Rows rows_of(const dwedge::LinearMap& m) {
  Rows out(static_cast<std::size_t>(m.dim()),
           std::vector<double>(static_cast<std::size_t>(m.dim())));
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) out[i][j] = m(i, j);
  return out;
}

dwedge::LinearMap map_of(const Rows& rows) {
  int n = static_cast<int>(rows.size());
  dwedge::LinearMap m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      throw dwedge::DimensionError("matrix rows must form a square matrix");
    }
    for (int j = 0; j < n; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

dwedge::Bivector bivector_of(const Rows& rows) {
  dwedge::LinearMap m = map_of(rows);
  int n = m.dim();
  double scale = std::max(1.0, m.max_abs());
  dwedge::Bivector b(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      if (std::abs(m(i, j) + m(j, i)) > 1e-12 * scale) {
        throw dwedge::NumericalError("matrix is not antisymmetric");
      }
      if (i != j) b.set(i, j, m(i, j));
    }
  }
  return b;
}

std::vector<dwedge::Vector> vecs(const Rows& vs) {
  std::vector<dwedge::Vector> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.emplace_back(v);
  return out;
}

// particles: (mass, position, velocity) tuples.
using PyParticle =
    std::tuple<double, std::vector<double>, std::vector<double>>;

dwedge::PointMassBody body_of(const std::vector<PyParticle>& particles) {
  std::vector<dwedge::Particle> ps;
  ps.reserve(particles.size());
  for (const auto& [m, x, v] : particles) {
    ps.push_back({m, dwedge::Vector(x), dwedge::Vector(v)});
  }
  return dwedge::PointMassBody(std::move(ps));
}

dwedge::VectorField field_of(
    int dim, const std::function<std::vector<double>(std::vector<double>,
                                                     double)>& fn) {
  return {dim, [fn](const dwedge::Vector& x, double t) {
            return dwedge::Vector(fn(x.components(), t));
          }};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "N-dimensional cross product (doublewedge) algebra";

  py::register_exception<dwedge::DimensionError>(m, "DimensionError",
                                                 PyExc_ValueError);
  py::register_exception<dwedge::NumericalError>(m, "NumericalError",
                                                 PyExc_ArithmeticError);
  py::register_exception<dwedge::ParseError>(m, "ScenarioParseError",
                                             PyExc_ValueError);

  m.def(
      "doublewedge",
      [](const std::vector<double>& r, const std::vector<double>& f) {
        return rows_of(dwedge::doublewedge(vec(r), vec(f)));
      },
      py::arg("r"), py::arg("f"),
      "Antisymmetric matrix with entries f[i]*r[j] - r[i]*f[j].");

  m.def(
      "apply",
      [](const Rows& m_, const std::vector<double>& c) {
        return dwedge::apply(bivector_of(m_), vec(c)).components();
      },
      py::arg("m"), py::arg("c"));

  m.def(
      "contraction",
      [](const Rows& a, const Rows& b) {
        return dwedge::contraction(bivector_of(a), bivector_of(b));
      },
      py::arg("a"), py::arg("b"));

  m.def(
      "three_index_product",
      [](const Rows& a, const std::vector<double>& c, int i, int j, int k) {
        return dwedge::three_index_product(bivector_of(a), vec(c), i, j, k);
      },
      py::arg("a"), py::arg("c"), py::arg("i"), py::arg("j"), py::arg("k"));

  m.def(
      "transform",
      [](const Rows& l, const Rows& m_) {
        return rows_of(dwedge::transform(map_of(l), bivector_of(m_)));
      },
      py::arg("l"), py::arg("m"));

  m.def(
      "hypervolume",
      [](const Rows& vs) { return dwedge::hypervolume(vecs(vs)); },
      py::arg("vectors"));

  m.def(
      "gram_volume",
      [](const Rows& vs) { return dwedge::gram_volume(vecs(vs)); },
      py::arg("vectors"));

  m.def(
      "perpendicular_component",
      [](const std::vector<double>& f, const std::vector<double>& r) {
        return dwedge::perpendicular_component(vec(f), vec(r)).components();
      },
      py::arg("f"), py::arg("r"));

  m.def(
      "cross3",
      [](const std::vector<double>& a, const std::vector<double>& b) {
        return dwedge::cross3(vec(a), vec(b)).components();
      },
      py::arg("a"), py::arg("b"));

  m.def(
      "to_bivector",
      [](const std::vector<double>& w) {
        return rows_of(dwedge::to_bivector(vec(w)));
      },
      py::arg("w"));

  m.def(
      "to_axial",
      [](const Rows& m_) {
        return dwedge::to_axial(bivector_of(m_)).components();
      },
      py::arg("m"));

  m.def(
      "torque",
      [](const std::vector<double>& r, const std::vector<double>& f) {
        return rows_of(dwedge::torque(vec(r), vec(f)));
      },
      py::arg("r"), py::arg("f"));

  m.def(
      "inertia_matrix",
      [](const std::vector<PyParticle>& body, const std::vector<double>& pole) {
        return rows_of(dwedge::inertia_matrix(body_of(body), vec(pole)));
      },
      py::arg("particles"), py::arg("pole"),
      "Second-moment matrix of (mass, position, velocity) particles.");

  m.def(
      "angular_momentum",
      [](const std::vector<PyParticle>& body, const std::vector<double>& pole) {
        return rows_of(dwedge::angular_momentum(body_of(body), vec(pole)));
      },
      py::arg("particles"), py::arg("pole"));

  m.def(
      "rigid_angular_momentum",
      [](double total_mass, const std::vector<double>& x_g,
         const std::vector<double>& pole, const std::vector<double>& v_pole,
         const Rows& inertia, const Rows& omega) {
        return rows_of(dwedge::rigid_angular_momentum(
            total_mass, vec(x_g), vec(pole), vec(v_pole), map_of(inertia),
            bivector_of(omega)));
      },
      py::arg("total_mass"), py::arg("x_g"), py::arg("pole"),
      py::arg("v_pole"), py::arg("inertia"), py::arg("omega"));

  m.def(
      "rigid_velocity",
      [](const Rows& omega, const std::vector<double>& x,
         const std::vector<double>& x_ref, const std::vector<double>& v_ref) {
        return dwedge::rigid_velocity(bivector_of(omega), vec(x), vec(x_ref),
                                      vec(v_ref))
            .components();
      },
      py::arg("omega"), py::arg("x"), py::arg("x_ref"), py::arg("v_ref"));

  m.def(
      "power",
      [](const Rows& m_, const Rows& omega) {
        return dwedge::power(bivector_of(m_), bivector_of(omega));
      },
      py::arg("m"), py::arg("omega"));

  m.def(
      "rotation_generator",
      [](const std::vector<double>& from_dir,
         const std::vector<double>& to_dir) {
        return rows_of(dwedge::rotation_generator(
            {vec(from_dir), vec(to_dir), 0.0}));
      },
      py::arg("from_dir"), py::arg("to_dir"),
      "Unit generator of the plane rotation taking from_dir towards to_dir.");

  m.def(
      "rotate",
      [](const Rows& g, double angle, const std::vector<double>& x) {
        return dwedge::rotate(bivector_of(g), angle, vec(x)).components();
      },
      py::arg("g"), py::arg("angle"), py::arg("x"));

  m.def(
      "rotation_matrix",
      [](const Rows& g, double angle) {
        return rows_of(dwedge::rotation_matrix(bivector_of(g), angle));
      },
      py::arg("g"), py::arg("angle"));

  m.def(
      "curl",
      [](int dim,
         const std::function<std::vector<double>(std::vector<double>, double)>&
             field,
         const std::vector<double>& x, double t, double h) {
        dwedge::Vector xv = vec(x);
        if (h <= 0.0) h = dwedge::default_step(xv);
        return rows_of(dwedge::curl(field_of(dim, field), xv, t, h));
      },
      py::arg("dim"), py::arg("field"), py::arg("x"), py::arg("t") = 0.0,
      py::arg("h") = 0.0, "Central-difference N-D curl of field(x, t).");

  m.def(
      "faraday_residual",
      [](int dim,
         const std::function<std::vector<double>(std::vector<double>, double)>&
             e,
         const std::function<Rows(std::vector<double>, double)>& b,
         const std::vector<double>& x, double t, double h, double dt) {
        dwedge::BivectorField bf{
            dim, [b](const dwedge::Vector& xx, double tt) {
              return bivector_of(b(xx.components(), tt));
            }};
        return rows_of(dwedge::faraday_residual(field_of(dim, e), bf, vec(x),
                                                t, h, dt));
      },
      py::arg("dim"), py::arg("e"), py::arg("b"), py::arg("x"), py::arg("t"),
      py::arg("h"), py::arg("dt"));

  m.def(
      "lorentz_force",
      [](double charge, const Rows& b, const std::vector<double>& v) {
        return dwedge::lorentz_force(charge, bivector_of(b), vec(v))
            .components();
      },
      py::arg("charge"), py::arg("b"), py::arg("v"));

  m.def(
      "run_scenario",
      [](const std::string& text) {
        dwedge::Report r = dwedge::run(dwedge::parse_scenario(text));
        return py::make_tuple(r.to_text(), !r.verify_failed);
      },
      py::arg("text"),
      "Parse and run scenario text; returns (report_text, ok).");

  m.def(
      "verify_identities",
      [](std::uint64_t seed, const std::vector<int>& dims, int instances,
         double tol) {
        py::list out;
        for (const dwedge::IdentityCheck& c :
             dwedge::run_identity_suite(seed, dims, instances, tol)) {
          py::dict d;
          d["name"] = c.name;
          d["dims"] = c.dims;
          d["instances"] = c.instances;
          d["max_error"] = c.max_error;
          d["pass"] = c.pass;
          out.append(d);
        }
        return out;
      },
      py::arg("seed") = 42, py::arg("dims") = std::vector<int>{2, 3, 4, 7},
      py::arg("instances") = 200, py::arg("tol") = 1e-10);
}
