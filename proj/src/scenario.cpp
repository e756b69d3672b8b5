#include "dwedge/scenario.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <sstream>

#include "dwedge/cross3.hpp"
#include "dwedge/expr.hpp"
#include "dwedge/fields.hpp"
#include "dwedge/mechanics.hpp"
#include "dwedge/verify.hpp"

namespace dwedge {

namespace {

struct RawValue {
  std::string text;
  int line = 0;
  int col = 0;
};

using Entries = std::vector<std::pair<std::string, RawValue>>;

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

Entries tokenize(const std::string& text) {
  Entries entries;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    if (trim(line).empty()) continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError("expected 'key = value'", lineno, 1);
    }
    std::string key = trim(line.substr(0, eq));
    if (key.empty()) throw ParseError("empty key", lineno, 1);
    std::size_t vstart = line.find_first_not_of(" \t", eq + 1);
    if (vstart == std::string::npos) {
      throw ParseError("missing value for '" + key + "'", lineno,
                       static_cast<int>(eq) + 2);
    }
    entries.emplace_back(
        key, RawValue{trim(line.substr(vstart)), lineno,
                      static_cast<int>(vstart) + 1});
  }
  return entries;
}

double parse_number(const RawValue& v) {
  const char* begin = v.text.c_str();
  char* end = nullptr;
  double d = std::strtod(begin, &end);
  if (end == begin || trim(std::string(end)) != "" || !std::isfinite(d)) {
    throw ParseError("malformed number '" + v.text + "'", v.line, v.col);
  }
  return d;
}

std::vector<double> parse_number_array(const RawValue& v) {
  const std::string& s = v.text;
  if (s.empty() || s.front() != '[' || s.back() != ']') {
    throw ParseError("expected array '[a, b, ...]'", v.line, v.col);
  }
  std::vector<double> out;
  std::string body = s.substr(1, s.size() - 2);
  if (trim(body).empty()) return out;
  std::istringstream items(body);
  std::string item;
  while (std::getline(items, item, ',')) {
    item = trim(item);
    const char* begin = item.c_str();
    char* end = nullptr;
    double d = std::strtod(begin, &end);
    if (end == begin || *end != '\0' || !std::isfinite(d)) {
      throw ParseError("malformed number '" + item + "' in array", v.line,
                       v.col);
    }
    out.push_back(d);
  }
  return out;
}

std::vector<int> parse_int_array(const RawValue& v) {
  std::vector<int> out;
  for (double d : parse_number_array(v)) {
    if (d != std::floor(d)) {
      throw ParseError("expected integer array", v.line, v.col);
    }
    out.push_back(static_cast<int>(d));
  }
  return out;
}

Vector parse_vector(const RawValue& v, int dim, const std::string& key) {
  std::vector<double> c = parse_number_array(v);
  if (static_cast<int>(c.size()) != dim) {
    throw ParseError("'" + key + "' has " + std::to_string(c.size()) +
                         " components, dim is " + std::to_string(dim),
                     v.line, v.col);
  }
  return Vector(c);
}

const std::set<std::string> kKinds = {"moment", "inertia", "angular-momentum",
                                      "power",  "volume",  "curl",
                                      "lorentz", "verify"};

bool is_field_key(const std::string& key, int dim) {
  if (key.size() < 2 || key[0] != 'v') return false;
  char* end = nullptr;
  long k = std::strtol(key.c_str() + 1, &end, 10);
  return *end == '\0' && k >= 1 && k <= dim;
}

void require_keys(const Scenario& s, const Entries& entries,
                  const std::set<std::string>& vector_keys,
                  const std::set<std::string>& scalar_keys,
                  const std::set<std::string>& other_keys) {
  for (const auto& [key, raw] : entries) {
    if (key == "kind" || key == "dim") continue;
    if (vector_keys.count(key) || scalar_keys.count(key) ||
        other_keys.count(key))
      continue;
    if (s.kind == "curl" && is_field_key(key, s.dim)) continue;
    throw ParseError("unknown key '" + key + "' for kind '" + s.kind + "'",
                     raw.line, 1);
  }
  for (const std::string& key : vector_keys) {
    if (!s.vectors.count(key)) {
      throw ParseError("kind '" + s.kind + "' requires key '" + key + "'", 0,
                       0);
    }
  }
}

void validate(Scenario& s, const Entries& entries) {
  if (s.kind == "moment") {
    require_keys(s, entries, {"r", "f"}, {}, {});
  } else if (s.kind == "inertia" || s.kind == "angular-momentum") {
    require_keys(s, entries, {"pole"}, {}, {"particle"});
    if (s.particles.empty()) {
      throw ParseError("kind '" + s.kind + "' needs at least one particle", 0,
                       0);
    }
    for (const auto& row : s.particles) {
      std::size_t n = row.size();
      bool with_vel = n == static_cast<std::size_t>(1 + 2 * s.dim);
      bool pos_only = n == static_cast<std::size_t>(1 + s.dim);
      if (s.kind == "angular-momentum" && !with_vel) {
        throw ParseError(
            "particle rows must be [mass, position..., velocity...] (" +
                std::to_string(1 + 2 * s.dim) + " numbers)",
            0, 0);
      }
      if (!with_vel && !pos_only) {
        throw ParseError("particle rows must have " +
                             std::to_string(1 + s.dim) + " or " +
                             std::to_string(1 + 2 * s.dim) + " numbers",
                         0, 0);
      }
      if (row[0] <= 0.0) throw ParseError("particle mass must be > 0", 0, 0);
    }
  } else if (s.kind == "power") {
    require_keys(s, entries, {"r", "f", "omega_a", "omega_b"}, {}, {});
  } else if (s.kind == "volume") {
    require_keys(s, entries, {}, {}, {"v", "indices"});
    if (!s.indices.empty()) {
      if (s.indices.size() != 3 || s.volume_vectors.size() != 3) {
        throw ParseError(
            "indexed volume needs exactly 3 vectors and 3 indices", 0, 0);
      }
      for (int idx : s.indices) {
        if (idx < 0 || idx >= s.dim) {
          throw ParseError("index " + std::to_string(idx) +
                               " out of range [0, " + std::to_string(s.dim) +
                               ")",
                           0, 0);
        }
      }
    } else if (static_cast<int>(s.volume_vectors.size()) != s.dim) {
      throw ParseError("determinant volume needs exactly dim = " +
                           std::to_string(s.dim) + " vectors, got " +
                           std::to_string(s.volume_vectors.size()),
                       0, 0);
    }
  } else if (s.kind == "curl") {
    require_keys(s, entries, {"x"}, {"t", "h"}, {});
    for (int i = 1; i <= s.dim; ++i) {
      std::string key = "v" + std::to_string(i);
      if (!s.field_exprs.count(key)) {
        throw ParseError("curl needs component expression '" + key + "'", 0,
                         0);
      }
    }
  } else if (s.kind == "lorentz") {
    require_keys(s, entries, {"v"}, {"charge"},
                 {"b_axial", "b_r", "b_f"});
    if (!s.scalars.count("charge")) {
      throw ParseError("lorentz needs 'charge'", 0, 0);
    }
    bool axial = s.vectors.count("b_axial") != 0;
    bool pair = s.vectors.count("b_r") && s.vectors.count("b_f");
    if (axial == pair) {
      throw ParseError("lorentz needs either 'b_axial' or the pair 'b_r', "
                       "'b_f'",
                       0, 0);
    }
    if (axial && s.dim != 3) {
      throw ParseError("'b_axial' requires dim = 3", 0, 0);
    }
  } else if (s.kind == "verify") {
    require_keys(s, entries, {}, {"seed", "instances", "tolerance"}, {"dims"});
    if (s.dims.empty()) s.dims = {2, 3, 4, 7};
    for (int d : s.dims) {
      if (d < 1) throw ParseError("verify dims must be >= 1", 0, 0);
    }
  }
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_array(const std::vector<double>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += format_double(v[i]);
  }
  return out + "]";
}

std::string Report::to_text() const {
  std::string out;
  for (const auto& [k, v] : lines) out += k + " = " + v + "\n";
  return out;
}

Scenario parse_scenario(const std::string& text) {
  Entries entries = tokenize(text);
  Scenario s;
  // kind and dim first, so later values can be checked against them.
  for (const auto& [key, raw] : entries) {
    if (key == "kind") {
      if (!kKinds.count(raw.text)) {
        throw ParseError("unknown kind '" + raw.text + "'", raw.line, raw.col);
      }
      s.kind = raw.text;
    } else if (key == "dim") {
      double d = parse_number(raw);
      if (d != std::floor(d) || d < 1) {
        throw ParseError("dim must be a positive integer", raw.line, raw.col);
      }
      s.dim = static_cast<int>(d);
    }
  }
  if (s.kind.empty()) throw ParseError("missing 'kind'", 0, 0);
  if (s.dim == 0 && s.kind != "verify") throw ParseError("missing 'dim'", 0, 0);

  for (const auto& [key, raw] : entries) {
    if (key == "kind" || key == "dim") continue;
    if (key == "particle") {
      s.particles.push_back(parse_number_array(raw));
    } else if (key == "v" && s.kind == "volume") {
      s.volume_vectors.push_back(parse_vector(raw, s.dim, key));
    } else if (key == "indices") {
      s.indices = parse_int_array(raw);
    } else if (key == "dims") {
      s.dims = parse_int_array(raw);
    } else if (key == "seed") {
      double d = parse_number(raw);
      if (d < 0 || d != std::floor(d)) {
        throw ParseError("seed must be a non-negative integer", raw.line,
                         raw.col);
      }
      s.seed = static_cast<std::uint64_t>(d);
      s.scalars["seed"] = d;
    } else if (key == "instances") {
      s.instances = static_cast<int>(parse_number(raw));
      s.scalars["instances"] = s.instances;
    } else if (key == "tolerance") {
      s.tolerance = parse_number(raw);
      s.scalars["tolerance"] = s.tolerance;
    } else if (s.kind == "curl" && is_field_key(key, s.dim)) {
      try {
        parse_expression(raw.text, s.dim);
      } catch (const ParseError& e) {
        throw ParseError(e.what(), raw.line, raw.col + e.column - 1);
      }
      s.field_exprs[key] = raw.text;
    } else if (!raw.text.empty() && raw.text.front() == '[') {
      s.vectors[key] = parse_vector(raw, s.dim, key);
    } else {
      s.scalars[key] = parse_number(raw);
    }
  }
  if (s.kind == "verify" && !s.scalars.count("seed")) s.seed = 42;

  validate(s, entries);
  return s;
}

namespace {

void add_vector(Report& r, const std::string& key, const Vector& v) {
  r.add(key, format_array(v.components()));
}

void add_bivector(Report& r, const std::string& key, const Bivector& b) {
  for (int i = 0; i < b.dim(); ++i) {
    std::vector<double> row(static_cast<std::size_t>(b.dim()));
    for (int j = 0; j < b.dim(); ++j) row[j] = b(i, j);
    r.add(key + ".row" + std::to_string(i), format_array(row));
  }
  if (b.dim() == 3) add_vector(r, key + ".axial", to_axial(b));
}

void add_matrix(Report& r, const std::string& key, const LinearMap& m) {
  for (int i = 0; i < m.dim(); ++i) {
    std::vector<double> row(static_cast<std::size_t>(m.dim()));
    for (int j = 0; j < m.dim(); ++j) row[j] = m(i, j);
    r.add(key + ".row" + std::to_string(i), format_array(row));
  }
}

PointMassBody body_from(const Scenario& s) {
  std::vector<Particle> ps;
  for (const auto& row : s.particles) {
    Particle p;
    p.mass = row[0];
    std::vector<double> pos(row.begin() + 1, row.begin() + 1 + s.dim);
    p.position = Vector(pos);
    if (row.size() == static_cast<std::size_t>(1 + 2 * s.dim)) {
      std::vector<double> vel(row.begin() + 1 + s.dim, row.end());
      p.velocity = Vector(vel);
    } else {
      p.velocity = Vector::zero(s.dim);
    }
    ps.push_back(std::move(p));
  }
  return PointMassBody(std::move(ps));
}

VectorField field_from(const Scenario& s) {
  std::vector<ExprPtr> comps;
  for (int i = 1; i <= s.dim; ++i) {
    comps.push_back(parse_expression(s.field_exprs.at("v" + std::to_string(i)),
                                     s.dim));
  }
  return VectorField{s.dim, [comps, dim = s.dim](const Vector& x, double t) {
                       Vector v = Vector::zero(dim);
                       for (int i = 0; i < dim; ++i)
                         v[i] = comps[static_cast<std::size_t>(i)]->eval(x, t);
                       return v;
                     }};
}

}  // namespace

Report run(const Scenario& s) {
  Report r;
  r.add("kind", s.kind);
  if (s.kind != "verify") r.add("dim", std::to_string(s.dim));

  if (s.kind == "moment") {
    const Vector& rv = s.vectors.at("r");
    const Vector& fv = s.vectors.at("f");
    add_vector(r, "input.r", rv);
    add_vector(r, "input.f", fv);
    add_bivector(r, "result.moment", torque(rv, fv));
  } else if (s.kind == "inertia") {
    PointMassBody body = body_from(s);
    const Vector& pole = s.vectors.at("pole");
    add_vector(r, "input.pole", pole);
    r.add("input.particles", std::to_string(body.particles().size()));
    r.add("input.total_mass", format_double(body.total_mass()));
    add_matrix(r, "result.inertia", inertia_matrix(body, pole));
  } else if (s.kind == "angular-momentum") {
    PointMassBody body = body_from(s);
    const Vector& pole = s.vectors.at("pole");
    add_vector(r, "input.pole", pole);
    r.add("input.particles", std::to_string(body.particles().size()));
    add_bivector(r, "result.angular_momentum", angular_momentum(body, pole));
  } else if (s.kind == "power") {
    Bivector m = doublewedge(s.vectors.at("r"), s.vectors.at("f"));
    Bivector w = doublewedge(s.vectors.at("omega_a"), s.vectors.at("omega_b"));
    add_bivector(r, "input.moment", m);
    add_bivector(r, "input.omega", w);
    r.add("result.power", format_double(power(m, w)));
  } else if (s.kind == "volume") {
    for (std::size_t i = 0; i < s.volume_vectors.size(); ++i) {
      add_vector(r, "input.v" + std::to_string(i + 1), s.volume_vectors[i]);
    }
    if (!s.indices.empty()) {
      Bivector ab = doublewedge(s.volume_vectors[0], s.volume_vectors[1]);
      double vol = three_index_product(ab, s.volume_vectors[2], s.indices[0],
                                       s.indices[1], s.indices[2]);
      r.add("input.indices",
            "[" + std::to_string(s.indices[0]) + ", " +
                std::to_string(s.indices[1]) + ", " +
                std::to_string(s.indices[2]) + "]");
      r.add("result.volume", format_double(vol));
    } else {
      r.add("result.volume", format_double(hypervolume(s.volume_vectors)));
    }
  } else if (s.kind == "curl") {
    VectorField field = field_from(s);
    const Vector& x = s.vectors.at("x");
    double t = s.scalars.count("t") ? s.scalars.at("t") : 0.0;
    double h = s.scalars.count("h") ? s.scalars.at("h") : default_step(x);
    for (int i = 1; i <= s.dim; ++i) {
      std::string key = "v" + std::to_string(i);
      r.add("input." + key, s.field_exprs.at(key));
    }
    add_vector(r, "input.x", x);
    r.add("input.t", format_double(t));
    r.add("input.h", format_double(h));
    add_bivector(r, "result.curl", curl(field, x, t, h));
  } else if (s.kind == "lorentz") {
    double charge = s.scalars.at("charge");
    const Vector& v = s.vectors.at("v");
    Bivector b = s.vectors.count("b_axial")
                     ? to_bivector(s.vectors.at("b_axial"))
                     : doublewedge(s.vectors.at("b_r"), s.vectors.at("b_f"));
    r.add("input.charge", format_double(charge));
    add_vector(r, "input.v", v);
    add_bivector(r, "input.b", b);
    add_vector(r, "result.force", lorentz_force(charge, b, v));
  } else if (s.kind == "verify") {
    r.add("seed", std::to_string(s.seed));
    {
      std::string ds = "[";
      for (std::size_t i = 0; i < s.dims.size(); ++i) {
        if (i) ds += ", ";
        ds += std::to_string(s.dims[i]);
      }
      r.add("dims", ds + "]");
    }
    r.add("instances", std::to_string(s.instances));
    r.add("tolerance", format_double(s.tolerance));
    bool all_pass = true;
    for (const IdentityCheck& c :
         run_identity_suite(s.seed, s.dims, s.instances, s.tolerance)) {
      r.add("check." + c.name + ".status", c.pass ? "pass" : "fail");
      r.add("check." + c.name + ".max_error", format_double(c.max_error));
      all_pass = all_pass && c.pass;
    }
    r.add("verify.status", all_pass ? "pass" : "fail");
    r.verify_failed = !all_pass;
  }
  return r;
}

}  // namespace dwedge
