#include "lagsub/io/json_io.hpp"

#include <algorithm>

#include "lagsub/error.hpp"
#include "lagsub/roots/canonical_label.hpp"

namespace lagsub::io {

namespace {

const json& require(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw ParseError(where + ": missing key '" + key + "'");
  return j.at(key);
}

int root_index(const roots::RootSystem& r, const json& j) {
  if (!j.is_array() || static_cast<int>(j.size()) != r.rank()) throw ParseError("root must be a list of " + std::to_string(r.rank()) + " integers");
  roots::RootVec v;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw ParseError("root coefficients must be integers");
    v.push_back(e.get<int>());
  }
  const int i = r.index_of(v);
  if (i < 0) throw ParseError("not a root: " + j.dump());
  return i;
}

json root_json(const roots::RootSystem& r, int i) { return json(r.root(i)); }

json rat_vec_json(const roots::RatVec& v) {
  json out = json::array();
  for (const auto& e : v) out.push_back(e.get_str());
  return out;
}

}  // namespace

void check_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  for (const auto& [key, value] : j.items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; })) {
      throw ParseError(where + ": unknown key '" + key + "'");
    }
  }
}

json to_json(const Scalar& s) { return s.str(); }

Scalar scalar_from_json(const json& j, long d) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (!j.is_string()) throw ParseError("scalar must be a string or an integer: " + j.dump());
  return Scalar::parse(j.get<std::string>(), d);
}

json to_json(const Vec& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(to_json(s));
  return out;
}

Vec vec_from_json(const json& j, std::size_t n, long d) {
  if (!j.is_array() || j.size() != n) throw ParseError("expected a vector of length " + std::to_string(n));
  Vec v;
  for (const auto& e : j) v.push_back(scalar_from_json(e, d));
  return v;
}

json rows_to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

Matrix rows_from_json(const json& j, std::size_t cols, long d) {
  if (!j.is_array()) throw ParseError("expected a list of rows");
  Matrix m(0, cols);
  for (const auto& row : j) m.append_row(vec_from_json(row, cols, d));
  return m;
}

json to_json(const Subspace& s) { return {{"ambient", s.ambient()}, {"basis", rows_to_json(s.basis())}}; }

Subspace subspace_from_json(const json& j, long d) {
  check_keys(j, {"ambient", "basis"}, "subspace");
  const json& amb = require(j, "ambient", "subspace");
  if (!amb.is_number_unsigned()) throw ParseError("subspace: ambient must be a non-negative integer");
  const auto n = amb.get<std::size_t>();
  return Subspace::span(rows_from_json(require(j, "basis", "subspace"), n, d));
}

json roots_to_json(const roots::RootSystem& r, const roots::RootSubset& s) {
  json out = json::array();
  for (int i : s) out.push_back(root_json(r, i));
  return out;
}

roots::RootSubset roots_from_json(const roots::RootSystem& r, const json& j) {
  if (!j.is_array()) throw ParseError("expected a list of roots");
  roots::RootSubset s;
  for (const auto& e : j) s.push_back(root_index(r, e));
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw ParseError("repeated root in a root list");
  return s;
}

LieAlgebra AlgebraSpec::build() const {
  return LieAlgebra(roots::RootSystem(type), center_dim, center_form.value_or(Matrix()));
}

AlgebraSpec algebra_from_json(const json& j, long d) {
  AlgebraSpec a;
  if (j.is_string()) {
    a.type = j.get<std::string>();
    return a;
  }
  check_keys(j, {"type", "center_dim", "center_form"}, "algebra");
  const json& t = require(j, "type", "algebra");
  if (!t.is_string()) throw ParseError("algebra: type must be a string");
  a.type = t.get<std::string>();
  if (j.contains("center_dim")) {
    if (!j["center_dim"].is_number_unsigned()) throw ParseError("algebra: center_dim must be a non-negative integer");
    a.center_dim = j["center_dim"].get<int>();
  }
  if (j.contains("center_form")) a.center_form = rows_from_json(j["center_form"], a.center_dim, d);
  return a;
}

json to_json(const AlgebraSpec& a) {
  json out = {{"type", a.type}, {"center_dim", a.center_dim}};
  if (a.center_form) out["center_form"] = rows_to_json(*a.center_form);
  return out;
}

json to_json(const LieAlgebra& g, const lagrange::Quadruple& q) {
  const auto& r = g.roots();
  json sigma = json::array();
  for (int a : q.sigma.source) sigma.push_back({root_json(r, a), root_json(r, q.sigma(a))});
  json xi = json::array();
  for (const auto& [beta, c] : q.xi_scalars) xi.push_back({root_json(r, beta), to_json(c)});
  json out = {{"P", roots_to_json(r, q.p)},
              {"P_prime", roots_to_json(r, q.p_prime)},
              {"sigma", sigma},
              {"xi", xi},
              {"l0", rows_to_json(q.l0.basis())}};
  out["x"] = to_json(q.x.empty() ? exact::zero_vec(g.dim()) : q.x);
  return out;
}

lagrange::Quadruple quadruple_from_json(const LieAlgebra& g, const json& j, long d) {
  check_keys(j, {"P", "P_prime", "sigma", "xi", "x", "l0"}, "quadruple");
  const auto& r = g.roots();
  lagrange::Quadruple q;
  q.p = roots_from_json(r, require(j, "P", "quadruple"));
  q.p_prime = roots_from_json(r, require(j, "P_prime", "quadruple"));
  const json& sj = require(j, "sigma", "quadruple");
  if (!sj.is_array()) throw ParseError("quadruple: sigma must be a list of [root, image] pairs");
  q.sigma.image.assign(r.size(), -1);
  for (const auto& pr : sj) {
    if (!pr.is_array() || pr.size() != 2) throw ParseError("quadruple: sigma entries are [root, image] pairs");
    const int a = root_index(r, pr[0]), b = root_index(r, pr[1]);
    if (q.sigma.image[a] >= 0) throw ParseError("quadruple: sigma lists a root twice");
    q.sigma.image[a] = b;
    q.sigma.source.push_back(a);
    q.sigma.target.push_back(b);
  }
  std::sort(q.sigma.source.begin(), q.sigma.source.end());
  std::sort(q.sigma.target.begin(), q.sigma.target.end());
  if (j.contains("xi")) {
    if (!j["xi"].is_array()) throw ParseError("quadruple: xi must be a list of [root, scalar] pairs");
    for (const auto& pr : j["xi"]) {
      if (!pr.is_array() || pr.size() != 2) throw ParseError("quadruple: xi entries are [root, scalar] pairs");
      q.xi_scalars[root_index(r, pr[0])] = scalar_from_json(pr[1], d);
    }
  } else {
    q.xi_scalars = lie::unit_scalars(r, q.sigma);
  }
  if (j.contains("x")) q.x = vec_from_json(j["x"], g.dim(), d);
  const std::size_t c = 2 * g.cartan_dim();
  q.l0 = j.contains("l0") ? Subspace::span(rows_from_json(j["l0"], c, d)) : Subspace(c);
  return q;
}

json to_json(const dbl::LagrangianVerdict& v) {
  return {{"isotropic", v.isotropic}, {"closed", v.closed}, {"dim", v.dim}, {"lagrangian", v.lagrangian}};
}

json to_json(const LieAlgebra& g, const lagrange::OrbitLabel& l) {
  const auto& r = g.roots();
  json sigma = json::array();
  for (const auto& [a, b] : l.key.sigma) sigma.push_back({root_json(r, a), root_json(r, b)});
  json out = {{"P", roots_to_json(r, l.key.p)},
              {"P_prime", roots_to_json(r, l.key.p_prime)},
              {"sigma", sigma},
              {"h", rat_vec_json(l.key.h)},
              {"dim_z", l.dim_z},
              {"dim_xi", l.dim_xi},
              {"dim_xi_linearized", l.dim_xi_linearized},
              {"dim_lambda", l.dim_lambda},
              {"diag_transverse", l.diag_transverse},
              {"diag_dims", l.diag_dims}};
  if (l.has_representative) {
    out["representative"] = to_json(g, l.representative);
    json samples = json::array();
    for (const auto& s : l.samples) samples.push_back(to_json(g, s));
    out["samples"] = samples;
  } else {
    out["representative"] = nullptr;
    out["samples"] = json::array();
  }
  return out;
}

json to_json(const LieAlgebra& g, const lagrange::Catalog& c) {
  json labels = json::array();
  for (const auto& l : c.labels) labels.push_back(to_json(g, l));
  return {{"labels", labels},
          {"field_d", c.field_d},
          {"non_admissible_sigma", c.non_admissible_sigma},
          {"skipped_nilpotents", c.skipped_nilpotents}};
}

integrab::GroupForm group_form_from_json(const LieAlgebra& g, const json& j, long d) {
  if (j.is_string()) return integrab::preset_group_form(g, j.get<std::string>());
  check_keys(j, {"preset", "lattice"}, "group_form");
  if (j.contains("preset") == j.contains("lattice")) throw ParseError("group_form: give exactly one of preset, lattice");
  if (j.contains("preset")) {
    if (!j["preset"].is_string()) throw ParseError("group_form: preset must be a string");
    return integrab::preset_group_form(g, j["preset"].get<std::string>());
  }
  return integrab::user_group_form(g, rows_from_json(j["lattice"], g.cartan_dim(), d));
}

json to_json(const integrab::LatticeTest& t) {
  json out = {{"passed", t.passed}};
  if (t.passed) {
    json rows = json::array();
    for (const auto& v : t.sublattice) rows.push_back(to_json(v));
    out["sublattice"] = rows;
  }
  if (t.failing_direction) out["failing_direction"] = to_json(*t.failing_direction);
  return out;
}

json to_json(const integrab::IntegrabilityVerdict& v) {
  return {{"algebraic", v.algebraic.passed},
          {"closed", v.closed.passed},
          {"V", rows_to_json(v.v.basis())},
          {"V_real", rows_to_json(v.v_real.basis())},
          {"witness", {{"algebraic", to_json(v.algebraic)}, {"closed", to_json(v.closed)}}}};
}

json to_json(const LieAlgebra& g, const lagrange::Decomposition& d) {
  const auto& r = g.roots();
  json out = {{"P", roots_to_json(r, d.p)},
              {"P_prime", roots_to_json(r, d.p_prime)},
              {"l0", rows_to_json(d.l0.basis())},
              {"conjugated", d.conjugated},
              {"theta", rows_to_json(d.theta.matrix)}};
  out["quadruple"] = d.quadruple ? to_json(g, *d.quadruple) : json(nullptr);
  return out;
}

}  // namespace lagsub::io
