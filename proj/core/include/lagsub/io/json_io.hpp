#pragma once

#include <json.hpp>

#include <initializer_list>
#include <string>

#include "lagsub/integrab/integrability.hpp"
#include "lagsub/lagrange/catalog.hpp"

namespace lagsub::io {

using json = nlohmann::json;
using exact::Matrix;
using exact::Scalar;
using exact::Subspace;
using exact::Vec;
using lie::LieAlgebra;

/// Throws ParseError if j is not an object or has a key outside `allowed`.
void check_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& where);

json to_json(const Scalar& s);
Scalar scalar_from_json(const json& j, long d);
json to_json(const Vec& v);
Vec vec_from_json(const json& j, std::size_t n, long d);
json rows_to_json(const Matrix& m);
Matrix rows_from_json(const json& j, std::size_t cols, long d);
json to_json(const Subspace& s);
Subspace subspace_from_json(const json& j, long d);

/// Roots are written as coefficient vectors in the simple roots.
json roots_to_json(const roots::RootSystem& r, const roots::RootSubset& s);
roots::RootSubset roots_from_json(const roots::RootSystem& r, const json& j);

/// Algebra block: {"type": "A1xA1", "center_dim": 1, "center_form": [["2"]]}.
struct AlgebraSpec {
  std::string type;
  int center_dim = 0;
  std::optional<Matrix> center_form;
  LieAlgebra build() const;
};
AlgebraSpec algebra_from_json(const json& j, long d);
json to_json(const AlgebraSpec& a);

json to_json(const LieAlgebra& g, const lagrange::Quadruple& q);
lagrange::Quadruple quadruple_from_json(const LieAlgebra& g, const json& j, long d);

json to_json(const dbl::LagrangianVerdict& v);
json to_json(const LieAlgebra& g, const lagrange::OrbitLabel& l);
json to_json(const LieAlgebra& g, const lagrange::Catalog& c);

/// {"preset": "adjoint"} or {"lattice": [[...], ...]}.
integrab::GroupForm group_form_from_json(const LieAlgebra& g, const json& j, long d);
json to_json(const integrab::LatticeTest& t);
json to_json(const integrab::IntegrabilityVerdict& v);

json to_json(const LieAlgebra& g, const lagrange::Decomposition& d);

}  // namespace lagsub::io
