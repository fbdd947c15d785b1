#include <gtest/gtest.h>

#include "lagsub/error.hpp"
#include "lagsub/io/json_io.hpp"

using namespace lagsub;
using io::json;
using lie::LieAlgebra;

TEST(Json, ScalarsAndVectors) {
  const exact::Scalar s = exact::Scalar::parse("1/2-3*i");
  EXPECT_EQ(io::scalar_from_json(io::to_json(s), 0), s);
  EXPECT_EQ(io::scalar_from_json(json(3), 0), exact::Scalar(3L));
  EXPECT_THROW(io::scalar_from_json(json(1.5), 0), ParseError);
  EXPECT_THROW(io::vec_from_json(json::array({"1"}), 2, 0), ParseError);
}

TEST(Json, SubspaceRoundTrip) {
  const LieAlgebra g{roots::RootSystem("A2")};
  const auto m = dbl::manin_complement(g);
  EXPECT_EQ(io::subspace_from_json(io::to_json(m), 0), m);
  EXPECT_THROW(io::subspace_from_json(json{{"ambient", 2}, {"basis", json::array()}, {"extra", 1}}, 0), ParseError);
}

TEST(Json, QuadrupleRoundTripOverCatalog) {
  for (const char* type : {"A1", "A2"}) {
    const LieAlgebra g{roots::RootSystem(type)};
    for (const auto& l : lagrange::enumerate_orbit_labels(g).labels) {
      for (const auto& q : l.samples) {
        const json j = io::to_json(g, q);
        const auto back = io::quadruple_from_json(g, json::parse(j.dump()), 0);
        EXPECT_EQ(back.p, q.p);
        EXPECT_EQ(back.p_prime, q.p_prime);
        EXPECT_EQ(back.sigma, q.sigma);
        EXPECT_EQ(back.xi_scalars, q.xi_scalars);
        EXPECT_EQ(back.l0, q.l0);
        EXPECT_EQ(lagrange::construct_l(g, back), lagrange::construct_l(g, q));
      }
    }
  }
}

TEST(Json, QuadrupleSchemaErrors) {
  const LieAlgebra g{roots::RootSystem("A1")};
  json j = io::to_json(g, lagrange::diagonal_quadruple(g));
  j["bogus"] = true;
  EXPECT_THROW(io::quadruple_from_json(g, j, 0), ParseError);
  json k = io::to_json(g, lagrange::diagonal_quadruple(g));
  k["P"] = json::array({json::array({2})});
  EXPECT_THROW(io::quadruple_from_json(g, k, 0), ParseError);
  k["P"] = json::array({json::array({1, 0})});
  EXPECT_THROW(io::quadruple_from_json(g, k, 0), ParseError);
  json missing = io::to_json(g, lagrange::diagonal_quadruple(g));
  missing.erase("sigma");
  EXPECT_THROW(io::quadruple_from_json(g, missing, 0), ParseError);
}

TEST(Json, AlgebraAndGroupForm) {
  const auto a = io::algebra_from_json(json::parse(R"({"type": "A1xA1", "center_dim": 1, "center_form": [["2"]]})"), 0);
  const LieAlgebra g = a.build();
  EXPECT_EQ(g.dim(), 7);
  EXPECT_THROW(io::algebra_from_json(json::parse(R"({"type": "A1", "rank": 1})"), 0), ParseError);
  EXPECT_EQ(io::group_form_from_json(g, json{{"preset", "adjoint"}}, 0).preset, "adjoint");
  const auto user = io::group_form_from_json(g, json::parse(R"({"lattice": [["1","0","0"],["0","1","0"],["0","0","2"]]})"), 0);
  EXPECT_EQ(user.preset, "user");
  EXPECT_THROW(io::group_form_from_json(g, json{{"preset", "adjoint"}, {"lattice", json::array()}}, 0), ParseError);
}

TEST(Json, VerdictShape) {
  const LieAlgebra g{roots::RootSystem("A1")};
  const auto v = integrab::integrability_verdict(g, lagrange::diagonal_quadruple(g), integrab::preset_group_form(g, "adjoint"));
  const json j = io::to_json(v);
  EXPECT_TRUE(j["algebraic"].get<bool>());
  EXPECT_TRUE(j["closed"].get<bool>());
  EXPECT_EQ(j["V"].size(), 1u);
  EXPECT_TRUE(j["witness"]["algebraic"].contains("sublattice"));
}
