// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lagsub/dbl/double.hpp"
#include "lagsub/dbl/rmatrix.hpp"
#include "lagsub/geom/geom.hpp"
#include "lagsub/integrab/integrability.hpp"
#include "lagsub/io/json_io.hpp"
#include "lagsub/lagrange/catalog.hpp"
#include "lagsub/roots/canonical_label.hpp"
#include "lagsub/roots/parabolic.hpp"

using namespace lagsub;
using exact::Matrix;
using exact::Scalar;
using exact::Subspace;
using exact::Vec;
using lagrange::Quadruple;
using lie::LieAlgebra;

namespace {

constexpr double kManinLimit = 5.0;
constexpr double kCybeLimit = 10.0;
constexpr double kSoundnessLimit = 120.0;
constexpr double kRoundTripLimit = 120.0;
constexpr double kLabelLimit = 60.0;
constexpr int kSamples = 3;
constexpr int kSweepValues = 5;
constexpr double kAntisymmetryTol = 1e-9;
constexpr double kJacobiTol = 1e-6;
constexpr int kGeomPoints = 100;
constexpr int kGeomAutomorphisms = 20;
constexpr std::uint64_t kGeomSeed = 2024;
constexpr std::uint64_t kDeterminismSeed = 7;

const std::vector<std::string> kRankTwo{"A1", "A2", "B2", "G2", "A1xA1"};

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::map<std::string, lagrange::Catalog>& catalogs() {
  static std::map<std::string, lagrange::Catalog> c;
  return c;
}

Outcome manin() {
  for (const char* t : {"A1", "A2", "B2"}) {
    const auto v = dbl::manin_triple_check(LieAlgebra{roots::RootSystem(t)});
    if (!v.passed()) return {false, std::string("manin triple fails for ") + t};
  }
  return {true, "A1 A2 B2 exact"};
}

Outcome cybe() {
  for (const char* t : {"A1", "A2"}) {
    const LieAlgebra g{roots::RootSystem(t)};
    const auto r = dbl::sklyanin_r(g);
    if (!dbl::cybe_residual(g, r.r).is_zero()) return {false, std::string("nonzero CYBE residual for ") + t};
    if (!dbl::is_invariant(g, r.sym)) return {false, std::string("r_sym not invariant for ") + t};
  }
  return {true, "A1 A2 residuals exactly 0"};
}

Outcome soundness() {
  std::size_t checked = 0, labels = 0;
  for (const auto& t : kRankTwo) {
    const LieAlgebra g{roots::RootSystem(t)};
    lagrange::CatalogOptions opts;
    opts.samples = kSamples;
    auto cat = lagrange::enumerate_orbit_labels(g, opts);
    for (const auto& l : cat.labels) {
      ++labels;
      if (!l.has_representative) return {false, t + ": label without representative"};
      if (static_cast<int>(l.samples.size()) < kSamples) return {false, t + ": too few samples"};
      std::vector<const Quadruple*> all{&l.representative};
      for (const auto& s : l.samples) all.push_back(&s);
      for (const auto* q : all) {
        if (!dbl::verify_lagrangian(g, lagrange::construct_l(g, *q)).lagrangian) {
          return {false, t + ": " + roots::to_string(l.key) + " not Lagrangian"};
        }
        ++checked;
      }
    }
    catalogs().emplace(t, std::move(cat));
  }
  return {true, std::to_string(labels) + " labels, " + std::to_string(checked) + " subspaces Lagrangian"};
}

Outcome roundtrip() {
  std::size_t n = 0;
  for (const auto& t : kRankTwo) {
    const LieAlgebra g{roots::RootSystem(t)};
    for (const auto& l : catalogs().at(t).labels) {
      const auto& q = l.representative;
      const auto qd = lagrange::validate(g, q);
      const auto s = lagrange::construct_l(g, q);
      const auto d = lagrange::decompose_l(g, s);
      const std::string where = t + ": " + roots::to_string(l.key);
      if (d.p != q.p || d.p_prime != q.p_prime) return {false, where + " P/P' differ"};
      if (d.l0 != q.l0) return {false, where + " l0 differs"};
      for (std::size_t k = 0; k < qd.pd.a.dim(); ++k) {
        const Vec v = qd.pd.a.basis().row(k);
        if (d.theta.apply(v) != qd.theta.apply(v)) return {false, where + " theta differs"};
      }
      const auto rebuilt = lagrange::construct_from_theta(g, lie::parabolic_subalgebra(g, d.p),
                                                          lie::parabolic_subalgebra(g, d.p_prime),
                                                          d.theta.matrix, d.l0);
      if (exact::Subspace(dbl::apply_pair(d.u, d.v, s)) != rebuilt) return {false, where + " rebuild differs"};
      ++n;
    }
  }
  return {true, std::to_string(n) + " representatives"};
}

// Tangent space of {X : X^T G X = G} at the identity, counted from the linear equations.
std::size_t orthogonal_tangent_dim(std::size_t n) {
  Matrix gram = Matrix::identity(n);
  gram(0, 0) = Scalar(2L);
  Matrix eqs(0, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vec row = exact::zero_vec(n * n);
      for (std::size_t k = 0; k < n; ++k) {
        row[k * n + i] += gram(k, j);
        row[k * n + j] += gram(i, k);
      }
      eqs.append_row(row);
    }
  }
  return n * n - exact::rank(eqs);
}

Outcome dimensions() {
  for (int n : {1, 2}) {
    const auto oracle = static_cast<int>(orthogonal_tangent_dim(n));
    if (lagrange::dim_lambda(n) != oracle || oracle != n * (n - 1) / 2) {
      return {false, "dim Lambda mismatch at n = " + std::to_string(n)};
    }
  }
  std::size_t n = 0;
  for (const auto& t : kRankTwo) {
    for (const auto& l : catalogs().at(t).labels) {
      if (l.dim_xi != l.dim_xi_linearized) return {false, t + ": dim Xi mismatch at " + roots::to_string(l.key)};
      ++n;
    }
  }
  return {true, "Lambda n=1,2; Xi on " + std::to_string(n) + " labels"};
}

LieAlgebra gl_pair() {
  Matrix cf(1, 1);
  cf(0, 0) = Scalar(2L);
  return LieAlgebra(roots::RootSystem("A1xA1"), 1, cf);
}

// A1xA1 + center, P = P' = {alpha, -alpha, beta}, l0 = graph of minus the
// reflection of span{h_beta, z} in h_beta + slope * z.
Quadruple slope_example(const LieAlgebra& g, const Scalar& slope) {
  const Vec v = g.from_cartan_coords(Vec{Scalar(0L), Scalar(1L), slope});
  const Scalar vv = g.form(v, v);
  std::vector<Vec> rows;
  for (int k = 1; k < 3; ++k) {
    const Vec a = g.from_cartan_coords(exact::unit_vec(3, k));
    const Vec ra = a - (Scalar(2L) * g.form(a, v) / vv) * v;
    rows.push_back(exact::concat(g.cartan_coords(a), g.cartan_coords(-ra)));
  }
  Quadruple q;
  q.p = {0, 1, 2};
  q.p_prime = q.p;
  q.sigma = roots::identity_isometry(g.roots(), {0, 2});
  q.xi_scalars = lie::unit_scalars(g.roots(), q.sigma);
  q.l0 = Subspace::span(6, rows);
  return q;
}

Outcome trichotomy() {
  const LieAlgebra g = gl_pair();
  const auto gf = integrab::preset_group_form(g, "adjoint");
  const std::array<Scalar, 3> slopes{Scalar(2L), Scalar::from_parts(1, 1), Scalar::sqrt_of(2)};
  const std::array<std::pair<bool, bool>, 3> expected{{{true, true}, {false, true}, {false, false}}};
  const std::array<Scalar, kSweepValues> cs{Scalar(1L), Scalar(2L), Scalar(3L), Scalar(-1L), Scalar(mpq_class(1, 2))};
  const std::array<Vec, kSweepValues> xs{Vec{}, g.e(0), Scalar(2L) * g.e(0), g.e(2), Scalar(3L) * g.e(0)};
  int runs = 0;
  for (std::size_t k = 0; k < slopes.size(); ++k) {
    Quadruple q = slope_example(g, slopes[k]);
    auto same = [&](const Quadruple& qq) {
      const auto v = integrab::integrability_verdict(g, qq, gf);
      ++runs;
      return v.algebraic.passed == expected[k].first && v.closed.passed == expected[k].second;
    };
    if (!same(q)) return {false, "wrong verdict for slope " + slopes[k].str()};
    for (const auto& c : cs) {
      q.xi_scalars = {{0, c}};
      q.x.clear();
      if (!same(q)) return {false, "verdict moved under xi = " + c.str()};
    }
    q.xi_scalars = {{0, Scalar(1L)}};
    for (const auto& x : xs) {
      q.x = x;
      if (!same(q)) return {false, "verdict moved under an x twist"};
    }
  }
  return {true, "(alg,closed) (-alg,closed) (-alg,-closed); " + std::to_string(runs) + " verdicts"};
}

Outcome canonical_labels() {
  std::size_t total = 0;
  for (const auto& t : kRankTwo) {
    const roots::RootSystem r(t);
    std::vector<roots::RatVec> hs{roots::RatVec(r.rank(), 0), roots::RatVec(r.rank(), 1)};
    roots::RatVec skew(r.rank(), 0);
    skew[0] = 2;
    hs.push_back(skew);
    roots::RatVec last(r.rank(), 0);
    last.back() = 1;
    hs.push_back(last);
    const auto ps = roots::enumerate_parabolic_subsets(r);
    std::set<roots::OrbitKey> keys;
    for (const auto& p : ps) {
      for (const auto& pp : ps) {
        for (const auto& s : roots::enumerate_isometries(r, roots::levi_part(r, p), roots::levi_part(r, pp))) {
          for (const auto& h : hs) keys.insert(roots::make_key(p, pp, s, h));
        }
      }
    }
    // Orbits by explicit W action; labels must be constant on each and distinct across them.
    std::map<roots::OrbitKey, int> orbit_of;
    int orbits = 0;
    for (const auto& k : keys) {
      if (orbit_of.count(k)) continue;
      for (const auto& w : r.weyl_group()) orbit_of.emplace(roots::act(r, w, k), orbits);
      ++orbits;
    }
    std::map<int, roots::OrbitKey> label_of_orbit;
    std::map<roots::OrbitKey, int> orbit_of_label;
    for (const auto& [k, o] : orbit_of) {
      const auto lab = roots::weyl_canonical_label(r, k);
      const auto [it, fresh] = label_of_orbit.emplace(o, lab);
      if (!fresh && !(it->second == lab)) return {false, t + ": label not constant on an orbit"};
      const auto [jt, fresh2] = orbit_of_label.emplace(lab, o);
      if (!fresh2 && jt->second != o) return {false, t + ": two orbits share a label"};
      ++total;
    }
  }
  return {true, std::to_string(total) + " tuples over full W"};
}

Outcome geometry() {
  const auto rep = geom::geom_check(LieAlgebra{roots::RootSystem("A1")}, kGeomSeed, kGeomPoints, kGeomAutomorphisms);
  char buf[200];
  std::snprintf(buf, sizeof buf, "antisym %.1e, jacobi %.1e over %d points / %d triples, %d automorphisms",
                rep.max_antisymmetry_residual, rep.max_jacobi_residual, rep.points, rep.triples_tested,
                rep.exact_automorphisms);
  const bool ok = rep.points >= kGeomPoints && rep.max_antisymmetry_residual < kAntisymmetryTol &&
                  rep.max_jacobi_residual < kJacobiTol && rep.max_identity_bracket < kAntisymmetryTol &&
                  rep.exact_automorphisms >= kGeomAutomorphisms && rep.all_l_g_lagrangian &&
                  rep.all_l_g_full_parabolic && rep.equivariance_holds && rep.theorem_conjugation_holds;
  return {ok, buf};
}

std::string run_capture(const std::string& cmd, int& status) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  status = pclose(p);
  return out;
}

Outcome determinism() {
#ifdef LAGSUB_CLI_PATH
  const std::string cmd = std::string("\"") + LAGSUB_CLI_PATH + "\" catalog --algebra A2 --seed " +
                          std::to_string(kDeterminismSeed);
  int s1 = 0, s2 = 0;
  const std::string a = run_capture(cmd, s1);
  const std::string b = run_capture(cmd, s2);
  if (s1 != 0 || s2 != 0) return {false, "CLI exited with nonzero status"};
  if (a.empty() || a != b) return {false, "outputs differ"};
  return {true, "two CLI runs byte-identical (" + std::to_string(a.size()) + " bytes)"};
#else
  const LieAlgebra g{roots::RootSystem("A2")};
  lagrange::CatalogOptions opts;
  opts.seed = kDeterminismSeed;
  const std::string a = io::to_json(g, lagrange::enumerate_orbit_labels(g, opts)).dump(2);
  const std::string b = io::to_json(g, lagrange::enumerate_orbit_labels(g, opts)).dump(2);
  if (a != b) return {false, "outputs differ"};
  return {true, "two in-process runs byte-identical (" + std::to_string(a.size()) + " bytes)"};
#endif
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
    double limit;
  };
  const std::vector<Criterion> criteria{
      {"manin-triple", manin, kManinLimit},
      {"cybe", cybe, kCybeLimit},
      {"construction-soundness", soundness, kSoundnessLimit},
      {"roundtrip", roundtrip, kRoundTripLimit},
      {"dimension-formulas", dimensions, 0},
      {"integrability-trichotomy", trichotomy, 0},
      {"canonical-labels", canonical_labels, kLabelLimit},
      {"geometry-sl2", geometry, 0},
      {"determinism", determinism, 0},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto& c = criteria[k];
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double dt = seconds_since(t0);
    if (c.limit > 0 && dt >= c.limit) {
      o.pass = false;
      o.detail += "; over time limit";
    }
    std::ostringstream line;
    line << (o.pass ? "PASS" : "FAIL") << "  " << k + 1 << "  " << c.name << ": " << o.detail;
    char tbuf[48];
    if (c.limit > 0) {
      std::snprintf(tbuf, sizeof tbuf, " [%.2fs < %.0fs]", dt, c.limit);
    } else {
      std::snprintf(tbuf, sizeof tbuf, " [%.2fs]", dt);
    }
    std::printf("%s%s\n", line.str().c_str(), tbuf);
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
