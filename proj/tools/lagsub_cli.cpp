// lagsub: construct, verify, classify and test Lagrangian subalgebras of g x g.
//
// Exit codes: 0 all asserted checks pass, 1 a mathematical check failed,
// 2 usage or schema error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "lagsub/dbl/double.hpp"
#include "lagsub/dbl/rmatrix.hpp"
#include "lagsub/error.hpp"
#include "lagsub/geom/geom.hpp"
#include "lagsub/integrab/integrability.hpp"
#include "lagsub/io/json_io.hpp"
#include "lagsub/lagrange/catalog.hpp"

namespace {

using lagsub::io::json;

constexpr int kPass = 0;
constexpr int kMathFail = 1;
constexpr int kUsage = 2;

struct UsageError : lagsub::Error {
  using lagsub::Error::Error;
};

struct Options {
  std::string algebra;
  int center_dim = -1;
  std::string center_form;
  long field_d = 0;
  bool field_d_set = false;
  std::string input;
  std::string output;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::string group_form;
  int samples = 3;
  int points = 100;
  int automorphisms = 20;
};

// Run configuration after merging the input file and the flags (flags win).
struct Run {
  lagsub::io::AlgebraSpec spec;
  long d = 0;
  bool d_set = false;
  std::uint64_t seed = 0;
  json payload = json::object();
};

json parse_json_text(const std::string& text, const std::string& where) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw lagsub::ParseError(where + ": " + e.what());
  }
}

Run load(const Options& o) {
  Run run;
  json cfg = json::object();
  if (!o.input.empty()) {
    std::ifstream in(o.input);
    if (!in) throw UsageError("cannot read " + o.input);
    std::stringstream ss;
    ss << in.rdbuf();
    cfg = parse_json_text(ss.str(), o.input);
    lagsub::io::check_keys(cfg, {"algebra", "field_d", "seed", "quadruple", "subspace", "group_form"}, "input");
  }
  if (cfg.contains("field_d")) {
    if (!cfg["field_d"].is_number_integer()) throw lagsub::ParseError("input: field_d must be an integer");
    run.d = cfg["field_d"].get<long>();
    run.d_set = true;
  }
  if (o.field_d_set) {
    run.d = o.field_d;
    run.d_set = true;
  }
  if (run.d_set && (run.d == 0 || run.d == 1 || run.d < 0)) throw UsageError("--field-d must be a squarefree integer > 1");
  if (cfg.contains("seed")) {
    if (!cfg["seed"].is_number_unsigned()) throw lagsub::ParseError("input: seed must be a non-negative integer");
    run.seed = cfg["seed"].get<std::uint64_t>();
  }
  if (o.seed_set) run.seed = o.seed;

  if (cfg.contains("algebra")) run.spec = lagsub::io::algebra_from_json(cfg["algebra"], run.d);
  if (!o.algebra.empty()) {
    run.spec.type = o.algebra;
    if (!cfg.contains("algebra") || cfg["algebra"].is_string()) run.spec.center_dim = 0;
  }
  if (o.center_dim >= 0) run.spec.center_dim = o.center_dim;
  if (!o.center_form.empty()) {
    run.spec.center_form = lagsub::io::rows_from_json(parse_json_text(o.center_form, "--center-form"),
                                                      run.spec.center_dim, run.d);
  }
  if (run.spec.type.empty()) throw UsageError("no algebra given (use --algebra or an input file)");
  for (const char* key : {"quadruple", "subspace", "group_form"}) {
    if (cfg.contains(key)) run.payload[key] = cfg[key];
  }
  if (!o.group_form.empty()) {
    run.payload["group_form"] =
        o.group_form.front() == '{' ? parse_json_text(o.group_form, "--group-form") : json(o.group_form);
  }
  return run;
}

void emit(const Options& o, const json& j) {
  const std::string text = j.dump(2) + "\n";
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out) throw UsageError("cannot write " + o.output);
  out << text;
}

json header(const Run& run) {
  json h = {{"algebra", lagsub::io::to_json(run.spec)}};
  if (run.d_set) h["field_d"] = run.d;
  return h;
}

int cmd_manin(const Options& o) {
  const Run run = load(o);
  const auto g = run.spec.build();
  const auto v = lagsub::dbl::manin_triple_check(g);
  json out = header(run);
  out["diagonal"] = lagsub::io::to_json(v.diagonal);
  out["complement"] = lagsub::io::to_json(v.complement);
  out["trivial_intersection"] = v.trivial_intersection;
  out["spanning"] = v.spanning;
  out["passed"] = v.passed();
  emit(o, out);
  return v.passed() ? kPass : kMathFail;
}

int cmd_cybe(const Options& o) {
  const Run run = load(o);
  const auto g = run.spec.build();
  const auto r = lagsub::dbl::sklyanin_r(g);
  const auto res = lagsub::dbl::cybe_residual(g, r.r);
  std::size_t nonzero = 0;
  for (const auto& e : res.data) nonzero += e.is_zero() ? 0 : 1;
  const bool invariant = lagsub::dbl::is_invariant(g, r.sym);
  json out = header(run);
  out["residual"] = nonzero == 0 ? "0" : "nonzero";
  out["nonzero_entries"] = nonzero;
  out["r_sym_invariant"] = invariant;
  out["r"] = lagsub::io::rows_to_json(r.r);
  emit(o, out);
  return nonzero == 0 && invariant ? kPass : kMathFail;
}

lagsub::lagrange::Quadruple quadruple_of(const Run& run, const lagsub::lie::LieAlgebra& g) {
  if (!run.payload.contains("quadruple")) return lagsub::lagrange::diagonal_quadruple(g);
  return lagsub::io::quadruple_from_json(g, run.payload["quadruple"], run.d);
}

int cmd_construct(const Options& o) {
  const Run run = load(o);
  const auto g = run.spec.build();
  const auto q = quadruple_of(run, g);
  const auto l = lagsub::lagrange::construct_l(g, q);
  const auto v = lagsub::dbl::verify_lagrangian(g, l);
  json out = header(run);
  out["quadruple"] = lagsub::io::to_json(g, q);
  out["lagrangian"] = v.lagrangian;
  out["dim"] = v.dim;
  out["verdict"] = lagsub::io::to_json(v);
  out["diag_intersection_dim"] = lagsub::dbl::diag_intersection(g, l).dim();
  out["subspace"] = lagsub::io::to_json(l);
  emit(o, out);
  return v.lagrangian ? kPass : kMathFail;
}

int cmd_decompose(const Options& o) {
  const Run run = load(o);
  const auto g = run.spec.build();
  if (!run.payload.contains("subspace")) throw UsageError("decompose needs a subspace in the input file");
  const auto s = lagsub::io::subspace_from_json(run.payload["subspace"], run.d);
  if (s.ambient() != static_cast<std::size_t>(2 * g.dim())) {
    throw lagsub::DimensionMismatch("subspace ambient must be 2 * dim g = " + std::to_string(2 * g.dim()));
  }
  const auto d = lagsub::lagrange::decompose_l(g, s);
  const bool roundtrip = lagsub::lagrange::construct_from_theta(
                             g, lagsub::lie::parabolic_subalgebra(g, d.p), lagsub::lie::parabolic_subalgebra(g, d.p_prime),
                             d.theta.matrix, d.l0) == (d.conjugated ? lagsub::dbl::apply_pair(d.u, d.v, s) : s);
  json out = header(run);
  out["decomposition"] = lagsub::io::to_json(g, d);
  out["roundtrip"] = roundtrip;
  emit(o, out);
  return roundtrip ? kPass : kMathFail;
}

int cmd_catalog(const Options& o) {
  const Run run = load(o);
  const auto g = run.spec.build();
  lagsub::lagrange::CatalogOptions opts;
  opts.seed = run.seed;
  opts.samples = o.samples;
  if (run.d_set) opts.field_d = run.d;
  const auto cat = lagsub::lagrange::enumerate_orbit_labels(g, opts);
  bool all = true;
  json labels = json::array();
  for (const auto& l : cat.labels) {
    json lj = lagsub::io::to_json(g, l);
    bool verified = l.has_representative;
    if (l.has_representative) {
      verified = lagsub::dbl::verify_lagrangian(g, lagsub::lagrange::construct_l(g, l.representative)).lagrangian;
      for (const auto& s : l.samples) {
        verified = verified && lagsub::dbl::verify_lagrangian(g, lagsub::lagrange::construct_l(g, s)).lagrangian;
      }
    }
    lj["verified"] = verified;
    all = all && verified;
    labels.push_back(lj);
  }
  json out = header(run);
  out["seed"] = run.seed;
  out["labels"] = labels;
  out["label_count"] = cat.labels.size();
  out["field_d"] = cat.field_d;
  out["non_admissible_sigma"] = cat.non_admissible_sigma;
  out["skipped_nilpotents"] = cat.skipped_nilpotents;
  out["all_verified"] = all;
  emit(o, out);
  return all ? kPass : kMathFail;
}

int cmd_integrable(const Options& o) {
  const Run run = load(o);
  const auto g = run.spec.build();
  const auto q = quadruple_of(run, g);
  const auto gf = run.payload.contains("group_form")
                      ? lagsub::io::group_form_from_json(g, run.payload["group_form"], run.d)
                      : lagsub::integrab::preset_group_form(g, "adjoint");
  const auto v = lagsub::integrab::integrability_verdict(g, q, gf);
  json out = header(run);
  out["group_form"] = gf.preset;
  out["verdict"] = lagsub::io::to_json(v);
  out["algebraic"] = v.algebraic.passed;
  out["closed"] = v.closed.passed;
  bool consistent = !v.algebraic.passed || v.closed.passed;
  out["algebraic_implies_closed"] = consistent;
  if (q.x.empty() || lagsub::exact::is_zero(q.x)) {
    // With x = 0 the Cartan part of l n g_diag is exactly V.
    const auto meet =
        lagsub::exact::meet(lagsub::dbl::diag_intersection(g, lagsub::lagrange::construct_l(g, q)), g.cartan());
    std::vector<lagsub::exact::Vec> vs;
    for (std::size_t k = 0; k < meet.dim(); ++k) vs.push_back(g.cartan_coords(meet.basis().row(k)));
    const bool match = lagsub::exact::Subspace::span(g.cartan_dim(), vs) == v.v;
    out["V_matches_diag_intersection"] = match;
    consistent = consistent && match;
  }
  emit(o, out);
  return consistent ? kPass : kMathFail;
}

int cmd_geom(const Options& o) {
  const Run run = load(o);
  const auto g = run.spec.build();
  const auto rep = lagsub::geom::geom_check(g, run.seed, o.points, o.automorphisms);
  const bool ok = rep.max_antisymmetry_residual < 1e-9 && rep.max_jacobi_residual < 1e-6 &&
                  rep.max_identity_bracket < 1e-9 && rep.all_l_g_lagrangian && rep.all_l_g_full_parabolic &&
                  rep.equivariance_holds && rep.theorem_conjugation_holds;
  json out = header(run);
  out["seed"] = run.seed;
  out["points"] = rep.points;
  out["pairs_tested"] = rep.pairs_tested;
  out["triples_tested"] = rep.triples_tested;
  std::ostringstream a, j, i;
  a.precision(3);
  j.precision(3);
  i.precision(3);
  a << std::scientific << rep.max_antisymmetry_residual;
  j << std::scientific << rep.max_jacobi_residual;
  i << std::scientific << rep.max_identity_bracket;
  out["max_antisymmetry_residual"] = a.str();
  out["max_jacobi_residual"] = j.str();
  out["max_identity_bracket"] = i.str();
  out["exact_automorphisms"] = rep.exact_automorphisms;
  out["l_g_lagrangian"] = rep.all_l_g_lagrangian;
  out["l_g_full_parabolic"] = rep.all_l_g_full_parabolic;
  out["conjugation_equivariance"] = rep.equivariance_holds;
  out["conjugation_formula"] = rep.theorem_conjugation_holds;
  out["passed"] = ok;
  emit(o, out);
  return ok ? kPass : kMathFail;
}

int report(const std::string& kind, const std::string& what, int code) {
  json err = {{"error", kind}, {"message", what}};
  std::cerr << err.dump() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lagrangian subalgebras of the double g x g"};
  app.require_subcommand(1);
  Options o;
  auto common = [&o](CLI::App* sub) {
    sub->add_option("--algebra", o.algebra, "Cartan type, e.g. A2 or A1xA1");
    sub->add_option("--center-dim", o.center_dim, "dimension of the center");
    sub->add_option("--center-form", o.center_form, "JSON rows of the form on the center");
    sub->add_option_function<long>("--field-d", [&o](long d) { o.field_d = d; o.field_d_set = true; },
                                   "radicand d of Q(sqrt d)(i)");
    sub->add_option("--input", o.input, "JSON run configuration")->check(CLI::ExistingFile);
    sub->add_option("--output", o.output, "write JSON here instead of stdout");
    sub->add_option_function<std::uint64_t>("--seed", [&o](std::uint64_t s) { o.seed = s; o.seed_set = true; },
                                            "RNG seed");
  };
  std::vector<std::pair<CLI::App*, int (*)(const Options&)>> commands;
  auto add = [&](const char* name, const char* help, int (*fn)(const Options&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    common(sub);
    commands.emplace_back(sub, fn);
    return sub;
  };
  add("manin-check", "verify the Manin triple (g x g, g_diag, m)", cmd_manin);
  add("cybe", "CYBE residual of the Sklyanin r-matrix", cmd_cybe);
  add("construct", "build l from a quadruple and verify it", cmd_construct);
  add("decompose", "recover (P, P', theta, l0) from a Lagrangian subalgebra", cmd_decompose);
  add("catalog", "enumerate orbit labels (rank <= 2)", cmd_catalog)
      ->add_option("--samples", o.samples, "continuous samples per label");
  add("integrable", "integrability verdict of a quadruple", cmd_integrable)
      ->add_option("--group-form", o.group_form, "adjoint, simply-connected or a JSON group form");
  auto* geom = add("geom-check", "numeric Poisson checks on X and exact l_g checks", cmd_geom);
  geom->add_option("--points", o.points, "random points");
  geom->add_option("--automorphisms", o.automorphisms, "exact automorphisms");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }
  try {
    for (const auto& [sub, fn] : commands) {
      if (sub->parsed()) return fn(o);
    }
  } catch (const UsageError& e) {
    return report("usage", e.what(), kUsage);
  } catch (const lagsub::ParseError& e) {
    return report("schema", e.what(), kUsage);
  } catch (const lagsub::DimensionMismatch& e) {
    return report("dimension", e.what(), kUsage);
  } catch (const lagsub::FieldMismatch& e) {
    return report("field", e.what(), kUsage);
  } catch (const lagsub::RankCapExceeded& e) {
    return report("rank-cap", e.what(), kUsage);
  } catch (const lagsub::PreconditionFailed& e) {
    return report("precondition", e.what(), kMathFail);
  } catch (const lagsub::Error& e) {
    return report("math", e.what(), kMathFail);
  } catch (const nlohmann::json::exception& e) {
    return report("schema", e.what(), kUsage);
  }
  return kUsage;
}
