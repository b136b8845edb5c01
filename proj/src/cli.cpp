#include "leibniz/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "leibniz/cohomology.hpp"
#include "leibniz/constructions.hpp"
#include "leibniz/derivations.hpp"
#include "leibniz/errors.hpp"
#include "leibniz/family_checks.hpp"
#include "leibniz/io.hpp"

namespace leibniz {

namespace {

using Json = nlohmann::ordered_json;

struct RunConfig {
  std::string format = "json";
  unsigned long long seed = kDefaultSeed;
  std::size_t trials = 200;
  std::size_t samples = kDefaultCharSeqSamples;
  std::size_t max_degree = kDefaultMaxDegree;
  std::uint64_t max_cells = kDefaultMaxCells;
  bool timings = false;

  CohomologyOptions cohomology() const {
    CohomologyOptions o;
    o.max_degree = max_degree;
    o.max_cells = max_cells;
    return o;
  }
  NilIndependenceOptions nil() const {
    NilIndependenceOptions o;
    o.trials = trials;
    o.seed = seed;
    return o;
  }
};

unsigned long long default_seed() {
  if (const char* env = std::getenv(kSeedEnvVar)) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw InputError(std::string(kSeedEnvVar) + " is not a nonnegative integer");
  }
  return kDefaultSeed;
}

Json rational_json(const Rational& r) { return to_string(r); }

Json vector_json(const Vector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rational_json(x));
  return a;
}

Json matrix_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (const auto& r : m.to_dense()) rows.push_back(vector_json(r));
  return rows;
}

Json subspace_json(const SubspaceBasis& s) {
  Json a = Json::array();
  for (const auto& v : s.vectors()) a.push_back(vector_json(v));
  return a;
}

Json sizes_json(const std::vector<std::size_t>& v) { return Json(v); }

Json report_header(const std::string& command) {
  Json j;
  j["schema_version"] = "1";
  j["command"] = command;
  return j;
}

void render_text(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) render_text(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) render_text(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void emit(const Json& j, const RunConfig& cfg, std::ostream& out) {
  if (cfg.format == "text") {
    render_text(j, "", out);
  } else {
    out << j.dump(2) << "\n";
  }
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational_text(item));
  return out;
}

bool square_is_nilpotent(const LeibnizAlgebra& L) {
  return is_nilpotent_algebra(subalgebra(L, square(L)));
}

// --- commands -------------------------------------------------------------

int cmd_check(const std::string& path, std::size_t cap, const RunConfig& cfg, std::ostream& out) {
  const LeibnizAlgebra L = load_algebra(path, LeibnizAlgebra::Verify::kNone);
  const IdentityReport rep = check_identity(L, cap);
  Json j = report_header("check");
  j["dim"] = L.dim();
  j["ok"] = rep.ok();
  j["failures"] = rep.failures;
  Json defects = Json::array();
  for (const auto& d : rep.defects) {
    defects.push_back({{"i", d.i}, {"j", d.j}, {"k", d.k}, {"defect", vector_json(d.defect)}});
  }
  j["defects"] = std::move(defects);
  emit(j, cfg, out);
  return rep.ok() ? kExitOk : kExitMathFailure;
}

struct BuildArgs {
  std::string family;
  std::string seq;
  std::string alphas;
  std::string betas;
  std::size_t n1 = 2;
  std::size_t n2 = 1;
  bool prenormalized = false;
  std::string out_path;
};

std::vector<Rational> padded(const std::string& text, std::size_t count, const char* what) {
  auto v = parse_rational_list(text);
  if (v.empty()) v.assign(count, Rational(0));
  if (v.size() != count) {
    throw InputError(std::string("expected ") + std::to_string(count) + " " + what);
  }
  return v;
}

int cmd_build(const BuildArgs& a, std::ostream& out) {
  LeibnizAlgebra L;
  auto spec = [&] {
    if (a.seq.empty()) throw InputError("--seq is required for this family");
    return parse_char_seq(a.seq);
  };
  if (a.family == "nc") {
    L = build_n_c(spec());
  } else if (a.family == "rc") {
    L = build_r_c(spec());
  } else if (a.family == "L") {
    const CharSeqSpec s = spec();
    if (a.prenormalized) {
      RawLFamilyParams p{s, padded(a.alphas, s.blocks() + 1, "alphas"), padded(a.betas, s.blocks(), "betas")};
      L = normalize_alpha1(p).algebra;
    } else {
      LFamilyParams p{s, padded(a.alphas, s.blocks(), "alphas"), padded(a.betas, s.blocks(), "betas")};
      L = build_L_general(p);
    }
  } else if (a.family == "R") {
    L = build_R_general(spec());
  } else if (a.family == "Lp") {
    const auto al = padded(a.alphas, 2, "alphas");
    const auto be = padded(a.betas, 2, "betas");
    L = build_L_particular(a.n1, a.n2, al[0], al[1], be[0], be[1]);
  } else if (a.family == "Rp") {
    L = build_R_particular(a.n1, a.n2);
  } else {
    throw InputError("unknown family '" + a.family + "'");
  }
  const std::string text = algebra_to_json(L);
  if (a.out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(a.out_path);
    if (!f) throw InputError("cannot write '" + a.out_path + "'");
    f << text;
  }
  return kExitOk;
}

int cmd_series(const std::string& path, const RunConfig& cfg, std::ostream& out) {
  const LeibnizAlgebra L = load_algebra(path);
  const SeriesReport lcs = lower_central_series(L);
  const SeriesReport ds = derived_series(L);
  Json j = report_header("series");
  j["dim"] = L.dim();
  j["lower_central"] = sizes_json(lcs.dims);
  j["derived"] = sizes_json(ds.dims);
  j["nilpotent"] = is_nilpotent_algebra(L);
  j["solvable"] = is_solvable_algebra(L);
  j["square_nilpotent"] = square_is_nilpotent(L);
  j["right_annihilator_dim"] = right_annihilator(L).dim();
  j["center_dim"] = center(L).dim();
  emit(j, cfg, out);
  return kExitOk;
}

int cmd_derivations(const std::string& path, bool with_bases, const RunConfig& cfg, std::ostream& out) {
  const LeibnizAlgebra L = load_algebra(path);
  const DerivationSpace der = derivation_space(L);
  const SubspaceBasis inner = inner_derivations(L);
  Json j = report_header("derivations");
  j["dim"] = L.dim();
  j["derivations"] = der.dim();
  j["inner"] = inner.dim();
  j["outer"] = der.dim() - inner.dim();
  if (with_bases) {
    Json b = Json::array();
    for (const auto& m : der.basis) b.push_back(matrix_json(m));
    j["basis"] = std::move(b);
  }
  emit(j, cfg, out);
  return kExitOk;
}

int cmd_charseq(const std::string& path, const RunConfig& cfg, std::ostream& out) {
  const LeibnizAlgebra L = load_algebra(path);
  const CharSequence cs = characteristic_sequence(L, cfg.samples, cfg.seed);
  Json j = report_header("charseq");
  j["seed"] = cfg.seed;
  j["samples"] = cfg.samples;
  j["sequence"] = sizes_json(cs.parts);
  j["witness"] = vector_json(cs.witness);
  emit(j, cfg, out);
  return kExitOk;
}

Json cohomology_json(const CohomologyReport& r) {
  Json j;
  j["degree"] = r.degree;
  j["dim_CL"] = r.dim_CL;
  j["dim_ZL"] = r.dim_ZL;
  j["dim_BL"] = r.dim_BL;
  j["dim_HL"] = r.dim_HL;
  if (r.cocycles) j["cocycles"] = subspace_json(*r.cocycles);
  if (r.coboundaries) j["coboundaries"] = subspace_json(*r.coboundaries);
  return j;
}

int cmd_cohomology(const std::string& path, std::size_t degree, bool with_bases, const RunConfig& cfg,
                   std::ostream& out) {
  const LeibnizAlgebra L = load_algebra(path);
  CohomologyOptions o = cfg.cohomology();
  o.with_bases = with_bases;
  Json j = report_header("cohomology");
  j["module"] = "adjoint";
  j["report"] = cohomology_json(cohomology_report(adjoint_module(L), degree, o));
  emit(j, cfg, out);
  return kExitOk;
}

// --- verification suites -----------------------------------------------------

class Suite {
 public:
  Suite(const RunConfig& cfg) : cfg_(cfg) {}

  void step(const std::string& suite, const std::string& name, const std::function<bool(Json&)>& body) {
    Json s;
    s["suite"] = suite;
    s["name"] = name;
    Json detail = Json::object();
    const auto t0 = std::chrono::steady_clock::now();
    std::string status;
    try {
      status = body(detail) ? "pass" : "fail";
    } catch (const GuardError& e) {
      status = "skip";
      detail["reason"] = e.what();
      detail["estimated_cells"] = e.estimated_cells();
    }
    s["status"] = status;
    s["detail"] = std::move(detail);
    if (cfg_.timings) {
      s["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
    if (status == "pass") ++passed_;
    if (status == "fail") ++failed_;
    if (status == "skip") ++skipped_;
    steps_.push_back(std::move(s));
  }

  Json finish(Json j) const {
    j["steps"] = steps_;
    j["passed"] = passed_;
    j["failed"] = failed_;
    j["skipped"] = skipped_;
    return j;
  }
  int exit_code() const {
    if (failed_ > 0) return kExitMathFailure;
    if (skipped_ > 0) return kExitGuard;
    return kExitOk;
  }
  const RunConfig& cfg() const { return cfg_; }

 private:
  const RunConfig& cfg_;
  Json steps_ = Json::array();
  std::size_t passed_ = 0, failed_ = 0, skipped_ = 0;
};

const std::vector<Rational> kSweepValues = {0, 1, -1, 2};

// Every assignment of kSweepValues to `slots` slots, in odometer order.
std::vector<std::vector<Rational>> parameter_grid(std::size_t slots) {
  std::vector<std::vector<Rational>> out;
  std::vector<std::size_t> digit(slots, 0);
  while (true) {
    std::vector<Rational> v;
    for (auto d : digit) v.push_back(kSweepValues[d]);
    out.push_back(std::move(v));
    std::size_t i = 0;
    while (i < slots && ++digit[i] == kSweepValues.size()) digit[i++] = 0;
    if (i == slots) break;
  }
  return out;
}

bool structure_step_checks(const LeibnizAlgebra& R, Json& d) {
  const std::size_t h = R.index_of("h");
  const SubspaceBasis hspan = SubspaceBasis::span(R.dim(), {unit_vector(R.dim(), h)});
  const SubspaceBasis ann = right_annihilator(R);
  d["right_annihilator_dim"] = ann.dim();
  d["center_dim"] = center(R).dim();
  const bool ok = ann == hspan && center(R).dim() == 0;
  d["right_annihilator_is_h"] = ann == hspan;
  return ok;
}

bool quotient_step(const LeibnizAlgebra& R, const LeibnizAlgebra& model, Json& d) {
  const std::size_t h = R.index_of("h");
  const Quotient q = quotient_by_ideal(R, SubspaceBasis::span(R.dim(), {unit_vector(R.dim(), h)}));
  const bool same = q.algebra.same_structure(model);
  d["quotient_dim"] = q.algebra.dim();
  d["model_dim"] = model.dim();
  d["identical"] = same;
  return same;
}

bool completeness_step(const LeibnizAlgebra& R, const RunConfig& cfg, Json& d) {
  const CompletenessEvidence ev = is_complete(R, cfg.cohomology());
  d["center_dim"] = ev.center_dim;
  d["HL1"] = cohomology_json(ev.h1);
  return ev.complete;
}

bool rigidity_step(const LeibnizAlgebra& R, const RunConfig& cfg, Json& d) {
  const RigidityEvidence ev = is_cohomologically_rigid(R, cfg.cohomology());
  d["HL2"] = cohomology_json(ev.h2);
  return ev.rigid;
}

void particular_suite(Suite& s, std::size_t n1, std::size_t n2) {
  const RunConfig& cfg = s.cfg();
  const std::string tag = "particular";
  const CharSeqSpec model_spec({n1, n2});
  s.step(tag, "builder-identity", [&](Json& d) {
    std::size_t checked = 0, failing = 0;
    for (const auto& v : parameter_grid(4)) {
      ++checked;
      if (!check_identity(build_L_particular(n1, n2, v[0], v[1], v[2], v[3])).ok()) ++failing;
    }
    const bool r_ok = check_identity(build_R_particular(n1, n2)).ok();
    const bool model_ok = is_lie(build_r_c(model_spec));
    d["family_instances"] = checked;
    d["family_failures"] = failing;
    d["solvable_extension_ok"] = r_ok;
    d["quotient_model_is_lie"] = model_ok;
    return failing == 0 && r_ok && model_ok;
  });
  s.step(tag, "derivation-shape", [&](Json& d) {
    const ShapeReport r = check_derivation_shape({n1, n2, 2, 3, 5, 7});
    d["derivations"] = r.derivations;
    d["restriction_failures"] = r.restriction_failures;
    d["chain_offset_failures"] = r.chain_offset_failures;
    d["h_weight_failures"] = r.h_weight_failures;
    if (!r.first_failure.empty()) d["first_failure"] = r.first_failure;
    return r.ok();
  });
  s.step(tag, "nil-independent-derivations", [&](Json& d) {
    struct Regime {
      const char* name;
      long e2_square, f1_square, e1_e2, e1_f1;
    };
    bool all = true;
    Json regimes = Json::array();
    for (const Regime& r : {Regime{"f1-square nonzero", 2, 3, 5, 7}, Regime{"only e2-square nonzero", 2, 0, 5, 7},
                            Regime{"squares zero, e1_f1 nonzero", 0, 0, 5, 7}, Regime{"all zero", 0, 0, 0, 0}}) {
      const NilDirectionsReport rep =
          check_nil_directions({n1, n2, r.e2_square, r.f1_square, r.e1_e2, r.e1_f1}, cfg.nil());
      Json e = Json::array();
      for (bool b : rep.exists) e.push_back(b);
      regimes.push_back({{"regime", r.name},
                         {"derivations", rep.der_dim},
                         {"directions_exist", e},
                         {"independent", rep.independent},
                         {"zero_diagonal_samples", rep.zero_diagonal_samples},
                         {"zero_diagonal_non_nilpotent", rep.zero_diagonal_non_nilpotent},
                         {"ok", rep.ok()}});
      all = all && rep.ok();
    }
    d["regimes"] = std::move(regimes);
    return all;
  });
  const LeibnizAlgebra R = build_R_particular(n1, n2);
  const LeibnizAlgebra model = build_r_c(model_spec);
  s.step(tag, "right-annihilator-and-center", [&](Json& d) { return structure_step_checks(R, d); });
  s.step(tag, "quotient-matches-model", [&](Json& d) { return quotient_step(R, model, d); });
  s.step(tag, "completeness", [&](Json& d) { return completeness_step(R, cfg, d); });
  s.step(tag, "rigidity", [&](Json& d) { return rigidity_step(R, cfg, d); });
  s.step(tag, "cocycle-list", [&](Json& d) {
    const CocycleListReport r = verify_cocycle_list(n1, n2, cfg.cohomology());
    Json items = Json::array();
    for (const auto& it : r.items) {
      Json x{{"name", it.name}, {"status", to_string(it.status)}};
      if (!it.note.empty()) x["note"] = it.note;
      items.push_back(std::move(x));
    }
    d["items"] = std::move(items);
    d["dim_ZL2"] = r.dim_ZL2;
    d["dim_BL2"] = r.dim_BL2;
    d["lie_cocycles_total"] = r.lie_cocycles_total;
    d["lie_cocycles_extending"] = r.lie_cocycles_passing;
    d["listed_span_dim"] = r.listed_span_dim;
    return r.ok();
  });
}

void general_suite(Suite& s, const CharSeqSpec& spec) {
  const RunConfig& cfg = s.cfg();
  const std::string tag = "general";
  const std::size_t k = spec.blocks();
  std::vector<LeibnizAlgebra> corpus;
  s.step(tag, "builder-identity", [&](Json& d) {
    const LeibnizAlgebra nc = build_n_c(spec), rc = build_r_c(spec);
    bool ok = is_lie(nc) && is_lie(rc);
    corpus = {nc, rc};
    std::size_t instances = 0, failing = 0;
    for (const auto& v : parameter_grid(2 * k)) {
      LFamilyParams p{spec, std::vector<Rational>(v.begin(), v.begin() + k),
                      std::vector<Rational>(v.begin() + k, v.end())};
      ++instances;
      LeibnizAlgebra L = build_L_general(p);
      if (!check_identity(L).ok()) ++failing;
      if (instances <= 16) corpus.push_back(L);
    }
    const LeibnizAlgebra R = build_R_general(spec);
    const bool r_ok = check_identity(R).ok();
    corpus.push_back(R);
    d["model_algebras_lie"] = ok;
    d["family_instances"] = instances;
    d["family_failures"] = failing;
    d["solvable_extension_ok"] = r_ok;
    return ok && failing == 0 && r_ok;
  });
  s.step(tag, "solvable-iff-square-nilpotent", [&](Json& d) {
    std::size_t counter = 0;
    for (const auto& L : corpus) {
      if (is_solvable_algebra(L) != square_is_nilpotent(L)) ++counter;
    }
    d["algebras"] = corpus.size();
    d["counterexamples"] = counter;
    return counter == 0;
  });
  s.step(tag, "characteristic-sequence", [&](Json& d) {
    const CharSequence cs = characteristic_sequence(build_n_c(spec), cfg.samples, cfg.seed);
    std::vector<std::size_t> expected = spec.parts();
    expected.push_back(1);
    d["computed"] = sizes_json(cs.parts);
    d["expected"] = sizes_json(expected);
    return cs.parts == expected;
  });
  const LeibnizAlgebra R = build_R_general(spec);
  const LeibnizAlgebra model = build_r_c(spec);
  s.step(tag, "right-annihilator-and-center", [&](Json& d) { return structure_step_checks(R, d); });
  s.step(tag, "quotient-matches-model", [&](Json& d) { return quotient_step(R, model, d); });
  s.step(tag, "completeness", [&](Json& d) { return completeness_step(R, cfg, d); });
  s.step(tag, "rigidity", [&](Json& d) { return rigidity_step(R, cfg, d); });
  s.step(tag, "model-lie-vanishing", [&](Json& d) {
    const LeibnizModule M = adjoint_module(model);
    const CohomologyReport h1 = cohomology_report(M, 1, cfg.cohomology());
    const CohomologyReport h2 = cohomology_report(M, 2, cfg.cohomology());
    d["HL1"] = h1.dim_HL;
    d["HL2"] = h2.dim_HL;
    return h1.dim_HL == 0 && h2.dim_HL == 0;
  });
}

int cmd_verify(const std::string& suite, std::size_t n1, std::size_t n2, const std::string& seq,
               const RunConfig& cfg, std::ostream& out) {
  if (suite != "particular" && suite != "general" && suite != "all") {
    throw InputError("unknown suite '" + suite + "'");
  }
  const CharSeqSpec spec = parse_char_seq(seq);
  if (suite != "general") {
    if (n2 < 1 || n1 < n2 || n1 < 2) throw InputError("need n1 >= n2 >= 1 and n1 >= 2");
  }
  if (suite != "particular" && spec.parts().front() < 2) throw InputError("need n1 >= 2 in --seq");
  Suite s(cfg);
  Json j = report_header("verify-paper");
  j["suite"] = suite;
  j["seed"] = cfg.seed;
  if (suite != "general") {
    j["n1"] = n1;
    j["n2"] = n2;
    particular_suite(s, n1, n2);
  }
  if (suite != "particular") {
    j["seq"] = spec.to_string();
    general_suite(s, spec);
  }
  emit(s.finish(std::move(j)), cfg, out);
  return s.exit_code();
}

int cmd_sweep(std::size_t nmax, const RunConfig& cfg, std::ostream& out) {
  if (nmax == 0) throw InputError("--nmax must be at least 1");
  Json j = report_header("sweep");
  j["nmax"] = nmax;
  Json rows = Json::array();
  bool all_rigid = true;
  for (std::size_t n = 1; n <= nmax; ++n) {
    const auto parts = enumerate_partitions(n);
    Json row;
    row["n"] = n;
    row["p"] = partition_count(n);
    row["enumerated"] = parts.size();
    Json entries = Json::array();
    for (const auto& spec : parts) {
      Json e;
      e["seq"] = spec.to_string();
      if (spec.parts().front() < 2) {
        e["status"] = "skipped";
        e["reason"] = "solvable extension needs a first block of size >= 2";
        entries.push_back(std::move(e));
        continue;
      }
      const LeibnizAlgebra R = build_R_general(spec);
      e["dim"] = R.dim();
      try {
        const LeibnizModule M = adjoint_module(R);
        const std::size_t h1 = cohomology_report(M, 1, cfg.cohomology()).dim_HL;
        const std::size_t h2 = cohomology_report(M, 2, cfg.cohomology()).dim_HL;
        e["HL1"] = h1;
        e["HL2"] = h2;
        e["status"] = "ok";
        all_rigid = all_rigid && h2 == 0;
      } catch (const GuardError& g) {
        e["status"] = "skipped";
        e["reason"] = g.what();
        e["estimated_cells"] = g.estimated_cells();
      }
      entries.push_back(std::move(e));
    }
    row["partitions"] = std::move(entries);
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  j["all_rigid"] = all_rigid;
  emit(j, cfg, out);
  return all_rigid ? kExitOk : kExitMathFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for finite-dimensional Leibniz algebras over Q", "leibniz"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  std::optional<unsigned long long> seed;
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--seed", seed, "Random seed (default 42, or $LEIBNIZ_SEED)");
  app.add_option("--trials", cfg.trials, "Random trials for nil-independence searches")->capture_default_str();
  app.add_option("--samples", cfg.samples, "Random samples for characteristic sequences")->capture_default_str();
  app.add_option("--max-degree", cfg.max_degree, "Highest coboundary degree that may be assembled")
      ->capture_default_str();
  app.add_option("--max-cells", cfg.max_cells, "Guard on rows*cols of a coboundary matrix")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::string path;
  std::size_t cap = kDefaultDefectCap;
  auto* check = app.add_subcommand("check", "Check the Leibniz identity on a table");
  check->add_option("path", path, "Algebra JSON file")->required();
  check->add_option("--cap", cap, "Maximum number of reported defects")->capture_default_str();

  BuildArgs build;
  auto* buildc = app.add_subcommand("build", "Print a family member as algebra JSON");
  buildc->add_option("--family", build.family, "nc, rc, L, R, Lp or Rp")
      ->required()
      ->check(CLI::IsMember({"nc", "rc", "L", "R", "Lp", "Rp"}));
  buildc->add_option("--seq", build.seq, "Block sizes, e.g. 3,2,1");
  buildc->add_option("--alphas", build.alphas, "Comma-separated rationals");
  buildc->add_option("--betas", build.betas, "Comma-separated rationals");
  buildc->add_option("--n1", build.n1, "First block size for Lp/Rp")->capture_default_str();
  buildc->add_option("--n2", build.n2, "Second block size for Lp/Rp")->capture_default_str();
  buildc->add_flag("--prenormalized", build.prenormalized,
                   "For L: alphas has k+1 entries, the first being [e1,e1]; output is normalized");
  buildc->add_option("--out", build.out_path, "Write to a file instead of stdout");

  auto* series = app.add_subcommand("series", "Lower central and derived series");
  series->add_option("path", path)->required();

  bool with_bases = false;
  auto* der = app.add_subcommand("derivations", "Derivation algebra");
  der->add_option("path", path)->required();
  der->add_flag("--with-bases", with_bases);

  auto* cs = app.add_subcommand("charseq", "Characteristic sequence of a nilpotent algebra");
  cs->add_option("path", path)->required();

  std::size_t degree = 1;
  auto* coh = app.add_subcommand("cohomology", "Leibniz cohomology with adjoint coefficients");
  coh->add_option("path", path)->required();
  coh->add_option("--degree", degree)->capture_default_str();
  coh->add_flag("--with-bases", with_bases);

  std::string suite = "all", seq = "2,1";
  std::size_t n1 = 2, n2 = 1;
  auto* verify = app.add_subcommand("verify-paper", "Run the theorem verification suites");
  verify->add_option("--suite", suite, "particular, general or all")->capture_default_str();
  verify->add_option("--n1", n1)->capture_default_str();
  verify->add_option("--n2", n2)->capture_default_str();
  verify->add_option("--seq", seq, "Block sizes for the general suite")->capture_default_str();
  verify->add_flag("--timings", cfg.timings, "Add wall-clock seconds per step (breaks byte-identity)");

  std::size_t nmax = 4;
  auto* sweep = app.add_subcommand("sweep", "Cohomology of the solvable extensions over all partitions");
  sweep->add_option("--nmax", nmax)->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    cfg.seed = seed ? *seed : default_seed();
    if (*check) return cmd_check(path, cap, cfg, out);
    if (*buildc) return cmd_build(build, out);
    if (*series) return cmd_series(path, cfg, out);
    if (*der) return cmd_derivations(path, with_bases, cfg, out);
    if (*cs) return cmd_charseq(path, cfg, out);
    if (*coh) return cmd_cohomology(path, degree, with_bases, cfg, out);
    if (*verify) return cmd_verify(suite, n1, n2, seq, cfg, out);
    if (*sweep) return cmd_sweep(nmax, cfg, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const GuardError& e) {
    err << "resource guard: " << e.what() << " (estimated " << e.estimated_cells() << " cells)\n";
    return kExitGuard;
  } catch (const MathError& e) {
    err << "math error: " << e.what() << "\n";
    return kExitMathFailure;
  }
  return kExitInputError;
}

}  // namespace leibniz
