#include "nilsol/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

#include "nilsol/catalog.hpp"
#include "nilsol/free_lie.hpp"
#include "nilsol/graph.hpp"
#include "nilsol/io.hpp"
#include "nilsol/twostep.hpp"
#include "nilsol/verdict.hpp"

namespace nilsol {

namespace {

struct Context {
  bool json = false;
  std::uint64_t seed = 0;
  std::string out_path;
  std::ostream& out;
  std::ostream& err;
  CatalogLookup lookup;
};

class CatalogMiss : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string metric_name(MetricKind k) {
  switch (k) {
    case MetricKind::None: return "none";
    case MetricKind::Orthonormal: return "orthonormal";
    case MetricKind::Gram: return "gram";
  }
  return "";
}

AlgebraFile load_algebra(const Context& ctx, const std::string& arg) {
  if (std::filesystem::exists(arg)) return parse_algebra_file(read_text_file(arg));
  try {
    const MetricLieAlgebra m = ctx.lookup(arg);
    return make_algebra_file(arg, m.algebra, m.gram);
  } catch (const UnknownCatalogName&) {
    throw CatalogMiss("'" + arg + "' is neither a file nor a catalog name");
  }
}

bool looks_like_twostep(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream words(line);
    std::string w;
    if (words >> w) return w == "q" || w == "twostep" || w == "J";
  }
  return false;
}

struct LoadedPresentation {
  std::string name;
  TwoStepPresentation presentation;
};

LoadedPresentation load_presentation(const Context& ctx, const std::string& arg) {
  if (std::filesystem::exists(arg)) {
    const std::string text = read_text_file(arg);
    if (looks_like_twostep(text)) {
      auto f = parse_twostep_file(text);
      return {f.name.empty() ? std::filesystem::path(arg).stem().string() : f.name, f.presentation};
    }
  }
  const AlgebraFile f = load_algebra(ctx, arg);
  auto sp = presentation_of(f.algebra);
  if (!sp) throw InvalidAlgebra("'" + f.name + "' has no two-step presentation X + Z");
  return {f.name, sp->presentation};
}

Json scalar_list(const std::vector<Scalar>& v) { return to_json(Vector(v.begin(), v.end())); }

Json eigenvalue_json(const PreEinsteinResult& pe) {
  Json out = Json::array();
  for (const auto& [value, mult] : pe.eigenvalues) {
    Json e;
    e["value"] = to_json(value);
    e["multiplicity"] = mult;
    out.push_back(std::move(e));
  }
  return out;
}

Vector diagonal_of(const Matrix& m) {
  Vector d(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) d[i] = m(i, i);
  return d;
}

bool is_diagonal(const Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (r != c && !m(r, c).is_zero()) return false;
    }
  }
  return true;
}

Json operator_json(const Matrix& m) { return is_diagonal(m) ? Json{{"diagonal", to_json(diagonal_of(m))}} : Json{{"matrix", to_json(m)}}; }

int finish(Context& ctx, Report& report, int code, const std::string* file_text = nullptr) {
  report.status = code == exit_code::ok ? "ok" : code == exit_code::inconclusive ? "inconclusive" : "error";
  if (file_text && !ctx.out_path.empty()) {
    write_text_file(ctx.out_path, *file_text);
    report.results["written"] = ctx.out_path;
  } else if (file_text && ctx.json) {
    report.results["file"] = *file_text;
  }
  std::string text;
  if (ctx.json) {
    text = report.to_json().dump(2) + "\n";
  } else if (file_text && ctx.out_path.empty()) {
    text = *file_text;
  } else {
    text = report.to_text();
  }
  if (!file_text && !ctx.out_path.empty()) {
    write_text_file(ctx.out_path, text);
  } else {
    ctx.out << text;
  }
  return code;
}

Report start(const std::string& command) {
  Report r;
  r.command = command;
  return r;
}

// ---- commands on algebra files ----

int cmd_check(Context& ctx, const std::string& arg) {
  const AlgebraFile f = load_algebra(ctx, arg);
  Report r = start("check");
  r.inputs["algebra"] = arg;
  const auto cs = central_series(f.algebra);
  const auto dc = derived_and_center(f.algebra);
  r.results["name"] = f.name;
  r.results["dim"] = f.algebra.dim();
  r.results["basis"] = f.algebra.labels();
  r.results["jacobi"] = "ok";
  r.results["nilpotent"] = cs.nilpotent;
  if (cs.nilpotent) r.results["nilpotency_class"] = cs.nilpotency_class;
  r.results["solvable"] = is_solvable(f.algebra);
  r.results["lower_central_series_dims"] = cs.dims();
  r.results["derived_dim"] = dc.derived.dim();
  r.results["center_dim"] = dc.center.dim();
  r.results["generator_count"] = dc.generator_count;
  r.results["metric"] = metric_name(f.metric);
  return finish(ctx, r, exit_code::ok);
}

int cmd_der(Context& ctx, const std::string& arg) {
  const AlgebraFile f = load_algebra(ctx, arg);
  Report r = start("der");
  r.inputs["algebra"] = arg;
  const auto der = derivation_basis(f.algebra);
  r.results["dim"] = der.dim();
  Json basis = Json::array();
  for (const auto& m : der.basis) basis.push_back(to_json(m));
  r.results["basis"] = std::move(basis);
  return finish(ctx, r, exit_code::ok);
}

int cmd_pre_einstein(Context& ctx, const std::string& arg) {
  const AlgebraFile f = load_algebra(ctx, arg);
  Report r = start("pre-einstein");
  r.inputs["algebra"] = arg;
  const auto der = derivation_basis(f.algebra);
  const auto pe = pre_einstein_diagonal(f.algebra, der);
  r.results["status"] = to_string(pe.status);
  r.results["mu"] = to_json(pe.mu);
  r.results["eigenvalues"] = eigenvalue_json(pe);
  r.results["positive"] = pe.positive();
  if (pe.failure) {
    r.results["failure"]["reason"] = pe.failure->reason;
    r.results["failure"]["tr_phi_psi"] = to_json(pe.failure->lhs);
    r.results["failure"]["tr_psi"] = to_json(pe.failure->rhs);
  }
  if (pe.status == PreEinsteinStatus::Verified && pe.nilpotent) {
    const auto wd = ad_weight_decomposition(f.algebra, pe, der);
    r.results["ad_phi_weights"] = scalar_list(wd.weights());
    r.results["ad_phi_nonnegative"] = wd.nonnegative();
  }
  return finish(ctx, r, exit_code::ok);
}

int cmd_certify(Context& ctx, const std::string& arg) {
  const AlgebraFile f = load_algebra(ctx, arg);
  Report r = start("certify");
  r.inputs["algebra"] = arg;
  const auto gram = f.gram_or_none();
  const Verdict v = certify_standardness(f.algebra, gram);
  std::string verdict = to_string(v.outcome);
  if (v.rule) verdict += "(" + to_string(*v.rule).substr(0, 2) + ")";
  r.results["verdict"] = verdict;
  r.results["outcome"] = to_string(v.outcome);
  r.results["rule"] = v.rule ? Json(to_string(*v.rule)) : Json(nullptr);
  Json sat = Json::array();
  for (auto rule : v.satisfied) sat.push_back(to_string(rule));
  r.results["satisfied"] = std::move(sat);
  r.results["phi"] = to_json(v.pre_einstein.mu);
  r.results["pre_einstein_status"] = to_string(v.pre_einstein.status);
  if (v.weights) r.results["min_ad_phi_weight"] = to_json(v.weights->min_weight);
  if (v.negative_weight_witness) r.results["negative_weight_witness"] = to_json(*v.negative_weight_witness);
  if (v.nilsoliton) r.results["nilsoliton_c"] = to_json(v.nilsoliton->c);
  r.results["generator_count"] = v.generator_count;
  Json checks = Json::array();
  for (const auto& c : v.checks) {
    Json row;
    row["rule"] = to_string(c.rule);
    row["evaluated"] = c.evaluated;
    row["passed"] = c.passed;
    row["detail"] = c.detail;
    checks.push_back(std::move(row));
  }
  r.results["checks"] = std::move(checks);
  if (v.outcome == Outcome::CertifiedStandard) {
    const auto bad = reverify(f.algebra, gram, v);
    r.results["reverified"] = bad ? "failed: " + *bad : std::string("ok");
    if (bad) return finish(ctx, r, exit_code::inconclusive);
    return finish(ctx, r, exit_code::ok);
  }
  return finish(ctx, r, exit_code::inconclusive);
}

int cmd_ricci(Context& ctx, const std::string& arg) {
  const AlgebraFile f = load_algebra(ctx, arg);
  const MetricLieAlgebra m = f.metric_algebra();
  Report r = start("ricci");
  r.inputs["algebra"] = arg;
  r.inputs["metric"] = metric_name(f.metric == MetricKind::None ? MetricKind::Orthonormal : f.metric);
  if (is_nilpotent(f.algebra)) {
    const auto ric = ricci_nilpotent(m);
    r.results["mode"] = "nilpotent";
    r.results["ric"] = to_json(ric.ric);
    r.results["scalar_curvature"] = to_json(ric.scalar_curvature);
  } else if (is_solvable(f.algebra)) {
    const auto ric = ricci_solvable(m);
    const auto geo = solvable_geometry(m);
    r.results["mode"] = "solvable";
    r.results["ric"] = to_json(ric.ric);
    r.results["scalar_curvature"] = to_json(ric.scalar_curvature);
    r.results["mean_curvature"] = to_json(geo.mean_curvature);
    r.results["killing"] = to_json(geo.killing);
  } else {
    throw InvalidAlgebra("Ricci formulas here need a solvable algebra");
  }
  return finish(ctx, r, exit_code::ok);
}

void require_nilpotent(const LieAlgebra& l) {
  if (!is_nilpotent(l)) throw InvalidAlgebra("algebra is not nilpotent");
}

int cmd_nilsoliton(Context& ctx, const std::string& arg) {
  const AlgebraFile f = load_algebra(ctx, arg);
  require_nilpotent(f.algebra);
  Report r = start("nilsoliton");
  r.inputs["algebra"] = arg;
  const auto ns = nilsoliton_check(f.metric_algebra());
  r.results["ric"] = to_json(ns.ricci.ric);
  r.results["solution_dim"] = ns.solution_dim;
  r.results["diagnostics"] = ns.diagnostics;
  if (!ns.certificate) {
    r.results["certificate"] = nullptr;
    return finish(ctx, r, exit_code::inconclusive);
  }
  r.results["certificate"]["c"] = to_json(ns.certificate->c);
  r.results["certificate"]["phi"] = operator_json(ns.certificate->phi);
  r.results["certificate"]["unique"] = ns.certificate->unique;
  return finish(ctx, r, exit_code::ok);
}

int cmd_extend(Context& ctx, const std::string& arg) {
  const AlgebraFile f = load_algebra(ctx, arg);
  require_nilpotent(f.algebra);
  Report r = start("extend");
  r.inputs["algebra"] = arg;
  const auto ns = nilsoliton_check(f.metric_algebra());
  if (!ns.certificate) {
    r.results["certificate"] = nullptr;
    return finish(ctx, r, exit_code::inconclusive);
  }
  const MetricLieAlgebra ext = rank_one_extension(f.metric_algebra(), *ns.certificate);
  const auto e = einstein_check(ext);
  r.results["c"] = to_json(ns.certificate->c);
  r.results["h_norm_squared"] = to_json(ext.gram(0, 0));
  r.results["einstein"] = e.is_einstein;
  r.results["einstein_constant"] = to_json(e.c);
  r.results["standard"] = standardness_check(ext);
  const std::string text = emit_algebra_file(make_algebra_file(f.name + "_ext", ext.algebra, ext.gram));
  return finish(ctx, r, exit_code::ok, &text);
}

int cmd_einstein(Context& ctx, const std::string& arg) {
  const AlgebraFile f = load_algebra(ctx, arg);
  if (!is_solvable(f.algebra)) throw InvalidAlgebra("Ricci formulas here need a solvable algebra");
  Report r = start("einstein");
  r.inputs["algebra"] = arg;
  const auto e = einstein_check(f.metric_algebra());
  r.results["einstein"] = e.is_einstein;
  if (e.is_einstein) r.results["c"] = to_json(e.c);
  r.results["ricci_flat"] = e.ricci_flat;
  r.results["ric"] = to_json(ricci_solvable(f.metric_algebra()).ric);
  return finish(ctx, r, exit_code::ok);
}

int cmd_standard(Context& ctx, const std::string& arg) {
  const AlgebraFile f = load_algebra(ctx, arg);
  Report r = start("standard");
  r.inputs["algebra"] = arg;
  r.results["standard"] = standardness_check(f.metric_algebra());
  r.results["derived_dim"] = derived_and_center(f.algebra).derived.dim();
  return finish(ctx, r, exit_code::ok);
}

// ---- two-step ----

Json type_json(const TwoStepPresentation& p) { return Json::array({p.p(), p.q()}); }

int cmd_twostep_build(Context& ctx, const std::string& arg) {
  const auto lp = load_presentation(ctx, arg);
  Report r = start("twostep build");
  r.inputs["presentation"] = arg;
  r.results["type"] = type_json(lp.presentation);
  const std::string text = emit_algebra_file(make_algebra_file(lp.name, lp.presentation.algebra()));
  return finish(ctx, r, exit_code::ok, &text);
}

int cmd_twostep_dual(Context& ctx, const std::string& arg) {
  const auto lp = load_presentation(ctx, arg);
  Report r = start("twostep dual");
  r.inputs["presentation"] = arg;
  const auto dual = dual_twostep(lp.presentation);
  r.results["type"] = type_json(lp.presentation);
  r.results["dual_type"] = type_json(dual);
  const std::string text = emit_twostep_file({lp.name + "_dual", dual});
  return finish(ctx, r, exit_code::ok, &text);
}

int cmd_twostep_opq(Context& ctx, const std::string& arg) {
  const auto lp = load_presentation(ctx, arg);
  const auto& p = lp.presentation;
  Report r = start("twostep opq");
  r.inputs["presentation"] = arg;
  const auto res = opq_membership(p);
  r.results["type"] = type_json(p);
  r.results["member"] = res.member;
  r.results["lambda"] = to_json(res.lambda);
  r.results["der_dim"] = res.der_dim;
  if (res.member) {
    r.results["mu"] = to_json(res.mu);
    r.results["phi"] = to_json(diagonal_of(res.phi));
  } else if (res.witness) {
    r.results["witness"] = to_json(*res.witness);
    r.results["witness_trace"] = to_json(res.witness->trace());
    r.results["witness_trace_on_z"] = to_json(res.witness_trace_m);
  }
  if (p.p() == 2 && p.q() % 2 == 0) {
    const auto k = opq_certificate_2_2n(p);
    if (k) {
      r.results["certificate"]["K1"] = to_json(k->first);
      r.results["certificate"]["K2"] = to_json(k->second);
    } else {
      r.results["certificate"] = nullptr;
    }
  }
  return finish(ctx, r, exit_code::ok);
}

int cmd_twostep_nonsingular(Context& ctx, const std::string& arg, std::size_t samples) {
  const auto lp = load_presentation(ctx, arg);
  Report r = start("twostep nonsingular");
  r.inputs["presentation"] = arg;
  r.inputs["seed"] = ctx.seed;
  const auto res = nonsingularity_check(lp.presentation, ctx.seed, samples);
  r.results["type"] = type_json(lp.presentation);
  r.results["status"] = to_string(res.status);
  r.results["method"] = res.method;
  if (res.witness) r.results["witness"] = to_json(*res.witness);
  if (res.root_interval) {
    r.results["root_interval"] = Json::array({to_json(res.root_interval->first), to_json(res.root_interval->second)});
  }
  if (res.samples) r.results["samples"] = res.samples;
  r.results["radon_hurwitz"] = radon_hurwitz(lp.presentation.q());
  return finish(ctx, r, exit_code::ok);
}

int cmd_twostep_dminus1(Context& ctx, std::size_t q, std::size_t d) {
  Report r = start("twostep dminus1");
  r.inputs["q"] = q;
  r.inputs["d"] = d;
  const auto res = build_dminus1(q, d);
  r.results["type"] = type_json(res.presentation);
  r.results["mu_b1"] = to_json(res.mu_b1);
  r.results["mu_b2"] = to_json(res.mu_b2);
  r.results["c"] = to_json(res.c);
  r.results["phi"] = to_json(diagonal_of(res.phi));
  r.results["sum_identity"] = res.sum_identity;
  r.results["layer_norms"] = res.layer_norms;
  r.results["nilsoliton"] = res.certificate.has_value();
  r.results["printed"]["mu1"] = to_json(res.printed_mu1);
  r.results["printed"]["mu2"] = to_json(res.printed_mu2);
  r.results["printed"]["minus_c"] = to_json(res.printed_minus_c);
  r.results["printed"]["matches"] = res.printed_matches;
  r.results["printed"]["matches_swapped"] = res.printed_matches_swapped;
  const std::string name = "dminus1_q" + std::to_string(q) + "_d" + std::to_string(d);
  const std::string text = emit_algebra_file(make_algebra_file(name, res.metric.algebra, res.metric.gram));
  return finish(ctx, r, exit_code::ok, &text);
}

// ---- constructions ----

int cmd_free(Context& ctx, std::size_t m, std::size_t p) {
  Report r = start("free");
  r.inputs["m"] = m;
  r.inputs["p"] = p;
  const auto f = free_nilpotent(m, p);
  r.results["dim"] = f.algebra.dim();
  r.results["degree_dims"] = f.hall.degree_dims;
  r.results["c_hat"] = to_json(f.hall.c_hat());
  const std::string name = "free_" + std::to_string(m) + "_" + std::to_string(p);
  const std::string text = emit_algebra_file(make_algebra_file(name, f.algebra));
  return finish(ctx, r, exit_code::ok, &text);
}

std::vector<Edge> parse_edges(const std::vector<std::string>& specs) {
  std::vector<Edge> edges;
  for (const auto& s : specs) {
    const auto dash = s.find('-');
    try {
      if (dash == std::string::npos) throw std::invalid_argument(s);
      std::size_t used = 0;
      const std::size_t a = std::stoul(s.substr(0, dash), &used);
      if (used != dash) throw std::invalid_argument(s);
      const std::string rest = s.substr(dash + 1);
      const std::size_t b = std::stoul(rest, &used);
      if (used != rest.size()) throw std::invalid_argument(s);
      edges.emplace_back(a, b);
    } catch (const std::logic_error&) {
      throw ParseError("edge '" + s + "' is not of the form a-b");
    }
  }
  return edges;
}

int cmd_graph(Context& ctx, const std::vector<std::string>& words) {
  Report r = start("graph");
  if (words.empty()) throw ParseError("graph needs 'gnn0 N' or 'V a-b ...'");
  LieAlgebra l;
  std::string name;
  auto count = [](const std::string& s) {
    try {
      std::size_t used = 0;
      const std::size_t v = std::stoul(s, &used);
      if (used == s.size()) return v;
    } catch (const std::logic_error&) {
    }
    throw ParseError("expected a count, got '" + s + "'");
  };
  if (words[0] == "gnn0") {
    if (words.size() != 2) throw ParseError("usage: graph gnn0 N");
    const std::size_t n = count(words[1]);
    r.inputs["family"] = "gnn0";
    r.inputs["n"] = n;
    l = graph_gnn0(n);
    const auto v = gnn0_values(n);
    r.results["d"] = to_json(v.d);
    r.results["x1"] = to_json(v.x1);
    r.results["x3"] = to_json(v.x3);
    r.results["weight"] = to_json(v.weight);
    name = "gnn0_" + std::to_string(n);
  } else {
    const std::size_t vertices = count(words[0]);
    const auto edges = parse_edges({words.begin() + 1, words.end()});
    r.inputs["vertices"] = vertices;
    r.inputs["edges"] = std::vector<std::string>(words.begin() + 1, words.end());
    l = graph_algebra(vertices, edges);
    name = "graph_" + std::to_string(vertices) + "_" + std::to_string(edges.size());
  }
  r.results["dim"] = l.dim();
  const std::string text = emit_algebra_file(make_algebra_file(name, l));
  return finish(ctx, r, exit_code::ok, &text);
}

int cmd_catalog(Context& ctx, const std::string& name) {
  Report r = start("catalog");
  if (name.empty()) {
    Json list = Json::array();
    for (const auto& e : catalog_entries()) {
      Json row;
      row["name"] = e.name;
      row["description"] = e.description;
      row["printed_nilsoliton"] = e.printed_nilsoliton;
      list.push_back(std::move(row));
    }
    r.results["entries"] = std::move(list);
    if (!ctx.json) {
      std::ostringstream os;
      for (const auto& e : catalog_entries()) os << e.name << "  " << e.description << "\n";
      ctx.out << os.str();
      return exit_code::ok;
    }
    return finish(ctx, r, exit_code::ok);
  }
  r.inputs["name"] = name;
  MetricLieAlgebra m;
  try {
    m = ctx.lookup(name);
  } catch (const UnknownCatalogName&) {
    throw CatalogMiss("unknown catalog name '" + name + "'");
  }
  r.results["dim"] = m.dim();
  const std::string text = emit_algebra_file(make_algebra_file(name, m.algebra, m.gram));
  return finish(ctx, r, exit_code::ok, &text);
}

int cmd_density(Context& ctx, std::size_t p, std::size_t q, std::size_t samples) {
  Report r = start("opq-density");
  r.inputs["p"] = p;
  r.inputs["q"] = q;
  r.inputs["samples"] = samples;
  r.inputs["seed"] = ctx.seed;
  const auto d = opq_density(p, q, samples, ctx.seed);
  r.results["fraction"] = to_json(d.fraction);
  r.results["members"] = d.members;
  r.results["rejected_draws"] = d.rejected;
  r.results["witness_failures"] = d.witness_failures;
  return finish(ctx, r, exit_code::ok);
}

int cmd_suite(Context& ctx) {
  Report r = start("paper-suite");
  const SuiteResult s = regression_suite(ctx.lookup);
  const int code = s.passed() ? exit_code::ok : exit_code::inconclusive;
  if (ctx.json) {
    r.results = s.to_json();
    return finish(ctx, r, code);
  }
  std::ostringstream os;
  for (const auto& c : s.checks) {
    os << (c.passed ? "PASS" : "FAIL") << "  [" << c.criterion << "] " << c.name << ": " << c.detail << "\n";
  }
  os << (s.passed() ? "all " + std::to_string(s.checks.size()) + " checks passed"
                    : std::to_string(s.failures().size()) + " of " + std::to_string(s.checks.size()) +
                          " checks failed")
     << "\n";
  if (ctx.out_path.empty()) {
    ctx.out << os.str();
  } else {
    write_text_file(ctx.out_path, os.str());
  }
  return code;
}

int report_error(Context& ctx, const std::string& command, const std::string& what, int code) {
  ctx.err << "error: " << what << "\n";
  if (ctx.json) {
    Json j;
    j["command"] = command;
    j["status"] = "error";
    j["error"] = what;
    j["exit_code"] = code;
    ctx.out << j.dump(2) << "\n";
  }
  return code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return run_cli(args, out, err, CliEnvironment{[](const std::string& n) { return catalog(n); }});
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const CliEnvironment& env) {
  Context ctx{false, 0, "", out, err, env.lookup};
  CLI::App app{"Exact computations on nilpotent and solvable Lie algebras", "nilsol"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", ctx.json, "Machine-readable report");
  app.add_option("--seed", ctx.seed, "Seed for sampling commands")->default_val(0);
  app.add_option("--out", ctx.out_path, "Write the generated file (or the report) here");

  std::vector<std::pair<CLI::App*, std::function<int()>>> actions;
  std::string file;
  auto algebra_cmd = [&](const std::string& name, const std::string& help, int (*fn)(Context&, const std::string&)) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("algebra", file, "Algebra file or catalog name")->required();
    actions.emplace_back(sub, [&ctx, &file, fn] { return fn(ctx, file); });
  };
  algebra_cmd("check", "Parse, Jacobi check and structure summary", cmd_check);
  algebra_cmd("der", "Basis of the derivation algebra", cmd_der);
  algebra_cmd("pre-einstein", "Diagonal pre-Einstein derivation", cmd_pre_einstein);
  algebra_cmd("certify", "Standardness verdict", cmd_certify);
  algebra_cmd("ricci", "Ricci operator of the file's metric", cmd_ricci);
  algebra_cmd("nilsoliton", "Nilsoliton certificate (c, Phi)", cmd_nilsoliton);
  algebra_cmd("extend", "Rank-one Einstein extension", cmd_extend);
  algebra_cmd("einstein", "Einstein test for a solvable metric algebra", cmd_einstein);
  algebra_cmd("standard", "Standardness of the metric", cmd_standard);

  auto* twostep = app.add_subcommand("twostep", "Two-step presentations");
  twostep->require_subcommand(1);
  std::string pres;
  auto pres_cmd = [&](const std::string& name, const std::string& help, int (*fn)(Context&, const std::string&)) {
    auto* sub = twostep->add_subcommand(name, help);
    sub->add_option("presentation", pres, "Two-step file, algebra file or catalog name")->required();
    actions.emplace_back(sub, [&ctx, &pres, fn] { return fn(ctx, pres); });
  };
  pres_cmd("build", "Algebra file of a presentation", cmd_twostep_build);
  pres_cmd("dual", "Dual presentation", cmd_twostep_dual);
  pres_cmd("opq", "Membership in O(p,q)", cmd_twostep_opq);
  std::size_t ns_samples = 64;
  {
    auto* sub = twostep->add_subcommand("nonsingular", "Nonsingularity of the pencil");
    sub->add_option("presentation", pres, "Two-step file, algebra file or catalog name")->required();
    sub->add_option("--samples", ns_samples, "Samples for the heuristic route")->default_val(64);
    actions.emplace_back(sub, [&] { return cmd_twostep_nonsingular(ctx, pres, ns_samples); });
  }
  std::size_t dq = 0, dd = 0;
  {
    auto* sub = twostep->add_subcommand("dminus1", "Type (D-1, q) nilsoliton");
    sub->add_option("q", dq)->required();
    sub->add_option("d", dd)->required();
    actions.emplace_back(sub, [&] { return cmd_twostep_dminus1(ctx, dq, dd); });
  }

  std::size_t fm = 0, fp = 0;
  {
    auto* sub = app.add_subcommand("free", "Free nilpotent algebra f(m, p)");
    sub->add_option("m", fm)->required();
    sub->add_option("p", fp)->required();
    actions.emplace_back(sub, [&] { return cmd_free(ctx, fm, fp); });
  }
  std::vector<std::string> graph_words;
  {
    auto* sub = app.add_subcommand("graph", "Graph algebra: 'gnn0 N' or 'V a-b ...'");
    sub->add_option("args", graph_words)->required();
    actions.emplace_back(sub, [&] { return cmd_graph(ctx, graph_words); });
  }
  std::string cat_name;
  {
    auto* sub = app.add_subcommand("catalog", "List the catalog or emit one entry");
    sub->add_option("name", cat_name);
    actions.emplace_back(sub, [&] { return cmd_catalog(ctx, cat_name); });
  }
  std::size_t op = 0, oq = 0, os = 0;
  {
    auto* sub = app.add_subcommand("opq-density", "Sampled fraction of O(p,q) members");
    sub->add_option("p", op)->required();
    sub->add_option("q", oq)->required();
    sub->add_option("samples", os)->required();
    actions.emplace_back(sub, [&] { return cmd_density(ctx, op, oq, os); });
  }
  {
    auto* sub = app.add_subcommand("paper-suite", "Regression suite over every exact constant");
    actions.emplace_back(sub, [&] { return cmd_suite(ctx); });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_code::ok;
  } catch (const CLI::ParseError& e) {
    const CLI::App* failing = &app;
    for (auto* sub : app.get_subcommands()) failing = sub;
    err << "error: " << e.what() << "\n" << failing->help();
    return exit_code::usage;
  }

  std::string command = "nilsol";
  for (const auto& [sub, action] : actions) {
    if (!sub->parsed()) continue;
    command = sub->get_parent() == twostep ? "twostep " + sub->get_name() : sub->get_name();
    try {
      return action();
    } catch (const FileError& e) {
      return report_error(ctx, command, e.what(), exit_code::parse_error);
    } catch (const ParseError& e) {
      return report_error(ctx, command, e.what(), exit_code::parse_error);
    } catch (const CatalogMiss& e) {
      return report_error(ctx, command, e.what(), exit_code::parse_error);
    } catch (const InvalidAlgebra& e) {
      return report_error(ctx, command, e.what(), exit_code::invalid_algebra);
    } catch (const std::invalid_argument& e) {
      return report_error(ctx, command, e.what(), exit_code::invalid_algebra);
    } catch (const std::domain_error& e) {
      return report_error(ctx, command, e.what(), exit_code::invalid_algebra);
    } catch (const std::exception& e) {
      return report_error(ctx, command, e.what(), exit_code::parse_error);
    }
  }
  err << app.help();
  return exit_code::usage;
}

}  // namespace nilsol
