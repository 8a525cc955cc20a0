// contring: command-line front end for the contring library.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "contring/ball.hpp"
#include "contring/canonical.hpp"
#include "contring/classes.hpp"
#include "contring/error.hpp"
#include "contring/geodesic.hpp"
#include "contring/io.hpp"
#include "contring/linalg.hpp"
#include "contring/random.hpp"
#include "contring/rank_metric.hpp"
#include "contring/verify_suite.hpp"

namespace {

using namespace contring;

struct RunConfig {
  std::optional<std::uint64_t> seed_flag;
  std::uint64_t seed = 0;
  std::string format = "json";
  std::uint64_t budget_group_order = 100000;
  std::size_t budget_perturb = 64;
  std::size_t tower_level_cap = kTowerLevelCap;
  std::optional<std::uint32_t> p;
  std::optional<std::size_t> n;
  std::string input;
};

enum class Draw { Any, Unit, UpperUnit };

std::uint64_t resolve_seed(const RunConfig& cfg) {
  if (cfg.seed_flag) return *cfg.seed_flag;
  if (const char* env = std::getenv("CONTRING_SEED")) {
    try {
      std::size_t used = 0;
      const std::uint64_t v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    fail(ErrorKind::ParseError, std::string("CONTRING_SEED is not an unsigned integer: ") + env);
  }
  return 0;
}

Mat parse_one(const std::string& arg, const RunConfig& cfg) {
  Mat a = parse_matrix(read_input(arg));
  if (cfg.p && a.field().p() != *cfg.p) fail(ErrorKind::ParseError, "--p disagrees with the matrix modulus");
  if (cfg.n && a.n() != *cfg.n) fail(ErrorKind::ParseError, "--n disagrees with the matrix size");
  return a;
}

// The --input matrix, or a seeded random one of size --n over --p.
Mat load_matrix(const RunConfig& cfg, Draw draw) {
  if (!cfg.input.empty()) return parse_one(cfg.input, cfg);
  if (!cfg.p || !cfg.n) fail(ErrorKind::ParseError, "no matrix: pass --input, or --n and --p to draw one");
  if (*cfg.n == 0) fail(ErrorKind::ParseError, "--n must be positive");
  const Field k(*cfg.p);
  Rng rng(cfg.seed);
  switch (draw) {
    case Draw::Unit: return random_unit(rng, k, *cfg.n);
    case Draw::UpperUnit: return random_upper_unit(rng, k, *cfg.n);
    case Draw::Any: break;
  }
  return random_mat(rng, k, *cfg.n);
}

json base_report(const std::string& command, const RunConfig& cfg) {
  return json{{"command", command}, {"seed", cfg.seed}};
}

std::string csv_cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  std::string s = v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

void emit(const RunConfig& cfg, const json& report) {
  if (cfg.format == "json") {
    std::cout << report.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    std::string header, row;
    for (auto it = report.begin(); it != report.end(); ++it) {
      if (!header.empty()) {
        header += ',';
        row += ',';
      }
      header += it.key();
      row += csv_cell(it.value());
    }
    std::cout << header << '\n' << row << '\n';
  } else {
    for (auto it = report.begin(); it != report.end(); ++it) {
      std::cout << it.key() << ": " << (it.value().is_string() ? it.value().get<std::string>() : it.value().dump())
                << '\n';
    }
  }
}

// ---- subcommands -------------------------------------------------------

json cmd_rank(const RunConfig& cfg) {
  const Mat a = load_matrix(cfg, Draw::Any);
  json out = base_report("rank", cfg);
  out["n"] = a.n();
  out["p"] = a.field().p();
  out["rank"] = rank(a);
  out["rk"] = to_json(rk(a));
  return out;
}

json cmd_rcf(const RunConfig& cfg) {
  const Mat a = load_matrix(cfg, Draw::Any);
  json out = base_report("rcf", cfg);
  out.update(to_json(rcf(a)));
  return out;
}

json cmd_index(const RunConfig& cfg) {
  const Mat a = load_matrix(cfg, Draw::Any);
  const IndexCertificate c = index_bound_certificate(a);
  json out = base_report("index", cfg);
  out["index"] = c.index;
  out["certificate"] = {{"n", c.n},
                        {"min_rank", c.min_rank},
                        {"argmin", c.argmin},
                        {"linear_blocks", c.linear_blocks},
                        {"block_scalar", c.block_scalar ? json(*c.block_scalar) : json(nullptr)},
                        {"block_rank", c.block_rank},
                        {"holds", c.holds}};
  return out;
}

json cmd_center_dist(const RunConfig& cfg) {
  const Mat a = load_matrix(cfg, Draw::Any);
  const CenterDistance d = dist_to_center(a);
  const CenterDistance ex = center_scan_exhaustive(a);
  const CenterDistance ev = center_scan_eigen(a);
  json out = base_report("center-dist", cfg);
  out["dist"] = to_json(d.dist);
  out["argmin"] = d.argmin;
  out["exhaustive"] = {{"dist", to_json(ex.dist)}, {"argmin", ex.argmin}};
  out["eigen"] = {{"dist", to_json(ev.dist)}, {"argmin", ev.argmin}};
  return out;
}

json cmd_geodesic(const RunConfig& cfg, const std::string& to) {
  json out = base_report("geodesic", cfg);
  if (to.empty()) {
    const Mat a = load_matrix(cfg, Draw::Unit);
    out["mode"] = "unit-to-identity";
    out.update(to_json(geodesic_unit_to_identity(a)));
  } else {
    const Mat a = load_matrix(cfg, Draw::Any);
    const Mat b = parse_one(to, cfg);
    require_compatible(a, b);
    out["mode"] = "between";
    out.update(to_json(geodesic_between(a, b)));
  }
  return out;
}

json cmd_star(const RunConfig& cfg, const std::vector<std::string>& polys, std::int64_t center) {
  const Mat a = load_matrix(cfg, Draw::Any);
  std::vector<Poly> s;
  for (const auto& text : polys) s.push_back(parse_poly(a.field(), text));
  json out = base_report("star", cfg);
  json poly_list = json::array();
  for (const Poly& f : s) poly_list.push_back(to_json(f));
  out["polys"] = poly_list;
  out["center"] = a.field().reduce(center);
  out.update(to_json(star_geodesic_algebraic(a, s, a.field().reduce(center))));
  return out;
}

json cmd_midpoint(const RunConfig& cfg, const std::string& to, bool canonical_fallback) {
  const Mat g0 = load_matrix(cfg, Draw::Unit);
  const Mat g1 = to.empty() ? Mat::identity(g0.field(), g0.n()) : parse_one(to, cfg);
  const MidpointResult r = approximate_midpoint(g0, g1, cfg.seed, cfg.budget_perturb, canonical_fallback);
  json out = base_report("midpoint", cfg);
  out["distance"] = to_json(dist(g0, g1));
  out["midpoint"] = rows_json(r.m);
  out["h"] = rows_json(r.h);
  out["err"] = to_json(r.err);
  out["delta"] = to_json(r.delta);
  out["bound"] = to_json(r.bound);
  out["perturbations"] = r.perturbations;
  out["method"] = to_string(r.method);
  return out;
}

json cmd_decompose(const RunConfig& cfg, std::size_t m) {
  const Mat g = load_matrix(cfg, Draw::UpperUnit);
  const BallFactorization bf = ball_factorization(g, m);
  const Mat id = Mat::identity(g.field(), g.n());
  json factors = json::array(), witnesses = json::array(), distances = json::array();
  for (std::size_t i = 0; i < bf.m; ++i) {
    factors.push_back(rows_json(bf.factors[i]));
    witnesses.push_back(to_json(bf.witnesses[i]));
    distances.push_back(to_json(dist(bf.factors[i], id)));
  }
  json out = base_report("decompose", cfg);
  out["m"] = bf.m;
  out["factors"] = factors;
  out["witnesses"] = witnesses;
  out["distances"] = distances;
  out["verified"] = bf.verify();
  return out;
}

json cmd_approx_unit(const RunConfig& cfg) {
  const Mat a = load_matrix(cfg, Draw::Any);
  const Mat b = invertible_approximation(a);
  json out = base_report("approx-unit", cfg);
  out["b"] = rows_json(b);
  out["rank_a"] = rank(a);
  out["rank_diff"] = rank(b - a);
  out["dist"] = to_json(dist(a, b));
  out["invertible"] = is_invertible(b);
  return out;
}

json cmd_sl_project(const RunConfig& cfg) {
  const Mat a = load_matrix(cfg, Draw::Unit);
  const Mat b = sl_projection(a);
  json out = base_report("sl-project", cfg);
  out["b"] = rows_json(b);
  out["det_a"] = det(a);
  out["det_b"] = det(b);
  out["dist"] = to_json(dist(a, b));
  return out;
}

json cmd_tower(const RunConfig& cfg, std::size_t levels, const std::string& approx) {
  json out = base_report("tower", cfg);
  if (!approx.empty()) {
    const TowerElem g = TowerElem::at(load_matrix(cfg, Draw::Unit));
    const TowerElem a = TowerElem::at(parse_one(approx, RunConfig{}));
    const DensityTrace t = tower_unit_density(g, a);
    out["mode"] = "density";
    out["h"] = rows_json(t.h);
    out["g_to_h"] = to_json(t.g_to_h);
    out["g_to_a"] = to_json(t.g_to_a);
    out["a_to_h"] = to_json(t.a_to_h);
    out["doubled_bound"] = t.doubled_bound;
    out["triangle"] = t.triangle;
    return out;
  }
  TowerElem x = TowerElem::at(load_matrix(cfg, Draw::Any));
  json steps = json::array();
  steps.push_back({{"level", x.level}, {"dim", x.m.n()}, {"rk", to_json(rk(x.m))}});
  for (std::size_t i = 0; i < levels; ++i) {
    x = tower_embed(x, cfg.tower_level_cap);
    steps.push_back({{"level", x.level}, {"dim", x.m.n()}, {"rk", to_json(rk(x.m))}});
  }
  out["mode"] = "embed";
  out["levels"] = steps;
  out["top"] = rows_json(x.m);
  return out;
}

std::vector<std::size_t> auto_tuple(const ClassTable& t, const std::string& mode) {
  std::size_t best = 0;
  for (const ClassInfo& c : t.classes()) {
    const bool better = mode == "auto:dist" ? c.center_dist > t.info(best).center_dist : c.ind > t.info(best).ind;
    if (better) best = c.id;
  }
  const ClassInfo& c = t.info(best);
  std::vector<std::size_t> tuple;
  if (mode == "auto:dist") {
    if (c.center_dist.num == 0) fail(ErrorKind::HypothesisNotMet, "every class is central");
    RankValue total{0, t.n()};
    while (total < RankValue{12, 1}) {
      tuple.push_back(best);
      total = RankValue{total.num + c.center_dist.over(t.n()).num, t.n()};
    }
  } else {
    if (c.ind == 0) fail(ErrorKind::HypothesisNotMet, "every class is central");
    std::size_t sum = 0;
    while (sum <= 6 * (t.n() - 1)) {
      tuple.push_back(best);
      sum += c.ind;
    }
  }
  return tuple;
}

std::vector<std::size_t> parse_ids(const std::string& text) {
  std::vector<std::size_t> ids;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      ids.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      fail(ErrorKind::ParseError, "class ids must be comma-separated integers: " + text);
    }
  }
  return ids;
}

json classes_json(const ClassTable& t) {
  json arr = json::array();
  for (const ClassInfo& c : t.classes()) {
    json factors = json::array();
    for (const Poly& f : c.factors) factors.push_back(to_json(f));
    arr.push_back({{"id", c.id},
                   {"size", c.size},
                   {"ind", c.ind},
                   {"center_dist", to_json(c.center_dist)},
                   {"factors", factors},
                   {"representative", rows_json(t.element(c.representative))}});
  }
  return arr;
}

ClassTable load_table(const RunConfig& cfg, bool special) {
  return ClassTable::enumerate(cfg.n.value_or(3), cfg.p.value_or(2), special, cfg.budget_group_order);
}

json cmd_coverage(const RunConfig& cfg, bool special, const std::string& classes) {
  const ClassTable t = load_table(cfg, special);
  const bool automatic = classes.rfind("auto:", 0) == 0;
  if (automatic && classes != "auto:rs" && classes != "auto:threshold" && classes != "auto:dist") {
    fail(ErrorKind::ParseError, "unknown class selector " + classes);
  }
  const std::vector<std::size_t> tuple = automatic ? auto_tuple(t, classes) : parse_ids(classes);
  json out = base_report("coverage", cfg);
  out["n"] = t.n();
  out["p"] = t.field().p();
  out["special"] = special;
  out["order"] = t.order();
  out["classes"] = classes_json(t);
  out["tuple"] = tuple;
  const IndexSet closure = class_product_closure(t, tuple);
  out["covered"] = closure.all();
  out["coverage_fraction"] = {{"num", closure.count()}, {"den", t.order()}};
  if (t.n() > 2) {
    const CoverageReport rs = rodgers_saxl_check(t, tuple);
    const CoverageReport ci = corollary_index_check(t, tuple);
    out["index_sum"] = rs.sum_ind;
    out["index_threshold"] = 6 * (t.n() - 1);
    out["index_hypothesis"] = rs.hypothesis;
    out["dist_sum"] = to_json(ci.sum_center_dist);
    out["dist_hypothesis"] = ci.hypothesis;
    out["consistent"] = rs.consistent && ci.consistent;
  } else if (automatic) {
    fail(ErrorKind::HypothesisNotMet, "automatic tuples need n > 2");
  }
  return out;
}

json cmd_width(const RunConfig& cfg, bool special, std::optional<std::size_t> class_id) {
  const ClassTable t = load_table(cfg, special);
  json widths = json::array();
  for (const ClassInfo& c : t.classes()) {
    if (class_id && c.id != *class_id) continue;
    const auto w = conjugacy_width(t, c.id);
    widths.push_back({{"id", c.id}, {"size", c.size}, {"ind", c.ind}, {"width", w ? json(*w) : json("inf")}});
  }
  if (class_id && widths.empty()) fail(ErrorKind::PreconditionViolation, "unknown class id");
  json out = base_report("width", cfg);
  out["n"] = t.n();
  out["p"] = t.field().p();
  out["special"] = special;
  out["order"] = t.order();
  out["widths"] = widths;
  return out;
}

int cmd_verify_suite(const RunConfig& cfg, bool timings) {
  const SuiteResult suite = run_verify_suite(cfg.seed);
  if (cfg.format == "text") {
    for (const CriterionResult& c : suite.criteria) {
      std::cout << (c.passed ? "PASS" : "FAIL") << "  " << c.id << "  " << c.name;
      if (timings) std::cout << "  (" << c.seconds << " s, budget " << c.budget_seconds << " s)";
      std::cout << '\n';
    }
    std::cout << (suite.passed() ? "all criteria passed" : "some criteria failed") << '\n';
  } else {
    json out = suite.to_json(timings);
    out["command"] = "verify-suite";
    emit(cfg, out);
  }
  return suite.passed() ? 0 : 1;
}

void print_error(const std::string& kind, const std::string& message) {
  std::cout << json{{"error", {{"kind", kind}, {"message", message}}}}.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact rank-metric geometry and unit-group tools over prime fields"};
  app.fallthrough();
  app.require_subcommand(1);

  RunConfig cfg;
  std::uint64_t seed_value = 0;
  auto* seed_opt = app.add_option("--seed", seed_value, "Random seed (falls back to CONTRING_SEED, then 0)");
  app.add_option("--p", cfg.p, "Prime modulus");
  app.add_option("--n", cfg.n, "Matrix or group dimension");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--budget-group-order", cfg.budget_group_order, "Largest group to enumerate")->capture_default_str();
  app.add_option("--budget-perturb", cfg.budget_perturb, "Perturbations tried by midpoint")->capture_default_str();
  app.add_option("--budget-tower-level", cfg.tower_level_cap, "Highest tower level")->capture_default_str();
  app.add_option("--input", cfg.input, "Matrix text, JSON, or a file holding either");

  std::string to, approx, classes = "auto:rs";
  std::vector<std::string> polys;
  std::int64_t center = 1;
  std::size_t m = 2, levels = 1;
  bool special = false, timings = false;
  std::optional<std::size_t> class_id;

  auto* rank_cmd = app.add_subcommand("rank", "Rank and normalized rank");
  auto* rcf_cmd = app.add_subcommand("rcf", "Rational canonical form with transform");
  auto* index_cmd = app.add_subcommand("index", "Index and its rank-bound certificate");
  auto* center_cmd = app.add_subcommand("center-dist", "Distance to the scalar matrices");
  auto* geo_cmd = app.add_subcommand("geodesic", "Geodesic to --to, or through units to I");
  geo_cmd->add_option("--to", to, "Endpoint matrix");
  auto* star_cmd = app.add_subcommand("star", "Geodesic to cI inside the zero set of --poly");
  star_cmd->add_option("--poly", polys, "Polynomial coefficients, lowest degree first")->required();
  star_cmd->add_option("--center", center, "Scalar c")->capture_default_str();
  auto* mid_cmd = app.add_subcommand("midpoint", "Approximate midpoint of two units");
  mid_cmd->add_option("--to", to, "Second unit (default I)");
  bool no_canonical = false;
  mid_cmd->add_flag("--no-canonical-fallback", no_canonical, "Fail instead of using the canonical-form approximant");
  auto* dec_cmd = app.add_subcommand("decompose", "Ball factorization of a triangular unit");
  dec_cmd->add_option("--m", m, "Number of factors")->capture_default_str();
  auto* approx_cmd = app.add_subcommand("approx-unit", "Unit at distance 1 - rk(a) from a");
  auto* sl_cmd = app.add_subcommand("sl-project", "Determinant-one unit within 1/n");
  auto* tower_cmd = app.add_subcommand("tower", "Doubling embeddings, or density with --approx");
  tower_cmd->add_option("--levels", levels, "Embeddings to apply")->capture_default_str();
  tower_cmd->add_option("--approx", approx, "Lower-level approximant");
  auto* cov_cmd = app.add_subcommand("coverage", "Products of conjugacy classes");
  cov_cmd->add_flag("--special", special, "Use SL_n instead of GL_n");
  cov_cmd->add_option("--classes", classes, "Comma-separated ids, auto:rs, auto:threshold or auto:dist")
      ->capture_default_str();
  auto* width_cmd = app.add_subcommand("width", "Conjugacy widths");
  width_cmd->add_flag("--special", special, "Use SL_n instead of GL_n");
  width_cmd->add_option("--class", class_id, "Restrict to one class id");
  auto* suite_cmd = app.add_subcommand("verify-suite", "Run the full verification battery");
  suite_cmd->add_flag("--timings", timings, "Include per-criterion timings");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    const bool unknown = app.get_subcommands().empty();
    print_error(unknown ? "UnknownSubcommand" : "ParseError", e.what());
    return 2;
  }

  try {
    if (seed_opt->count() > 0) cfg.seed_flag = seed_value;
    cfg.seed = resolve_seed(cfg);
    json out;
    if (rank_cmd->parsed()) out = cmd_rank(cfg);
    else if (rcf_cmd->parsed()) out = cmd_rcf(cfg);
    else if (index_cmd->parsed()) out = cmd_index(cfg);
    else if (center_cmd->parsed()) out = cmd_center_dist(cfg);
    else if (geo_cmd->parsed()) out = cmd_geodesic(cfg, to);
    else if (star_cmd->parsed()) out = cmd_star(cfg, polys, center);
    else if (mid_cmd->parsed()) out = cmd_midpoint(cfg, to, !no_canonical);
    else if (dec_cmd->parsed()) out = cmd_decompose(cfg, m);
    else if (approx_cmd->parsed()) out = cmd_approx_unit(cfg);
    else if (sl_cmd->parsed()) out = cmd_sl_project(cfg);
    else if (tower_cmd->parsed()) out = cmd_tower(cfg, levels, approx);
    else if (cov_cmd->parsed()) out = cmd_coverage(cfg, special, classes);
    else if (width_cmd->parsed()) out = cmd_width(cfg, special, class_id);
    else if (suite_cmd->parsed()) return cmd_verify_suite(cfg, timings);
    else fail(ErrorKind::UnknownSubcommand, "no subcommand");
    emit(cfg, out);
    return 0;
  } catch (const Error& e) {
    print_error(std::string(to_string(e.kind())), e.what());
    return 2;
  } catch (const std::exception& e) {
    print_error("Internal", e.what());
    return 3;
  }
}
