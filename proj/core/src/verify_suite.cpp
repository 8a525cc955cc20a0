#include "contring/verify_suite.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <stdexcept>

#include "contring/ball.hpp"
#include "contring/canonical.hpp"
#include "contring/classes.hpp"
#include "contring/error.hpp"
#include "contring/geodesic.hpp"
#include "contring/idempotent.hpp"
#include "contring/io.hpp"
#include "contring/linalg.hpp"
#include "contring/random.hpp"
#include "contring/rank_metric.hpp"

namespace contring {

namespace {

using nlohmann::json;

struct Outcome {
  bool passed;
  json details;
};

// Every matrix of M_n(GF(p)).
std::vector<Mat> all_matrices(const Field& k, std::size_t n) {
  const std::uint64_t space = *matrix_space_size(k, n, n);
  std::vector<Mat> out;
  out.reserve(space);
  for (std::uint64_t code = 0; code < space; ++code) out.push_back(decode_matrix(k, n, n, code));
  return out;
}

Poly brute_force_minpoly(const Mat& a) {
  const Field& k = a.field();
  for (std::size_t d = 1; d <= a.n(); ++d) {
    const std::uint64_t count = *matrix_space_size(k, 1, d);
    for (std::uint64_t code = 0; code < count; ++code) {
      const Mat low = decode_matrix(k, 1, d, code);
      std::vector<Elem> c(low.data().begin(), low.data().end());
      c.push_back(1);
      Poly f(k, std::move(c));
      if (poly_eval(f, a).is_zero()) return f;
    }
  }
  throw std::logic_error("no annihilating polynomial up to degree n");
}

// ---- 1: rank axioms -------------------------------------------------------

Outcome rank_axioms(Rng& rng) {
  json configs = json::array();
  bool ok = true;
  for (auto [n, p] : {std::pair<std::size_t, std::uint32_t>{4, 2}, {6, 3}, {8, 5}}) {
    const Field k(p);
    std::size_t violations = 0;
    constexpr std::size_t kTriples = 10000;
    for (std::size_t t = 0; t < kTriples; ++t) {
      const Mat a = random_mat(rng, k, n);
      const Mat b = random_mat(rng, k, n);
      const Mat frame = random_unit(rng, k, n);
      const std::size_t r1 = rng.below(n + 1);
      const std::size_t r2 = rng.below(n - r1 + 1);
      Mat d1(k, n, n), d2(k, n, n);
      for (std::size_t i = 0; i < r1; ++i) d1(i, i) = 1;
      for (std::size_t i = r1; i < r1 + r2; ++i) d2(i, i) = 1;
      const Mat frame_inv = inverse(frame);
      const RankAxiomReport rep = rank_axiom_suite(a, b, frame * d1 * frame_inv, frame * d2 * frame_inv);
      if (!rep.all()) ++violations;
    }
    ok = ok && violations == 0;
    configs.push_back({{"n", n}, {"p", p}, {"triples", kTriples}, {"violations", violations}});
  }
  return {ok, {{"configs", configs}}};
}

// ---- 2: rational canonical form ------------------------------------------

bool rcf_instance_ok(const Mat& a, Rng& rng, bool minpoly_oracle) {
  const Rcf r = rcf(a);
  std::size_t degrees = 0;
  Poly product = Poly::constant(a.field(), 1);
  for (std::size_t i = 0; i < r.factors.size(); ++i) {
    const Poly& f = r.factors[i];
    if (!f.is_monic() || f.degree() < 1) return false;
    if (i > 0 && !poly_divmod(f, r.factors[i - 1]).second.is_zero()) return false;
    degrees += static_cast<std::size_t>(f.degree());
    product = product * f;
  }
  if (degrees != a.n() || !(product == charpoly(a))) return false;
  if (!poly_eval(r.factors.back(), a).is_zero()) return false;
  if (minpoly_oracle && !(brute_force_minpoly(a) == r.factors.back())) return false;
  if (!(r.transform * a * inverse(r.transform) == r.form())) return false;
  if (r.index != a.n() - r.factors.size()) return false;
  const Mat g = random_unit(rng, a.field(), a.n());
  return invariant_factors(g * a * inverse(g)) == r.factors;
}

Outcome rcf_correctness(Rng& rng) {
  json configs = json::array();
  bool ok = true;
  auto record = [&](std::size_t n, std::uint32_t p, const char* mode, const std::vector<Mat>& mats, bool oracle) {
    std::size_t violations = 0;
    for (const Mat& a : mats)
      if (!rcf_instance_ok(a, rng, oracle)) ++violations;
    ok = ok && violations == 0;
    configs.push_back({{"n", n}, {"p", p}, {"mode", mode}, {"matrices", mats.size()}, {"violations", violations}});
  };
  record(2, 2, "exhaustive", all_matrices(Field(2), 2), true);
  record(2, 3, "exhaustive", all_matrices(Field(3), 2), true);
  std::vector<Mat> random;
  const Field k3(3);
  for (int i = 0; i < 1000; ++i) random.push_back(random_mat(rng, k3, 5));
  record(5, 3, "random", random, false);
  return {ok, {{"configs", configs}}};
}

// ---- 3: index bound -------------------------------------------------------

Outcome index_bound() {
  json configs = json::array();
  bool ok = true;
  for (auto [n, p] : {std::pair<std::size_t, std::uint32_t>{2, 2}, {2, 3}, {3, 2}}) {
    std::size_t violations = 0, scan_mismatches = 0;
    const auto mats = all_matrices(Field(p), n);
    for (const Mat& a : mats) {
      const IndexCertificate cert = index_bound_certificate(a);
      if (!cert.holds || cert.min_rank > 2 * cert.index) ++violations;
      const CenterDistance ex = center_scan_exhaustive(a);
      const CenterDistance ev = center_scan_eigen(a);
      if (!(ex.dist == ev.dist) || ex.argmin != ev.argmin) ++scan_mismatches;
    }
    ok = ok && violations == 0 && scan_mismatches == 0;
    configs.push_back({{"n", n}, {"p", p}, {"matrices", mats.size()}, {"violations", violations},
                       {"scan_mismatches", scan_mismatches}});
  }
  return {ok, {{"configs", configs}}};
}

// ---- 4, 5: class coverage ------------------------------------------------

// Depth-first walk over multisets of class ids (non-decreasing sequences)
// of length 1..max_len, carrying the class-level product.
void walk_multisets(const ClassTable& t, std::size_t max_len,
                    const std::function<void(const std::vector<std::size_t>&, const IndexSet&)>& visit) {
  std::vector<std::size_t> tuple;
  std::function<void(std::size_t, const IndexSet&)> rec = [&](std::size_t min_id, const IndexSet& prod) {
    for (std::size_t c = min_id; c < t.class_count(); ++c) {
      IndexSet next(t.class_count());
      if (tuple.empty()) {
        next.set(c);
      } else {
        for (std::size_t a : prod.indices()) next |= t.product_support(a, c);
      }
      tuple.push_back(c);
      visit(tuple, next);
      if (tuple.size() < max_len) rec(c, next);
      tuple.pop_back();
    }
  };
  rec(0, IndexSet(t.class_count()));
}

std::vector<std::size_t> random_tuple(const ClassTable& t, Rng& rng, const std::function<bool(const std::vector<std::size_t>&)>& qualifies,
                                      std::size_t min_len, std::size_t max_len) {
  for (;;) {
    const std::size_t m = min_len + rng.below(max_len - min_len + 1);
    std::vector<std::size_t> tuple;
    for (std::size_t i = 0; i < m; ++i) tuple.push_back(rng.below(t.class_count()));
    if (qualifies(tuple)) return tuple;
  }
}

std::size_t sum_ind(const ClassTable& t, const std::vector<std::size_t>& tuple) {
  std::size_t s = 0;
  for (auto c : tuple) s += t.info(c).ind;
  return s;
}

std::uint64_t sum_dist_num(const ClassTable& t, const std::vector<std::size_t>& tuple) {
  std::uint64_t s = 0;
  for (auto c : tuple) s += t.info(c).center_dist.over(t.n()).num;
  return s;
}

// Class-level products agree with explicit element products on short tuples.
bool closure_cross_check(const ClassTable& t, std::size_t max_len) {
  bool ok = true;
  walk_multisets(t, max_len, [&](const std::vector<std::size_t>& tuple, const IndexSet& prod) {
    ok = ok && t.expand(prod) == class_product_bruteforce(t, tuple);
  });
  return ok;
}

Outcome rodgers_saxl(Rng& rng) {
  const ClassTable small = ClassTable::enumerate(3, 2, true);
  const std::size_t threshold = 6 * (3 - 1);
  std::size_t tested = 0, failures = 0;
  walk_multisets(small, 14, [&](const std::vector<std::size_t>& tuple, const IndexSet& prod) {
    if (sum_ind(small, tuple) <= threshold) return;
    ++tested;
    if (!prod.all()) ++failures;
  });
  const bool cross = closure_cross_check(small, 3);

  const ClassTable big = ClassTable::enumerate(3, 3, true);
  std::size_t big_failures = 0;
  for (int i = 0; i < 100; ++i) {
    const auto tuple = random_tuple(
        big, rng, [&](const auto& tp) { return sum_ind(big, tp) > threshold; }, 7, 14);
    const CoverageReport rep = rodgers_saxl_check(big, tuple);
    if (!rep.hypothesis || !rep.covered) ++big_failures;
  }
  const bool orders = small.order() == *group_order_formula(3, 2, true) && big.order() == *group_order_formula(3, 3, true);
  return {failures == 0 && big_failures == 0 && cross && orders && tested > 0,
          {{"threshold", threshold},
           {"sl3_2", {{"order", small.order()}, {"classes", small.class_count()}, {"qualifying_tuples", tested},
                      {"failures", failures}, {"closure_cross_check", cross}}},
           {"sl3_3", {{"order", big.order()}, {"classes", big.class_count()}, {"random_tuples", 100},
                      {"failures", big_failures}}}}};
}

Outcome corollary_index(Rng& rng) {
  bool ok = true;
  json tables = json::array();
  for (std::uint32_t p : {2u, 3u}) {
    const ClassTable t = ClassTable::enumerate(3, p, true);
    std::size_t per_class_violations = 0;
    for (const ClassInfo& c : t.classes()) {
      if (c.center_dist.over(3).num > 2 * c.ind) ++per_class_violations;
    }
    const std::uint64_t need = 12 * 3;
    std::size_t tested = 0, failures = 0;
    if (p == 2) {
      walk_multisets(t, 18, [&](const std::vector<std::size_t>& tuple, const IndexSet& prod) {
        if (sum_dist_num(t, tuple) < need) return;
        ++tested;
        if (!prod.all()) ++failures;
      });
    } else {
      for (int i = 0; i < 100; ++i) {
        const auto tuple = random_tuple(
            t, rng, [&](const auto& tp) { return sum_dist_num(t, tp) >= need; }, 12, 20);
        const CoverageReport rep = corollary_index_check(t, tuple);
        ++tested;
        if (!rep.hypothesis || !rep.covered) ++failures;
      }
    }
    ok = ok && per_class_violations == 0 && failures == 0 && tested > 0;
    tables.push_back({{"group", "SL_3(" + std::to_string(p) + ")"},
                      {"order", t.order()},
                      {"qualifying_tuples", tested},
                      {"failures", failures},
                      {"per_class_violations", per_class_violations}});
  }
  return {ok, {{"threshold", 12}, {"tables", tables}}};
}

// ---- 6, 7, 8: geodesics --------------------------------------------------

Outcome geodesics_between(Rng& rng) {
  const Field k(3);
  std::size_t violations = 0;
  for (int i = 0; i < 1000; ++i) {
    const Mat a = random_mat(rng, k, 6);
    const Mat b = random_mat(rng, k, 6);
    const GeodesicPath path = geodesic_between(a, b);
    if (!verify_geodesic(path) || !(path.points.front() == a) || !(path.points.back() == b) ||
        !(path.length() == dist(a, b)) || path.points.size() != rank(b - a) + 1) {
      ++violations;
    }
  }
  return {violations == 0, {{"n", 6}, {"p", 3}, {"pairs", 1000}, {"violations", violations}}};
}

bool unit_path_ok(const Mat& a) {
  const GeodesicPath path = geodesic_unit_to_identity(a);
  if (!verify_geodesic(path) || !(path.points.front() == a) || !path.points.back().is_identity()) return false;
  if (!(path.length() == dist(a, Mat::identity(a.field(), a.n())))) return false;
  for (const Mat& x : path.points)
    if (!is_invertible(x)) return false;
  return true;
}

Outcome unit_geodesics(Rng& rng) {
  json configs = json::array();
  bool ok = true;
  for (std::uint32_t p : {2u, 3u}) {
    std::size_t units = 0, qualifying = 0, violations = 0;
    for (const Mat& a : all_matrices(Field(p), 2)) {
      if (!is_invertible(a)) continue;
      ++units;
      if (!corner_splits(a)) continue;
      ++qualifying;
      if (!unit_path_ok(a)) ++violations;
    }
    ok = ok && violations == 0;
    configs.push_back({{"n", 2}, {"p", p}, {"mode", "exhaustive"}, {"units", units}, {"qualifying", qualifying},
                       {"violations", violations}});
  }
  const Field k5(5);
  std::size_t violations = 0;
  for (int i = 0; i < 500; ++i) {
    const Mat a = random_split_unit(rng, k5, 8);
    if (!corner_splits(a) || !unit_path_ok(a)) ++violations;
  }
  ok = ok && violations == 0;
  configs.push_back({{"n", 8}, {"p", 5}, {"mode", "random"}, {"units", 500}, {"violations", violations}});
  return {ok, {{"configs", configs}}};
}

Outcome star_shaped(Rng& rng) {
  const Field k(5);
  const Poly involution(k, {-1, 0, 1});
  const Poly s[] = {involution};
  const Mat id = Mat::identity(k, 4);
  std::size_t violations = 0, points = 0;
  for (int i = 0; i < 1000; ++i) {
    const Mat a = random_involution(rng, k, 4);
    const GeodesicPath path = star_geodesic_algebraic(a, s, 1);
    bool good = verify_geodesic(path) && path.points.back() == id;
    for (const Mat& x : path.points) {
      ++points;
      good = good && x * x == id;
    }
    if (!good) ++violations;
  }
  return {violations == 0,
          {{"n", 4}, {"p", 5}, {"involutions", 1000}, {"points_checked", points}, {"violations", violations}}};
}

// ---- 9: ball factorization -----------------------------------------------

Outcome ball_factors(Rng& rng) {
  std::map<std::pair<std::string, std::size_t>, bool> witness_checked;
  std::size_t witness_samples = 0, witness_failures = 0;
  auto check_witnesses = [&](const BallFactorization& bf, const std::string& tag) {
    for (std::size_t i = 0; i < bf.witnesses.size(); ++i) {
      auto key = std::make_pair(tag + "/" + std::to_string(bf.m), i);
      if (witness_checked.contains(key)) continue;
      witness_checked[key] = true;
      const Witness& w = bf.witnesses[i];
      const Mat id = Mat::identity(bf.g.field(), bf.g.n());
      for (int s = 0; s < 100; ++s) {
        const Mat x = w.sample(rng);
        ++witness_samples;
        if (!w.contains(x) || !is_invertible(x) || dist(x, id) > RankValue{1, bf.m}) ++witness_failures;
      }
    }
  };
  json configs = json::array();
  bool ok = true;
  for (std::uint32_t p : {2u, 3u}) {
    std::size_t units = 0, violations = 0;
    for (const Mat& g : all_matrices(Field(p), 2)) {
      if (!g.is_upper_triangular() || !is_invertible(g)) continue;
      ++units;
      const BallFactorization bf = ball_factorization(g, 2);
      if (!bf.verify()) ++violations;
      check_witnesses(bf, "2x2/" + std::to_string(p));
    }
    ok = ok && violations == 0;
    configs.push_back({{"n", 2}, {"p", p}, {"m", {2}}, {"units", units}, {"violations", violations}});
  }
  const Field k3(3);
  std::size_t violations = 0;
  for (int i = 0; i < 500; ++i) {
    const Mat g = random_upper_unit(rng, k3, 8);
    for (std::size_t m : {2u, 4u, 8u}) {
      const BallFactorization bf = ball_factorization(g, m);
      if (!bf.verify()) ++violations;
      check_witnesses(bf, "8x8/3");
    }
  }
  ok = ok && violations == 0 && witness_failures == 0;
  configs.push_back({{"n", 8}, {"p", 3}, {"m", {2, 4, 8}}, {"units", 500}, {"violations", violations}});
  return {ok, {{"configs", configs},
               {"witness_subgroups", witness_checked.size()},
               {"witness_samples", witness_samples},
               {"witness_failures", witness_failures}}};
}

// ---- 10, 11: approximation bounds ---------------------------------------

Outcome invertible_approx() {
  json configs = json::array();
  bool ok = true;
  for (auto [n, p] : {std::pair<std::size_t, std::uint32_t>{2, 2}, {2, 3}, {3, 2}}) {
    std::size_t violations = 0;
    const auto mats = all_matrices(Field(p), n);
    for (const Mat& a : mats) {
      const Mat b = invertible_approximation(a);
      if (!is_invertible(b) || rank(b - a) != n - rank(a)) ++violations;
    }
    ok = ok && violations == 0;
    configs.push_back({{"n", n}, {"p", p}, {"matrices", mats.size()}, {"violations", violations}});
  }
  return {ok, {{"configs", configs}}};
}

Outcome density(Rng& rng) {
  json configs = json::array();
  bool ok = true;
  for (std::uint32_t p : {2u, 3u}) {
    const Field k(p);
    for (std::size_t n : {4u, 8u}) {
      std::size_t sl_violations = 0, density_violations = 0;
      for (int i = 0; i < 1000; ++i) {
        const Mat a = random_unit(rng, k, n);
        const Mat b = sl_projection(a);
        if (det(b) != 1 || dist(a, b) > RankValue{1, n}) ++sl_violations;

        const TowerElem g = TowerElem::at(random_unit(rng, k, n));
        const Mat low = rng.below(2) == 0 ? random_mat(rng, k, n / 2) : g.m.submatrix(0, 0, n / 2, n / 2);
        const DensityTrace t = tower_unit_density(g, TowerElem::at(low));
        const Mat h_low = t.h.submatrix(0, 0, n / 2, n / 2);
        const bool embedded = tower_embed(TowerElem::at(h_low)).m == t.h;
        if (!t.doubled_bound || !t.triangle || !is_invertible(t.h) || !embedded) ++density_violations;
      }
      ok = ok && sl_violations == 0 && density_violations == 0;
      configs.push_back({{"n", n}, {"p", p}, {"instances", 1000}, {"sl_violations", sl_violations},
                         {"density_violations", density_violations}});
    }
  }
  return {ok, {{"configs", configs}}};
}

// ---- 12: center ----------------------------------------------------------

Outcome center() {
  json configs = json::array();
  bool ok = true;
  for (auto [n, p] : {std::pair<std::size_t, std::uint32_t>{2, 2}, {2, 3}, {3, 2}}) {
    const Field k(p);
    const CenterReport rep = center_bruteforce(k, n);
    const ClassTable t = ClassTable::enumerate(n, p, false);
    std::size_t singleton_classes = 0;
    bool singletons_scalar = true;
    for (const ClassInfo& c : t.classes()) {
      if (c.size != 1) continue;
      ++singleton_classes;
      singletons_scalar = singletons_scalar && t.element(c.representative).is_scalar();
    }
    const bool good = rep.center_is_nonzero_scalars && rep.commutant_is_scalars && singletons_scalar &&
                      singleton_classes == p - 1 && rep.group_order == t.order();
    ok = ok && good;
    configs.push_back({{"n", n}, {"p", p}, {"group_order", rep.group_order}, {"center_size", rep.center.size()},
                       {"commutant_size", rep.commutant_size}, {"center_is_nonzero_scalars", rep.center_is_nonzero_scalars},
                       {"commutant_is_scalars", rep.commutant_is_scalars}, {"singleton_classes", singleton_classes}});
  }
  return {ok, {{"configs", configs}}};
}

struct CriterionDef {
  const char* name;
  double budget;
};

constexpr CriterionDef kCriteria[] = {
    {"rank axioms", 10},
    {"rational canonical form", 30},
    {"index bound", 5},
    {"Rodgers-Saxl coverage", 60},
    {"distance-sum coverage", 60},
    {"geodesics between matrices", 10},
    {"unit geodesics to the identity", 30},
    {"star-shaped involutions", 10},
    {"ball factorization", 30},
    {"invertible approximation", 5},
    {"determinant and tower density", 10},
    {"center of GL_n", 30},
    {"determinism", 120},
};

Outcome dispatch(int id, Rng& rng) {
  switch (id) {
    case 1: return rank_axioms(rng);
    case 2: return rcf_correctness(rng);
    case 3: return index_bound();
    case 4: return rodgers_saxl(rng);
    case 5: return corollary_index(rng);
    case 6: return geodesics_between(rng);
    case 7: return unit_geodesics(rng);
    case 8: return star_shaped(rng);
    case 9: return ball_factors(rng);
    case 10: return invertible_approx();
    case 11: return density(rng);
    case 12: return center();
    default: fail(ErrorKind::PreconditionViolation, "no criterion " + std::to_string(id));
  }
}

json criterion_json(const CriterionResult& c, bool with_timings) {
  json j{{"id", c.id}, {"name", c.name}, {"passed", c.passed}, {"details", c.details}};
  if (with_timings) {
    j["seconds"] = c.seconds;
    j["budget_seconds"] = c.budget_seconds;
  }
  return j;
}

std::string first_run_bytes(const std::vector<CriterionResult>& results) {
  json arr = json::array();
  for (const auto& c : results) arr.push_back(criterion_json(c, false));
  return arr.dump();
}

}  // namespace

bool SuiteResult::passed() const noexcept {
  for (const auto& c : criteria)
    if (!c.passed) return false;
  return !criteria.empty();
}

json SuiteResult::to_json(bool with_timings) const {
  json arr = json::array();
  for (const auto& c : criteria) arr.push_back(criterion_json(c, with_timings));
  return json{{"seed", seed}, {"passed", passed()}, {"criteria", arr}};
}

CriterionResult run_criterion(int id, std::uint64_t seed) {
  if (id < 1 || id >= kCriterionCount) fail(ErrorKind::PreconditionViolation, "no criterion " + std::to_string(id));
  const CriterionDef& def = kCriteria[id - 1];
  CriterionResult out{id, def.name, false, json::object(), 0.0, def.budget};
  Rng rng(seed ^ (0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(id)));
  const auto start = std::chrono::steady_clock::now();
  try {
    Outcome o = dispatch(id, rng);
    out.passed = o.passed;
    out.details = std::move(o.details);
  } catch (const std::exception& ex) {
    out.passed = false;
    out.details = {{"exception", ex.what()}};
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

SuiteResult run_verify_suite(std::uint64_t seed, bool include_determinism) {
  SuiteResult suite{seed, {}};
  for (int id = 1; id < kCriterionCount; ++id) suite.criteria.push_back(run_criterion(id, seed));
  if (include_determinism) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<CriterionResult> rerun;
    for (int id = 1; id < kCriterionCount; ++id) rerun.push_back(run_criterion(id, seed));
    const std::string first = first_run_bytes(suite.criteria);
    const std::string second = first_run_bytes(rerun);
    CriterionResult det{kCriterionCount, kCriteria[kCriterionCount - 1].name, first == second,
                        {{"runs", 2}, {"bytes", first.size()}, {"identical", first == second}}, 0.0,
                        kCriteria[kCriterionCount - 1].budget};
    det.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    suite.criteria.push_back(std::move(det));
  }
  return suite;
}

}  // namespace contring
