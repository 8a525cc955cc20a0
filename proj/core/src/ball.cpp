#include "contring/ball.hpp"

#include <bit>

#include "contring/error.hpp"
#include "contring/linalg.hpp"

namespace contring {

bool Witness::contains(const Mat& g) const {
  return kind == WitnessKind::Gamma ? gamma_membership(g, f) : parabolic_membership(g, f, *e);
}

Mat Witness::sample(Rng& rng) const {
  if (kind == WitnessKind::Gamma) return gamma_sample(f, rng);
  auto [a, x] = parabolic_sample(f, *e, rng);
  return a + x;
}

Mat BallFactorization::product() const {
  Mat acc = Mat::identity(g.field(), g.n());
  for (const Mat& factor : factors) acc = factor * acc;
  return acc;
}

bool BallFactorization::verify() const {
  if (factors.size() != m || witnesses.size() != m) return false;
  if (!(product() == g)) return false;
  const Mat id = Mat::identity(g.field(), g.n());
  const RankValue radius{1, m};
  for (std::size_t i = 0; i < m; ++i) {
    if (dist(factors[i], id) > radius) return false;
    if (witnesses[i].radius() > radius) return false;
    if (!witnesses[i].contains(factors[i])) return false;
  }
  return true;
}

BallFactorization ball_factorization(const Mat& g, std::size_t m) {
  require_square(g);
  const std::size_t n = g.n();
  if (m == 0 || n % m != 0) fail(ErrorKind::NotDivisible, "m must divide n");
  std::vector<std::size_t> ranks;
  for (std::size_t i = 0; i <= m; ++i) ranks.push_back(i * (n / m));
  NestChain nest = standard_nest(g.field(), n, ranks);
  if (!is_invertible(g) || !in_R_E(g, nest)) fail(ErrorKind::NotInGL_RE, "g is not a unit of the nest algebra");

  BallFactorization out{g, m, {}, {}, nest};
  Mat rest = g;  // g g_1^-1 ... g_{i-1}^-1
  for (std::size_t i = 1; i <= m; ++i) {
    Mat factor = pi_e(rest, nest[i]);
    rest = rest * inverse(factor);
    out.factors.push_back(std::move(factor));
    if (i == 1) {
      out.witnesses.push_back(Witness{WitnessKind::Gamma, nest[1], std::nullopt});
    } else {
      const Idem f = Idem::from(nest[i].mat() - nest[i - 1].mat());
      out.witnesses.push_back(Witness{WitnessKind::Parabolic, f, nest[i - 1]});
    }
  }
  return out;
}

Mat invertible_approximation(const Mat& a) {
  const DiagFactorization df = diag_factorize(a);
  return df.v * df.w;
}

Mat sl_projection(const Mat& a) {
  require_square(a);
  const Elem d = det(a);
  if (d == 0) fail(ErrorKind::NotInvertible, "sl_projection needs a unit");
  Mat b = a;
  if (a.n() == 0) return b;
  const Elem scale = a.field().inv(d);
  const std::size_t last = a.n() - 1;
  for (std::size_t j = 0; j < a.n(); ++j) b(last, j) = a.field().mul(b(last, j), scale);
  return b;
}

TowerElem TowerElem::at(Mat m) {
  if (!m.is_square() || !std::has_single_bit(m.n())) {
    fail(ErrorKind::DimensionMismatch, "tower elements have dimension 2^k");
  }
  const std::size_t level = static_cast<std::size_t>(std::countr_zero(m.n()));
  return TowerElem{level, std::move(m)};
}

TowerElem tower_embed(const TowerElem& x, std::size_t level_cap) {
  if (x.level + 1 > level_cap) fail(ErrorKind::BudgetExceeded, "tower level cap reached");
  const Mat blocks[] = {x.m, x.m};
  return TowerElem{x.level + 1, block_diag(blocks)};
}

TowerElem tower_lift(const TowerElem& x, std::size_t level, std::size_t level_cap) {
  if (level < x.level) fail(ErrorKind::PreconditionViolation, "cannot lift to a lower level");
  TowerElem cur = x;
  while (cur.level < level) cur = tower_embed(cur, level_cap);
  return cur;
}

DensityTrace tower_unit_density(const TowerElem& g, const TowerElem& a) {
  if (!is_invertible(g.m)) fail(ErrorKind::NotInvertible, "density needs a unit");
  if (a.level >= g.level) fail(ErrorKind::PreconditionViolation, "approximant must sit below the unit's level");
  const Mat lifted = tower_lift(a, g.level).m;
  const TowerElem base{a.level, invertible_approximation(a.m)};
  DensityTrace t{tower_lift(base, g.level).m, {}, {}, {}};
  t.g_to_h = dist(g.m, t.h);
  t.g_to_a = dist(g.m, lifted);
  t.a_to_h = dist(lifted, t.h);
  t.doubled_bound = t.g_to_h <= t.g_to_a + t.g_to_a;
  t.triangle = t.g_to_h <= t.g_to_a + t.a_to_h;
  return t;
}

}  // namespace contring
