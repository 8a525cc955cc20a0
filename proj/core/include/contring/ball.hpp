#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "contring/idempotent.hpp"
#include "contring/mat.hpp"
#include "contring/random.hpp"
#include "contring/rank_metric.hpp"

namespace contring {

enum class WitnessKind { Gamma, Parabolic };

/// A subgroup inside the ball of radius rk(f) around I: either Gamma(f) or
/// Gamma(f) + eRf.
struct Witness {
  WitnessKind kind;
  Idem f;
  std::optional<Idem> e;

  bool contains(const Mat& g) const;
  RankValue radius() const { return f.rk(); }
  Mat sample(Rng& rng) const;
};

struct BallFactorization {
  Mat g;
  std::size_t m;
  std::vector<Mat> factors;       // g_1, ..., g_m
  std::vector<Witness> witnesses;
  NestChain nest;

  /// g_m * ... * g_1.
  Mat product() const;
  /// Re-multiplication, ball bounds, and witness membership.
  bool verify() const;
};

/// g_1 = pi_{e_1}(g), g_i = pi_{e_i}(g g_1^-1 ... g_{i-1}^-1) along the
/// standard nest with ranks i*n/m. Throws NotDivisible, NotInGL_RE.
BallFactorization ball_factorization(const Mat& g, std::size_t m);

/// b = v*w from a = v*diag(I_r,0)*w: a unit with rank(b - a) = n - rank(a).
Mat invertible_approximation(const Mat& a);

/// a with its last row divided by det(a). Throws NotInvertible.
Mat sl_projection(const Mat& a);

struct TowerElem {
  std::size_t level;
  Mat m;

  /// Throws DimensionMismatch unless m is square of size 2^level.
  static TowerElem at(Mat m);
};

/// Maximum tower level; dimension 2^10.
inline constexpr std::size_t kTowerLevelCap = 10;

/// a -> blockdiag(a, a). Throws BudgetExceeded past the level cap.
TowerElem tower_embed(const TowerElem& x, std::size_t level_cap = kTowerLevelCap);
/// Repeated embedding up to the given level.
TowerElem tower_lift(const TowerElem& x, std::size_t level, std::size_t level_cap = kTowerLevelCap);

struct DensityTrace {
  Mat h;
  RankValue g_to_h;   // d(g, h)
  RankValue g_to_a;   // d(g, iota(a))
  RankValue a_to_h;   // d(iota(a), h)
  bool doubled_bound = false;  // d(g,h) <= 2 d(g, iota(a))
  bool triangle = false;       // d(g,h) <= d(g, iota(a)) + d(iota(a), h)
};

/// h = embedded invertible_approximation(a). Throws NotInvertible, and
/// PreconditionViolation unless a sits strictly below g's level.
DensityTrace tower_unit_density(const TowerElem& g, const TowerElem& a);

}  // namespace contring
