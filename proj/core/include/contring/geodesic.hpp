#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "contring/idempotent.hpp"
#include "contring/mat.hpp"
#include "contring/poly.hpp"
#include "contring/rank_metric.hpp"

namespace contring {

/// A finite chain of matrices with times such that every pair of points is
/// exactly as far apart as its times.
struct GeodesicPath {
  std::vector<Mat> points;
  std::vector<RankValue> times;

  RankValue length() const { return times.empty() ? RankValue{} : times.back(); }
};

/// dist(points_i, points_j) = |times_i - times_j| for all pairs, times
/// strictly increasing from 0.
bool verify_geodesic(const GeodesicPath& path);

/// Points e_i b + (I - e_i) a along the nest, timed by dist(a, point).
GeodesicPath path_along_nest(const Mat& a, const Mat& b, const NestChain& nest);

/// Nest chosen from the column space of b - a.
GeodesicPath geodesic_between(const Mat& a, const Mat& b);

/// Y with Y^-1 a Y upper triangular, built one eigenvector at a time with the
/// smallest eigenvalue first. Nullopt when the characteristic polynomial does
/// not split.
std::optional<Mat> triangularizing_basis(const Mat& a);

/// Unit-preserving geodesic from a to I. Throws NotInvertible and
/// NotTriangularizable.
GeodesicPath geodesic_unit_to_identity(const Mat& a);

/// True when the action of a on the column space of I - a has a split
/// characteristic polynomial.
bool corner_splits(const Mat& a, Elem c = 1);

/// Geodesic from a to cI staying inside {x : f(x) = 0 for f in s}.
/// Throws NotAlgebraicOverS, CenterNotRoot, NotTriangularizable.
GeodesicPath star_geodesic_algebraic(const Mat& a, std::span<const Poly> s, Elem c);

/// Block-diagonal concatenation: block 1 moves first while the rest hold
/// their starting points, then block 2, and so on.
GeodesicPath block_concat_geodesic(std::span<const GeodesicPath> paths);

enum class MidpointMethod { Direct, Perturbation, CanonicalForm };
const char* to_string(MidpointMethod m) noexcept;

/// g conjugated to its rational canonical form, with every companion block
/// whose polynomial does not split replaced by the companion block of
/// (X - 1)^d. Differs from g in rank at most the number of replaced blocks.
Mat split_approximant(const Mat& g);

struct MidpointResult {
  Mat m;
  Mat h;                         // triangularizable element used in place of g0 g1^-1
  RankValue err;                 // max(|d(g0,m) - d/2|, |d(m,g1) - d/2|), exact
  RankValue delta;               // d(g0 g1^-1, h)
  RankValue bound;               // 1/(2n) + 3 delta / 2
  std::size_t perturbations = 0; // transvection multiples tried
  MidpointMethod method = MidpointMethod::Direct;
};

/// Geodesic point of h -> I nearest half its length, translated by g1.
/// When g0 g1^-1 does not triangularize, tries up to `budget` seeded
/// rank-one unipotent multiples of it, then (if allowed) split_approximant.
/// Throws NotInvertible, NoTriangularizableApproximant.
MidpointResult approximate_midpoint(const Mat& g0, const Mat& g1, std::uint64_t seed,
                                    std::size_t budget = 64, bool canonical_fallback = true);

}  // namespace contring
