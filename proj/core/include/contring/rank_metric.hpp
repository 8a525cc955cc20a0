#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <utility>
#include <vector>

#include "contring/mat.hpp"

namespace contring {

/// Exact rational in [0, 1], kept unreduced over the matrix dimension so
/// that rk(a) = rank(a)/n reads off directly. Comparison is by value.
struct RankValue {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  constexpr RankValue() = default;
  constexpr RankValue(std::uint64_t num_, std::uint64_t den_) : num(num_), den(den_) {}

  /// Same value over a multiple of the denominator.
  RankValue over(std::uint64_t new_den) const;
  double to_double() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }

  friend bool operator==(const RankValue& a, const RankValue& b) noexcept {
    return a.num * b.den == b.num * a.den;
  }
  friend std::strong_ordering operator<=>(const RankValue& a, const RankValue& b) noexcept {
    return a.num * b.den <=> b.num * a.den;
  }
  friend RankValue operator+(const RankValue& a, const RankValue& b);
  /// Absolute difference |a - b|.
  friend RankValue abs_diff(const RankValue& a, const RankValue& b);
};

std::ostream& operator<<(std::ostream& os, const RankValue& r);

/// rk(a) = rank(a) / n.
RankValue rk(const Mat& a);

/// d(a, b) = rk(a - b). Throws DimensionMismatch or FieldMismatch.
RankValue dist(const Mat& a, const Mat& b);

struct CenterDistance {
  RankValue dist;
  Elem argmin = 0;
};

/// min over c in GF(p) of rk(a - cI), scanning every c; ties go to the
/// smallest c.
CenterDistance center_scan_exhaustive(const Mat& a);
/// Same minimum restricted to the roots of the characteristic polynomial and c = 0.
CenterDistance center_scan_eigen(const Mat& a);
/// Both scans, cross-checked; throws std::logic_error if they disagree.
CenterDistance dist_to_center(const Mat& a);

struct RankAxiomReport {
  bool unit_is_one = false;          // rk(1) = 1
  bool submultiplicative = false;    // rk(ab) <= min(rk a, rk b)
  bool orthogonal_additive = false;  // rk(e + f) = rk(e) + rk(f)
  bool subadditive = false;          // rk(a + b) <= rk(a) + rk(b)
  bool monotone_difference = false;  // e <= e + f  =>  rk((e+f) - e) = rk(e+f) - rk(e)

  bool all() const noexcept {
    return unit_is_one && submultiplicative && orthogonal_additive && subadditive && monotone_difference;
  }
};

/// e and f must be orthogonal idempotents, else PreconditionViolation.
RankAxiomReport rank_axiom_suite(const Mat& a, const Mat& b, const Mat& e, const Mat& f);

struct UnitSumDecomposition {
  std::vector<std::pair<Mat, Mat>> terms;  // (a_i, b_i) with sum a_i x b_i = I
  std::size_t minimal_terms = 0;           // ceil(n / rank x)
};

/// Writes I = sum a_i x b_i with at most n_terms summands. Throws
/// RankTooSmall when rk(x) < 1/n_terms.
UnitSumDecomposition unit_sum_decomposition(const Mat& x, std::size_t n_terms);

}  // namespace contring
