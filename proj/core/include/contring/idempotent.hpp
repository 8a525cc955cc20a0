#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "contring/mat.hpp"
#include "contring/random.hpp"
#include "contring/rank_metric.hpp"

namespace contring {

/// An idempotent matrix with its rank cached.
class Idem {
 public:
  /// Throws PreconditionViolation unless m is square with m*m = m.
  static Idem from(Mat m);

  const Mat& mat() const noexcept { return m_; }
  std::size_t n() const noexcept { return m_.n(); }
  std::size_t rank() const noexcept { return rank_; }
  RankValue rk() const noexcept { return {rank_, m_.n()}; }
  /// I - e.
  Idem complement() const;

  friend bool operator==(const Idem& a, const Idem& b) noexcept { return a.m_ == b.m_; }

 private:
  Idem(Mat m, std::size_t r) : m_(std::move(m)), rank_(r) {}
  Mat m_;
  std::size_t rank_;
};

/// e <= f  iff  ef = fe = e.
bool idem_leq(const Idem& e, const Idem& f);
/// ef = fe = 0. Also confirms that this agrees with e <= I - f.
bool idem_orthogonal(const Idem& e, const Idem& f);

/// Strictly increasing chain e_0 < e_1 < ... < e_k.
class NestChain {
 public:
  NestChain() = default;
  /// Throws PreconditionViolation if the members are not a strict chain.
  static NestChain from(std::vector<Idem> chain);
  /// True when the members are idempotent, pairwise comparable, and strictly
  /// increasing in rank.
  static bool is_chain(std::span<const Idem> chain);

  const std::vector<Idem>& members() const noexcept { return chain_; }
  std::size_t size() const noexcept { return chain_.size(); }
  bool empty() const noexcept { return chain_.empty(); }
  const Idem& operator[](std::size_t i) const { return chain_[i]; }

 private:
  explicit NestChain(std::vector<Idem> chain) : chain_(std::move(chain)) {}
  std::vector<Idem> chain_;
};

/// e = v * diag(I_r, 0) * v^-1 from diag_factorize(a); eR = aR.
Idem column_space_idempotent(const Mat& a);

/// Diagonal idempotents diag(1^k, 0^(n-k)) for k in ranks. Throws BadRanks.
NestChain standard_nest(const Field& field, std::size_t n, std::span<const std::size_t> ranks);

/// With V invertible: e_i = V * diag(I_i, 0) * V^-1 for i = 0..r.
NestChain nest_from_basis(const Mat& v, std::size_t r);

/// 0 = e_0 < ... < e_r = e with rank(e_i) = i. Throws ZeroIdempotent.
NestChain max_nest_in_corner(const Idem& e);

/// An adapted basis of e: the first r columns span eR, the rest span (1-e)R.
/// coords = basis^-1, so coords * e = diag(I_r, 0) * coords.
struct CornerFrame {
  std::size_t r;
  Mat basis;
  Mat coords;

  /// r x r matrix of x acting on eR (x must leave eR invariant for this to
  /// be the restriction).
  Mat restrict(const Mat& x) const;
  /// Element of eRe acting as y on eR.
  Mat lift(const Mat& y) const;
};
CornerFrame corner_frame(const Idem& e);

/// eae = ae for every member.
bool in_R_E(const Mat& a, const NestChain& nest);

/// eae + I - e.
Mat pi_e(const Mat& a, const Idem& e);

/// g is a unit and g - (I - e) lies in eRe.
bool gamma_membership(const Mat& g, const Idem& e);
/// All of GL(eRe) + I - e. Throws BudgetExceeded when p^(r*r) > budget.
std::vector<Mat> gamma_enumerate(const Idem& e, std::uint64_t budget = 1u << 20);
Mat gamma_sample(const Idem& e, Rng& rng);

/// g lies in Gamma(f) + eRf. Throws NotOrthogonal.
bool parabolic_membership(const Mat& g, const Idem& f, const Idem& e);
/// Pairs (a, x) with a in Gamma(f), x in eRf. Throws NotOrthogonal, BudgetExceeded.
std::vector<std::pair<Mat, Mat>> parabolic_enumerate(const Idem& f, const Idem& e, std::uint64_t budget = 1u << 20);
std::pair<Mat, Mat> parabolic_sample(const Idem& f, const Idem& e, Rng& rng);

struct ParabolicReport {
  std::size_t elements = 0;
  std::size_t pairs_checked = 0;
  bool parts_valid = true;      // a in Gamma(f), x in eRf
  bool units = true;            // every a + x invertible
  bool homomorphism = true;     // (a,x)(b,y) = (ab, xb + y) maps to the product
  bool within_ball = true;      // d(a + x, I) <= rk(f)
  bool all() const noexcept { return parts_valid && units && homomorphism && within_ball; }
};
/// Checks the semidirect-product description of Gamma(f) + eRf on the given
/// elements. All ordered pairs are tested up to 256 elements; beyond that,
/// consecutive pairs. Throws NotOrthogonal.
ParabolicReport parabolic_subgroup_check(const Idem& f, const Idem& e,
                                         std::span<const std::pair<Mat, Mat>> elements);

/// Closure under products and inverses of a finite set of units.
bool is_subgroup(std::span<const Mat> elements);

/// s_ij with sum s_ii = I and s_ij s_kl = [j == k] s_il.
struct MatrixUnits {
  std::size_t m = 0;
  std::vector<Mat> units;  // row-major m x m

  const Mat& operator()(std::size_t i, std::size_t j) const { return units[i * m + j]; }
  bool relations_hold() const;
};

/// s_ii = parts_i; s_ij = B_i C_j with B_i the pivot-column basis of parts_i
/// and C_j the matching block of rows of [B_1 ... B_m]^-1.
/// Throws NotPartition, UnequalRanks.
MatrixUnits matrix_units_from_idempotents(std::span<const Idem> parts);

/// A unit g with t_ij = g s_ij g^-1 for all i, j. Throws IncompatibleShapes.
Mat conjugation_intertwiner(const MatrixUnits& s, const MatrixUnits& t);

struct CenterReport {
  std::size_t group_order = 0;
  std::vector<Mat> center;
  bool center_is_nonzero_scalars = false;
  std::size_t commutant_size = 0;
  bool commutant_is_scalars = false;
};
/// Enumerates GL_n(GF(p)) and M_n(GF(p)). Throws BudgetExceeded when
/// p^(n*n) > budget.
CenterReport center_bruteforce(const Field& field, std::size_t n, std::uint64_t budget = 100000);

}  // namespace contring
