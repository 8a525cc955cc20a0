#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "contring/mat.hpp"
#include "contring/poly.hpp"

namespace contring {

/// Square grid of polynomials; the carrier for X*I - A.
class PolyMat {
 public:
  PolyMat(Field field, std::size_t n);
  static PolyMat characteristic(const Mat& a);

  std::size_t n() const noexcept { return n_; }
  const Field& field() const noexcept { return field_; }
  const Poly& operator()(std::size_t i, std::size_t j) const noexcept { return cells_[i * n_ + j]; }
  Poly& operator()(std::size_t i, std::size_t j) noexcept { return cells_[i * n_ + j]; }

 private:
  Field field_;
  std::size_t n_;
  std::vector<Poly> cells_;
};

/// Monic diagonal of the Smith normal form, in divisibility order, including
/// unit entries.
std::vector<Poly> smith_diagonal(PolyMat m);

/// Companion matrix: ones on the subdiagonal, negated coefficients in the
/// last column. Throws NotMonic / DegreeZero.
Mat companion(const Poly& f);

/// det(X*I - a). Cofactor expansion up to n = 6, Hessenberg reduction above.
Poly charpoly(const Mat& a);
Poly charpoly_cofactor(const Mat& a);
Poly charpoly_hessenberg(const Mat& a);

/// Monic generator of {f : f(a) v = 0} for a column vector v.
Poly minpoly_of_vector(const Mat& a, const Mat& v);

/// Nontrivial invariant factors f_1 | ... | f_r of X*I - a (units dropped).
std::vector<Poly> invariant_factors(const Mat& a);

/// Rational canonical form: transform * a * transform^-1 equals
/// blockdiag(companion(f_1), ..., companion(f_r)).
struct Rcf {
  std::vector<Poly> factors;
  Mat transform;
  std::size_t index = 0;

  Mat form() const;
};

/// Factors come from the Smith form; the transform from a cyclic
/// decomposition. Both routes are cross-checked.
Rcf rcf(const Mat& a);

/// Cyclic decomposition alone: columns of the returned basis are the Krylov
/// chains, and the factors are the minimal polynomials of the chains, in
/// divisibility order.
struct CyclicDecomposition {
  std::vector<Poly> factors;
  Mat basis;
};
CyclicDecomposition cyclic_decomposition(const Mat& a);

/// ind(a) = n - r.
std::size_t index(const Mat& a);

struct IndexCertificate {
  std::size_t n = 0;
  std::size_t index = 0;
  std::size_t min_rank = 0;       // min over c of rank(a - cI), exhaustive
  Elem argmin = 0;
  std::size_t linear_blocks = 0;  // t = number of factors equal to X - c
  std::optional<Elem> block_scalar;
  std::size_t block_rank = 0;     // rank(a - cI) for the block scalar (n if none)
  bool holds = false;             // min_rank <= 2 * index and block_rank <= n - t
};

IndexCertificate index_bound_certificate(const Mat& a);

}  // namespace contring
