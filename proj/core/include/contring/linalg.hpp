#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "contring/mat.hpp"
#include "contring/poly.hpp"

namespace contring {

/// Result of Gauss-Jordan elimination: transform * a == reduced.
struct RowEchelon {
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  Mat transform;
  Mat reduced;
};

/// Reduced row-echelon form. The pivot in each column is the first nonzero
/// entry at or below the current row.
RowEchelon rref(const Mat& a);

std::size_t rank(const Mat& a);

/// Throws NotInvertible when rank < n.
Mat inverse(const Mat& a);
std::optional<Mat> try_inverse(const Mat& a);
bool is_invertible(const Mat& a);

Elem det(const Mat& a);

/// a = v * diag(I_r, 0) * w with v, w invertible.
struct DiagFactorization {
  Mat v;
  std::size_t r = 0;
  Mat w;

  Mat middle() const { return Mat::unit_block(v.field(), v.n(), r); }
  /// x with a * x * a == a.
  Mat inner_inverse() const;
};

DiagFactorization diag_factorize(const Mat& a);

/// Basis of {x : a x = 0} as the columns of an n x k matrix (k may be 0).
Mat nullspace(const Mat& a);

/// The pivot columns of a, in index order.
Mat column_basis(const Mat& a);

/// Some x with a x = b, or nullopt if the system is inconsistent. Free
/// variables are set to zero.
std::optional<Mat> solve(const Mat& a, const Mat& b);

/// Extends the independent columns of `basis` to an invertible matrix by
/// appending standard basis vectors in index order.
Mat complete_basis(const Mat& basis);

/// f(a) by Horner's rule.
Mat poly_eval(const Poly& f, const Mat& a);

}  // namespace contring
