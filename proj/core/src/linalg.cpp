#include "contring/linalg.hpp"

#include <utility>

#include "contring/error.hpp"

namespace contring {

namespace {

void swap_rows(Mat& m, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(i, c), m(j, c));
}

void scale_row(Mat& m, std::size_t i, Elem s) {
  const Field& k = m.field();
  for (std::size_t c = 0; c < m.cols(); ++c) m(i, c) = k.mul(m(i, c), s);
}

// row_i -= s * row_j
void axpy_row(Mat& m, std::size_t i, std::size_t j, Elem s) {
  if (s == 0) return;
  const Field& k = m.field();
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (m(j, c) != 0) m(i, c) = k.sub(m(i, c), k.mul(s, m(j, c)));
  }
}

}  // namespace

RowEchelon rref(const Mat& a) {
  const Field& k = a.field();
  RowEchelon out{0, {}, Mat::identity(k, a.rows()), a};
  Mat& m = out.reduced;
  Mat& t = out.transform;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    swap_rows(m, row, pivot);
    swap_rows(t, row, pivot);
    const Elem s = k.inv(m(row, col));
    scale_row(m, row, s);
    scale_row(t, row, s);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Elem f = m(i, col);
      axpy_row(m, i, row, f);
      axpy_row(t, i, row, f);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rank = row;
  return out;
}

std::size_t rank(const Mat& a) {
  // Elimination without tracking the transform.
  const Field& k = a.field();
  Mat m = a;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    swap_rows(m, row, pivot);
    const Elem s = k.inv(m(row, col));
    for (std::size_t i = row + 1; i < m.rows(); ++i) {
      if (m(i, col) == 0) continue;
      axpy_row(m, i, row, k.mul(m(i, col), s));
    }
    ++row;
  }
  return row;
}

std::optional<Mat> try_inverse(const Mat& a) {
  require_square(a);
  RowEchelon e = rref(a);
  if (e.rank < a.n()) return std::nullopt;
  return std::move(e.transform);
}

Mat inverse(const Mat& a) {
  auto inv = try_inverse(a);
  if (!inv) fail(ErrorKind::NotInvertible, "matrix has rank below its dimension");
  return std::move(*inv);
}

bool is_invertible(const Mat& a) { return a.is_square() && rank(a) == a.n(); }

Elem det(const Mat& a) {
  require_square(a);
  const Field& k = a.field();
  Mat m = a;
  Elem d = 1;
  for (std::size_t col = 0; col < m.n(); ++col) {
    std::size_t pivot = col;
    while (pivot < m.n() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.n()) return 0;
    if (pivot != col) {
      swap_rows(m, col, pivot);
      d = k.neg(d);
    }
    d = k.mul(d, m(col, col));
    const Elem s = k.inv(m(col, col));
    for (std::size_t i = col + 1; i < m.n(); ++i) {
      if (m(i, col) != 0) axpy_row(m, i, col, k.mul(m(i, col), s));
    }
  }
  return d;
}

Mat DiagFactorization::inner_inverse() const { return inverse(w) * middle() * inverse(v); }

DiagFactorization diag_factorize(const Mat& a) {
  require_square(a);
  const std::size_t n = a.n();
  RowEchelon e = rref(a);
  // a = T^-1 * R, and R = diag(I_r, 0) * W where W stacks the nonzero rows of
  // R on top of unit rows for the non-pivot columns.
  Mat w(a.field(), n, n);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t i = 0; i < e.rank; ++i) {
    is_pivot[e.pivots[i]] = true;
    for (std::size_t j = 0; j < n; ++j) w(i, j) = e.reduced(i, j);
  }
  std::size_t next = e.rank;
  for (std::size_t j = 0; j < n; ++j) {
    if (!is_pivot[j]) w(next++, j) = 1;
  }
  return DiagFactorization{inverse(e.transform), e.rank, std::move(w)};
}

Mat nullspace(const Mat& a) {
  RowEchelon e = rref(a);
  const std::size_t nc = a.cols();
  std::vector<bool> is_pivot(nc, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  Mat basis(a.field(), nc, nc - e.rank);
  std::size_t k = 0;
  for (std::size_t free = 0; free < nc; ++free) {
    if (is_pivot[free]) continue;
    basis(free, k) = 1;
    for (std::size_t i = 0; i < e.rank; ++i) basis(e.pivots[i], k) = a.field().neg(e.reduced(i, free));
    ++k;
  }
  return basis;
}

Mat column_basis(const Mat& a) {
  RowEchelon e = rref(a);
  Mat basis(a.field(), a.rows(), e.rank);
  for (std::size_t k = 0; k < e.rank; ++k)
    for (std::size_t i = 0; i < a.rows(); ++i) basis(i, k) = a(i, e.pivots[k]);
  return basis;
}

std::optional<Mat> solve(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) fail(ErrorKind::DimensionMismatch, "solve: row counts differ");
  RowEchelon e = rref(a);
  const Mat rhs = e.transform * b;
  for (std::size_t i = e.rank; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (rhs(i, j) != 0) return std::nullopt;
  Mat x(a.field(), a.cols(), b.cols());
  for (std::size_t i = 0; i < e.rank; ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[i], j) = rhs(i, j);
  return x;
}

Mat complete_basis(const Mat& basis) {
  const std::size_t n = basis.rows();
  Mat current = basis;
  std::size_t r = rank(basis);
  if (r != basis.cols()) fail(ErrorKind::PreconditionViolation, "complete_basis: columns are dependent");
  for (std::size_t j = 0; j < n && current.cols() < n; ++j) {
    Mat e(basis.field(), n, 1);
    e(j, 0) = 1;
    Mat candidate = hcat(current, e);
    if (rank(candidate) == current.cols() + 1) current = std::move(candidate);
  }
  return current;
}

Mat poly_eval(const Poly& f, const Mat& a) {
  require_square(a);
  if (!(f.field() == a.field())) fail(ErrorKind::FieldMismatch, "poly_eval over different fields");
  Mat acc = Mat::zero(a.field(), a.n());
  const auto& c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = acc * a;
    for (std::size_t d = 0; d < a.n(); ++d) acc(d, d) = a.field().add(acc(d, d), c[i]);
  }
  return acc;
}

}  // namespace contring
