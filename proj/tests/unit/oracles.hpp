// Reference computations for the unit tests. Each one takes a different route
// from the library code it checks: plain integer vectors instead of Mat,
// column operations instead of row operations, permutation expansion instead
// of elimination, exhaustive search instead of algebra.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "contring/linalg.hpp"
#include "contring/mat.hpp"
#include "contring/poly.hpp"

namespace oracle {

using Grid = std::vector<std::vector<std::int64_t>>;

inline Grid grid_of(const contring::Mat& a) {
  Grid g(a.rows(), std::vector<std::int64_t>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) g[i][j] = a(i, j);
  return g;
}

inline std::int64_t mod(std::int64_t x, std::int64_t p) { return ((x % p) + p) % p; }

inline std::int64_t inv_by_search(std::int64_t x, std::int64_t p) {
  for (std::int64_t y = 1; y < p; ++y)
    if (mod(x * y, p) == 1) return y;
  return 0;
}

/// Rank by eliminating columns of the matrix (row operations on the
/// transpose), pivoting on the last nonzero entry.
inline std::size_t rank_by_columns(const contring::Mat& a) {
  const std::int64_t p = a.field().p();
  Grid g = grid_of(a);
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<bool> used_row(rows, false);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = rows; i-- > 0;)
      if (!used_row[i] && g[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    used_row[piv] = true;
    ++r;
    const std::int64_t inv = inv_by_search(g[piv][c], p);
    for (std::size_t c2 = c + 1; c2 < cols; ++c2) {
      const std::int64_t factor = mod(g[piv][c2] * inv, p);
      if (factor == 0) continue;
      for (std::size_t i = 0; i < rows; ++i) g[i][c2] = mod(g[i][c2] - factor * g[i][c], p);
    }
  }
  return r;
}

/// Determinant by the permutation (Leibniz) expansion.
inline std::int64_t det_leibniz(const contring::Mat& a) {
  const std::int64_t p = a.field().p();
  const std::size_t n = a.n();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::int64_t total = 0;
  do {
    std::int64_t term = 1;
    for (std::size_t i = 0; i < n; ++i) term = mod(term * a(i, perm[i]), p);
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    total = mod(total + (inversions % 2 ? -term : term), p);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// det(X I - a) by the permutation expansion over polynomial entries.
inline contring::Poly charpoly_leibniz(const contring::Mat& a) {
  using contring::Poly;
  const contring::Field& k = a.field();
  const std::size_t n = a.n();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Poly total(k);
  do {
    Poly term = Poly::constant(k, 1);
    for (std::size_t i = 0; i < n; ++i) {
      const contring::Elem entry = k.neg(a(i, perm[i]));
      term = term * (i == perm[i] ? Poly(k, std::vector<contring::Elem>{entry, 1}) : Poly::constant(k, entry));
    }
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    total = inversions % 2 ? total - term : total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Lowest-degree monic annihilator, by trying every candidate in order.
inline contring::Poly minpoly_by_search(const contring::Mat& a) {
  const contring::Field& k = a.field();
  for (std::size_t d = 1; d <= a.n(); ++d) {
    const std::uint64_t count = *contring::matrix_space_size(k, 1, d);
    for (std::uint64_t code = 0; code < count; ++code) {
      const contring::Mat low = contring::decode_matrix(k, 1, d, code);
      std::vector<contring::Elem> c(low.data().begin(), low.data().end());
      c.push_back(1);
      contring::Poly f(k, std::move(c));
      // Evaluate by summing powers rather than Horner.
      contring::Mat acc = contring::Mat::zero(k, a.n());
      contring::Mat power = contring::Mat::identity(k, a.n());
      for (std::size_t i = 0; i <= d; ++i) {
        acc += power.scaled(f.coeff(i));
        power = power * a;
      }
      if (acc.is_zero()) return f;
    }
  }
  return contring::Poly(k);
}

/// Every matrix of M_n(GF(p)).
inline std::vector<contring::Mat> all_matrices(const contring::Field& k, std::size_t n) {
  std::vector<contring::Mat> out;
  const std::uint64_t space = *contring::matrix_space_size(k, n, n);
  for (std::uint64_t code = 0; code < space; ++code) out.push_back(contring::decode_matrix(k, n, n, code));
  return out;
}

}  // namespace oracle
