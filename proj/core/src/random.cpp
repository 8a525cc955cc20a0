#include "contring/random.hpp"

#include "contring/linalg.hpp"

namespace contring {

Mat random_mat(Rng& rng, const Field& k, std::size_t rows, std::size_t cols) {
  Mat a(k, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = rng.elem(k);
  return a;
}

Mat random_mat(Rng& rng, const Field& k, std::size_t n) { return random_mat(rng, k, n, n); }

Mat random_unit(Rng& rng, const Field& k, std::size_t n) {
  for (;;) {
    Mat a = random_mat(rng, k, n);
    if (is_invertible(a)) return a;
  }
}

Mat random_upper_unit(Rng& rng, const Field& k, std::size_t n) {
  Mat a(k, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = rng.nonzero(k);
    for (std::size_t j = i + 1; j < n; ++j) a(i, j) = rng.elem(k);
  }
  return a;
}

Mat random_idempotent(Rng& rng, const Field& k, std::size_t n, std::size_t r) {
  const Mat p = random_unit(rng, k, n);
  return p * Mat::unit_block(k, n, r) * inverse(p);
}

Mat random_split_unit(Rng& rng, const Field& k, std::size_t n) {
  const Mat p = random_unit(rng, k, n);
  return p * random_upper_unit(rng, k, n) * inverse(p);
}

Mat random_involution(Rng& rng, const Field& k, std::size_t n) {
  Mat d(k, n, n);
  for (std::size_t i = 0; i < n; ++i) d(i, i) = rng.below(2) == 0 ? 1 : k.neg(1);
  const Mat p = random_unit(rng, k, n);
  return p * d * inverse(p);
}

}  // namespace contring
