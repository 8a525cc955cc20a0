#pragma once

#include <cstdint>
#include <random>

#include "contring/mat.hpp"

namespace contring {

/// Seeded source for every randomized routine. Draws reduce by modulo so the
/// stream is identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
  Elem elem(const Field& k) { return static_cast<Elem>(below(k.p())); }
  Elem nonzero(const Field& k) { return static_cast<Elem>(1 + below(k.p() - 1)); }

 private:
  std::mt19937_64 engine_;
};

Mat random_mat(Rng& rng, const Field& k, std::size_t rows, std::size_t cols);
Mat random_mat(Rng& rng, const Field& k, std::size_t n);
/// Uniform over GL_n by rejection.
Mat random_unit(Rng& rng, const Field& k, std::size_t n);
/// Upper triangular with nonzero diagonal.
Mat random_upper_unit(Rng& rng, const Field& k, std::size_t n);
/// Conjugate of diag(1^r, 0^(n-r)) by a random unit.
Mat random_idempotent(Rng& rng, const Field& k, std::size_t n, std::size_t r);
/// Conjugate of a random upper triangular unit: a unit whose characteristic
/// polynomial splits.
Mat random_split_unit(Rng& rng, const Field& k, std::size_t n);
/// Conjugate of a random diagonal +-1 matrix.
Mat random_involution(Rng& rng, const Field& k, std::size_t n);

}  // namespace contring
