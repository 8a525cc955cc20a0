#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <optional>
#include <span>
#include <vector>

#include "contring/field.hpp"

namespace contring {

/// Dense matrix over GF(p), row-major. Ring elements are square; rectangular
/// shapes appear only as bases and coordinate maps inside algorithms.
class Mat {
 public:
  Mat(Field field, std::size_t rows, std::size_t cols);
  Mat(Field field, std::size_t n) : Mat(field, n, n) {}
  Mat(Field field, std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static Mat identity(Field field, std::size_t n);
  static Mat zero(Field field, std::size_t n) { return Mat(field, n, n); }
  static Mat scalar(Field field, std::size_t n, Elem c);
  static Mat diagonal(Field field, std::span<const Elem> diag);
  /// diag(1^r, 0^(n-r))
  static Mat unit_block(Field field, std::size_t n, std::size_t r);
  static Mat from_rows(Field field, const std::vector<std::vector<std::int64_t>>& rows);
  /// The matrix unit E_ij.
  static Mat elementary(Field field, std::size_t n, std::size_t i, std::size_t j);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  /// Dimension of a square matrix.
  std::size_t n() const noexcept { return rows_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Elem operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }
  Elem& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, std::int64_t v) noexcept { data_[i * cols_ + j] = field_.reduce(v); }

  std::span<const Elem> row(std::size_t i) const noexcept { return {data_.data() + i * cols_, cols_}; }
  std::span<const Elem> data() const noexcept { return data_; }

  Mat transpose() const;
  Mat scaled(Elem c) const;
  Mat column(std::size_t j) const;
  /// Columns [first, first + count).
  Mat columns(std::size_t first, std::size_t count) const;
  /// Rows [first, first + count).
  Mat row_block(std::size_t first, std::size_t count) const;
  Mat submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  bool is_zero() const noexcept;
  bool is_identity() const noexcept;
  bool is_scalar() const noexcept;
  bool is_upper_triangular() const noexcept;
  std::vector<std::vector<Elem>> to_rows() const;

  Mat& operator+=(const Mat& other);
  Mat& operator-=(const Mat& other);

  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator-(const Mat& a);
  friend Mat operator*(const Mat& a, const Mat& b);
  friend bool operator==(const Mat& a, const Mat& b) noexcept {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

std::ostream& operator<<(std::ostream& os, const Mat& a);

/// Same shape and field, else DimensionMismatch / FieldMismatch.
void require_compatible(const Mat& a, const Mat& b);
/// Square, else DimensionMismatch.
void require_square(const Mat& a);

Mat hcat(const Mat& a, const Mat& b);
Mat vcat(const Mat& a, const Mat& b);
Mat block_diag(std::span<const Mat> blocks);

/// Base-p code of the row-major entries; entry (0,0) is the least significant
/// digit. Only meaningful while p^(rows*cols) fits in 64 bits.
std::uint64_t encode_matrix(const Mat& a) noexcept;
Mat decode_matrix(const Field& field, std::size_t rows, std::size_t cols, std::uint64_t code);
/// p^(rows*cols), or nullopt when it exceeds 2^62.
std::optional<std::uint64_t> matrix_space_size(const Field& field, std::size_t rows, std::size_t cols) noexcept;

}  // namespace contring
