#include "contring/mat.hpp"

#include <algorithm>
#include <string>

#include "contring/error.hpp"

namespace contring {

Mat::Mat(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Mat::Mat(Field field, std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : field_(field), rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) fail(ErrorKind::DimensionMismatch, "ragged matrix literal");
    for (auto v : r) data_.push_back(field_.reduce(v));
  }
}

Mat Mat::identity(Field field, std::size_t n) { return scalar(field, n, 1); }

Mat Mat::scalar(Field field, std::size_t n, Elem c) {
  Mat m(field, n, n);
  const Elem v = field.reduce_u64(c);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = v;
  return m;
}

Mat Mat::diagonal(Field field, std::span<const Elem> diag) {
  Mat m(field, diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = field.reduce_u64(diag[i]);
  return m;
}

Mat Mat::unit_block(Field field, std::size_t n, std::size_t r) {
  Mat m(field, n, n);
  for (std::size_t i = 0; i < r && i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(Field field, const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t nr = rows.size();
  const std::size_t nc = nr == 0 ? 0 : rows.front().size();
  Mat m(field, nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    if (rows[i].size() != nc) fail(ErrorKind::DimensionMismatch, "ragged matrix rows");
    for (std::size_t j = 0; j < nc; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Mat Mat::elementary(Field field, std::size_t n, std::size_t i, std::size_t j) {
  Mat m(field, n, n);
  m(i, j) = 1;
  return m;
}

Mat Mat::transpose() const {
  Mat t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Mat Mat::scaled(Elem c) const {
  Mat out = *this;
  for (auto& v : out.data_) v = field_.mul(v, c);
  return out;
}

Mat Mat::column(std::size_t j) const { return columns(j, 1); }

Mat Mat::columns(std::size_t first, std::size_t count) const { return submatrix(0, first, rows_, count); }

Mat Mat::row_block(std::size_t first, std::size_t count) const { return submatrix(first, 0, count, cols_); }

Mat Mat::submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) fail(ErrorKind::DimensionMismatch, "submatrix out of range");
  Mat out(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
  return out;
}

bool Mat::is_zero() const noexcept {
  for (auto v : data_)
    if (v != 0) return false;
  return true;
}

bool Mat::is_identity() const noexcept {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1u : 0u)) return false;
  return true;
}

bool Mat::is_scalar() const noexcept {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (i != j && (*this)(i, j) != 0) return false;
      if (i == j && (*this)(i, j) != (*this)(0, 0)) return false;
    }
  return true;
}

bool Mat::is_upper_triangular() const noexcept {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < i && j < cols_; ++j)
      if ((*this)(i, j) != 0) return false;
  return true;
}

std::vector<std::vector<Elem>> Mat::to_rows() const {
  std::vector<std::vector<Elem>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i].assign(row(i).begin(), row(i).end());
  return out;
}

void require_compatible(const Mat& a, const Mat& b) {
  if (!(a.field() == b.field())) fail(ErrorKind::FieldMismatch, "matrices over different fields");
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    fail(ErrorKind::DimensionMismatch, std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " vs " +
                                           std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
}

void require_square(const Mat& a) {
  if (!a.is_square()) fail(ErrorKind::DimensionMismatch, "square matrix required");
}

Mat& Mat::operator+=(const Mat& other) {
  require_compatible(*this, other);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] = field_.add(data_[k], other.data_[k]);
  return *this;
}

Mat& Mat::operator-=(const Mat& other) {
  require_compatible(*this, other);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] = field_.sub(data_[k], other.data_[k]);
  return *this;
}

Mat operator-(const Mat& a) {
  Mat out = a;
  for (auto& v : out.data_) v = a.field_.neg(v);
  return out;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (!(a.field_ == b.field_)) fail(ErrorKind::FieldMismatch, "matrices over different fields");
  if (a.cols_ != b.rows_) fail(ErrorKind::DimensionMismatch, "inner dimensions differ in product");
  Mat out(a.field_, a.rows_, b.cols_);
  const std::uint64_t p = a.field_.p();
  // Products are below 2^32, so an accumulator of 2^32 terms cannot overflow.
  std::vector<std::uint64_t> acc(b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const std::uint64_t aik = a(i, k);
      if (aik == 0) continue;
      const Elem* brow = b.data_.data() + k * b.cols_;
      for (std::size_t j = 0; j < b.cols_; ++j) acc[j] += aik * brow[j];
    }
    for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) = static_cast<Elem>(acc[j] % p);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Mat& a) {
  os << "p=" << a.field().p();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    os << ";";
    for (std::size_t j = 0; j < a.cols(); ++j) os << " " << a(i, j);
  }
  return os;
}

Mat hcat(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) fail(ErrorKind::DimensionMismatch, "hcat row counts differ");
  Mat out(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

Mat vcat(const Mat& a, const Mat& b) {
  if (a.cols() != b.cols()) fail(ErrorKind::DimensionMismatch, "vcat column counts differ");
  Mat out(a.field(), a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, j) = b(i, j);
  return out;
}

Mat block_diag(std::span<const Mat> blocks) {
  if (blocks.empty()) fail(ErrorKind::PreconditionViolation, "block_diag of no blocks");
  std::size_t nr = 0, nc = 0;
  for (const auto& b : blocks) {
    if (!(b.field() == blocks.front().field())) fail(ErrorKind::FieldMismatch, "blocks over different fields");
    nr += b.rows();
    nc += b.cols();
  }
  Mat out(blocks.front().field(), nr, nc);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) out(r0 + i, c0 + j) = b(i, j);
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

std::uint64_t encode_matrix(const Mat& a) noexcept {
  const std::uint64_t p = a.field().p();
  std::uint64_t code = 0;
  const auto d = a.data();
  for (std::size_t i = d.size(); i-- > 0;) code = code * p + d[i];
  return code;
}

Mat decode_matrix(const Field& field, std::size_t rows, std::size_t cols, std::uint64_t code) {
  Mat out(field, rows, cols);
  const std::uint64_t p = field.p();
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      out(i, j) = static_cast<Elem>(code % p);
      code /= p;
    }
  return out;
}

std::optional<std::uint64_t> matrix_space_size(const Field& field, std::size_t rows, std::size_t cols) noexcept {
  std::uint64_t size = 1;
  for (std::size_t k = 0; k < rows * cols; ++k) {
    if (size > (std::uint64_t{1} << 62) / field.p()) return std::nullopt;
    size *= field.p();
  }
  return size;
}

}  // namespace contring
