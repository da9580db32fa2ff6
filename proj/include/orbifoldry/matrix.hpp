#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orbifoldry/errors.hpp"
#include "orbifoldry/rational.hpp"

namespace orbifoldry {

// Dense row-major matrix. Only the handful of operations the library needs.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    }
    return c;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix difference shape mismatch");
    Matrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
    return c;
  }

  friend Matrix operator*(const T& s, const Matrix& a) {
    Matrix c = a;
    for (auto& x : c.data_) x *= s;
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  const std::vector<T>& data() const noexcept { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<std::int64_t>;
using BigMatrix = Matrix<BigInt>;

// Product with an overflow check; isometry entries stay small, but inputs
// from files are untrusted.
IntMatrix checked_multiply(const IntMatrix& a, const IntMatrix& b);
IntMatrix matrix_power(const IntMatrix& m, std::int64_t k);

BigMatrix to_big(const IntMatrix& m);

// Exact determinant by fraction-free (Bareiss) elimination.
BigInt determinant(const BigMatrix& m);
inline BigInt determinant(const IntMatrix& m) { return determinant(to_big(m)); }

// det of the leading k x k blocks for k = 1..n; the first zero or negative
// entry stops the recurrence (later entries are then left unset).
std::vector<BigInt> leading_minors(const BigMatrix& m);

// Text matrix format: first token is the dimension r, then r*r integers,
// row by row. Lines starting with '#' are comments; a comment of the form
// "# key: value" is returned as metadata.
struct MatrixFile {
  IntMatrix matrix;
  std::map<std::string, std::string> metadata;
};
MatrixFile parse_matrix_text(std::string_view text);
MatrixFile read_matrix_file(const std::string& path);
std::string format_matrix_text(const IntMatrix& m, const std::map<std::string, std::string>& metadata = {});

}  // namespace orbifoldry
