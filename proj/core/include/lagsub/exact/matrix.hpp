#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lagsub/exact/scalar.hpp"

namespace lagsub::exact {

using Vec = std::vector<Scalar>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t k);
bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator-(const Vec& a);
Vec operator*(const Scalar& s, const Vec& v);
/// a += s * b
void axpy(Vec& a, const Scalar& s, const Vec& b);
Vec concat(const Vec& a, const Vec& b);
Vec slice(const Vec& v, std::size_t begin, std::size_t count);

/// Dense row-major matrix over Q(sqrt d)(i).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  /// Builds a matrix whose rows are `rows`; `cols` fixes the width of an empty list.
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;
  std::vector<Vec> row_list() const;
  void append_row(const Vec& v);

  Matrix transpose() const;
  /// Matrix-vector product M v (v a column).
  Vec apply(const Vec& v) const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form. Pivot rule: leftmost column with a nonzero entry
/// in the unreduced rows, topmost such row; zero rows are kept at the bottom.
RrefResult rref(Matrix m);
std::size_t rank(const Matrix& m);
/// Rows spanning {v : m v = 0}, one per free column, in column order.
Matrix nullspace(const Matrix& m);
/// Some v with m v = b (free variables set to zero), or nullopt.
std::optional<Vec> solve(const Matrix& m, const Vec& b);
std::optional<Matrix> inverse(const Matrix& m);

}  // namespace lagsub::exact
