#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "evoaut/scalar.hpp"

namespace evoaut {

/// Dense row-major matrix over one exact field.
class Matrix {
 public:
  Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols);
  static Matrix identity(const FieldSpec& field, std::size_t n);
  static Matrix from_rows(const FieldSpec& field, const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  /// Row-major lexicographic order on entries.
  friend bool operator<(const Matrix& a, const Matrix& b) { return a.data_ < b.data_; }

  /// "[[a,b],[c,d]]".
  std::string to_string() const;

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

std::size_t rank(const Matrix& m);
Scalar determinant(const Matrix& m);

/// Rank of a list of equal-length vectors.
std::size_t rank_of(const FieldSpec& field, const std::vector<Vector>& vectors);

}  // namespace evoaut
