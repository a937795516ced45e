#pragma once

// Smith normal form over the integers with arbitrary-precision entries.

#include <cstddef>
#include <string>
#include <vector>

#include "evoaut/scalar.hpp"

namespace evoaut {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::size_t cols, const std::vector<std::vector<BigInt>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Exact determinant by fraction-free elimination.
BigInt determinant(const IntMatrix& m);

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... | d_rank
/// positive followed by zeros.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  std::size_t rank = 0;

  std::vector<BigInt> diagonal() const;
  /// Diagonal entries other than 1.
  std::vector<BigInt> invariant_factors() const;
};

/// Pivot rule: smallest absolute value, ties broken by row-major position.
/// The result is re-verified; a failed check raises InternalInvariant.
SmithDecomposition smith_normal_form(const IntMatrix& a);

namespace detail {

/// Columns carried along with the row operations of a Smith reduction, so
/// U * payload is obtained without storing U. A nonzero modulus reduces the
/// column into [0, modulus).
struct RowPayload {
  std::vector<std::vector<BigInt>> cols;
  std::vector<BigInt> moduli;

  void swap_rows(std::size_t a, std::size_t b);
  void add_row(std::size_t target, std::size_t source, const BigInt& factor);
  void negate_row(std::size_t r);
};

struct SmithCore {
  IntMatrix D;
  IntMatrix V;
  std::size_t rank = 0;
};

SmithCore smith_reduce(IntMatrix a, RowPayload& payload);

}  // namespace detail

}  // namespace evoaut
