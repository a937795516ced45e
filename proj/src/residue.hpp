#pragma once

// Flat residue-level views used by the exhaustive kernels. Vectors of F_p^n
// are addressed by index = sum_k d_k p^k and stored as digit rows.

#include <cstdint>
#include <vector>

#include "evoaut/algebra.hpp"

namespace evoaut::detail {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

class ResidueAlgebra {
 public:
  explicit ResidueAlgebra(const EvolutionAlgebra& a);

  u32 p() const { return p_; }
  std::size_t n() const { return n_; }
  u32 omega(std::size_t j, std::size_t i) const { return omega_[j * n_ + i]; }

  /// out_j = sum_i omega(j, i) u_i v_i.
  void product(const u32* u, const u32* v, u32* out) const;
  bool product_is_zero(const u32* u, const u32* v) const;

 private:
  u32 p_;
  std::size_t n_;
  std::vector<u32> omega_;
};

/// Every vector of F_p^n, materialized as digit rows.
class VectorTable {
 public:
  VectorTable(u32 p, std::size_t n);

  u64 count() const { return count_; }
  const u32* operator[](u64 index) const { return digits_.data() + index * n_; }

 private:
  std::size_t n_;
  u64 count_;
  std::vector<u32> digits_;
};

/// Incremental row echelon form modulo p.
class Echelon {
 public:
  Echelon(u32 p, std::size_t n) : p_(p), n_(n) {}

  /// Adds v when independent of the rows so far.
  bool try_add(const u32* v);
  std::size_t rank() const { return pivots_.size(); }

 private:
  u32 p_;
  std::size_t n_;
  std::vector<std::vector<u32>> rows_;
  std::vector<std::size_t> pivots_;
};

/// Basis of { v : r . v = 0 for every row r } modulo p.
std::vector<std::vector<u32>> kernel_basis(std::vector<std::vector<u32>> rows, std::size_t n, u32 p);

/// p^n, or UINT64_MAX if it overflows.
u64 checked_power(u64 p, std::size_t n);

u32 inverse_mod(u32 a, u32 p);

Vector to_vector(const FieldSpec& field, const u32* digits, std::size_t n);

}  // namespace evoaut::detail
