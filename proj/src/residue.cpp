#include "residue.hpp"

#include <limits>

namespace evoaut::detail {

ResidueAlgebra::ResidueAlgebra(const EvolutionAlgebra& a)
    : p_(0), n_(a.dim()), omega_(a.dim() * a.dim(), 0) {
  if (!a.field().is_prime_field()) throw Error(ErrorKind::NotPrimeField, "exhaustive search needs F_p");
  p_ = static_cast<u32>(a.field().characteristic());
  for (std::size_t j = 0; j < n_; ++j) {
    for (std::size_t i = 0; i < n_; ++i) omega_[j * n_ + i] = static_cast<u32>(a.omega(j, i).residue_value());
  }
}

void ResidueAlgebra::product(const u32* u, const u32* v, u32* out) const {
  for (std::size_t j = 0; j < n_; ++j) {
    u64 acc = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      acc += static_cast<u64>(omega_[j * n_ + i]) * (static_cast<u64>(u[i]) * v[i] % p_);
      acc %= p_;
    }
    out[j] = static_cast<u32>(acc);
  }
}

bool ResidueAlgebra::product_is_zero(const u32* u, const u32* v) const {
  for (std::size_t j = 0; j < n_; ++j) {
    u64 acc = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      acc += static_cast<u64>(omega_[j * n_ + i]) * (static_cast<u64>(u[i]) * v[i] % p_);
      acc %= p_;
    }
    if (acc != 0) return false;
  }
  return true;
}

VectorTable::VectorTable(u32 p, std::size_t n) : n_(n), count_(checked_power(p, n)) {
  digits_.resize(count_ * n_);
  for (u64 idx = 0; idx < count_; ++idx) {
    u64 rest = idx;
    for (std::size_t k = 0; k < n_; ++k) {
      digits_[idx * n_ + k] = static_cast<u32>(rest % p);
      rest /= p;
    }
  }
}

bool Echelon::try_add(const u32* v) {
  std::vector<u32> row(v, v + n_);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t c = pivots_[r];
    if (row[c] == 0) continue;
    const u64 f = row[c];  // pivot rows are normalized to 1
    for (std::size_t k = 0; k < n_; ++k) {
      row[k] = static_cast<u32>((row[k] + static_cast<u64>(p_ - rows_[r][k]) * f) % p_);
    }
  }
  std::size_t c = 0;
  while (c < n_ && row[c] == 0) ++c;
  if (c == n_) return false;
  const u64 inv = inverse_mod(row[c], p_);
  for (std::size_t k = 0; k < n_; ++k) row[k] = static_cast<u32>(row[k] * inv % p_);
  rows_.push_back(std::move(row));
  pivots_.push_back(c);
  return true;
}

std::vector<std::vector<u32>> kernel_basis(std::vector<std::vector<u32>> rows, std::size_t n, u32 p) {
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t k = r;
    while (k < rows.size() && rows[k][c] == 0) ++k;
    if (k == rows.size()) continue;
    std::swap(rows[r], rows[k]);
    const u64 inv = inverse_mod(rows[r][c], p);
    for (u32& x : rows[r]) x = static_cast<u32>(x * inv % p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const u64 f = rows[i][c];
      for (std::size_t j = 0; j < n; ++j) rows[i][j] = static_cast<u32>((rows[i][j] + (p - rows[r][j]) * f) % p);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<std::vector<u32>> basis;
  std::size_t next_pivot = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (next_pivot < pivot_cols.size() && pivot_cols[next_pivot] == c) {
      ++next_pivot;
      continue;
    }
    std::vector<u32> v(n, 0);
    v[c] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = rows[i][c] == 0 ? 0 : p - rows[i][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

u64 checked_power(u64 p, std::size_t n) {
  u64 r = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (r > std::numeric_limits<u64>::max() / p) return std::numeric_limits<u64>::max();
    r *= p;
  }
  return r;
}

u32 inverse_mod(u32 a, u32 p) { return static_cast<u32>(powmod(a, p - 2, p)); }

Vector to_vector(const FieldSpec& field, const u32* digits, std::size_t n) {
  Vector v;
  v.reserve(n);
  for (std::size_t k = 0; k < n; ++k) v.push_back(Scalar::residue(field.characteristic(), std::int64_t{digits[k]}));
  return v;
}

}  // namespace evoaut::detail
