#pragma once

// Test-only reference computations, written directly from the definitions
// and sharing no code with the library kernels they check.

#include <cstdint>
#include <vector>

#include "evoaut/algebra.hpp"
#include "evoaut/permutation.hpp"

namespace evoaut::testing {

/// T(e_i) T(e_j) = 0 for i != j and T(e_i)^2 = T(e_i^2), with T invertible.
inline bool is_automorphism_matrix(const EvolutionAlgebra& a, const Matrix& t) {
  const std::size_t n = a.dim();
  if (determinant(t).is_zero()) return false;
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < n; ++i) cols.push_back(t.column(i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vector prod = a.zero_vector();
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar c = cols[i][k] * cols[j][k];
        for (std::size_t r = 0; r < n; ++r) prod[r] += c * a.omega(r, k);
      }
      Vector expected = a.zero_vector();
      if (i == j) {
        for (std::size_t k = 0; k < n; ++k) {
          for (std::size_t r = 0; r < n; ++r) expected[r] += a.omega(k, i) * cols[k][r];
        }
      }
      if (prod != expected) return false;
    }
  }
  return true;
}

/// Scale vectors x in (F_p^x)^n making e_i -> x_i e_{sigma(i)} an automorphism.
inline std::vector<Vector> monomial_scales_bruteforce(const EvolutionAlgebra& a, const Permutation& sigma) {
  const std::uint64_t p = a.field().characteristic();
  const std::size_t n = a.dim();
  std::vector<Vector> out;
  std::vector<std::uint64_t> digit(n, 1);
  for (;;) {
    Vector x;
    for (std::uint64_t d : digit) x.push_back(a.field().from_int(static_cast<std::int64_t>(d)));
    Matrix t(a.field(), n, n);
    for (std::size_t i = 0; i < n; ++i) t(sigma(i), i) = x[i];
    if (is_automorphism_matrix(a, t)) out.push_back(x);
    std::size_t k = 0;
    while (k < n && digit[k] == p - 1) digit[k++] = 1;
    if (k == n) break;
    ++digit[k];
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace evoaut::testing
