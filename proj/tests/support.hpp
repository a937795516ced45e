#pragma once

// Shared fixtures for the test executables: data files, small builders and
// a seeded random corpus of evolution algebras over small prime fields.

#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "evoaut/algebra.hpp"
#include "evoaut/io.hpp"

namespace evoaut::testing {

inline std::string read_data(const std::string& name) {
  std::ifstream in(std::string(EVOAUT_DATA_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing data file " + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline EvolutionAlgebra load_data(const std::string& name, std::optional<FieldSpec> field = std::nullopt) {
  return load_algebra(read_data(name), field);
}

/// The same structure constants read in another field (rationals reduced mod p).
inline EvolutionAlgebra over(const EvolutionAlgebra& a, const FieldSpec& field) {
  Matrix m(field, a.dim(), a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t c = 0; c < a.dim(); ++c) m(r, c) = field.from_rational(a.omega(r, c).rational_value());
  }
  return EvolutionAlgebra(field, a.labels(), m);
}

inline std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

/// Squares given as integer rows: squares[i][j] is the coefficient of e_j in e_i^2.
inline EvolutionAlgebra algebra_of(const FieldSpec& field, const std::vector<std::vector<std::int64_t>>& squares) {
  std::vector<Vector> vs;
  for (const auto& row : squares) {
    Vector v;
    for (std::int64_t c : row) v.push_back(field.from_int(c));
    vs.push_back(std::move(v));
  }
  return EvolutionAlgebra::from_squares(field, vs);
}

/// Random algebra over F_p: each structure entry is zero with probability
/// `zero_rate`, otherwise a uniform nonzero residue. With probability one
/// half the zero pattern is made invariant under a random permutation, so
/// graph symmetries show up regularly.
inline EvolutionAlgebra random_algebra(std::mt19937_64& rng, std::uint64_t p, std::size_t n,
                                       double zero_rate = 0.55) {
  const FieldSpec field = FieldSpec::prime(p);
  std::bernoulli_distribution is_zero(zero_rate);
  std::uniform_int_distribution<std::int64_t> nonzero(1, static_cast<std::int64_t>(p) - 1);
  std::vector<std::vector<std::int64_t>> sq(n, std::vector<std::int64_t>(n, 0));
  for (auto& row : sq) {
    for (auto& c : row) c = is_zero(rng) ? 0 : nonzero(rng);
  }
  if (std::bernoulli_distribution(0.5)(rng)) {
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    // orbit representatives decide the pattern
    std::vector<std::vector<bool>> done(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (done[i][j]) continue;
        const bool present = sq[i][j] != 0;
        std::size_t a = i, b = j;
        do {
          done[a][b] = true;
          sq[a][b] = present ? (sq[a][b] != 0 ? sq[a][b] : nonzero(rng)) : 0;
          a = perm[a];
          b = perm[b];
        } while (a != i || b != j);
      }
    }
  }
  return algebra_of(field, sq);
}

struct CorpusEntry {
  std::uint64_t p;
  EvolutionAlgebra algebra;
};

/// n <= 4 over F5 and n <= 3 over F7, alternating.
inline std::vector<CorpusEntry> random_corpus(std::size_t count, std::uint64_t seed = 20261016) {
  std::mt19937_64 rng(seed);
  std::vector<CorpusEntry> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const std::uint64_t p = k % 2 == 0 ? 5 : 7;
    const std::size_t max_n = p == 5 ? 4 : 3;
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_n)(rng);
    out.push_back({p, random_algebra(rng, p, n)});
  }
  return out;
}

}  // namespace evoaut::testing
