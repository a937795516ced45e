// Exhaustive natural-basis search over F_p by backtracking on projective
// points: a basis is an increasing list of normalized vectors with pairwise
// zero products that stays linearly independent.

#include <algorithm>

#include "evoaut/algebra.hpp"
#include "residue.hpp"

namespace evoaut {
namespace detail {

namespace {

struct Search {
  const ResidueAlgebra& alg;
  const VectorTable& table;
  std::vector<u64> points;  // projective representatives
  std::vector<std::vector<u64>> found;

  void extend(std::vector<std::size_t>& chosen, const Echelon& echelon) {
    const std::size_t n = alg.n();
    if (chosen.size() == n) {
      std::vector<u64> basis;
      for (std::size_t c : chosen) basis.push_back(points[c]);
      found.push_back(std::move(basis));
      return;
    }
    // not enough points left to finish
    if (points.size() - chosen.back() - 1 < n - chosen.size()) return;
    for (std::size_t c = chosen.back() + 1; c < points.size(); ++c) {
      const u32* v = table[points[c]];
      bool orthogonal = true;
      for (std::size_t k : chosen) {
        if (!alg.product_is_zero(table[points[k]], v)) {
          orthogonal = false;
          break;
        }
      }
      if (!orthogonal) continue;
      Echelon next = echelon;
      if (!next.try_add(v)) continue;
      chosen.push_back(c);
      extend(chosen, next);
      chosen.pop_back();
    }
  }

  void from_first(std::size_t first) {
    std::vector<std::size_t> chosen{first};
    Echelon echelon(alg.p(), alg.n());
    echelon.try_add(table[points[first]]);
    extend(chosen, echelon);
  }
};

std::vector<u64> projective_points(const VectorTable& table, std::size_t n) {
  std::vector<u64> out;
  for (u64 idx = 1; idx < table.count(); ++idx) {
    const u32* d = table[idx];
    std::size_t k = 0;
    while (d[k] == 0) ++k;
    if (d[k] == 1 && k < n) out.push_back(idx);
  }
  return out;
}

void check_budget(const EvolutionAlgebra& a, std::uint64_t budget) {
  if (!a.field().is_prime_field()) throw Error(ErrorKind::NotPrimeField, "natural-basis search needs F_p");
  const u64 size = checked_power(a.field().characteristic(), a.dim());
  if (size > budget) {
    throw Error(ErrorKind::TooLarge,
                "natural-basis search over p^n = " + std::to_string(size) + " vectors exceeds cap " +
                    std::to_string(budget));
  }
}

std::vector<std::vector<Vector>> materialize(const EvolutionAlgebra& a, const VectorTable& table,
                                             const std::vector<std::vector<u64>>& found) {
  std::vector<std::vector<Vector>> out;
  out.reserve(found.size());
  for (const auto& basis : found) {
    std::vector<Vector> vs;
    for (u64 idx : basis) vs.push_back(to_vector(a.field(), table[idx], a.dim()));
    std::sort(vs.begin(), vs.end());
    out.push_back(std::move(vs));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_standard(const std::vector<std::vector<Vector>>& bases, const EvolutionAlgebra& a) {
  if (bases.size() != 1) return false;
  std::vector<Vector> standard;
  for (std::size_t i = 0; i < a.dim(); ++i) standard.push_back(a.basis_vector(i));
  std::sort(standard.begin(), standard.end());
  return bases.front() == standard;
}

}  // namespace

bool natural_basis_contains(const EvolutionAlgebra& a, const Vector& u) {
  std::size_t lead = 0;
  while (u[lead].is_zero()) ++lead;
  const Scalar inv = u[lead].inv();
  Vector normalized;
  for (const Scalar& s : u) normalized.push_back(s * inv);
  for (const auto& basis : enumerate_natural_bases(a)) {
    if (std::find(basis.begin(), basis.end(), normalized) != basis.end()) return true;
  }
  return false;
}

}  // namespace detail

std::vector<std::vector<Vector>> enumerate_natural_bases(const EvolutionAlgebra& a, std::uint64_t budget) {
  using namespace detail;
  check_budget(a, budget);
  const ResidueAlgebra alg(a);
  const VectorTable table(alg.p(), alg.n());
  const std::vector<u64> points = projective_points(table, alg.n());

  std::vector<std::vector<u64>> found;
  const auto first_count = static_cast<std::int64_t>(points.size());
#pragma omp parallel
  {
    Search local{alg, table, points, {}};
#pragma omp for schedule(dynamic)
    for (std::int64_t first = 0; first < first_count; ++first) local.from_first(static_cast<std::size_t>(first));
#pragma omp critical
    found.insert(found.end(), local.found.begin(), local.found.end());
  }
  return materialize(a, table, found);
}

bool verify_unique_basis_up_to_scaling(const EvolutionAlgebra& a, std::uint64_t budget) {
  return detail::is_standard(enumerate_natural_bases(a, budget), a);
}

namespace reference {

std::vector<std::vector<Vector>> enumerate_natural_bases(const EvolutionAlgebra& a, std::uint64_t budget) {
  using namespace detail;
  check_budget(a, budget);
  const ResidueAlgebra alg(a);
  const VectorTable table(alg.p(), alg.n());
  Search search{alg, table, projective_points(table, alg.n()), {}};
  for (std::size_t first = 0; first < search.points.size(); ++first) search.from_first(first);
  return materialize(a, table, search.found);
}

bool verify_unique_basis_up_to_scaling(const EvolutionAlgebra& a, std::uint64_t budget) {
  return detail::is_standard(reference::enumerate_natural_bases(a, budget), a);
}

}  // namespace reference

}  // namespace evoaut
