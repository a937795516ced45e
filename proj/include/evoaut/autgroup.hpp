#pragma once

// Automorphism groups of an evolution algebra with its natural basis:
// Diag(A;B), the twisted solution sets of graph symmetries, the group U of
// basis-monomial automorphisms, and a brute-force oracle for Aut(A).

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "evoaut/algebra.hpp"
#include "evoaut/monomial.hpp"
#include "evoaut/wgraph.hpp"

namespace evoaut {

inline constexpr std::uint64_t kDefaultBruteforceBudget = 100'000'000;

/// e_i -> scales[i] * e_{sigma(i)}. Construction checks the homomorphism law
/// on basis squares and throws InvalidArgument when it fails.
class MonomialAutomorphism {
 public:
  MonomialAutomorphism(std::shared_ptr<const EvolutionAlgebra> algebra, Permutation sigma, Vector scales);
  MonomialAutomorphism(const EvolutionAlgebra& algebra, Permutation sigma, Vector scales);
  static MonomialAutomorphism identity(std::shared_ptr<const EvolutionAlgebra> algebra);

  const EvolutionAlgebra& algebra() const { return *algebra_; }
  const std::shared_ptr<const EvolutionAlgebra>& algebra_ptr() const { return algebra_; }
  const Permutation& sigma() const { return sigma_; }
  const Vector& scales() const { return scales_; }

  bool is_diagonal() const { return sigma_.is_identity(); }
  /// Column i holds the image of e_i.
  Matrix to_matrix() const;
  Vector apply(const Vector& v) const;

  friend bool operator==(const MonomialAutomorphism& a, const MonomialAutomorphism& b) {
    return a.sigma_ == b.sigma_ && a.scales_ == b.scales_;
  }
  friend bool operator<(const MonomialAutomorphism& a, const MonomialAutomorphism& b) {
    return a.sigma_ != b.sigma_ ? a.sigma_ < b.sigma_ : a.scales_ < b.scales_;
  }

 private:
  std::shared_ptr<const EvolutionAlgebra> algebra_;
  Permutation sigma_;
  Vector scales_;
};

/// Does the law omega_{sigma(j) sigma(i)} x_i^2 = omega_{ji} x_j hold for all i, j?
bool satisfies_law(const EvolutionAlgebra& a, const Permutation& sigma, const Vector& scales);

/// f after g, as linear maps. Throws AlgebraMismatch.
MonomialAutomorphism compose(const MonomialAutomorphism& f, const MonomialAutomorphism& g);
MonomialAutomorphism invert(const MonomialAutomorphism& f);

/// x_u^2 = x_v for every edge u -> v.
MonomialSystem diag_system(const EvolutionAlgebra& a);
GroupDescription diag_group(const EvolutionAlgebra& a);

/// x_i^2 x_j^{-1} = omega_{ji} / omega_{sigma(j) sigma(i)} for every edge i -> j.
/// Throws NotAGraphAutomorphism.
MonomialSystem twisted_system(const EvolutionAlgebra& a, const GraphAutomorphism& sigma);
SolutionCoset twisted_limit(const EvolutionAlgebra& a, const GraphAutomorphism& sigma);

enum class Completeness { FullAut, SubgroupOnly };

struct LiftedSigma {
  GraphAutomorphism sigma;
  MonomialAutomorphism lift;  // particular solution of the twisted system
  SolutionCoset coset;
};

struct AutPresentation {
  std::shared_ptr<const EvolutionAlgebra> algebra;
  GroupDescription diag;
  /// In graph-automorphism enumeration order; the identity comes first.
  std::vector<LiftedSigma> lifted;
  std::vector<GraphAutomorphism> non_lifting;
  /// law[a][b] = index of lifted[a].sigma after lifted[b].sigma.
  std::vector<std::vector<std::size_t>> law;
  Completeness completeness = Completeness::SubgroupOnly;

  /// |U| = |Diag| * |lifted|, or nullopt when Diag is infinite.
  std::optional<BigInt> order() const;
};

/// Solves the twisted system of every graph automorphism (in parallel),
/// verifies that the liftable ones form a subgroup, and marks the result
/// FullAut when A is 2LI or invertible.
AutPresentation assemble_aut(const EvolutionAlgebra& a, std::size_t graph_cap = kDefaultGraphAutCap);

/// All elements of U, sorted. Needs a finite Diag.
std::vector<MonomialAutomorphism> materialize(const AutPresentation& aut,
                                              std::uint64_t cap = kDefaultEnumerationCap);

/// Every automorphism of A over F_p as a matrix, sorted. Pruned search over
/// images of basis vectors, parallel over the image of e_1. `budget` bounds
/// the number of candidate images examined (and p^n); TooLarge beyond it.
std::vector<Matrix> bruteforce_aut(const EvolutionAlgebra& a, std::uint64_t budget = kDefaultBruteforceBudget);

namespace reference {

AutPresentation assemble_aut(const EvolutionAlgebra& a, std::size_t graph_cap = kDefaultGraphAutCap);
/// Scans all p^(n^2) matrices.
std::vector<Matrix> bruteforce_aut(const EvolutionAlgebra& a, std::uint64_t budget = kDefaultBruteforceBudget);

}  // namespace reference

}  // namespace evoaut
