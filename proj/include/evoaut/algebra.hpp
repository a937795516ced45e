#pragma once

// Finite-dimensional evolution algebras with a distinguished natural basis.
//
// Column convention, used everywhere in the library: column i of the
// structure matrix holds the coordinates of e_i^2, so structure(j, i) is the
// coefficient of e_j in e_i^2.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "evoaut/matrix.hpp"
#include "evoaut/permutation.hpp"
#include "evoaut/scalar.hpp"

namespace evoaut {

inline constexpr std::size_t kDefaultMaxDim = 64;
/// Largest p^n accepted by the exhaustive natural-basis search.
inline constexpr std::uint64_t kDefaultBasisSearchBudget = 4096;

class EvolutionAlgebra {
 public:
  EvolutionAlgebra(FieldSpec field, std::vector<std::string> labels, Matrix structure,
                   std::size_t max_dim = kDefaultMaxDim);

  /// squares[i] holds the coordinates of e_i^2; labels default to e1..en.
  static EvolutionAlgebra from_squares(const FieldSpec& field, const std::vector<Vector>& squares,
                                       std::vector<std::string> labels = {});

  std::size_t dim() const { return labels_.size(); }
  const FieldSpec& field() const { return structure_.field(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Matrix& structure() const { return structure_; }

  /// Coefficient of e_j in e_i^2.
  const Scalar& omega(std::size_t j, std::size_t i) const { return structure_(j, i); }
  Vector square(std::size_t i) const { return structure_.column(i); }
  Vector basis_vector(std::size_t i) const;
  Vector zero_vector() const { return Vector(dim(), field().zero()); }

  friend bool operator==(const EvolutionAlgebra& a, const EvolutionAlgebra& b) {
    return a.labels_ == b.labels_ && a.structure_ == b.structure_;
  }

 private:
  std::vector<std::string> labels_;
  Matrix structure_;
};

/// u * v = sum_i u_i v_i e_i^2.
Vector multiply(const EvolutionAlgebra& a, const Vector& u, const Vector& v);

/// First pair i < j whose squares are linearly dependent, if any.
std::optional<std::pair<std::size_t, std::size_t>> two_li_witness(const EvolutionAlgebra& a);
bool is_2li(const EvolutionAlgebra& a);

bool is_nondegenerate(const EvolutionAlgebra& a);
bool is_perfect(const EvolutionAlgebra& a);
bool is_invertible(const EvolutionAlgebra& a);

enum class Naturality { Natural, NotNatural, Indeterminate };
const char* to_string(Naturality n);

/// Decides whether u belongs to some natural basis. Characteristic 2 with a
/// one-dimensional span of squares is only settled by exhaustive search over
/// F_2 with n <= 4; otherwise the answer is Indeterminate.
Naturality is_natural_vector(const EvolutionAlgebra& a, const Vector& u);

/// Action of S_n x (K^x)^n on bases: b'_i = scales[i] * b_{perm(i)}.
struct BasisChange {
  Permutation perm;
  Vector scales;
};

std::vector<Vector> apply(const BasisChange& change, const std::vector<Vector>& basis);

/// Throws NotANaturalBasis naming a nonzero product pair or a dependency.
void check_natural_basis(const EvolutionAlgebra& a, const std::vector<Vector>& basis);

/// Returns the change taking b1 to b2 when every element of b2 is a nonzero
/// multiple of an element of b1.
std::optional<BasisChange> same_orbit(const EvolutionAlgebra& a, const std::vector<Vector>& b1,
                                      const std::vector<Vector>& b2);

/// All natural bases over F_p, each normalized (first nonzero coordinate 1)
/// and listed as an increasing set of vectors; bases sorted canonically.
/// Parallel over the first basis vector.
std::vector<std::vector<Vector>> enumerate_natural_bases(const EvolutionAlgebra& a,
                                                         std::uint64_t budget = kDefaultBasisSearchBudget);

/// Exhaustive check that every natural basis is a permuted scaling of the
/// distinguished one. Test oracle; needs F_p with p^n <= budget.
bool verify_unique_basis_up_to_scaling(const EvolutionAlgebra& a,
                                       std::uint64_t budget = kDefaultBasisSearchBudget);

namespace reference {

std::vector<std::vector<Vector>> enumerate_natural_bases(const EvolutionAlgebra& a,
                                                         std::uint64_t budget = kDefaultBasisSearchBudget);
bool verify_unique_basis_up_to_scaling(const EvolutionAlgebra& a,
                                       std::uint64_t budget = kDefaultBasisSearchBudget);

}  // namespace reference

}  // namespace evoaut
