#pragma once

// Multiplicative systems prod_v x_v^{a_v} = c over K^x, solved through the
// Smith normal form of the exponent matrix.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "evoaut/scalar.hpp"
#include "evoaut/smith.hpp"

namespace evoaut {

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

struct MonomialRow {
  std::vector<BigInt> exponents;
  Scalar rhs;
};

class MonomialSystem {
 public:
  /// Throws ZeroArgument on a zero right-hand side.
  MonomialSystem(FieldSpec field, std::size_t n_vars, std::vector<MonomialRow> rows);

  const FieldSpec& field() const { return field_; }
  std::size_t n_vars() const { return n_vars_; }
  const std::vector<MonomialRow>& rows() const { return rows_; }

  IntMatrix exponent_matrix() const;
  bool is_homogeneous() const;
  /// Same rows with every right-hand side set to 1.
  MonomialSystem homogeneous_part() const;
  bool is_solution(const Vector& x) const;

 private:
  FieldSpec field_;
  std::size_t n_vars_;
  std::vector<MonomialRow> rows_;
};

/// (K^x)^free_rank x prod mu_d(K) over the listed invariant factors.
/// Generators are concrete cyclic generators of the solution group: over F_p
/// one per nontrivial slot with its order, over Q only the {+-1} torsion
/// part (free factors stay symbolic).
struct GroupDescription {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;
  std::vector<Vector> generators;
  std::vector<BigInt> generator_orders;

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }

  /// "(K^x)^r x mu_d(K)^m x ...", or "1" for the trivial group.
  std::string to_string() const;
  /// Inverse of to_string; the result carries no generators.
  static GroupDescription parse(std::string_view text);

  /// Order of the group over `field`: (p-1)^r prod gcd(d, p-1) over F_p,
  /// 2^(#even d) over Q when r = 0, and nullopt when infinite.
  std::optional<BigInt> order_over(const FieldSpec& field) const;

  /// Compares the abstract shape only.
  friend bool operator==(const GroupDescription& a, const GroupDescription& b) {
    return a.free_rank == b.free_rank && a.torsion == b.torsion;
  }
};

/// Every element generated by `group.generators`, sorted. Needs a finite
/// group (F_p, or Q with free rank 0) of order at most `cap`.
std::vector<Vector> group_elements(const FieldSpec& field, std::size_t n_vars, const GroupDescription& group,
                                   std::uint64_t cap = kDefaultEnumerationCap);

struct SolutionCoset {
  FieldSpec field;
  std::size_t n_vars = 0;
  std::optional<Vector> particular;  // empty when infeasible
  GroupDescription homogeneous;

  bool feasible() const { return particular.has_value(); }
  /// particular * h for every homogeneous element h, sorted.
  std::vector<Vector> elements(std::uint64_t cap = kDefaultEnumerationCap) const;
};

GroupDescription solve_homogeneous(const MonomialSystem& system);
SolutionCoset solve_inhomogeneous(const MonomialSystem& system);

/// Exhaustive scan of (F_p^x)^n, parallel over the first variable.
std::vector<Vector> enumerate_solutions_bruteforce(const MonomialSystem& system,
                                                   std::uint64_t cap = kDefaultEnumerationCap);

namespace reference {
std::vector<Vector> enumerate_solutions_bruteforce(const MonomialSystem& system,
                                                   std::uint64_t cap = kDefaultEnumerationCap);
}

}  // namespace evoaut
