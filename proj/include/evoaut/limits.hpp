#pragma once

// Finite truncations of inverse systems of multiplicative groups under power
// maps, and the 2-adic Tate module of K^x. Maps run from index i+1 down to
// index i: x_{i+1}^{n_{i+1}} = x_i.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "evoaut/algebra.hpp"
#include "evoaut/monomial.hpp"

namespace evoaut {

inline constexpr std::uint64_t kDefaultChainBudget = 10'000'000;

struct ChainSpec {
  FieldSpec field;
  std::vector<BigInt> exponents;  // n_1, ..., n_N, each >= 1
  std::optional<Scalar> anchor;   // when present, x_1^{n_1} = anchor

  std::size_t depth() const { return exponents.size(); }
};

struct TruncatedLimit {
  std::size_t depth = 0;
  std::vector<Vector> elements;  // sorted compatible tuples (x_1, ..., x_N)
  /// Smallest s < N such that the first coordinates reachable by depth-s
  /// chains already equal those reachable at depth N.
  std::optional<std::size_t> stabilization_depth;
};

/// Backward propagation from every x_N in F_p^x. Needs (p-1) * N <= budget.
TruncatedLimit truncated_chain(const ChainSpec& spec, std::uint64_t budget = kDefaultChainBudget);

/// Distinct prefixes (x_1, ..., x_k) of the given tuples, sorted.
std::vector<Vector> project(const std::vector<Vector>& tuples, std::size_t k);

/// 2-adic valuation of a positive integer.
unsigned two_adic_valuation(const BigInt& n);

/// Field tags accepted by the Tate computation: F<p>, Q, and the symbolic
/// labels acl-not2 (algebraically closed, characteristic not 2) and
/// Q-zeta2inf (Q with all 2-power roots of unity adjoined).
struct TateField {
  enum class Kind { Prime, Rationals, AlgebraicallyClosedNot2, QZeta2Inf };
  Kind kind = Kind::Rationals;
  std::uint64_t p = 0;

  static TateField parse(std::string_view tag);
  std::string to_string() const;
};

struct TateModule {
  enum class Kind { Trivial, TwoAdicIntegers };
  Kind kind = Kind::Trivial;
  /// Index from which |mu_{2^n}(K)| stops growing, for computable fields.
  std::optional<unsigned> stationary_index;

  /// "1" or "Z_2".
  std::string to_string() const;
};

TateModule tate_module_2(const TateField& field);

/// Enumerates every depth-N chain x_i in mu_{2^i}(F_p) with x_{i+1}^2 = x_i
/// and checks that coordinates 1..N-s are 1, where s = v_2(p-1), and that
/// there are exactly 2^s chains. Throws DepthTooSmall unless N > s + 1.
bool verify_stationary_collapse(const FieldSpec& field, std::size_t depth);

/// u_1^2 = u_1 and u_{i+1}^2 = u_i.
EvolutionAlgebra diomucho_algebra(const FieldSpec& field, std::size_t n);
GroupDescription diomucho_truncation(const FieldSpec& field, std::size_t n);

}  // namespace evoaut
