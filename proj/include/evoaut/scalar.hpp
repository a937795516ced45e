#pragma once

// Exact scalars over the two supported ground fields: prime fields F_p and
// the rationals. Also hosts the multiplicative-group helpers (discrete logs,
// prime factorizations, n-th roots) that the monomial solver is built on.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "evoaut/error.hpp"

namespace evoaut {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

enum class FieldKind { Prime, Rationals };

/// Hard cap on the characteristic of supported prime fields.
inline constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 31);

/// Fields up to this size get a full discrete-log table; larger ones fall
/// back to baby-step giant-step.
inline constexpr std::uint64_t kDlogTableLimit = (std::uint64_t{1} << 20);

bool is_prime_u64(std::uint64_t n);
std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

class DlogTable {
 public:
  DlogTable(std::uint64_t p, std::uint64_t generator);

  std::uint64_t prime() const { return p_; }
  std::uint64_t generator() const { return g_; }
  std::size_t size() const { return log_.size() - 1; }
  std::uint32_t log_of(std::uint64_t x) const { return log_[x]; }
  std::uint32_t power(std::uint64_t k) const { return exp_[k % (p_ - 1)]; }

 private:
  std::uint64_t p_;
  std::uint64_t g_;
  std::vector<std::uint32_t> log_;  // indexed by residue, entry 0 unused
  std::vector<std::uint32_t> exp_;  // exp_[k] = g^k
};

class FieldSpec;

class Scalar {
 public:
  /// Residue of `value` modulo the prime `p`.
  static Scalar residue(std::uint64_t p, std::int64_t value);
  static Scalar residue(std::uint64_t p, const BigInt& value);
  static Scalar rational(BigRational value);
  static Scalar rational(std::int64_t num, std::int64_t den = 1);

  FieldKind kind() const { return modulus_ == 0 ? FieldKind::Rationals : FieldKind::Prime; }
  /// The prime p for residues, 0 for rationals.
  std::uint64_t modulus() const { return modulus_; }

  bool is_zero() const;
  bool is_one() const;

  std::uint64_t residue_value() const;
  const BigRational& rational_value() const;

  Scalar operator-() const;
  Scalar inv() const;
  Scalar pow(const BigInt& exponent) const;
  Scalar pow(std::int64_t exponent) const { return pow(BigInt(exponent)); }

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  /// Canonical order: residues by representative, rationals by value.
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  Scalar(std::uint64_t modulus, std::variant<std::uint64_t, BigRational> value)
      : modulus_(modulus), value_(std::move(value)) {}

  std::uint64_t modulus_ = 0;
  std::variant<std::uint64_t, BigRational> value_;
};

using Vector = std::vector<Scalar>;

/// One of the two computable ground fields. Prime fields carry a fixed
/// multiplicative generator (smallest one, searched upward from 2).
class FieldSpec {
 public:
  static FieldSpec prime(std::uint64_t p);
  static FieldSpec rationals();

  FieldKind kind() const { return p_ == 0 ? FieldKind::Rationals : FieldKind::Prime; }
  bool is_prime_field() const { return p_ != 0; }
  /// p for F_p, 0 for Q.
  std::uint64_t characteristic() const { return p_; }
  std::uint64_t generator() const;
  /// Null for rationals and for primes above kDlogTableLimit.
  const DlogTable* dlog_table() const { return table_.get(); }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t v) const;
  Scalar from_rational(const BigRational& v) const;
  /// Accepts "12", "-3", "a/b", "-a/b" (ASCII or Unicode minus).
  Scalar parse(std::string_view text) const;
  bool contains(const Scalar& s) const { return s.modulus() == p_; }

  /// "F7" or "Q".
  std::string to_string() const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) { return a.p_ == b.p_; }

 private:
  FieldSpec() = default;
  std::uint64_t p_ = 0;
  std::uint64_t g_ = 0;
  std::shared_ptr<const DlogTable> table_;
};

/// Parses "F<p>" or "Q".
FieldSpec parse_field(std::string_view tag);

void require_same_field(const Scalar& a, const Scalar& b);
void require_field(const FieldSpec& field, const Scalar& s);

/// Discrete log base the field generator, in [0, p-1).
std::uint64_t dlog(const FieldSpec& field, const Scalar& x);

/// mu_n^{(a)}(K) = { x in K^x : x^n = a }, sorted canonically.
std::vector<Scalar> nth_roots(const FieldSpec& field, const BigInt& n, const Scalar& a);

/// |mu_d(K)|.
BigInt mu_order(const FieldSpec& field, const BigInt& d);

/// Nonzero rational as sign times a product of prime powers (negative
/// exponents live in the denominator).
struct FactoredRational {
  int sign = 1;
  std::map<std::uint64_t, BigInt> exponents;

  /// Trial division plus Pollard rho; cofactors beyond 64 bits are rejected
  /// with TooLarge.
  static FactoredRational factor(const BigRational& value);

  BigRational value() const;
  FactoredRational operator*(const FactoredRational& o) const;
  FactoredRational inverse() const;
  FactoredRational pow(const BigInt& e) const;
  bool is_one() const { return sign == 1 && exponents.empty(); }

  friend bool operator==(const FactoredRational&, const FactoredRational&) = default;
};

/// Prime factorization of a positive integer: prime -> multiplicity.
std::map<std::uint64_t, unsigned> factor_integer(const BigInt& n);

}  // namespace evoaut
