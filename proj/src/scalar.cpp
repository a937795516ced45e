#include "evoaut/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

namespace evoaut {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 to_u64(const BigInt& v) { return v.convert_to<u64>(); }

// Non-negative representative of v mod m.
u64 mod_big(const BigInt& v, u64 m) {
  BigInt r = v % m;
  if (r < 0) r += m;
  return to_u64(r);
}

bool miller_rabin(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 pollard_rho(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 x = 2, y = 2, d = 1;
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void factor_u64(u64 n, std::map<u64, unsigned>& out) {
  if (n == 1) return;
  if (miller_rabin(n)) {
    ++out[n];
    return;
  }
  u64 d = pollard_rho(n);
  factor_u64(d, out);
  factor_u64(n / d, out);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

BigInt parse_digits(std::string_view s, std::string_view whole) {
  if (s.empty()) throw Error(ErrorKind::Parse, "malformed scalar '" + std::string(whole) + "'");
  BigInt v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw Error(ErrorKind::Parse, "malformed scalar '" + std::string(whole) + "'");
    v = v * 10 + (c - '0');
  }
  return v;
}

// Inverse of a modulo m, gcd(a, m) = 1.
u64 mod_inverse(u64 a, u64 m) {
  __int128 r0 = static_cast<__int128>(a % m), r1 = m, x0 = 1, x1 = 0;
  while (r1 != 0) {
    __int128 q = r0 / r1;
    __int128 t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  __int128 r = x0 % static_cast<__int128>(m);
  if (r < 0) r += m;
  return static_cast<u64>(r);
}

u64 bsgs(u64 p, u64 g, u64 x) {
  const u64 m = static_cast<u64>(std::ceil(std::sqrt(static_cast<double>(p - 1))));
  std::unordered_map<u64, u64> baby;
  baby.reserve(m * 2);
  u64 cur = 1;
  for (u64 j = 0; j < m; ++j) {
    baby.emplace(cur, j);
    cur = mulmod(cur, g, p);
  }
  const u64 factor = powmod(powmod(g, m, p), p - 2, p);
  u64 gamma = x;
  for (u64 i = 0; i <= m; ++i) {
    auto it = baby.find(gamma);
    if (it != baby.end()) return (i * m + it->second) % (p - 1);
    gamma = mulmod(gamma, factor, p);
  }
  invariant_failure("discrete log not found; generator is not primitive");
}

}  // namespace

u64 powmod(u64 base, u64 exp, u64 mod) {
  u64 result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, mod);
    base = mulmod(base, base, mod);
    exp >>= 1;
  }
  return result;
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<u64> distinct_prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

DlogTable::DlogTable(u64 p, u64 generator) : p_(p), g_(generator), log_(p, 0), exp_(p - 1, 0) {
  u64 cur = 1;
  for (u64 k = 0; k + 1 < p; ++k) {
    exp_[k] = static_cast<std::uint32_t>(cur);
    log_[cur] = static_cast<std::uint32_t>(k);
    cur = mulmod(cur, g_, p_);
  }
}

// ---------------------------------------------------------------- Scalar

Scalar Scalar::residue(u64 p, std::int64_t value) {
  std::int64_t r = value % static_cast<std::int64_t>(p);
  if (r < 0) r += static_cast<std::int64_t>(p);
  return Scalar(p, static_cast<u64>(r));
}

Scalar Scalar::residue(u64 p, const BigInt& value) { return Scalar(p, mod_big(value, p)); }

Scalar Scalar::rational(BigRational value) { return Scalar(0, std::move(value)); }

Scalar Scalar::rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  return Scalar(0, BigRational(num) / den);
}

bool Scalar::is_zero() const {
  if (modulus_ != 0) return std::get<u64>(value_) == 0;
  return std::get<BigRational>(value_) == 0;
}

bool Scalar::is_one() const {
  if (modulus_ != 0) return std::get<u64>(value_) == 1 % modulus_;
  return std::get<BigRational>(value_) == 1;
}

u64 Scalar::residue_value() const {
  if (modulus_ == 0) throw Error(ErrorKind::NotPrimeField, "rational scalar has no residue");
  return std::get<u64>(value_);
}

const BigRational& Scalar::rational_value() const {
  if (modulus_ != 0) throw Error(ErrorKind::FieldMismatch, "residue scalar is not rational");
  return std::get<BigRational>(value_);
}

Scalar Scalar::operator-() const {
  if (modulus_ != 0) {
    u64 v = std::get<u64>(value_);
    return Scalar(modulus_, v == 0 ? u64{0} : modulus_ - v);
  }
  return Scalar(0, BigRational(-std::get<BigRational>(value_)));
}

Scalar Scalar::inv() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (modulus_ != 0) return Scalar(modulus_, powmod(std::get<u64>(value_), modulus_ - 2, modulus_));
  const auto& v = std::get<BigRational>(value_);
  return Scalar(0, BigRational(1) / v);
}

Scalar Scalar::pow(const BigInt& exponent) const {
  if (is_zero()) {
    if (exponent < 0) throw Error(ErrorKind::DivisionByZero, "negative power of zero");
    return exponent == 0 ? Scalar(modulus_, modulus_ != 0 ? std::variant<u64, BigRational>(u64{1 % modulus_})
                                                           : std::variant<u64, BigRational>(BigRational(1)))
                         : *this;
  }
  if (modulus_ != 0) {
    return Scalar(modulus_, powmod(std::get<u64>(value_), mod_big(exponent, modulus_ - 1), modulus_));
  }
  const auto& v = std::get<BigRational>(value_);
  if (v == 1) return *this;
  if (v == -1) return Scalar(0, BigRational(exponent % 2 != 0 ? -1 : 1));
  BigInt e = abs(exponent);
  if (e > (1 << 20)) throw Error(ErrorKind::TooLarge, "rational power exponent too large");
  const auto k = e.convert_to<unsigned>();
  BigRational r(boost::multiprecision::pow(numerator(v), k), boost::multiprecision::pow(denominator(v), k));
  if (exponent < 0) r = BigRational(1) / r;
  return Scalar(0, std::move(r));
}

void require_same_field(const Scalar& a, const Scalar& b) {
  if (a.modulus() != b.modulus()) throw Error(ErrorKind::FieldMismatch, "operands from different fields");
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same_field(a, b);
  if (a.modulus_ != 0) {
    return Scalar(a.modulus_, (std::get<u64>(a.value_) + std::get<u64>(b.value_)) % a.modulus_);
  }
  return Scalar(0, BigRational(std::get<BigRational>(a.value_) + std::get<BigRational>(b.value_)));
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same_field(a, b);
  if (a.modulus_ != 0) {
    return Scalar(a.modulus_, mulmod(std::get<u64>(a.value_), std::get<u64>(b.value_), a.modulus_));
  }
  return Scalar(0, BigRational(std::get<BigRational>(a.value_) * std::get<BigRational>(b.value_)));
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  require_same_field(a, b);
  return a * b.inv();
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.modulus_ == b.modulus_ && a.value_ == b.value_;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (a.modulus_ != b.modulus_) return a.modulus_ <=> b.modulus_;
  if (a.modulus_ != 0) return std::get<u64>(a.value_) <=> std::get<u64>(b.value_);
  const auto& x = std::get<BigRational>(a.value_);
  const auto& y = std::get<BigRational>(b.value_);
  if (x < y) return std::strong_ordering::less;
  if (y < x) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Scalar::to_string() const {
  if (modulus_ != 0) return std::to_string(std::get<u64>(value_));
  const auto& v = std::get<BigRational>(value_);
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

// ---------------------------------------------------------------- FieldSpec

FieldSpec FieldSpec::prime(u64 p) {
  if (p < 2 || p > kMaxPrime) {
    throw Error(ErrorKind::InvalidArgument, "prime " + std::to_string(p) + " outside [2, 2^31]");
  }
  if (!is_prime_u64(p)) throw Error(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
  FieldSpec f;
  f.p_ = p;
  if (p == 2) {
    f.g_ = 1;
  } else {
    const auto qs = distinct_prime_factors(p - 1);
    for (u64 g = 2; g < p; ++g) {
      if (std::all_of(qs.begin(), qs.end(), [&](u64 q) { return powmod(g, (p - 1) / q, p) != 1; })) {
        f.g_ = g;
        break;
      }
    }
  }
  if (p <= kDlogTableLimit) f.table_ = std::make_shared<const DlogTable>(p, f.g_);
  return f;
}

FieldSpec FieldSpec::rationals() { return FieldSpec(); }

u64 FieldSpec::generator() const {
  if (p_ == 0) throw Error(ErrorKind::NotPrimeField, "Q has no finite generator");
  return g_;
}

Scalar FieldSpec::zero() const { return from_int(0); }
Scalar FieldSpec::one() const { return from_int(1); }

Scalar FieldSpec::from_int(std::int64_t v) const {
  return p_ != 0 ? Scalar::residue(p_, v) : Scalar::rational(v, 1);
}

Scalar FieldSpec::from_rational(const BigRational& v) const {
  if (p_ == 0) return Scalar::rational(v);
  Scalar den = Scalar::residue(p_, denominator(v));
  if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "denominator divisible by p");
  return Scalar::residue(p_, numerator(v)) / den;
}

Scalar FieldSpec::parse(std::string_view text) const {
  std::string_view s = trim(text);
  const std::string_view whole = s;
  bool negative = false;
  if (s.starts_with("\xE2\x88\x92")) {
    negative = true;
    s.remove_prefix(3);
  } else if (s.starts_with('-')) {
    negative = true;
    s.remove_prefix(1);
  } else if (s.starts_with('+')) {
    s.remove_prefix(1);
  }
  const auto slash = s.find('/');
  BigInt num = parse_digits(s.substr(0, slash), whole);
  BigInt den = 1;
  if (slash != std::string_view::npos) den = parse_digits(s.substr(slash + 1), whole);
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + std::string(whole) + "'");
  if (negative) num = -num;
  return from_rational(BigRational(num, den));
}

std::string FieldSpec::to_string() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

FieldSpec parse_field(std::string_view tag) {
  tag = trim(tag);
  if (tag == "Q") return FieldSpec::rationals();
  if (tag.size() >= 2 && tag.front() == 'F') {
    BigInt p = parse_digits(tag.substr(1), tag);
    if (p > kMaxPrime) throw Error(ErrorKind::InvalidArgument, "prime too large: " + std::string(tag));
    return FieldSpec::prime(p.convert_to<u64>());
  }
  throw Error(ErrorKind::Parse, "unknown field tag '" + std::string(tag) + "'");
}

void require_field(const FieldSpec& field, const Scalar& s) {
  if (!field.contains(s)) {
    throw Error(ErrorKind::FieldMismatch, "scalar " + s.to_string() + " not in " + field.to_string());
  }
}

// ---------------------------------------------------------------- multiplicative helpers

u64 dlog(const FieldSpec& field, const Scalar& x) {
  if (!field.is_prime_field()) throw Error(ErrorKind::NotPrimeField, "dlog needs a prime field");
  require_field(field, x);
  if (x.is_zero()) throw Error(ErrorKind::ZeroArgument, "dlog of zero");
  const u64 p = field.characteristic();
  if (p == 2) return 0;
  if (const DlogTable* t = field.dlog_table()) return t->log_of(x.residue_value());
  return bsgs(p, field.generator(), x.residue_value());
}

std::vector<Scalar> nth_roots(const FieldSpec& field, const BigInt& n, const Scalar& a) {
  require_field(field, a);
  if (a.is_zero()) throw Error(ErrorKind::ZeroArgument, "nth_roots of zero");
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "root degree must be positive");
  std::vector<Scalar> out;
  if (field.is_prime_field()) {
    const u64 p = field.characteristic();
    const u64 m = p - 1;
    const u64 log_a = dlog(field, a);
    const u64 nm = mod_big(n, m);
    const u64 g = std::gcd(nm, m);  // gcd(0, m) = m
    if (log_a % g != 0) return out;
    const u64 mg = m / g;
    u64 y0 = 0;
    if (mg > 1) {
      // n/g is invertible modulo m/g
      const u64 inverse = mod_inverse(nm / g, mg);
      y0 = mulmod((log_a / g) % mg, inverse, mg);
    }
    for (u64 t = 0; t < g; ++t) {
      const u64 y = (y0 + t * mg) % m;
      out.push_back(Scalar::residue(p, static_cast<std::int64_t>(powmod(field.generator(), y, p))));
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  const BigRational& v = a.rational_value();
  const bool even = !boost::multiprecision::bit_test(n, 0);
  if (v < 0 && even) return out;
  FactoredRational f = FactoredRational::factor(v);
  BigRational root = 1;
  for (const auto& [q, e] : f.exponents) {
    if (e % n != 0) return out;
    BigInt k = e / n;
    BigInt qq = q;
    BigInt pw = boost::multiprecision::pow(qq, abs(k).convert_to<unsigned>());
    root *= (k > 0) ? BigRational(pw) : BigRational(BigInt(1), pw);
  }
  if (even) {
    out.push_back(Scalar::rational(-root));
    out.push_back(Scalar::rational(root));
  } else {
    out.push_back(Scalar::rational(v < 0 ? BigRational(-root) : root));
  }
  std::sort(out.begin(), out.end());
  return out;
}

BigInt mu_order(const FieldSpec& field, const BigInt& d) {
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "mu_order needs d >= 1");
  if (field.is_prime_field()) return boost::multiprecision::gcd(d, BigInt(field.characteristic() - 1));
  return boost::multiprecision::bit_test(d, 0) ? BigInt(1) : BigInt(2);
}

std::map<u64, unsigned> factor_integer(const BigInt& n_in) {
  if (n_in < 1) throw Error(ErrorKind::InvalidArgument, "factor_integer needs a positive integer");
  std::map<u64, unsigned> out;
  BigInt n = n_in;
  for (u64 d = 2; d < (1u << 16); d += (d == 2 ? 1 : 2)) {
    if (BigInt(d) * d > n) break;
    while (n % d == 0) {
      ++out[d];
      n /= d;
    }
  }
  if (n == 1) return out;
  if (n > std::numeric_limits<u64>::max()) {
    throw Error(ErrorKind::TooLarge, "cannot factor cofactor " + n.str());
  }
  factor_u64(to_u64(n), out);
  return out;
}

FactoredRational FactoredRational::factor(const BigRational& value) {
  if (value == 0) throw Error(ErrorKind::ZeroArgument, "cannot factor zero");
  FactoredRational f;
  f.sign = value < 0 ? -1 : 1;
  for (const auto& [q, e] : factor_integer(abs(numerator(value)))) f.exponents[q] += e;
  for (const auto& [q, e] : factor_integer(denominator(value))) f.exponents[q] -= e;
  return f;
}

BigRational FactoredRational::value() const {
  BigInt num = 1, den = 1;
  for (const auto& [q, e] : exponents) {
    BigInt pw = boost::multiprecision::pow(BigInt(q), abs(e).convert_to<unsigned>());
    if (e > 0) {
      num *= pw;
    } else {
      den *= pw;
    }
  }
  return BigRational(sign * num, den);
}

FactoredRational FactoredRational::operator*(const FactoredRational& o) const {
  FactoredRational r = *this;
  r.sign *= o.sign;
  for (const auto& [q, e] : o.exponents) {
    BigInt& slot = r.exponents[q];
    slot += e;
    if (slot == 0) r.exponents.erase(q);
  }
  return r;
}

FactoredRational FactoredRational::inverse() const {
  FactoredRational r = *this;
  for (auto& [q, e] : r.exponents) e = -e;
  return r;
}

FactoredRational FactoredRational::pow(const BigInt& e) const {
  FactoredRational r;
  if (e == 0) return r;
  r.sign = boost::multiprecision::bit_test(e, 0) ? sign : 1;
  for (const auto& [q, x] : exponents) r.exponents[q] = x * e;
  return r;
}

}  // namespace evoaut
