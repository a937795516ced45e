#include "evoaut/limits.hpp"

#include <algorithm>
#include <set>

#include "evoaut/autgroup.hpp"

namespace evoaut {

namespace {

// Every chain ending in some x_N, filtered by the anchor.
std::vector<Vector> chains(const FieldSpec& field, const std::vector<BigInt>& exps, const std::optional<Scalar>& anchor,
                           std::size_t depth) {
  std::vector<Vector> out;
  const std::uint64_t p = field.characteristic();
  for (std::uint64_t top = 1; top < p; ++top) {
    Vector x(depth, field.one());
    x[depth - 1] = field.from_int(static_cast<std::int64_t>(top));
    for (std::size_t i = depth - 1; i > 0; --i) x[i - 1] = x[i].pow(exps[i]);
    if (anchor && !(x[0].pow(exps[0]) == *anchor)) continue;
    out.push_back(std::move(x));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::set<Vector> heads(const std::vector<Vector>& tuples) {
  std::set<Vector> out;
  for (const Vector& t : tuples) out.insert(Vector{t.front()});
  return out;
}

}  // namespace

TruncatedLimit truncated_chain(const ChainSpec& spec, std::uint64_t budget) {
  if (!spec.field.is_prime_field()) throw Error(ErrorKind::NotPrimeField, "truncated chains are enumerated over F_p");
  const std::size_t n = spec.depth();
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "chain needs at least one exponent");
  for (const BigInt& e : spec.exponents) {
    if (e < 1) throw Error(ErrorKind::InvalidArgument, "chain exponents must be >= 1");
  }
  if (spec.anchor) {
    require_field(spec.field, *spec.anchor);
    if (spec.anchor->is_zero()) throw Error(ErrorKind::ZeroArgument, "chain anchor must be nonzero");
  }
  const BigInt work = BigInt(spec.field.characteristic() - 1) * n;
  if (work > budget) throw Error(ErrorKind::TooLarge, "(p-1)*N = " + work.str() + " exceeds chain budget");

  TruncatedLimit out;
  out.depth = n;
  out.elements = chains(spec.field, spec.exponents, spec.anchor, n);
  for (const Vector& x : out.elements) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (!(x[i + 1].pow(spec.exponents[i + 1]) == x[i])) invariant_failure("incompatible chain tuple");
    }
  }
  const std::set<Vector> final_heads = heads(out.elements);
  for (std::size_t s = 1; s < n; ++s) {
    if (heads(chains(spec.field, spec.exponents, spec.anchor, s)) == final_heads) {
      out.stabilization_depth = s;
      break;
    }
  }
  return out;
}

std::vector<Vector> project(const std::vector<Vector>& tuples, std::size_t k) {
  std::vector<Vector> out;
  for (const Vector& t : tuples) {
    if (t.size() < k) throw Error(ErrorKind::DimensionMismatch, "projection beyond tuple length");
    out.emplace_back(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(k));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

unsigned two_adic_valuation(const BigInt& n) {
  if (n <= 0) throw Error(ErrorKind::InvalidArgument, "2-adic valuation of a non-positive integer");
  unsigned v = 0;
  BigInt m = n;
  while (m % 2 == 0) {
    m /= 2;
    ++v;
  }
  return v;
}

TateField TateField::parse(std::string_view tag) {
  if (tag == "acl-not2") return TateField{Kind::AlgebraicallyClosedNot2, 0};
  if (tag == "Q-zeta2inf") return TateField{Kind::QZeta2Inf, 0};
  const FieldSpec f = parse_field(tag);
  return f.is_prime_field() ? TateField{Kind::Prime, f.characteristic()} : TateField{Kind::Rationals, 0};
}

std::string TateField::to_string() const {
  switch (kind) {
    case Kind::Prime: return "F" + std::to_string(p);
    case Kind::Rationals: return "Q";
    case Kind::AlgebraicallyClosedNot2: return "acl-not2";
    case Kind::QZeta2Inf: return "Q-zeta2inf";
  }
  return "?";
}

std::string TateModule::to_string() const { return kind == Kind::Trivial ? "1" : "Z_2"; }

TateModule tate_module_2(const TateField& field) {
  switch (field.kind) {
    case TateField::Kind::Prime:
      // F_2: x^(2^n) = 1 forces x = 1, and v_2(1) = 0
      return TateModule{TateModule::Kind::Trivial, two_adic_valuation(field.p - 1)};
    case TateField::Kind::Rationals:
      return TateModule{TateModule::Kind::Trivial, 1};
    case TateField::Kind::AlgebraicallyClosedNot2:
    case TateField::Kind::QZeta2Inf:
      return TateModule{TateModule::Kind::TwoAdicIntegers, std::nullopt};
  }
  return {};
}

bool verify_stationary_collapse(const FieldSpec& field, std::size_t depth) {
  if (!field.is_prime_field()) throw Error(ErrorKind::NotPrimeField, "stationary collapse is checked over F_p");
  const std::uint64_t p = field.characteristic();
  const unsigned s = two_adic_valuation(p - 1);
  if (depth <= s + 1) {
    throw Error(ErrorKind::DepthTooSmall,
                "depth " + std::to_string(depth) + " must exceed v_2(p-1) + 1 = " + std::to_string(s + 1));
  }
  std::size_t count = 0;
  const BigInt top_order = BigInt(1) << depth;
  for (std::uint64_t top = 1; top < p; ++top) {
    const Scalar xn = field.from_int(static_cast<std::int64_t>(top));
    if (!xn.pow(top_order).is_one()) continue;
    Vector x(depth, field.one());
    x[depth - 1] = xn;
    for (std::size_t i = depth - 1; i > 0; --i) x[i - 1] = x[i] * x[i];
    for (std::size_t i = 0; i < depth; ++i) {
      if (!x[i].pow(BigInt(1) << (i + 1)).is_one()) return false;
    }
    for (std::size_t i = 0; i < depth - s; ++i) {
      if (!x[i].is_one()) return false;
    }
    ++count;
  }
  return count == (std::size_t{1} << s);
}

EvolutionAlgebra diomucho_algebra(const FieldSpec& field, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "dimension must be at least 1");
  Matrix m(field, n, n);
  m(0, 0) = field.one();
  for (std::size_t i = 1; i < n; ++i) m(i - 1, i) = field.one();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("u" + std::to_string(i + 1));
  return EvolutionAlgebra(field, std::move(labels), std::move(m));
}

GroupDescription diomucho_truncation(const FieldSpec& field, std::size_t n) {
  return diag_group(diomucho_algebra(field, n));
}

}  // namespace evoaut
