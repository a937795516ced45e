#include "evoaut/algebra.hpp"

#include <algorithm>
#include <set>

#include "residue.hpp"

namespace evoaut {

EvolutionAlgebra::EvolutionAlgebra(FieldSpec field, std::vector<std::string> labels, Matrix structure,
                                   std::size_t max_dim)
    : labels_(std::move(labels)), structure_(std::move(structure)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "evolution algebra needs at least one basis element");
  if (n > max_dim) {
    throw Error(ErrorKind::TooLarge, "dimension " + std::to_string(n) + " exceeds cap " + std::to_string(max_dim));
  }
  if (!(structure_.field() == field)) throw Error(ErrorKind::FieldMismatch, "structure matrix field");
  if (structure_.rows() != n || structure_.cols() != n) {
    throw Error(ErrorKind::DimensionMismatch, "structure matrix must be n x n");
  }
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != n) throw Error(ErrorKind::InvalidArgument, "basis labels must be unique");
}

EvolutionAlgebra EvolutionAlgebra::from_squares(const FieldSpec& field, const std::vector<Vector>& squares,
                                                std::vector<std::string> labels) {
  const std::size_t n = squares.size();
  if (labels.empty()) {
    for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i + 1));
  }
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (squares[i].size() != n) throw Error(ErrorKind::DimensionMismatch, "square has wrong length");
    for (std::size_t j = 0; j < n; ++j) {
      require_field(field, squares[i][j]);
      m(j, i) = squares[i][j];
    }
  }
  return EvolutionAlgebra(field, std::move(labels), std::move(m));
}

Vector EvolutionAlgebra::basis_vector(std::size_t i) const {
  Vector v = zero_vector();
  v.at(i) = field().one();
  return v;
}

namespace {

void check_vector(const EvolutionAlgebra& a, const Vector& u) {
  if (u.size() != a.dim()) throw Error(ErrorKind::DimensionMismatch, "vector length differs from dimension");
  for (const Scalar& s : u) require_field(a.field(), s);
}

bool is_zero_vector(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

// True when b is a nonzero multiple of a; the factor is stored in k (b = k a).
bool proportional(const Vector& a, const Vector& b, Scalar& k) {
  std::size_t lead = 0;
  while (lead < a.size() && a[lead].is_zero()) ++lead;
  if (lead == a.size() || b[lead].is_zero()) return false;
  k = b[lead] / a[lead];
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(b[i] == k * a[i])) return false;
  }
  return true;
}

}  // namespace

Vector multiply(const EvolutionAlgebra& a, const Vector& u, const Vector& v) {
  check_vector(a, u);
  check_vector(a, v);
  Vector out = a.zero_vector();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const Scalar c = u[i] * v[i];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < a.dim(); ++j) out[j] += c * a.omega(j, i);
  }
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> two_li_witness(const EvolutionAlgebra& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      // rank 2 iff some 2x2 minor of columns (i, j) is nonzero
      bool independent = false;
      for (std::size_t r = 0; r < n && !independent; ++r) {
        for (std::size_t s = r + 1; s < n && !independent; ++s) {
          const Scalar minor = a.omega(r, i) * a.omega(s, j) - a.omega(s, i) * a.omega(r, j);
          independent = !minor.is_zero();
        }
      }
      if (!independent) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

bool is_2li(const EvolutionAlgebra& a) { return !two_li_witness(a).has_value(); }

bool is_nondegenerate(const EvolutionAlgebra& a) {
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (is_zero_vector(a.square(i))) return false;
  }
  return true;
}

bool is_perfect(const EvolutionAlgebra& a) { return rank(a.structure()) == a.dim(); }

bool is_invertible(const EvolutionAlgebra& a) { return !determinant(a.structure()).is_zero(); }

const char* to_string(Naturality n) {
  switch (n) {
    case Naturality::Natural: return "true";
    case Naturality::NotNatural: return "false";
    case Naturality::Indeterminate: return "indeterminate";
  }
  return "?";
}

namespace detail {
bool natural_basis_contains(const EvolutionAlgebra& a, const Vector& u);
}

Naturality is_natural_vector(const EvolutionAlgebra& a, const Vector& u) {
  check_vector(a, u);
  if (is_zero_vector(u)) throw Error(ErrorKind::ZeroVector, "naturality of the zero vector");
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!u[i].is_zero()) support.push_back(i);
  }
  std::vector<Vector> squares;
  for (std::size_t i : support) squares.push_back(a.square(i));

  if (is_zero_vector(multiply(a, u, u))) {
    return std::all_of(squares.begin(), squares.end(), is_zero_vector) ? Naturality::Natural
                                                                        : Naturality::NotNatural;
  }
  const std::size_t dim = rank_of(a.field(), squares);
  if (dim >= 2) return Naturality::NotNatural;
  if (a.field().characteristic() != 2) return Naturality::Natural;
  if (a.dim() <= 4) return detail::natural_basis_contains(a, u) ? Naturality::Natural : Naturality::NotNatural;
  return Naturality::Indeterminate;
}

std::vector<Vector> apply(const BasisChange& change, const std::vector<Vector>& basis) {
  if (change.perm.size() != basis.size() || change.scales.size() != basis.size()) {
    throw Error(ErrorKind::DimensionMismatch, "basis change size");
  }
  std::vector<Vector> out;
  out.reserve(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Vector v = basis[change.perm(i)];
    for (Scalar& s : v) s = change.scales[i] * s;
    out.push_back(std::move(v));
  }
  return out;
}

void check_natural_basis(const EvolutionAlgebra& a, const std::vector<Vector>& basis) {
  if (basis.size() != a.dim()) {
    throw Error(ErrorKind::NotANaturalBasis, "expected " + std::to_string(a.dim()) + " vectors, got " +
                                                 std::to_string(basis.size()));
  }
  for (const Vector& v : basis) check_vector(a, v);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (!is_zero_vector(multiply(a, basis[i], basis[j]))) {
        throw Error(ErrorKind::NotANaturalBasis, "product of elements " + std::to_string(i + 1) + " and " +
                                                     std::to_string(j + 1) + " is nonzero");
      }
    }
  }
  std::vector<Vector> prefix;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    prefix.push_back(basis[i]);
    if (rank_of(a.field(), prefix) != prefix.size()) {
      throw Error(ErrorKind::NotANaturalBasis,
                  "element " + std::to_string(i + 1) + " depends linearly on the preceding ones");
    }
  }
}

std::optional<BasisChange> same_orbit(const EvolutionAlgebra& a, const std::vector<Vector>& b1,
                                      const std::vector<Vector>& b2) {
  check_natural_basis(a, b1);
  check_natural_basis(a, b2);
  std::vector<std::size_t> images;
  Vector scales;
  for (const Vector& target : b2) {
    bool found = false;
    for (std::size_t j = 0; j < b1.size() && !found; ++j) {
      Scalar k = a.field().zero();
      if (proportional(b1[j], target, k)) {
        images.push_back(j);
        scales.push_back(k);
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  // independence of b2 makes the matched indices distinct
  return BasisChange{Permutation(std::move(images)), std::move(scales)};
}

}  // namespace evoaut
