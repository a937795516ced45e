#include "evoaut/autgroup.hpp"

#include <algorithm>
#include <atomic>
#include <exception>

#include "residue.hpp"

namespace evoaut {

bool satisfies_law(const EvolutionAlgebra& a, const Permutation& sigma, const Vector& scales) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    const Scalar sq = scales[i] * scales[i];
    for (std::size_t j = 0; j < n; ++j) {
      if (!(a.omega(sigma(j), sigma(i)) * sq == a.omega(j, i) * scales[j])) return false;
    }
  }
  return true;
}

MonomialAutomorphism::MonomialAutomorphism(std::shared_ptr<const EvolutionAlgebra> algebra, Permutation sigma,
                                           Vector scales)
    : algebra_(std::move(algebra)), sigma_(std::move(sigma)), scales_(std::move(scales)) {
  const std::size_t n = algebra_->dim();
  if (sigma_.size() != n || scales_.size() != n) {
    throw Error(ErrorKind::DimensionMismatch, "monomial map size differs from dimension");
  }
  for (const Scalar& s : scales_) {
    require_field(algebra_->field(), s);
    if (s.is_zero()) throw Error(ErrorKind::ZeroArgument, "monomial map with zero scale");
  }
  if (!satisfies_law(*algebra_, sigma_, scales_)) {
    throw Error(ErrorKind::InvalidArgument, "monomial map " + sigma_.cycles() + " is not an algebra automorphism");
  }
}

MonomialAutomorphism::MonomialAutomorphism(const EvolutionAlgebra& algebra, Permutation sigma, Vector scales)
    : MonomialAutomorphism(std::make_shared<const EvolutionAlgebra>(algebra), std::move(sigma), std::move(scales)) {}

MonomialAutomorphism MonomialAutomorphism::identity(std::shared_ptr<const EvolutionAlgebra> algebra) {
  const std::size_t n = algebra->dim();
  Vector ones(n, algebra->field().one());
  return MonomialAutomorphism(std::move(algebra), Permutation::identity(n), std::move(ones));
}

Matrix MonomialAutomorphism::to_matrix() const {
  Matrix t(algebra_->field(), sigma_.size(), sigma_.size());
  for (std::size_t i = 0; i < sigma_.size(); ++i) t(sigma_(i), i) = scales_[i];
  return t;
}

Vector MonomialAutomorphism::apply(const Vector& v) const {
  if (v.size() != sigma_.size()) throw Error(ErrorKind::DimensionMismatch, "vector length");
  Vector out = algebra_->zero_vector();
  for (std::size_t i = 0; i < v.size(); ++i) out[sigma_(i)] = scales_[i] * v[i];
  return out;
}

namespace {

void require_same_algebra(const MonomialAutomorphism& f, const MonomialAutomorphism& g) {
  if (f.algebra_ptr() != g.algebra_ptr() && !(f.algebra() == g.algebra())) {
    throw Error(ErrorKind::AlgebraMismatch, "automorphisms of different algebras");
  }
}

}  // namespace

MonomialAutomorphism compose(const MonomialAutomorphism& f, const MonomialAutomorphism& g) {
  require_same_algebra(f, g);
  const Permutation& tau = g.sigma();
  Vector scales;
  for (std::size_t i = 0; i < tau.size(); ++i) scales.push_back(g.scales()[i] * f.scales()[tau(i)]);
  return MonomialAutomorphism(f.algebra_ptr(), f.sigma().after(tau), std::move(scales));
}

MonomialAutomorphism invert(const MonomialAutomorphism& f) {
  const Permutation inv = f.sigma().inverse();
  Vector scales;
  for (std::size_t j = 0; j < inv.size(); ++j) scales.push_back(f.scales()[inv(j)].inv());
  return MonomialAutomorphism(f.algebra_ptr(), inv, std::move(scales));
}

namespace {

std::vector<BigInt> edge_row(std::size_t n, std::size_t i, std::size_t j) {
  std::vector<BigInt> row(n);
  row[i] += 2;
  row[j] -= 1;
  return row;
}

}  // namespace

MonomialSystem diag_system(const EvolutionAlgebra& a) {
  std::vector<MonomialRow> rows;
  const WeightedGraph g = algebra_to_wgraph(a);
  for (const Edge& e : g.edges()) rows.push_back(MonomialRow{edge_row(a.dim(), e.src, e.dst), a.field().one()});
  return MonomialSystem(a.field(), a.dim(), std::move(rows));
}

GroupDescription diag_group(const EvolutionAlgebra& a) { return solve_homogeneous(diag_system(a)); }

MonomialSystem twisted_system(const EvolutionAlgebra& a, const GraphAutomorphism& sigma) {
  const WeightedGraph g = algebra_to_wgraph(a);
  if (!is_graph_morphism(g, g, sigma.sigma)) {
    throw Error(ErrorKind::NotAGraphAutomorphism, sigma.sigma.cycles() + " does not preserve the graph");
  }
  const Permutation& s = sigma.sigma;
  std::vector<MonomialRow> rows;
  for (const Edge& e : g.edges()) {
    rows.push_back(MonomialRow{edge_row(a.dim(), e.src, e.dst), e.weight / a.omega(s(e.dst), s(e.src))});
  }
  return MonomialSystem(a.field(), a.dim(), std::move(rows));
}

SolutionCoset twisted_limit(const EvolutionAlgebra& a, const GraphAutomorphism& sigma) {
  return solve_inhomogeneous(twisted_system(a, sigma));
}

std::optional<BigInt> AutPresentation::order() const {
  const std::optional<BigInt> d = diag.order_over(algebra->field());
  if (!d) return std::nullopt;
  return *d * lifted.size();
}

namespace {

AutPresentation assemble(const EvolutionAlgebra& a, std::size_t graph_cap, bool parallel) {
  auto algebra = std::make_shared<const EvolutionAlgebra>(a);
  const std::vector<GraphAutomorphism> sigmas = enumerate_graph_automorphisms(algebra_to_wgraph(a), graph_cap);

  std::vector<std::optional<SolutionCoset>> cosets(sigmas.size());
  std::vector<std::exception_ptr> errors(sigmas.size());
  const auto count = static_cast<std::int64_t>(sigmas.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::int64_t k = 0; k < count; ++k) {
    try {
      cosets[k] = twisted_limit(a, sigmas[k]);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  AutPresentation out{algebra, diag_group(a), {}, {}, {}, Completeness::SubgroupOnly};
  for (std::size_t k = 0; k < sigmas.size(); ++k) {
    SolutionCoset& c = *cosets[k];
    if (!c.feasible()) {
      out.non_lifting.push_back(sigmas[k]);
      continue;
    }
    MonomialAutomorphism lift(algebra, sigmas[k].sigma, *c.particular);
    out.lifted.push_back(LiftedSigma{sigmas[k], std::move(lift), std::move(c)});
  }
  if (out.lifted.empty() || !out.lifted.front().sigma.sigma.is_identity()) {
    invariant_failure("identity does not lift");
  }
  if (!(out.lifted.front().coset.homogeneous == out.diag)) invariant_failure("identity coset differs from Diag");

  const std::size_t m = out.lifted.size();
  auto index_of = [&](const Permutation& p) {
    for (std::size_t k = 0; k < m; ++k) {
      if (out.lifted[k].sigma.sigma == p) return k;
    }
    invariant_failure("liftable symmetries are not closed under composition");
  };
  out.law.assign(m, std::vector<std::size_t>(m));
  for (std::size_t x = 0; x < m; ++x) {
    index_of(out.lifted[x].sigma.sigma.inverse());
    for (std::size_t y = 0; y < m; ++y) out.law[x][y] = index_of(out.lifted[x].sigma.sigma.after(out.lifted[y].sigma.sigma));
  }
  out.completeness = is_2li(a) || is_invertible(a) ? Completeness::FullAut : Completeness::SubgroupOnly;
  return out;
}

}  // namespace

AutPresentation assemble_aut(const EvolutionAlgebra& a, std::size_t graph_cap) { return assemble(a, graph_cap, true); }

std::vector<MonomialAutomorphism> materialize(const AutPresentation& aut, std::uint64_t cap) {
  std::vector<MonomialAutomorphism> out;
  for (const LiftedSigma& l : aut.lifted) {
    for (Vector& x : l.coset.elements(cap)) out.emplace_back(aut.algebra, l.sigma.sigma, std::move(x));
    if (out.size() > cap) throw Error(ErrorKind::TooLarge, "U exceeds enumeration cap " + std::to_string(cap));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

using detail::u32;
using detail::u64;
using Column = std::vector<u32>;

// Images of the basis vectors are chosen one at a time. The image of e_k
// must be orthogonal to every earlier image, which is a linear condition, so
// candidates are drawn from a kernel; the kernel together with the images
// so far must still span F_p^n.
struct AutSearch {
  const detail::ResidueAlgebra& alg;
  std::uint64_t budget;
  std::atomic<std::uint64_t>& nodes;
  std::atomic<bool>& aborted;
  // square law of column k becomes checkable once column checks_after[.] is chosen
  std::vector<std::vector<std::size_t>> checks_after;
  std::vector<std::vector<Column>> found;

  AutSearch(const detail::ResidueAlgebra& a, std::uint64_t b, std::atomic<std::uint64_t>& counter,
            std::atomic<bool>& flag)
      : alg(a), budget(b), nodes(counter), aborted(flag) {
    const std::size_t n = alg.n();
    checks_after.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t ready = k;
      for (std::size_t j = 0; j < n; ++j) {
        if (alg.omega(j, k) != 0) ready = std::max(ready, j);
      }
      checks_after[ready].push_back(k);
    }
  }

  bool tick() {
    if (nodes.fetch_add(1, std::memory_order_relaxed) + 1 > budget) aborted = true;
    return !aborted;
  }

  bool square_law(const std::vector<Column>& cols, std::size_t k) const {
    const std::size_t n = alg.n();
    const u32 p = alg.p();
    Column lhs(n);
    alg.product(cols[k].data(), cols[k].data(), lhs.data());
    for (std::size_t r = 0; r < n; ++r) {
      u64 acc = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (alg.omega(j, k) != 0) acc = (acc + static_cast<u64>(alg.omega(j, k)) * cols[j][r]) % p;
      }
      if (acc != lhs[r]) return false;
    }
    return true;
  }

  bool laws_hold(const std::vector<Column>& cols) const {
    for (std::size_t k : checks_after[cols.size() - 1]) {
      if (!square_law(cols, k)) return false;
    }
    return true;
  }

  // rows of the map v -> c * v for a fixed c
  void add_constraints(std::vector<Column>& rows, const Column& c) const {
    const std::size_t n = alg.n();
    for (std::size_t j = 0; j < n; ++j) {
      Column row(n);
      bool nonzero = false;
      for (std::size_t i = 0; i < n; ++i) {
        row[i] = static_cast<u32>(static_cast<u64>(alg.omega(j, i)) * c[i] % alg.p());
        nonzero = nonzero || row[i] != 0;
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  }

  void extend(std::vector<Column>& cols, const std::vector<Column>& constraints, const detail::Echelon& echelon) {
    const std::size_t n = alg.n();
    if (cols.size() == n) {
      found.push_back(cols);
      return;
    }
    const std::vector<Column> kernel = detail::kernel_basis(constraints, n, alg.p());
    detail::Echelon spanning = echelon;
    for (const Column& v : kernel) spanning.try_add(v.data());
    if (spanning.rank() < n) return;

    // every nonzero combination of the kernel basis
    const std::size_t d = kernel.size();
    std::vector<u32> coeff(d, 0);
    for (;;) {
      std::size_t k = 0;
      while (k < d && coeff[k] == alg.p() - 1) coeff[k++] = 0;
      if (k == d) return;
      ++coeff[k];
      if (!tick()) return;
      Column v(n, 0);
      for (std::size_t b = 0; b < d; ++b) {
        if (coeff[b] == 0) continue;
        for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<u32>((v[i] + static_cast<u64>(coeff[b]) * kernel[b][i]) % alg.p());
      }
      try_column(cols, constraints, echelon, std::move(v));
    }
  }

  void try_column(std::vector<Column>& cols, const std::vector<Column>& constraints, const detail::Echelon& echelon,
                  Column v) {
    detail::Echelon next = echelon;
    if (!next.try_add(v.data())) return;
    cols.push_back(std::move(v));
    if (laws_hold(cols)) {
      std::vector<Column> more = constraints;
      add_constraints(more, cols.back());
      extend(cols, more, next);
    }
    cols.pop_back();
  }

  void from_first(const Column& first) {
    if (!tick()) return;
    std::vector<Column> cols;
    try_column(cols, {}, detail::Echelon(alg.p(), alg.n()), first);
  }
};

Column digits_of(u64 index, u32 p, std::size_t n) {
  Column v(n);
  for (std::size_t k = 0; k < n; ++k) {
    v[k] = static_cast<u32>(index % p);
    index /= p;
  }
  return v;
}

std::vector<Matrix> to_matrices(const EvolutionAlgebra& a, const std::vector<std::vector<Column>>& found) {
  const std::size_t n = a.dim();
  const std::uint64_t p = a.field().characteristic();
  std::vector<Matrix> out;
  out.reserve(found.size());
  for (const auto& cols : found) {
    Matrix t(a.field(), n, n);
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t r = 0; r < n; ++r) t(r, c) = Scalar::residue(p, std::int64_t{cols[c][r]});
    }
    out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Matrix> bruteforce_aut(const EvolutionAlgebra& a, std::uint64_t budget) {
  if (!a.field().is_prime_field()) throw Error(ErrorKind::NotPrimeField, "brute-force Aut needs F_p");
  const detail::ResidueAlgebra alg(a);
  const u64 first_count = detail::checked_power(alg.p(), alg.n());
  if (first_count > budget) {
    throw Error(ErrorKind::TooLarge, "p^n exceeds brute-force budget " + std::to_string(budget));
  }
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> aborted{false};
  std::vector<std::vector<Column>> found;
  const auto count = static_cast<std::int64_t>(first_count);
#pragma omp parallel
  {
    AutSearch local(alg, budget, nodes, aborted);
#pragma omp for schedule(dynamic)
    for (std::int64_t k = 1; k < count; ++k) {
      if (!aborted) local.from_first(digits_of(static_cast<u64>(k), alg.p(), alg.n()));
    }
#pragma omp critical
    found.insert(found.end(), local.found.begin(), local.found.end());
  }
  if (aborted) {
    throw Error(ErrorKind::TooLarge, "automorphism search visited more than " + std::to_string(budget) + " nodes");
  }
  return to_matrices(a, found);
}

namespace reference {

AutPresentation assemble_aut(const EvolutionAlgebra& a, std::size_t graph_cap) { return assemble(a, graph_cap, false); }

std::vector<Matrix> bruteforce_aut(const EvolutionAlgebra& a, std::uint64_t budget) {
  if (!a.field().is_prime_field()) throw Error(ErrorKind::NotPrimeField, "brute-force Aut needs F_p");
  const u64 size = detail::checked_power(a.field().characteristic(), a.dim() * a.dim());
  if (size > budget) {
    throw Error(ErrorKind::TooLarge, "p^(n^2) = " + (size == UINT64_MAX ? std::string("overflow") : std::to_string(size)) +
                                         " exceeds brute-force budget " + std::to_string(budget));
  }
  const detail::ResidueAlgebra alg(a);
  const std::size_t n = alg.n();
  const u32 p = alg.p();
  const detail::VectorTable table(p, n);
  const u64 per_column = table.count();

  std::vector<std::vector<Column>> found;
  std::vector<u64> cols(n, 0);
  std::vector<u32> lhs(n);
  for (;;) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      for (std::size_t k = i + 1; k < n && ok; ++k) ok = alg.product_is_zero(table[cols[i]], table[cols[k]]);
    }
    for (std::size_t k = 0; k < n && ok; ++k) {
      alg.product(table[cols[k]], table[cols[k]], lhs.data());
      for (std::size_t r = 0; r < n && ok; ++r) {
        u64 acc = 0;
        for (std::size_t j = 0; j < n; ++j) acc = (acc + static_cast<u64>(alg.omega(j, k)) * table[cols[j]][r]) % p;
        ok = acc == lhs[r];
      }
    }
    if (ok) {
      detail::Echelon echelon(p, n);
      for (std::size_t c = 0; c < n && ok; ++c) ok = echelon.try_add(table[cols[c]]);
      if (ok) {
        std::vector<Column> matrix;
        for (u64 c : cols) matrix.emplace_back(table[c], table[c] + n);
        found.push_back(std::move(matrix));
      }
    }
    std::size_t k = 0;
    while (k < n && cols[k] == per_column - 1) cols[k++] = 0;
    if (k == n) break;
    ++cols[k];
  }
  return to_matrices(a, found);
}

}  // namespace reference

}  // namespace evoaut
