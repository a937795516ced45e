#include <gtest/gtest.h>

#include <set>

#include "evoaut/autgroup.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace evoaut;
using evoaut::testing::load_data;
using evoaut::testing::over;

TEST(Autgroup, CycleWithEarDiag) {
  const EvolutionAlgebra q = load_data("cycle_with_ear.graph", FieldSpec::rationals());
  EXPECT_EQ(diag_group(q).to_string(), "mu_3(K)");
  const EvolutionAlgebra f7 = load_data("cycle_with_ear.graph", FieldSpec::prime(7));
  const AutPresentation aut = assemble_aut(f7);
  EXPECT_EQ(aut.order(), BigInt(3));
  EXPECT_EQ(bruteforce_aut(f7).size(), 3u);
  const EvolutionAlgebra f5 = load_data("cycle_with_ear.graph", FieldSpec::prime(5));
  EXPECT_EQ(assemble_aut(f5).order(), BigInt(1));
}

TEST(Autgroup, Cyclic3) {
  const EvolutionAlgebra a = load_data("cyclic3.alg");
  const AutPresentation aut = assemble_aut(a);
  EXPECT_TRUE(aut.diag.is_trivial());
  EXPECT_EQ(aut.order(), BigInt(3));
  EXPECT_EQ(aut.completeness, Completeness::FullAut);
  std::set<std::string> matrices;
  for (const auto& f : materialize(aut)) matrices.insert(f.to_matrix().to_string());
  EXPECT_TRUE(matrices.count("[[0,0,2],[-1,0,0],[0,-1/2,0]]"));
  EXPECT_TRUE(matrices.count("[[0,-1,0],[0,0,-2],[1/2,0,0]]"));
  EXPECT_TRUE(matrices.count("[[1,0,0],[0,1,0],[0,0,1]]"));
  for (const auto& f : materialize(aut)) {
    EXPECT_EQ(compose(f, compose(f, f)), MonomialAutomorphism::identity(aut.algebra));
  }
}

TEST(Autgroup, SwapDoesNotLift) {
  for (std::uint64_t p : {0u, 3u, 5u, 7u, 11u, 13u}) {
    const EvolutionAlgebra base = load_data("swap_infeasible.alg");
    const EvolutionAlgebra a = p == 0 ? base : over(base, FieldSpec::prime(p));
    const AutPresentation aut = assemble_aut(a);
    ASSERT_EQ(aut.non_lifting.size(), 1u) << p;
    EXPECT_EQ(aut.lifted.size(), 1u);
    EXPECT_TRUE(aut.diag.is_trivial());
    EXPECT_EQ(aut.order(), BigInt(1));
  }
  EXPECT_EQ(bruteforce_aut(load_data("swap_infeasible_f5.alg")).size(), 1u);
}

TEST(Autgroup, CubicRoot) {
  const AutPresentation lifts = assemble_aut(load_data("cubic_root_f7.alg"));
  EXPECT_EQ(lifts.lifted.size(), 2u);
  EXPECT_EQ(lifts.lifted[1].lift.scales(), (Vector{FieldSpec::prime(7).from_int(2), FieldSpec::prime(7).from_int(4)}));
  const AutPresentation generic = assemble_aut(load_data("generic_weights_f7.alg"));
  EXPECT_EQ(generic.lifted.size(), 1u);
  EXPECT_EQ(generic.non_lifting.size(), 1u);
}

TEST(Autgroup, ZeroAlgebra) {
  const AutPresentation aut = assemble_aut(load_data("zero3.alg"));
  EXPECT_EQ(aut.diag.to_string(), "(K^x)^3");
  EXPECT_EQ(aut.lifted.size(), 6u);
  for (const auto& l : aut.lifted) {
    for (const Scalar& s : l.lift.scales()) EXPECT_TRUE(s.is_one());
  }
  EXPECT_EQ(aut.completeness, Completeness::SubgroupOnly);
  EXPECT_FALSE(aut.order().has_value());

  const EvolutionAlgebra z = load_data("zero2_f3.alg");
  EXPECT_EQ(bruteforce_aut(z).size(), 48u);
  EXPECT_EQ(materialize(assemble_aut(z)).size(), 8u);
}

TEST(Autgroup, StarHasSignTorsion) {
  const EvolutionAlgebra a = load_data("star3.alg");
  const GroupDescription d = diag_group(a);
  EXPECT_EQ(d.to_string(), "(K^x)^1 x mu_2(K)^2");
  EXPECT_EQ(d.generators.size(), 2u);
}

TEST(Autgroup, Validation) {
  const EvolutionAlgebra a = load_data("cyclic3.alg");
  const FieldSpec& q = a.field();
  EXPECT_THROW(MonomialAutomorphism(a, Permutation::identity(3), {q.one(), q.one(), q.from_int(2)}), Error);
  try {
    twisted_system(a, GraphAutomorphism{Permutation({1, 0, 2})});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAGraphAutomorphism);
  }
  const EvolutionAlgebra b = load_data("swap_infeasible.alg");
  try {
    compose(MonomialAutomorphism::identity(std::make_shared<const EvolutionAlgebra>(a)),
            MonomialAutomorphism::identity(std::make_shared<const EvolutionAlgebra>(b)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::AlgebraMismatch);
  }
  EXPECT_THROW(bruteforce_aut(a), Error);
}

TEST(Autgroup, CompositionMatchesMatrixProduct) {
  const EvolutionAlgebra a = load_data("cycle_with_ear.graph", FieldSpec::prime(7));
  const auto elems = materialize(assemble_aut(load_data("cyclic3.alg")));
  for (const auto& f : elems) {
    EXPECT_EQ(invert(f).to_matrix() * f.to_matrix(), Matrix::identity(f.algebra().field(), 3));
    for (const auto& g : elems) EXPECT_EQ(compose(f, g).to_matrix(), f.to_matrix() * g.to_matrix());
  }
  const auto u = materialize(assemble_aut(a));
  for (const auto& f : u) {
    const Vector v{a.field().from_int(1), a.field().from_int(2), a.field().from_int(3), a.field().from_int(4),
                   a.field().from_int(5)};
    Vector via_matrix = a.zero_vector();
    const Matrix t = f.to_matrix();
    for (std::size_t r = 0; r < 5; ++r) {
      for (std::size_t c = 0; c < 5; ++c) via_matrix[r] += t(r, c) * v[c];
    }
    EXPECT_EQ(f.apply(v), via_matrix);
  }
}

TEST(Autgroup, BruteforceMatchesNaiveScan) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const std::uint64_t p = trial % 2 == 0 ? 3 : 2;
    const std::size_t n = 1 + trial % 3;
    if (n == 3 && p == 3) continue;
    const EvolutionAlgebra a = evoaut::testing::random_algebra(rng, p, n);
    const auto fast = bruteforce_aut(a);
    EXPECT_EQ(fast, reference::bruteforce_aut(a));
    for (const Matrix& t : fast) EXPECT_TRUE(evoaut::testing::is_automorphism_matrix(a, t));
  }
  // 3^9 candidates for the naive scan
  const EvolutionAlgebra c = over(load_data("cyclic3.alg"), FieldSpec::prime(3));
  EXPECT_EQ(bruteforce_aut(c), reference::bruteforce_aut(c));
}

TEST(Autgroup, BruteforceBudget) {
  const EvolutionAlgebra z = over(load_data("zero3.alg"), FieldSpec::prime(7));
  try {
    bruteforce_aut(z, 100000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TooLarge);
  }
}
