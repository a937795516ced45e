#include <gtest/gtest.h>

#include <omp.h>

#include "evoaut/autgroup.hpp"
#include "support.hpp"

using namespace evoaut;
using namespace evoaut::testing;

// The parallel kernels must agree with their serial references element for
// element, whatever the thread count.
class ParallelKernels : public ::testing::TestWithParam<int> {
 protected:
  void SetUp() override {
    saved_ = omp_get_max_threads();
    omp_set_num_threads(GetParam());
  }
  void TearDown() override { omp_set_num_threads(saved_); }

 private:
  int saved_ = 1;
};

TEST_P(ParallelKernels, MonomialEnumeration) {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 40; ++k) {
    const EvolutionAlgebra a = random_algebra(rng, 7, 1 + k % 4);
    const MonomialSystem s = diag_system(a);
    EXPECT_EQ(enumerate_solutions_bruteforce(s), reference::enumerate_solutions_bruteforce(s));
  }
}

TEST_P(ParallelKernels, NaturalBases) {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 40; ++k) {
    const EvolutionAlgebra a = random_algebra(rng, k % 2 == 0 ? 3 : 5, 2 + k % 3);
    EXPECT_EQ(enumerate_natural_bases(a), reference::enumerate_natural_bases(a));
  }
}

TEST_P(ParallelKernels, Assembly) {
  std::mt19937_64 rng(10);
  for (int k = 0; k < 40; ++k) {
    const EvolutionAlgebra a = random_algebra(rng, 5, 1 + k % 4);
    const AutPresentation par = assemble_aut(a);
    const AutPresentation ser = reference::assemble_aut(a);
    EXPECT_EQ(materialize(par), materialize(ser));
    EXPECT_EQ(par.non_lifting, ser.non_lifting);
    EXPECT_EQ(par.law, ser.law);
  }
}

TEST_P(ParallelKernels, BruteforceAut) {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 30; ++k) {
    const EvolutionAlgebra a = random_algebra(rng, 2 + k % 2, 1 + k % 3);
    if (ipow(a.field().characteristic(), a.dim() * a.dim()) > 1'000'000) continue;
    EXPECT_EQ(bruteforce_aut(a), reference::bruteforce_aut(a));
  }
}

INSTANTIATE_TEST_SUITE_P(Threads, ParallelKernels, ::testing::Values(1, 2, 4));
