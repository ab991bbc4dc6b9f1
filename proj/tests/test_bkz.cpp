#include <gtest/gtest.h>

#include "latred/latred.hpp"
#include "support.hpp"

using namespace latred;
using testing_support::random_basis;
using testing_support::same_lattice;

namespace {
const mpq_class kDelta(99, 100);
ReductionParams bkz_params(int beta, mpq_class delta = kDelta) {
  return ReductionParams::make(Algorithm::kBkz, delta, beta);
}
}  // namespace

TEST(Bkz, BlocksizeTwoIsLllReduced) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const auto b = gen_random_hnf(16, 64, seed);
    const auto r = bkz_reduce(b, bkz_params(2));
    EXPECT_TRUE(is_lll_reduced(r.basis, kDelta));
    EXPECT_TRUE(lattices_equal(r.basis, b));
    EXPECT_FALSE(r.stats.cap_hit);
  }
}

TEST(Bkz, FullBlocksizeFindsTheShortestVector) {
  // with beta = n, b_1 is only guaranteed up to the delta slack; at delta = 1
  // it is a shortest vector
  for (int n = 4; n <= 25; n += 3) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const auto b = gen_random_hnf(n, 4 * n, seed);
      const mpz_class lambda = shortest_vector_len_sq(b);
      const auto r = bkz_reduce(b, bkz_params(n));
      EXPECT_LE(mpq_class(norm_sq(r.basis[0])) * kDelta, mpq_class(lambda)) << n << " " << seed;
      EXPECT_TRUE(lattices_equal(r.basis, b));
      const auto exact = bkz_reduce(b, bkz_params(n, 1));
      EXPECT_EQ(norm_sq(exact.basis[0]), lambda) << n << " " << seed;
      EXPECT_TRUE(lattices_equal(exact.basis, b));
    }
  }
}

TEST(Bkz, InsertionKeepsTheLattice) {
  Prng64 rng(81);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + trial % 6;
    const auto b = random_basis(rng, n, n, 40);
    for (int beta : {2, 3, n}) {
      if (beta > n) continue;
      const auto r = bkz_reduce(b, bkz_params(beta));
      EXPECT_TRUE(same_lattice(r.basis, b));
      EXPECT_TRUE(is_lll_reduced(r.basis, kDelta));
    }
  }
}

TEST(Bkz, EuclidInsertion) {
  Gso<long double> g(parse_basis("[[1 0 0][0 1 0][0 0 1]]"));
  const int row = detail::euclid_insert(g, 0, Coeffs{3, -5, 2});
  const auto out = g.basis();
  EXPECT_EQ(out[row], (IntVector{3, -5, 2}));
  EXPECT_EQ(abs(determinant(out.rows())), 1);
  Gso<long double> h(IntBasis::identity(2));
  EXPECT_THROW(detail::euclid_insert(h, 0, Coeffs{2, 4}), InvalidArgument);
}

TEST(Bkz, CriticalBasis) {
  // blocksize 2 only repeats the Lovasz test, which the basis meets
  for (int n = 2; n <= 9; ++n) {
    const auto b = critical_int_basis(n, 64 + n);
    const auto r = bkz_reduce(b, bkz_params(2));
    EXPECT_EQ(r.basis, b);
    EXPECT_EQ(r.stats.swaps, 0u);
  }
  // from blocksize 3 on, b_3 - b_2 (norm 3/4 relative to b_1) gets inserted
  const auto b = critical_int_basis(6, 70);
  const auto r = bkz_reduce(b, bkz_params(3));
  EXPECT_GT(r.stats.swaps, 0u);
  EXPECT_LT(norm_sq(r.basis[0]), norm_sq(b[0]));
  EXPECT_TRUE(lattices_equal(r.basis, b));
}

TEST(Bkz, StrongerThanLllOnAverage) {
  double bkz = 0, lll = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto b = gen_random_hnf(40, 400, seed);
    bkz += log_abs(norm_sq(bkz_reduce(b, bkz_params(5)).basis[0]));
    lll += log_abs(norm_sq(lll_reduce(b, ReductionParams::make(Algorithm::kLll, kDelta)).basis[0]));
  }
  EXPECT_LT(bkz, lll);
}

TEST(Bkz, BlocksizeValidation) {
  EXPECT_THROW(bkz_reduce(IntBasis::identity(3), bkz_params(4)), InvalidArgument);
  ReductionParams p;
  p.algorithm = Algorithm::kBkz;
  EXPECT_THROW(bkz_reduce(IntBasis::identity(3), p), InvalidArgument);
}
