#include <gtest/gtest.h>

#include "latred/latred.hpp"
#include "support.hpp"

using namespace latred;
using testing_support::brute_shortest;
using testing_support::coefficient_box;
using testing_support::random_basis;

namespace {
Coeffs to_coeffs(const std::vector<long>& v) { return Coeffs(v.begin(), v.end()); }
}  // namespace

TEST(Enumeration, ColexOrder) {
  EXPECT_TRUE(colex_less({1, 0}, {0, 1}));
  EXPECT_TRUE(colex_less({5, 0, 1}, {0, 1, 1}));
  EXPECT_FALSE(colex_less({0, 1}, {0, 1}));
  EXPECT_TRUE(colex_less({-1, 1}, {1, 1}));
}

TEST(Enumeration, Identity) {
  Gso<long double> g(IntBasis::identity(5));
  const auto r = enum_shortest(g, 0, 4);
  EXPECT_EQ(r.coeffs, (Coeffs{1, 0, 0, 0, 0}));
  EXPECT_EQ(r.norm_sq, 1.0L);
  const auto e = shortest_vector_gram(gram_matrix(IntBasis::identity(5)));
  EXPECT_EQ(e.coeffs, (Coeffs{1, 0, 0, 0, 0}));
  EXPECT_EQ(e.norm_sq, 1);
}

TEST(Enumeration, TwoByTwo) {
  // (1,3) has norm 10, (3,-2) = b_0 - b_1 has 13, (4,1) has 17
  const auto b = parse_basis("[[4 1][1 3]]");
  Gso<long double> g(b);
  const auto r = enum_shortest(g, 0, 1);
  EXPECT_EQ(r.coeffs, (Coeffs{0, 1}));
  EXPECT_NEAR(static_cast<double>(r.norm_sq), 10.0, 1e-12);
  const auto e = shortest_vector_gram(gram_matrix(b));
  EXPECT_EQ(e.coeffs, (Coeffs{0, 1}));
  EXPECT_EQ(e.norm_sq, 10);
}

TEST(Enumeration, CriticalTiesBreakColexicographically) {
  // b_0 and b_1 - b_0 (and b_1) all have norm 1 in A2; colex keeps (1, 0)
  const auto c = gen_critical(2);
  const auto e = shortest_vector_gram(c.gram);
  EXPECT_EQ(e.coeffs, (Coeffs{1, 0}));
  EXPECT_EQ(e.norm_sq, 1);
  // b_1 is far from shortest once n > 2: b_n - b_{n-1} has norm (3/4)^{n-2}
  const auto c6 = gen_critical(6);
  const auto e6 = shortest_vector_gram(c6.gram);
  EXPECT_EQ(e6.norm_sq, mpq_class(81, 256));
  EXPECT_EQ(e6.coeffs, (Coeffs{0, 0, 0, 0, -1, 1}));
  Gso<long double> g(critical_int_basis(6, 70));
  const auto r = enum_shortest(g, 0, 5);
  EXPECT_EQ(r.coeffs, e6.coeffs);
}

TEST(Enumeration, MatchesBruteForce) {
  Prng64 rng(71);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 4;
    // reduced first so the brute-force box stays small
    const auto b = lll_reduce(random_basis(rng, n, n, 12), ReductionParams::make(Algorithm::kLll, mpq_class(3, 4))).basis;
    const auto gram = gram_matrix(b);
    const auto want = brute_shortest(gram, coefficient_box(gram, gram[0][0]));
    const auto exact = shortest_vector_gram(gram);
    EXPECT_EQ(exact.norm_sq, want.norm_sq);
    Coeffs first = to_coeffs(want.minimizers.front());
    for (const auto& m : want.minimizers)
      if (colex_less(to_coeffs(m), first)) first = to_coeffs(m);
    EXPECT_EQ(exact.coeffs, first);

    Gso<long double> g(b);
    const auto fl = enum_shortest(g, 0, n - 1);
    EXPECT_NEAR(static_cast<double>(fl.norm_sq), want.norm_sq.get_d(), 1e-9 * want.norm_sq.get_d());
    EXPECT_EQ(fl.coeffs, first);
  }
}

TEST(Enumeration, ProjectedBlock) {
  // block [1, 2] of a 4-dim basis against brute force on the projected Gram
  Prng64 rng(72);
  for (int trial = 0; trial < 30; ++trial) {
    const auto b = random_basis(rng, 4, 4, 9);
    const auto eg = exact_gso(b);
    // projected Gram of b_1, b_2 orthogonally to b_0, scaled by ||b_0||^2
    const auto g = gram_matrix(b);
    IntMatrix pg(2, IntVector(2));
    for (int a = 0; a < 2; ++a)
      for (int c = 0; c < 2; ++c) pg[a][c] = g[0][0] * g[a + 1][c + 1] - g[0][a + 1] * g[0][c + 1];
    const auto want = brute_shortest(pg, coefficient_box(pg, pg[0][0]));
    Gso<long double> fg(b);
    const auto r = enum_shortest(fg, 1, 2);
    const double scale = eg.bstar_sq(0).get_d();
    EXPECT_NEAR(static_cast<double>(r.norm_sq) * scale, want.norm_sq.get_d(), 1e-9 * want.norm_sq.get_d());
  }
}

TEST(Enumeration, BadBlock) {
  Gso<long double> g(IntBasis::identity(3));
  EXPECT_THROW(enum_shortest(g, 2, 1), InvalidArgument);
  EXPECT_THROW(enum_shortest(g, 0, 3), InvalidArgument);
}
