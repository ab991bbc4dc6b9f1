#include <gtest/gtest.h>

#include "latred/basis.hpp"
#include "latred/generators.hpp"
#include "support.hpp"

using namespace latred;

TEST(Parse, IdentityAndRowOrder) {
  EXPECT_EQ(parse_basis("[[1 0][0 1]]"), IntBasis::identity(2));
  const auto b = parse_basis("[[2 0][1 1]]");
  ASSERT_EQ(b.n(), 2);
  EXPECT_EQ(b[0], (IntVector{2, 0}));
  EXPECT_EQ(b[1], (IntVector{1, 1}));
}

TEST(Parse, WhitespaceAndSigns) {
  const auto b = parse_basis("  [ [ -3   12 ]\n\t[7 -0 ]\n]\n");
  EXPECT_EQ(b[0], (IntVector{-3, 12}));
  EXPECT_EQ(b[1], (IntVector{7, 0}));
}

TEST(Parse, BigEntries) {
  const std::string big = "123456789012345678901234567890123456789";
  const auto b = parse_basis("[[" + big + " -" + big + "]]");
  EXPECT_EQ(b[0][0], mpz_class(big));
  EXPECT_EQ(b[0][1], -mpz_class(big));
}

TEST(Parse, DependentRowsStillParse) {
  // rank deficiency is for the GSO to find
  const auto b = parse_basis("[[1 2][2 4]]");
  EXPECT_EQ(b.n(), 2);
  EXPECT_EQ(determinant(gram_matrix(b)), 0);
}

TEST(Parse, Errors) {
  auto position_of = [](const std::string& text) -> std::size_t {
    try {
      parse_basis(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    ADD_FAILURE() << "no error for " << text;
    return 0;
  };
  EXPECT_EQ(position_of("[[1 x][0 1]]"), 4u);  // 0-based offset of the x
  EXPECT_EQ(position_of("[[1 0][0 1]] junk"), 13u);
  EXPECT_EQ(position_of("[[1 0][0]]"), 6u);  // ragged
  EXPECT_THROW(parse_basis("[]"), ParseError);
  EXPECT_THROW(parse_basis("[[]]"), ParseError);
  EXPECT_THROW(parse_basis("[[1 0][0 1]"), ParseError);
  EXPECT_THROW(parse_basis("[[1][2]]"), ParseError);  // more rows than columns
  EXPECT_THROW(parse_basis("[[1 - 2]]"), ParseError);
}

TEST(Serialize, CanonicalForm) {
  EXPECT_EQ(serialize_basis(IntBasis::identity(2)), "[[1 0]\n[0 1]\n]");
  EXPECT_EQ(serialize_basis(parse_basis("[[2 0][1 1]]")), "[[2 0]\n[1 1]\n]");
}

TEST(Serialize, RoundTripOnGeneratedBases) {
  Prng64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng.next() % 6);
    const int m = n + static_cast<int>(rng.next() % 3);
    IntMatrix rows(static_cast<std::size_t>(n), IntVector(static_cast<std::size_t>(m)));
    for (auto& r : rows)
      for (auto& e : r) {
        e = rng.bits(1 + static_cast<unsigned>(rng.next() % 200));
        if (rng.next() & 1) e = -e;
      }
    const IntBasis b(rows);
    EXPECT_EQ(parse_basis(serialize_basis(b)), b);
  }
  const auto g = gen_random_hnf(30, 300, 4);
  EXPECT_EQ(parse_basis(serialize_basis(g)), g);
}

TEST(RationalMatrix, RoundTrip) {
  const auto m = parse_rational_matrix("[[1 1/2][1/2 -7/16]]");
  EXPECT_EQ(m[0][1], mpq_class(1, 2));
  EXPECT_EQ(m[1][1], mpq_class(-7, 16));
  EXPECT_EQ(parse_rational_matrix(serialize_rational_matrix(m)), m);
  EXPECT_THROW(parse_rational_matrix("[[1/0]]"), ParseError);
}

TEST(Shape, Validation) {
  EXPECT_THROW(IntBasis(IntMatrix{}), InvalidArgument);
  EXPECT_THROW(IntBasis(IntMatrix{{1, 2}, {3}}), InvalidArgument);
  EXPECT_THROW(IntBasis(IntMatrix{{1}, {2}}), InvalidArgument);
}

TEST(Determinant, MatchesCofactorExpansion) {
  Prng64 rng(11);
  std::function<mpz_class(const IntMatrix&)> cofactor = [&](const IntMatrix& a) -> mpz_class {
    if (a.size() == 1) return a[0][0];
    mpz_class s = 0;
    for (std::size_t c = 0; c < a.size(); ++c) {
      IntMatrix minor;
      for (std::size_t r = 1; r < a.size(); ++r) {
        IntVector row;
        for (std::size_t k = 0; k < a.size(); ++k)
          if (k != c) row.push_back(a[r][k]);
        minor.push_back(row);
      }
      s += (c % 2 ? -1 : 1) * a[0][c] * cofactor(minor);
    }
    return s;
  };
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 5;
    IntMatrix a(static_cast<std::size_t>(n), IntVector(static_cast<std::size_t>(n)));
    for (auto& r : a)
      for (auto& e : r) e = static_cast<long>(rng.next() % 21) - 10;
    EXPECT_EQ(determinant(a), cofactor(a));
  }
}
