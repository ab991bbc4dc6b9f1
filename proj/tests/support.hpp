#pragma once

// Helpers shared by the unit tests. Everything here is deliberately naive:
// these are the independent oracles the library is checked against.

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "latred/latred.hpp"

namespace testing_support {

using latred::IntBasis;
using latred::IntMatrix;
using latred::IntVector;

/// Random full-rank n x m basis with entries in [-bound, bound].
inline IntBasis random_basis(latred::Prng64& rng, int n, int m, long bound) {
  for (;;) {
    IntMatrix rows(static_cast<std::size_t>(n), IntVector(static_cast<std::size_t>(m)));
    for (auto& row : rows)
      for (auto& e : row) e = static_cast<long>(rng.next() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
    IntBasis b(rows);
    if (latred::determinant(latred::gram_matrix(b)) != 0) return b;
  }
}

/// Solves x B = v over Q (B n x m of rank n); nullopt if v is outside the span.
inline std::optional<std::vector<mpq_class>> solve_row(const IntBasis& b, const IntVector& v) {
  const auto n = static_cast<std::size_t>(b.n()), m = static_cast<std::size_t>(b.m());
  // Columns of B^T augmented with v: m equations in n unknowns.
  std::vector<std::vector<mpq_class>> a(m, std::vector<mpq_class>(n + 1));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) a[r][c] = b[static_cast<int>(c)][r];
    a[r][n] = v[r];
  }
  std::size_t row = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < n && row < m; ++c) {
    std::size_t p = row;
    while (p < m && a[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[row]);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == row || a[r][c] == 0) continue;
      const mpq_class f = a[r][c] / a[row][c];
      for (std::size_t k = c; k <= n; ++k) a[r][k] -= f * a[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  for (std::size_t r = row; r < m; ++r)
    if (a[r][n] != 0) return std::nullopt;
  std::vector<mpq_class> x(n, 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = a[i][n] / a[i][pivots[i]];
  return x;
}

/// L(a) is a sublattice of L(b): every row of a is an integral combination of b.
inline bool contained_in(const IntBasis& a, const IntBasis& b) {
  for (const auto& row : a.rows()) {
    auto x = solve_row(b, row);
    if (!x) return false;
    for (const auto& q : *x)
      if (q.get_den() != 1) return false;
  }
  return true;
}

/// Same lattice, decided without HNF.
inline bool same_lattice(const IntBasis& a, const IntBasis& b) { return contained_in(a, b) && contained_in(b, a); }

/// Per-coordinate bound |x_i| <= sqrt(radius * (G^{-1})_{ii}) for vectors of
/// squared norm <= radius (Cauchy-Schwarz in the dual norm).
inline std::vector<long> coefficient_box(const IntMatrix& gram, const mpz_class& radius) {
  const auto n = gram.size();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = gram[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (a[p][c] == 0) ++p;
    std::swap(a[p], a[c]);
    const mpq_class piv = a[c][c];
    for (auto& e : a[c]) e /= piv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const mpq_class f = a[r][c];
      for (std::size_t k = 0; k < 2 * n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  std::vector<long> box(n);
  for (std::size_t i = 0; i < n; ++i) box[i] = static_cast<long>(std::floor(std::sqrt(mpq_class(a[i][n + i] * radius).get_d()) + 1e-9));
  return box;
}

/// Brute-force minimum of x G x^T over nonzero x in the box. Returns the
/// minimum and every minimizer with last nonzero entry positive.
struct BruteShortest {
  mpz_class norm_sq;
  std::vector<std::vector<long>> minimizers;
};

inline BruteShortest brute_shortest(const IntMatrix& gram, const std::vector<long>& box) {
  const auto n = gram.size();
  BruteShortest best;
  bool have = false;
  std::vector<long> x(n, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      bool zero = true;
      for (long v : x) zero = zero && v == 0;
      if (zero) return;
      mpz_class s = 0;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) s += gram[a][b] * x[a] * x[b];
      long last = 0;
      for (long v : x)
        if (v != 0) last = v;
      if (!have || s < best.norm_sq) {
        best.norm_sq = s;
        best.minimizers.clear();
        have = true;
      }
      if (s == best.norm_sq && last > 0) best.minimizers.push_back(x);
      return;
    }
    for (long v = -box[i]; v <= box[i]; ++v) {
      x[i] = v;
      rec(i + 1);
    }
    x[i] = 0;
  };
  rec(0);
  return best;
}

inline IntBasis permuted(const IntBasis& b, int k, int l) {
  auto rows = b.rows();
  std::rotate(rows.begin() + k, rows.begin() + l, rows.begin() + l + 1);
  return IntBasis(std::move(rows));
}

}  // namespace testing_support
