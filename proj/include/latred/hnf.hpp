#pragma once

// Row-style Hermite normal form: echelon rows, positive pivots, entries
// above each pivot reduced into [0, pivot). Two bases span the same lattice
// iff their HNFs coincide.

#include <gmpxx.h>

#include <cstddef>
#include <utility>

#include "latred/basis.hpp"
#include "latred/error.hpp"

namespace latred {

namespace detail {

// a <- a + q*b on whole rows.
inline void row_addmul(IntVector& a, const IntVector& b, const mpz_class& q) {
  for (std::size_t c = 0; c < a.size(); ++c) mpz_addmul(a[c].get_mpz_t(), q.get_mpz_t(), b[c].get_mpz_t());
}

// Reduce the entries above every pivot into [0, pivot).
inline void reduce_above_pivots(IntMatrix& h, const std::vector<std::size_t>& pivot_col) {
  for (std::size_t r = 0; r < h.size(); ++r)
    for (std::size_t c = r + 1; c < h.size(); ++c) {
      const std::size_t col = pivot_col[c];
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), h[r][col].get_mpz_t(), h[c][col].get_mpz_t());
      if (q != 0) row_addmul(h[r], h[c], mpz_class(-q));
    }
}

}  // namespace detail

/// HNF by plain integer row elimination (extended-gcd combinations).
/// Works for any full-row-rank n x m basis; entries can grow on large inputs.
inline IntBasis hnf_elimination(const IntBasis& b) {
  IntMatrix a = b.rows();
  const std::size_t n = a.size();
  const std::size_t m = a.front().size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m && r < n; ++c) {
    // Euclid on column c among rows r..n-1 until a single nonzero remains.
    for (;;) {
      std::size_t best = n;
      for (std::size_t i = r; i < n; ++i)
        if (a[i][c] != 0 && (best == n || abs(a[i][c]) < abs(a[best][c]))) best = i;
      if (best == n) break;
      std::swap(a[r], a[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < n; ++i) {
        if (a[i][c] == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
        detail::row_addmul(a[i], a[r], mpz_class(-q));
        if (a[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (a[r][c] == 0) continue;
    if (a[r][c] < 0)
      for (auto& e : a[r]) e = -e;
    pivot_col.push_back(c);
    ++r;
  }
  if (r < n) throw RankError("hnf: basis is rank deficient");
  detail::reduce_above_pivots(a, pivot_col);
  return IntBasis(std::move(a));
}

/// HNF of a square nonsingular basis, computed modulo D = |det B|
/// (D Z^n is contained in the lattice, so entries can be kept below D).
inline IntBasis hnf_modular(const IntBasis& b) {
  const std::size_t n = static_cast<std::size_t>(b.n());
  if (b.m() != b.n()) throw InvalidArgument("hnf_modular: basis must be square");
  mpz_class r = abs(determinant(b.rows()));
  if (r == 0) throw RankError("hnf: basis is rank deficient");

  IntMatrix w = b.rows();
  for (auto& row : w)
    for (auto& e : row) mpz_fdiv_r(e.get_mpz_t(), e.get_mpz_t(), r.get_mpz_t());

  IntMatrix h(n, IntVector(n, 0));
  mpz_class g, u, v, t;
  for (std::size_t c = 0; c < n; ++c) {
    // Fold every working row into a single pivot row for column c.
    std::size_t piv = n;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i][c] == 0) continue;
      if (piv == n) {
        piv = i;
        continue;
      }
      mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), w[piv][c].get_mpz_t(), w[i][c].get_mpz_t());
      const mpz_class ap = w[piv][c] / g;
      const mpz_class ai = w[i][c] / g;
      for (std::size_t k = c; k < n; ++k) {
        t = u * w[piv][k] + v * w[i][k];
        w[i][k] = ap * w[i][k] - ai * w[piv][k];
        w[piv][k] = t;
        mpz_fdiv_r(w[piv][k].get_mpz_t(), w[piv][k].get_mpz_t(), r.get_mpz_t());
        mpz_fdiv_r(w[i][k].get_mpz_t(), w[i][k].get_mpz_t(), r.get_mpz_t());
      }
    }
    // Combine with R e_c, which lies in the lattice.
    const mpz_class a = piv == n ? mpz_class(0) : w[piv][c];
    mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t(), r.get_mpz_t());
    h[c][c] = g;
    if (piv != n) {
      for (std::size_t k = c + 1; k < n; ++k) {
        h[c][k] = u * w[piv][k];
        mpz_fdiv_r(h[c][k].get_mpz_t(), h[c][k].get_mpz_t(), r.get_mpz_t());
      }
      const mpz_class rg = r / g;
      for (std::size_t k = c; k < n; ++k) w[piv][k] *= rg;
      w[piv][c] = 0;
    }
    r /= g;
    for (auto& row : w)
      for (std::size_t k = c; k < n; ++k) mpz_fdiv_r(row[k].get_mpz_t(), row[k].get_mpz_t(), r.get_mpz_t());
  }
  std::vector<std::size_t> pivot_col(n);
  for (std::size_t c = 0; c < n; ++c) pivot_col[c] = c;
  detail::reduce_above_pivots(h, pivot_col);
  return IntBasis(std::move(h));
}

/// Hermite normal form of the lattice spanned by `b`.
inline IntBasis hnf(const IntBasis& b) { return b.n() == b.m() ? hnf_modular(b) : hnf_elimination(b); }

/// L(a) == L(b), decided by HNF equality.
inline bool lattices_equal(const IntBasis& a, const IntBasis& b) {
  if (a.n() != b.n() || a.m() != b.m()) throw InvalidArgument("lattices_equal: shape mismatch");
  return hnf(a) == hnf(b);
}

}  // namespace latred
