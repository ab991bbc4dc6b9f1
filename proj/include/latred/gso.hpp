#pragma once

// Floating-point Gram-Schmidt engine over an exact integer basis.
//
// The exact Gram matrix <b_i, b_j> is kept in integers and updated in place
// under row operations; floating GSO rows are recomputed from it on demand.
// Rows are "discovered" lazily, so on triangular inputs (HNF) the Gram
// entries of rows not yet reached by a reduction loop cost nothing.

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "latred/basis.hpp"
#include "latred/bigint.hpp"
#include "latred/error.hpp"
#include "latred/zint.hpp"

namespace latred {

/// Relative slack used by every floating reducedness guard.
inline constexpr double kGsoEpsilon = 1e-9;

/// Ratio below which ||b*_i||^2 / ||b_i||^2 counts as a rank deficiency.
inline constexpr double kRankTolerance = 1e-20;

template <class FT = long double>
class Gso {
 public:
  using Float = FT;

  explicit Gso(const IntBasis& basis) : n_(basis.n()), m_(basis.m()) {
    const auto n = static_cast<std::size_t>(n_);
    b_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      b_[i].reserve(static_cast<std::size_t>(m_));
      for (const auto& e : basis[static_cast<int>(i)]) b_[i].emplace_back(e);
    }
    g_.resize(n);
    mu_.assign(n, std::vector<FT>(n, FT(0)));
    r_.assign(n, std::vector<FT>(n, FT(0)));
    proj_.assign(n + 1, FT(0));
    scratch_.assign(n, FT(0));
  }

  int n() const { return n_; }
  int m() const { return m_; }

  IntBasis basis() const {
    IntMatrix rows(b_.size());
    for (std::size_t i = 0; i < b_.size(); ++i) {
      rows[i].reserve(b_[i].size());
      for (const auto& e : b_[i]) rows[i].push_back(e.to_mpz());
    }
    return IntBasis(std::move(rows));
  }
  IntBasis release() && { return basis(); }

  /// Exact <b_i, b_j>; discovers rows up to max(i, j).
  mpz_class gram(int i, int j) {
    if (i < j) std::swap(i, j);
    discover(i);
    return g_[ix(i)][ix(j)].to_mpz();
  }

  /// Number of leading rows whose mu / ||b*||^2 data is current.
  int valid_rows() const { return valid_; }

  FT mu(int i, int j) const { return mu_[ix(i)][ix(j)]; }
  FT r(int i, int j) const { return r_[ix(i)][ix(j)]; }
  FT bstar_sq(int i) const { return r_[ix(i)][ix(i)]; }

  /// Row for which proj_sq() was last filled in by compute_row.
  int proj_row() const { return proj_row_; }

  /// proj_sq()[j] = ||pi_j(b_l)||^2 for j = 0..l where l = proj_row();
  /// the last entry equals ||b*_l||^2.
  std::span<const FT> proj_sq() const { return {proj_.data(), static_cast<std::size_t>(proj_row_ + 1)}; }

  /// Recomputes mu_{i,j}, ||b*_i||^2 and the projection norms of row i.
  /// Requires rows 0..i-1 to be valid. Does not check the rank; see
  /// check_rank().
  void compute_row(int i) {
    if (i > valid_) throw InvalidArgument("compute_row: preceding rows are not valid");
    discover(i);
    const auto ii = ix(i);
    auto& ri = r_[ii];
    auto& mi = mu_[ii];
    const auto& gi = g_[ii];
    for (std::size_t j = 0; j < ii; ++j) {
      FT v = gi[j].template to_float<FT>();
      const auto& mj = mu_[j];
      for (std::size_t k = 0; k < j; ++k) v -= mj[k] * ri[k];
      ri[j] = v;
      mi[j] = v / r_[j][j];
    }
    FT s = gi[ii].template to_float<FT>();
    proj_[0] = s;
    for (std::size_t j = 0; j < ii; ++j) {
      s -= mi[j] * ri[j];
      proj_[j + 1] = s;
    }
    ri[ii] = s;
    proj_row_ = i;
    valid_ = std::max(valid_, i + 1);
  }

  /// Makes rows 0..count-1 valid.
  void ensure_valid(int count) {
    for (int i = valid_; i < count; ++i) {
      compute_row(i);
      check_rank(i);
    }
  }

  void check_rank(int i) const {
    const FT bs = r_[ix(i)][ix(i)];
    const FT norm = g_[ix(i)][ix(i)].template to_float<FT>();
    if (!(bs > FT(kRankTolerance) * norm)) throw RankError("GSO: row " + std::to_string(i + 1) + " is linearly dependent");
  }

  /// Size-reduces b_i against b_0..b_{i-1} until every |mu_{i,j}| <= 1/2
  /// (with kGsoEpsilon slack). Rounding is floor(mu + 1/2). Repeats the
  /// Babai sweep from fresh exact data while the floating mu values are too
  /// coarse to finish in one pass. Leaves row i valid. Returns whether the
  /// basis changed. The rank is not checked: on unreduced prefixes ||b*_i||^2
  /// is dominated by cancellation until the row has passed its swap test.
  bool size_reduce_row(int i) {
    const FT bound = FT(0.5) + FT(kGsoEpsilon);
    bool changed = false;
    const auto ii = ix(i);
    for (int pass = 0;; ++pass) {
      compute_row(i);
      bool dirty = false;
      for (std::size_t j = 0; j < ii && !dirty; ++j) dirty = std::fabs(mu_[ii][j]) > bound;
      if (!dirty) break;
      if (pass > kMaxSizeReductionPasses) throw PrecisionError("size reduction did not converge");
      std::copy(mu_[ii].begin(), mu_[ii].begin() + static_cast<std::ptrdiff_t>(ii), scratch_.begin());
      for (std::size_t j = ii; j-- > 0;) {
        if (!(std::fabs(scratch_[j]) > bound)) continue;
        const FT x = std::floor(scratch_[j] + FT(0.5));
        row_submul_float(i, static_cast<int>(j), x);
        const auto& mj = mu_[j];
        for (std::size_t k = 0; k < j; ++k) scratch_[k] -= x * mj[k];
        scratch_[j] -= x;
      }
      changed = true;
    }
    return changed;
  }

  /// b_i <- b_i + x b_j. Invalidates rows >= i.
  template <class X>
  void row_addmul(int i, int j, const X& x) {
    if (x == 0) return;
    if (i < known_) discover(j);  // before b_i changes
    auto& bi = b_[ix(i)];
    const auto& bj = b_[ix(j)];
    for (std::size_t c = 0; c < bi.size(); ++c) bi[c].addmul(bj[c], x);
    if (i < known_) {
      // With g'_ij = g_ij + x g_jj: g'_ii = g_ii + x g_ij + x g'_ij, and
      // g'_it = g_it + x g_jt for the remaining t.
      Zint& gij = gram_ref(i, j);
      Zint& gii = gram_ref(i, i);
      gii.addmul(gij, x);
      gij.addmul(gram_ref(j, j), x);
      gii.addmul(gij, x);
      for (int t = 0; t < known_; ++t)
        if (t != i && t != j) gram_ref(i, t).addmul(gram_ref(j, t), x);
    }
    invalidate_from(i);
  }

  void row_addmul_si(int i, int j, long x) { row_addmul(i, j, static_cast<std::int64_t>(x)); }

  void row_negate(int i) {
    for (auto& e : b_[ix(i)]) e.negate();
    if (i < known_)
      for (int t = 0; t < known_; ++t)
        if (t != i) gram_ref(i, t).negate();
    invalidate_from(i);
  }

  /// sigma_{k,l}: moves b_l to position k, shifting b_k..b_{l-1} up by one.
  /// Rows >= k lose their GSO data.
  void apply_sigma(int k, int l) {
    if (k < 0 || l >= n() || k > l) throw InvalidArgument("apply_sigma: bad indices");
    if (k == l) return;
    std::rotate(b_.begin() + k, b_.begin() + l, b_.begin() + l + 1);
    if (k < known_) {
      discover(l);
      for (int t = l; t > k; --t) swap_gram_adjacent(t - 1);
    }
    invalidate_from(k);
  }

  /// sum_i (n - i) ln ||b*_i||^2 (0-based i), i.e. ln Pot(B).
  FT log_potential() {
    ensure_valid(n());
    FT s = 0;
    for (int i = 0; i < n(); ++i) s += FT(n() - i) * std::log(bstar_sq(i));
    return s;
  }

 private:
  static constexpr int kMaxSizeReductionPasses = 4096;

  static std::size_t ix(int i) { return static_cast<std::size_t>(i); }

  Zint& gram_ref(int i, int j) { return i >= j ? g_[ix(i)][ix(j)] : g_[ix(j)][ix(i)]; }

  void discover(int i) {
    while (known_ <= i) {
      const auto k = ix(known_);
      g_[k].resize(k + 1);
      for (std::size_t j = 0; j <= k; ++j) g_[k][j] = dot(b_[k], b_[j]);
      ++known_;
    }
  }

  void invalidate_from(int i) { valid_ = std::min(valid_, i); }

  // Swap rows i and i+1 of the symmetric Gram matrix (lower-triangle storage).
  void swap_gram_adjacent(int i) {
    for (int a = 0; a < i; ++a) swap(gram_ref(i, a), gram_ref(i + 1, a));
    swap(gram_ref(i, i), gram_ref(i + 1, i + 1));
    for (int a = i + 2; a < known_; ++a) swap(gram_ref(a, i), gram_ref(a, i + 1));
  }

  void row_submul_float(int i, int j, FT x) {
    if (std::fabs(x) < FT(4.0e18)) {
      row_addmul_si(i, j, -static_cast<long>(x));
    } else {
      set_from_float(big_, -x);
      row_addmul(i, j, big_);
    }
  }

  int n_;
  int m_;
  std::vector<std::vector<Zint>> b_;
  std::vector<std::vector<Zint>> g_;
  int known_ = 0;
  std::vector<std::vector<FT>> mu_;
  std::vector<std::vector<FT>> r_;
  std::vector<FT> proj_;
  std::vector<FT> scratch_;
  int proj_row_ = -1;
  int valid_ = 0;
  mpz_class big_;
};

}  // namespace latred
