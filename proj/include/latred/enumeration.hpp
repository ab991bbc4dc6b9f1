#pragma once

// Schnorr-Euchner enumeration of short vectors in a projected block, without
// pruning. Only coefficient vectors whose last nonzero entry is positive are
// visited, so each +-pair is seen once.
//
// Ties between equally short vectors go to the colexicographically smallest
// coefficient vector (compare from the last coordinate down). With the sign
// convention above that picks (1,0,...,0) on an orthonormal block.

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "latred/basis.hpp"
#include "latred/error.hpp"
#include "latred/exact_gso.hpp"
#include "latred/gso.hpp"

namespace latred {

using Coeffs = std::vector<std::int64_t>;

/// Relative tolerance under which two floating norms count as tied.
inline constexpr double kEnumTieTolerance = 1e-9;

/// true iff a precedes b colexicographically.
inline bool colex_less(const Coeffs& a, const Coeffs& b) {
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

namespace detail {

/// Depth-first zigzag enumeration of all nonzero x with
/// sum_i (x_i + sum_{t>i} x_t mu[t][i])^2 r[i] <= radius.
/// `leaf(x, norm)` is called for every such x and returns the radius to use
/// from then on (it may only shrink).
template <class FT, class Leaf>
class Enumerator {
 public:
  Enumerator(const std::vector<FT>& r, const std::vector<std::vector<FT>>& mu, FT radius, Leaf& leaf)
      : r_(r), mu_(mu), radius_(radius), leaf_(leaf), d_(static_cast<int>(r.size())), x_(r.size(), 0) {}

  void run() {
    if (d_ > 0) level(d_ - 1, FT(0), true);
  }

 private:
  FT center(int i) const {
    FT c = 0;
    for (int t = i + 1; t < d_; ++t)
      if (x_[ix(t)] != 0) c -= static_cast<FT>(x_[ix(t)]) * mu_[ix(t)][ix(i)];
    return c;
  }

  // Visits x_i = v; returns false when v lies outside the radius.
  bool visit(int i, std::int64_t v, FT c, FT above, bool top) {
    const FT diff = static_cast<FT>(v) - c;
    const FT dist = above + diff * diff * r_[ix(i)];
    if (dist > radius_) return false;
    x_[ix(i)] = v;
    if (i == 0) {
      if (!(top && v == 0)) radius_ = std::min(radius_, leaf_(x_, dist));
    } else {
      level(i - 1, dist, top && v == 0);
    }
    x_[ix(i)] = 0;
    return true;
  }

  void level(int i, FT above, bool top) {
    if (top) {
      // Everything above is zero: the center is 0 and only x_i >= 0 is
      // needed, by the sign convention.
      for (std::int64_t v = 0; visit(i, v, FT(0), above, true); ++v) {
      }
      return;
    }
    const FT c = center(i);
    const auto mid = static_cast<std::int64_t>(std::floor(c + FT(0.5)));
    if (!visit(i, mid, c, above, false)) return;
    // Zigzag outward; each side stops at its first miss.
    bool up = true, down = true;
    for (std::int64_t step = 1; up || down; ++step) {
      const bool up_first = static_cast<FT>(mid) <= c;
      for (int side = 0; side < 2; ++side) {
        const bool go_up = (side == 0) == up_first;
        if (go_up && up) up = visit(i, mid + step, c, above, false);
        if (!go_up && down) down = visit(i, mid - step, c, above, false);
      }
    }
  }

  static std::size_t ix(int i) { return static_cast<std::size_t>(i); }

  const std::vector<FT>& r_;
  const std::vector<std::vector<FT>>& mu_;
  FT radius_;
  Leaf& leaf_;
  int d_;
  Coeffs x_;
};

template <class FT, class Leaf>
void enumerate(const std::vector<FT>& r, const std::vector<std::vector<FT>>& mu, FT radius, Leaf&& leaf) {
  Enumerator<FT, std::remove_reference_t<Leaf>> e(r, mu, radius, leaf);
  e.run();
}

}  // namespace detail

template <class FT>
struct EnumResult {
  Coeffs coeffs;  // relative to b_j..b_k
  FT norm_sq = 0;
};

/// Shortest nonzero ||pi_j(sum_{i=j..k} x_i b_i)||^2 (0-based, inclusive
/// block). Floating norms within kEnumTieTolerance are treated as ties.
template <class FT>
EnumResult<FT> enum_shortest(Gso<FT>& gso, int j, int k) {
  if (j < 0 || k >= gso.n() || j > k) throw InvalidArgument("enum_shortest: bad block");
  gso.ensure_valid(k + 1);
  const auto d = static_cast<std::size_t>(k - j + 1);
  std::vector<FT> r(d);
  std::vector<std::vector<FT>> mu(d, std::vector<FT>(d, FT(0)));
  for (std::size_t a = 0; a < d; ++a) {
    r[a] = gso.bstar_sq(j + static_cast<int>(a));
    for (std::size_t b = 0; b < a; ++b) mu[a][b] = gso.mu(j + static_cast<int>(a), j + static_cast<int>(b));
  }
  const FT tol = FT(kEnumTieTolerance);
  EnumResult<FT> best;
  best.norm_sq = std::numeric_limits<FT>::infinity();
  auto leaf = [&](const Coeffs& x, FT norm) {
    const bool shorter = norm < best.norm_sq * (FT(1) - tol);
    if (shorter || (norm <= best.norm_sq * (FT(1) + tol) && colex_less(x, best.coeffs))) {
      best.norm_sq = norm;
      best.coeffs = x;
    }
    return best.norm_sq * (FT(1) + tol);
  };
  detail::enumerate(r, mu, r[0] * (FT(1) + tol), leaf);
  return best;
}

template <class Scalar>
struct ExactShortest {
  Coeffs coeffs;  // relative to the basis whose Gram matrix was searched
  Scalar norm_sq;
};

/// Exact shortest nonzero vector of the lattice with Gram matrix `gram`.
/// The search runs in floating point with a slightly widened radius; every
/// leaf is re-evaluated exactly, so the minimum and the tie-break are exact
/// as long as the floating GSO is accurate to far better than the widening,
/// which holds for the reduced, small-dimensional inputs this is meant for.
template <class Scalar>
ExactShortest<Scalar> shortest_vector_gram(const std::vector<std::vector<Scalar>>& gram) {
  const auto d = gram.size();
  if (d == 0) throw InvalidArgument("shortest_vector: empty basis");
  const auto g = ExactGso<Scalar>(gram);
  std::vector<long double> r(d);
  std::vector<std::vector<long double>> mu(d, std::vector<long double>(d, 0.0L));
  for (std::size_t a = 0; a < d; ++a) {
    r[a] = to_float<long double>(g.bstar_sq(static_cast<int>(a)));
    if (!(r[a] > 0)) throw RankError("shortest_vector: basis is linearly dependent");
    for (std::size_t b = 0; b < a; ++b) mu[a][b] = to_float<long double>(g.mu(static_cast<int>(a), static_cast<int>(b)));
  }
  constexpr long double kWiden = 1e-7L;
  ExactShortest<Scalar> best{Coeffs(d, 0), gram[0][0]};
  best.coeffs[0] = 1;
  auto exact_norm = [&](const Coeffs& x) {
    Scalar s = 0;
    for (std::size_t a = 0; a < d; ++a) {
      if (x[a] == 0) continue;
      Scalar row = 0;
      for (std::size_t b = 0; b < d; ++b)
        if (x[b] != 0) row += gram[a][b] * static_cast<long>(x[b]);
      s += row * static_cast<long>(x[a]);
    }
    return s;
  };
  auto leaf = [&](const Coeffs& x, long double) {
    Scalar s = exact_norm(x);
    if (s < best.norm_sq || (s == best.norm_sq && colex_less(x, best.coeffs))) {
      best.norm_sq = std::move(s);
      best.coeffs = x;
    }
    return to_float<long double>(best.norm_sq) * (1.0L + kWiden);
  };
  detail::enumerate(r, mu, to_float<long double>(best.norm_sq) * (1.0L + kWiden), leaf);
  return best;
}

}  // namespace latred
