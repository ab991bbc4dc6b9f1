#pragma once

// Schnorr-Euchner BKZ with full (unpruned) enumeration of each block.
//
// Insertion: the block's shortest vector v = sum x_i b_i has primitive
// coefficients, so a run of unimodular row operations (Euclid on x) turns
// one block row into v while the others keep generating the rest of the
// block. v is then rotated to position j and the prefix is LLL-reduced
// again. This reaches the same basis space as the dependent-LLL lifting
// without ever carrying a zero vector through the GSO.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <string>

#include "latred/enumeration.hpp"
#include "latred/insertion.hpp"
#include "latred/lll.hpp"

namespace latred {

inline constexpr int kBkzMaxSweeps = 1000;

namespace detail {

/// Makes row `pos` of the block [j, j + x.size()) equal to sum x_i b_{j+i}
/// using unimodular operations inside the block; returns that position.
template <class FT>
int euclid_insert(Gso<FT>& gso, int j, Coeffs x) {
  const auto d = x.size();
  for (;;) {
    std::size_t a = d;
    int nonzero = 0;
    for (std::size_t i = 0; i < d; ++i) {
      if (x[i] == 0) continue;
      ++nonzero;
      if (a == d || std::llabs(x[i]) < std::llabs(x[a])) a = i;
    }
    if (a == d) throw InvalidArgument("BKZ insertion: zero coefficient vector");
    if (nonzero == 1) {
      if (std::llabs(x[a]) != 1) throw InvalidArgument("BKZ insertion: coefficients are not primitive");
      const int row = j + static_cast<int>(a);
      if (x[a] < 0) gso.row_negate(row);
      return row;
    }
    // v = x_a b_a + x_b b_b + ... ; b_a += q b_b leaves v unchanged if x_b -= q x_a.
    for (std::size_t b = 0; b < d; ++b) {
      if (b == a || x[b] == 0) continue;
      const std::int64_t q = x[b] / x[a];
      if (q == 0) continue;
      gso.row_addmul_si(j + static_cast<int>(a), j + static_cast<int>(b), static_cast<long>(q));
      x[b] -= q * x[a];
    }
  }
}

}  // namespace detail

/// BKZ-beta. Starts with delta-LLL, then sweeps j = 0..n-2 over blocks
/// [j, min(j + beta, n) - 1], inserting the block's shortest vector whenever
/// delta ||b*_j||^2 exceeds its projected norm. Stops after a sweep without
/// insertions, or after kBkzMaxSweeps sweeps with stats.cap_hit set.
template <class FT = long double>
ReductionResult bkz_reduce(IntBasis b, const ReductionParams& params) {
  params.validate();
  if (!params.beta) throw InvalidArgument("BKZ needs a blocksize");
  const int beta = *params.beta;
  if (beta > b.n()) throw InvalidArgument("BKZ blocksize exceeds the dimension");
  return detail::timed_reduction(std::move(b), [&](IntBasis in, ReductionStats& st) {
    const int n = in.n();
    const auto cap = detail::cubic_cap(n, detail::log2_max_norm_sq(in), 10.0);
    const FT threshold = detail::guarded_delta<FT>(params);
    Gso<FT> gso(in);
    auto lll = [&](int begin, int end) {
      if (!lll_range(gso, begin, end, threshold, st, cap))
        throw PrecisionError("LLL inside BKZ exceeded its iteration cap of " + std::to_string(cap));
    };
    lll(0, n);
    int reduced = n;  // rows [0, reduced) are LLL-reduced
    for (;;) {
      if (st.sweeps == static_cast<std::uint64_t>(kBkzMaxSweeps)) {
        st.cap_hit = true;
        break;
      }
      ++st.sweeps;
      bool clean = true;
      for (int j = 0; j + 1 < n; ++j) {
        const int k = std::min(j + beta, n) - 1;
        const int h = std::min(k + 2, n);
        if (reduced < k + 1) {
          lll(reduced, k + 1);
          reduced = k + 1;
        }
        const auto best = enum_shortest(gso, j, k);
        ++st.enumerations;
        if (threshold * gso.bstar_sq(j) > best.norm_sq) {
          clean = false;
          const int row = detail::euclid_insert(gso, j, best.coeffs);
          if (row > j) {
            gso.apply_sigma(j, row);
            ++st.swaps;
            if (row > j + 1) ++st.deep_insertions;
          }
          lll(j, h);
          reduced = h;
        } else if (reduced < h) {
          lll(reduced, h);
          reduced = h;
        }
      }
      if (clean && reduced == n) break;
    }
    if (reduced < n) lll(reduced, n);
    return std::move(gso).release();
  });
}

}  // namespace latred
