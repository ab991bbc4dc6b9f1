#pragma once

// The loop shared by LLL, PotLLL and DeepLLL: size-reduce b_l, ask a policy
// for an insertion index k <= l, apply sigma_{k,l} and resume at k, or move
// on to l + 1. Adjacent-swap LLL is the policy that only ever answers l - 1.

#include <gmpxx.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>

#include "latred/basis.hpp"
#include "latred/exact_gso.hpp"
#include "latred/gso.hpp"
#include "latred/params.hpp"

namespace latred {

namespace detail {

/// log2 of C = max_i ||b_i||^2, at least 1.
inline double log2_max_norm_sq(const IntBasis& b) {
  std::size_t bits = 1;
  for (const auto& row : b.rows()) bits = std::max(bits, bit_length(norm_sq(row)));
  return static_cast<double>(bits);
}

inline std::uint64_t saturate(double x) {
  constexpr double kMax = 1.8e19;
  return x >= kMax ? std::numeric_limits<std::uint64_t>::max() : static_cast<std::uint64_t>(std::max(1.0, x));
}

/// log_{1/delta}(C^{n(n-1)/2}): the swap bound from the potential argument.
/// Infinite for delta = 1.
inline double potential_swap_bound(int n, double log2_c, double delta) {
  if (delta >= 1.0) return std::numeric_limits<double>::infinity();
  return 0.5 * n * (n - 1) * log2_c * std::log(2.0) / std::log(1.0 / delta);
}

/// Iteration cap c * n^3 * log2 C.
inline std::uint64_t cubic_cap(int n, double log2_c, double factor) {
  return saturate(factor * static_cast<double>(n) * n * n * log2_c);
}

/// Runs the insertion loop on rows [begin, end). Rows before `begin` must
/// already be reduced with respect to the policy. Returns false when the
/// iteration cap was reached before finishing.
template <class FT, class Policy>
bool insertion_loop(Gso<FT>& gso, int begin, int end, Policy&& choose, ReductionStats& st, std::uint64_t cap) {
  gso.ensure_valid(begin);
  int l = begin;
  std::uint64_t iters = 0;
  while (l < end) {
    if (iters >= cap) {
      st.iterations += iters;
      return false;
    }
    ++iters;
    gso.size_reduce_row(l);
    const int k = choose(gso, l);
    if (k < l) {
      gso.apply_sigma(k, l);
      ++st.swaps;
      if (k < l - 1) ++st.deep_insertions;
      l = k;
    } else {
      gso.check_rank(l);
      ++l;
    }
  }
  st.iterations += iters;
  return true;
}

/// Adjacent Lovasz test: insert at l-1 iff delta ||b*_{l-1}||^2 > ||pi_{l-1}(b_l)||^2.
template <class FT>
struct LovaszPolicy {
  FT threshold;  // delta * (1 - eps)

  int operator()(const Gso<FT>& gso, int l) const {
    if (l == 0) return 0;
    return threshold * gso.bstar_sq(l - 1) > gso.proj_sq()[static_cast<std::size_t>(l - 1)] ? l - 1 : l;
  }
};

template <class FT>
FT guarded_delta(const ReductionParams& p) {
  return static_cast<FT>(p.delta.get_d()) * (FT(1) - FT(kGsoEpsilon));
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace detail

/// LLL-reduces rows [begin, end) in place (rows before begin assumed
/// reduced). Returns false on cap hit.
template <class FT>
bool lll_range(Gso<FT>& gso, int begin, int end, FT threshold, ReductionStats& st, std::uint64_t cap) {
  return detail::insertion_loop(gso, begin, end, detail::LovaszPolicy<FT>{threshold}, st, cap);
}

}  // namespace latred
