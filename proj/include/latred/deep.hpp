#pragma once

// Schnorr-Euchner LLL with deep insertions, insertion positions restricted
// to k < beta or l - k <= beta (0-based k).

#include <algorithm>

#include "latred/insertion.hpp"
#include "latred/lll.hpp"

namespace latred {

namespace detail {

/// First k (scanning upward through the allowed set) with
/// delta ||b*_k||^2 > ||pi_k(b_l)||^2.
template <class FT>
struct DeepPolicy {
  FT threshold;
  int beta;

  int operator()(const Gso<FT>& gso, int l) const {
    const auto proj = gso.proj_sq();
    const int head = std::min(beta, l);
    for (int k = 0; k < head; ++k)
      if (threshold * gso.bstar_sq(k) > proj[static_cast<std::size_t>(k)]) return k;
    for (int k = std::max(head, l - beta); k < l; ++k)
      if (threshold * gso.bstar_sq(k) > proj[static_cast<std::size_t>(k)]) return k;
    return l;
  }
};

}  // namespace detail

/// delta-DeepLLL with blocksize beta. No polynomial bound is known, so the
/// loop stops after 100 n^3 log2(C) iterations and sets stats.cap_hit.
template <class FT = long double>
ReductionResult deep_lll_reduce(IntBasis b, const ReductionParams& params) {
  params.validate();
  if (!params.beta) throw InvalidArgument("DeepLLL needs a blocksize");
  return detail::timed_reduction(std::move(b), [&](IntBasis in, ReductionStats& st) {
    const int n = in.n();
    const auto cap = detail::cubic_cap(n, detail::log2_max_norm_sq(in), 100.0);
    Gso<FT> gso(std::move(in));
    detail::DeepPolicy<FT> policy{detail::guarded_delta<FT>(params), *params.beta};
    st.cap_hit = !detail::insertion_loop(gso, 0, n, policy, st, cap);
    return std::move(gso).release();
  });
}

}  // namespace latred
