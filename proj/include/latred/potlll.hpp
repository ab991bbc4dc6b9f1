#pragma once

// Potential-minimizing deep insertions (PotLLL).
//
// For the current row l, P_{j,l} = Pot(sigma_{j,l} B) / Pot(B) follows from
//   P_{l,l} = 1,  P_{j,l} = P_{j+1,l} * ||pi_j(b_l)||^2 / ||b*_j||^2,
// and ||pi_j(b_l)||^2 are the partial sums left behind by Gso::compute_row.
// b_l is inserted at the minimizing j whenever delta > P_min; every such
// insertion shrinks the potential by a factor below delta, which bounds the
// number of swaps polynomially.

#include <cmath>
#include <string>
#include <vector>

#include "latred/insertion.hpp"
#include "latred/lll.hpp"

namespace latred {

template <class FT>
struct PotQuotients {
  std::vector<FT> values;  // values[j] = P_{j,l}, j = 0..l
  int argmin = 0;          // largest j attaining the minimum
  FT p_min = FT(1);
};

/// Fills `out` for row l. Row l must be valid and size-reduced, and the last
/// compute_row call must have been for l (size_reduce_row guarantees both).
template <class FT>
void pot_quotients(Gso<FT>& gso, int l, PotQuotients<FT>& out) {
  if (gso.proj_row() != l || gso.valid_rows() <= l) {
    gso.ensure_valid(l);
    gso.compute_row(l);
  }
  const auto proj = gso.proj_sq();
  out.values.resize(static_cast<std::size_t>(l) + 1);
  out.values[static_cast<std::size_t>(l)] = FT(1);
  out.argmin = l;
  out.p_min = FT(1);
  FT p = FT(1);
  for (int j = l - 1; j >= 0; --j) {
    p *= proj[static_cast<std::size_t>(j)] / gso.bstar_sq(j);
    out.values[static_cast<std::size_t>(j)] = p;
    // Strict comparison while j descends keeps the largest minimizer.
    if (p < out.p_min) {
      out.p_min = p;
      out.argmin = j;
    }
  }
}

template <class FT>
PotQuotients<FT> pot_quotients(Gso<FT>& gso, int l) {
  PotQuotients<FT> q;
  pot_quotients(gso, l, q);
  return q;
}

namespace detail {

template <class FT>
struct PotentialPolicy {
  FT threshold;
  PotQuotients<FT> q;

  int operator()(Gso<FT>& gso, int l) {
    if (l == 0) return 0;
    pot_quotients(gso, l, q);
    return threshold > q.p_min ? q.argmin : l;
  }
};

/// 10 x ((n-1) N + n) with N the potential swap bound; falls back to the
/// LLL cap when delta = 1 leaves N unbounded.
inline std::uint64_t potlll_cap(int n, double log2_c, double delta) {
  const double swaps = potential_swap_bound(n, log2_c, delta);
  if (!std::isfinite(swaps)) return cubic_cap(n, log2_c, 10.0);
  return saturate(10.0 * ((n - 1) * swaps + n));
}

}  // namespace detail

/// delta-PotLLL reduction.
template <class FT = long double>
ReductionResult potlll_reduce(IntBasis b, const ReductionParams& params) {
  params.validate();
  return detail::timed_reduction(std::move(b), [&](IntBasis in, ReductionStats& st) {
    const int n = in.n();
    const auto cap = detail::potlll_cap(n, detail::log2_max_norm_sq(in), params.delta_double());
    Gso<FT> gso(std::move(in));
    detail::PotentialPolicy<FT> policy{detail::guarded_delta<FT>(params), {}};
    if (!detail::insertion_loop(gso, 0, n, policy, st, cap))
      throw PrecisionError("PotLLL exceeded its iteration cap of " + std::to_string(cap));
    return std::move(gso).release();
  });
}

}  // namespace latred
