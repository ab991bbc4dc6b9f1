#pragma once

#include <string>

#include "latred/insertion.hpp"

namespace latred {

namespace detail {

/// Wraps a reduction body with timing and exact log-potential bookkeeping.
template <class Body>
ReductionResult timed_reduction(IntBasis b, Body&& body) {
  ReductionResult out;
  out.stats.log_potential_initial = log_potential(exact_gso(b));
  Stopwatch clock;
  out.basis = body(std::move(b), out.stats);
  out.stats.elapsed = clock.seconds();
  out.stats.log_potential_final = log_potential(exact_gso(out.basis));
  return out;
}

}  // namespace detail

/// delta-LLL: size reduction plus the Lovasz condition on adjacent pairs.
/// Throws PrecisionError when 10 n^3 log2(C) iterations do not suffice,
/// which only happens when floating rounding keeps flipping a guard.
template <class FT = long double>
ReductionResult lll_reduce(IntBasis b, const ReductionParams& params) {
  params.validate();
  return detail::timed_reduction(std::move(b), [&](IntBasis in, ReductionStats& st) {
    const int n = in.n();
    const auto cap = detail::cubic_cap(n, detail::log2_max_norm_sq(in), 10.0);
    Gso<FT> gso(std::move(in));
    if (!lll_range(gso, 0, n, detail::guarded_delta<FT>(params), st, cap))
      throw PrecisionError("LLL exceeded its iteration cap of " + std::to_string(cap));
    return std::move(gso).release();
  });
}

}  // namespace latred
