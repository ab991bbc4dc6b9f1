#pragma once

#include "latred/bkz.hpp"
#include "latred/deep.hpp"
#include "latred/lll.hpp"
#include "latred/potlll.hpp"

namespace latred {

template <class FT>
ReductionResult reduce_as(IntBasis b, const ReductionParams& params) {
  switch (params.algorithm) {
    case Algorithm::kLll: return lll_reduce<FT>(std::move(b), params);
    case Algorithm::kPotLll: return potlll_reduce<FT>(std::move(b), params);
    case Algorithm::kDeepLll: return deep_lll_reduce<FT>(std::move(b), params);
    case Algorithm::kBkz: return bkz_reduce<FT>(std::move(b), params);
  }
  throw InvalidArgument("unknown algorithm");
}

/// Runs the algorithm selected in params at the selected precision. Double
/// precision is refused when squared row norms would leave its exponent range.
inline ReductionResult reduce(IntBasis b, const ReductionParams& params) {
  if (params.precision == Precision::kDouble) {
    if (detail::log2_max_norm_sq(b) > 1000)
      throw PrecisionError("entries too large for double precision; use extended");
    return reduce_as<double>(std::move(b), params);
  }
  return reduce_as<long double>(std::move(b), params);
}

}  // namespace latred
