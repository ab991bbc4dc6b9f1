#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "latred/basis.hpp"
#include "latred/error.hpp"

namespace latred {

enum class Algorithm { kLll, kPotLll, kDeepLll, kBkz };

/// Floating type behind the GSO engine. Extended is x87 long double
/// (64-bit significand, 15-bit exponent).
enum class Precision { kExtended, kDouble };

inline std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::kLll: return "lll";
    case Algorithm::kPotLll: return "potlll";
    case Algorithm::kDeepLll: return "deep";
    case Algorithm::kBkz: return "bkz";
  }
  return "?";
}

struct ReductionParams {
  mpq_class delta{99, 100};
  std::optional<int> beta;
  Algorithm algorithm = Algorithm::kLll;
  Precision precision = Precision::kExtended;

  static ReductionParams make(Algorithm alg, mpq_class delta, std::optional<int> beta = std::nullopt) {
    ReductionParams p;
    p.algorithm = alg;
    p.delta = std::move(delta);
    p.beta = beta;
    p.validate();
    return p;
  }

  void validate() const {
    if (!(delta > mpq_class(1, 4) && delta <= 1)) throw InvalidArgument("delta must lie in (1/4, 1]");
    if (beta && *beta < 2) throw InvalidArgument("blocksize must be >= 2");
    if ((algorithm == Algorithm::kDeepLll || algorithm == Algorithm::kBkz) && !beta)
      throw InvalidArgument(std::string(to_string(algorithm)) + " needs a blocksize");
  }

  double delta_double() const { return delta.get_d(); }
};

struct ReductionStats {
  std::uint64_t swaps = 0;            // every sigma_{k,l} with k < l, adjacent or deep
  std::uint64_t deep_insertions = 0;  // sigma_{k,l} with k < l - 1
  std::uint64_t iterations = 0;       // passes through the main loop
  std::uint64_t enumerations = 0;     // BKZ block enumerations
  std::uint64_t sweeps = 0;           // BKZ tours
  double elapsed = 0;                 // seconds, reduction only
  double log_potential_initial = 0;
  double log_potential_final = 0;
  bool cap_hit = false;
};

struct ReductionResult {
  IntBasis basis;
  ReductionStats stats;
};

}  // namespace latred
