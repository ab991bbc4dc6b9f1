#pragma once

// Deterministic lattice generators: Goldstein-Mayer HNF bases and the
// critical basis A_n(sqrt(3/4)).

#include <gmpxx.h>

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "latred/basis.hpp"
#include "latred/error.hpp"

namespace latred {

/// splitmix64. Identical streams on every platform for a given seed.
class Prng64 {
 public:
  explicit Prng64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [0, 2^bits), built from little-endian 64-bit words.
  mpz_class bits(unsigned nbits) {
    mpz_class r = 0;
    const unsigned words = (nbits + 63) / 64;
    for (unsigned w = 0; w < words; ++w) {
      mpz_class word;
      mpz_set_ui(word.get_mpz_t(), next());
      mpz_mul_2exp(word.get_mpz_t(), word.get_mpz_t(), 64 * w);
      r += word;
    }
    mpz_fdiv_r_2exp(r.get_mpz_t(), r.get_mpz_t(), nbits);
    return r;
  }

  /// Uniform integer in [0, bound) by rejection sampling.
  mpz_class below(const mpz_class& bound) {
    const auto nbits = static_cast<unsigned>(mpz_sizeinbase(bound.get_mpz_t(), 2));
    for (;;) {
      mpz_class r = bits(nbits);
      if (r < bound) return r;
    }
  }

 private:
  std::uint64_t state_;
};

namespace detail {

inline bool miller_rabin_round(const mpz_class& n, const mpz_class& a, const mpz_class& d, unsigned s) {
  const mpz_class nm1 = n - 1;
  mpz_class x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == nm1) return true;
  for (unsigned r = 1; r < s; ++r) {
    mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
    if (x == nm1) return true;
    if (x == 1) return false;
  }
  return false;
}

}  // namespace detail

/// Miller-Rabin with the first twelve prime bases, which is deterministic
/// below 318665857834031151167461, the least strong pseudoprime to all of
/// them. Larger inputs get 52 further rounds with bases from a fixed
/// splitmix64 stream, so the answer is still reproducible.
inline bool is_probable_prime(const mpz_class& n) {
  static constexpr std::array<unsigned, 12> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  if (n < 2) return false;
  for (unsigned p : kBases) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  mpz_class d = n - 1;
  unsigned s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d >>= 1;
    ++s;
  }
  for (unsigned p : kBases)
    if (!detail::miller_rabin_round(n, mpz_class(p), d, s)) return false;
  static const mpz_class kDeterministicLimit("318665857834031151167461", 10);
  if (n < kDeterministicLimit) return true;
  Prng64 rng(0x5EED5EED5EED5EEDULL);
  const mpz_class span = n - 3;
  for (int round = 0; round < 52; ++round) {
    mpz_class a = rng.below(span) + 2;
    if (!detail::miller_rabin_round(n, a, d, s)) return false;
  }
  return true;
}

inline mpz_class next_prime_at_least(mpz_class r) {
  if (r <= 2) return 2;
  if (mpz_even_p(r.get_mpz_t())) ++r;
  while (!is_probable_prime(r)) r += 2;
  return r;
}

/// Goldstein-Mayer basis: row 1 = (p, 0, ..., 0) with p the least prime
/// >= a uniform `bits`-bit integer; row i = (x_i, 0, .., 1, .., 0) with
/// x_i uniform in [0, p). Volume is p.
inline IntBasis gen_random_hnf(int dim, int bits, std::uint64_t seed) {
  if (dim < 2) throw InvalidArgument("gen_random_hnf: dim must be >= 2");
  if (bits < 8 || bits > 4096) throw InvalidArgument("gen_random_hnf: bits must be in [8, 4096]");
  Prng64 rng(seed);
  mpz_class r = rng.bits(static_cast<unsigned>(bits));
  mpz_setbit(r.get_mpz_t(), static_cast<mp_bitcnt_t>(bits - 1));
  const mpz_class p = next_prime_at_least(r);

  const auto n = static_cast<std::size_t>(dim);
  IntMatrix rows(n, IntVector(n, 0));
  rows[0][0] = p;
  for (std::size_t i = 1; i < n; ++i) {
    rows[i][0] = rng.below(p);
    rows[i][i] = 1;
  }
  return IntBasis(std::move(rows));
}

/// Critical basis A_n(alpha), alpha = sqrt(3/4): diagonal 1, alpha, ..,
/// alpha^{n-1}; below the diagonal, column j holds alpha^{j-1}/2.
struct CriticalBasis {
  RationalMatrix gram;                          // exact A_n A_n^T
  std::vector<std::vector<long double>> rows;   // numeric A_n
};

inline CriticalBasis gen_critical(int dim) {
  if (dim < 2) throw InvalidArgument("gen_critical: dim must be >= 2");
  const auto n = static_cast<std::size_t>(dim);
  // alpha^{2k} = (3/4)^k, so every Gram entry is rational.
  std::vector<mpq_class> a2(n);
  a2[0] = 1;
  for (std::size_t k = 1; k < n; ++k) a2[k] = a2[k - 1] * mpq_class(3, 4);

  CriticalBasis out;
  out.gram.assign(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      mpq_class s = 0;
      for (std::size_t c = 0; c < i; ++c) s += a2[c] / 4;
      s += (i == j) ? a2[i] : a2[i] / 2;
      out.gram[i][j] = out.gram[j][i] = s;
    }

  const long double alpha = std::sqrt(0.75L);
  out.rows.assign(n, std::vector<long double>(n, 0.0L));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < i; ++c) out.rows[i][c] = std::pow(alpha, static_cast<long double>(c)) / 2;
    out.rows[i][i] = std::pow(alpha, static_cast<long double>(i));
  }
  return out;
}

/// Integer approximation round-down(2^scale_bits * A_n) used to feed the
/// reduction engines, which operate on integer bases. Entries are computed
/// exactly as floor(sqrt(3^c * 4^(scale_bits - c - [below diagonal]))).
inline IntBasis critical_int_basis(int dim, int scale_bits) {
  if (dim < 2) throw InvalidArgument("critical_int_basis: dim must be >= 2");
  if (scale_bits < dim + 1) throw InvalidArgument("critical_int_basis: scale_bits must exceed dim");
  const auto n = static_cast<std::size_t>(dim);
  auto entry = [&](std::size_t c, bool diag) {
    // 2^s alpha^c = sqrt(3^c 4^(s-c)); halved below the diagonal.
    const unsigned long shift = static_cast<unsigned long>(scale_bits) - c - (diag ? 0 : 1);
    mpz_class v;
    mpz_ui_pow_ui(v.get_mpz_t(), 3, c);
    mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), 2 * shift);
    mpz_sqrt(v.get_mpz_t(), v.get_mpz_t());
    return v;
  };
  IntMatrix rows(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < i; ++c) rows[i][c] = entry(c, false);
    rows[i][i] = entry(i, true);
  }
  return IntBasis(std::move(rows));
}

}  // namespace latred
