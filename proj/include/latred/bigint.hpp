#pragma once

// Conversions between GMP integers/rationals and native floating types.

#include <gmpxx.h>

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include "latred/error.hpp"

namespace latred {

/// Converts `z` to a floating type, keeping the top 64 bits of the magnitude.
/// Unlike mpz_get_d this does not overflow for values beyond 2^1024 when FT
/// has a wider exponent range (x87 long double).
template <class FT>
FT to_float(const mpz_class& z) {
  const mpz_srcptr p = z.get_mpz_t();
  const std::size_t size = mpz_size(p);
  if (size == 0) return FT(0);
  const std::uint64_t top = mpz_getlimbn(p, size - 1);
  const int lz = std::countl_zero(top);
  std::uint64_t mant = top << lz;
  if (lz != 0 && size >= 2) mant |= mpz_getlimbn(p, size - 2) >> (64 - lz);
  const long exp = static_cast<long>(64 * (size - 1)) - lz;
  FT v = std::ldexp(static_cast<FT>(mant), static_cast<int>(exp));
  return mpz_sgn(p) < 0 ? -v : v;
}

template <class FT>
FT to_float(const mpq_class& q) {
  // Exponent-safe division: scale numerator/denominator independently.
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  const long nb = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2));
  const long db = static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
  if (nb < 1000 && db < 1000) return to_float<FT>(num) / to_float<FT>(den);
  FT n = to_float<FT>(mpz_class(num >> static_cast<mp_bitcnt_t>(std::max(0L, nb - 128))));
  FT d = to_float<FT>(mpz_class(den >> static_cast<mp_bitcnt_t>(std::max(0L, db - 128))));
  return std::ldexp(n / d, static_cast<int>(std::max(0L, nb - 128) - std::max(0L, db - 128)));
}

/// Sets `out` to the integer value of `x`, which must already be integral.
template <class FT>
void set_from_float(mpz_class& out, FT x) {
  if (std::fabs(x) < FT(9.0e18)) {
    out = static_cast<long>(x);
    return;
  }
  int exp = 0;
  const FT frac = std::frexp(std::fabs(x), &exp);  // frac in [0.5, 1)
  const auto mant = static_cast<std::uint64_t>(std::ldexp(frac, 64));
  mpz_set_ui(out.get_mpz_t(), mant);
  if (exp >= 64)
    mpz_mul_2exp(out.get_mpz_t(), out.get_mpz_t(), static_cast<mp_bitcnt_t>(exp - 64));
  else
    mpz_tdiv_q_2exp(out.get_mpz_t(), out.get_mpz_t(), static_cast<mp_bitcnt_t>(64 - exp));
  if (x < 0) mpz_neg(out.get_mpz_t(), out.get_mpz_t());
}

/// Natural logarithm of a positive integer of any size.
inline double log_abs(const mpz_class& z) {
  if (z == 0) return -std::numeric_limits<double>::infinity();
  long exp = 0;
  const double m = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log(std::fabs(m)) + static_cast<double>(exp) * std::log(2.0);
}

inline double log_abs(const mpq_class& q) { return log_abs(q.get_num()) - log_abs(q.get_den()); }

inline std::size_t bit_length(const mpz_class& z) {
  return z == 0 ? 0 : mpz_sizeinbase(z.get_mpz_t(), 2);
}

/// Parses a locale-independent decimal literal ("0.99", "-3", "1e-2" is not
/// accepted) or a fraction ("99/100") into an exact rational.
inline mpq_class parse_rational(std::string_view text) {
  const std::string s(text);
  if (s.empty()) throw InvalidArgument("empty number");
  if (auto slash = s.find('/'); slash != std::string::npos) {
    mpq_class q;
    if (q.set_str(s, 10) != 0 || q.get_den() == 0) throw InvalidArgument("bad rational '" + s + "'");
    q.canonicalize();
    return q;
  }
  std::size_t i = 0;
  bool neg = false;
  if (s[i] == '-' || s[i] == '+') neg = s[i++] == '-';
  std::string digits;
  std::size_t frac_digits = 0;
  bool seen_dot = false;
  for (; i < s.size(); ++i) {
    if (s[i] == '.' && !seen_dot) {
      seen_dot = true;
    } else if (s[i] >= '0' && s[i] <= '9') {
      digits.push_back(s[i]);
      if (seen_dot) ++frac_digits;
    } else {
      throw InvalidArgument("bad decimal '" + s + "'");
    }
  }
  if (digits.empty()) throw InvalidArgument("bad decimal '" + s + "'");
  mpz_class num(digits, 10);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_digits);
  mpq_class q(neg ? mpz_class(-num) : num, den);
  q.canonicalize();
  return q;
}

}  // namespace latred
