#pragma once

// Reducedness oracles. The exact versions evaluate every defining inequality
// in rational arithmetic from the fraction-free GSO; the floating versions
// are fast pre-checks with the engine's slack, for dimensions where the exact
// rationals get too large.

#include <gmpxx.h>

#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "latred/basis.hpp"
#include "latred/enumeration.hpp"
#include "latred/exact_gso.hpp"
#include "latred/gso.hpp"
#include "latred/lll.hpp"

namespace latred {

enum class Notion { kSize, kLll, kDeep, kPot };

/// First inequality that fails. Indices are 1-based as in the usual
/// statement of the definitions; `lhs <= rhs` is what should have held.
struct Violation {
  std::string condition;
  int k = 0;
  int l = 0;
  double lhs = 0;
  double rhs = 0;

  std::string describe() const {
    std::ostringstream os;
    os.precision(17);
    os << condition << " violated at k=" << k << " l=" << l << ": " << lhs << " > " << rhs;
    return os.str();
  }
};

struct Verdict {
  std::optional<Violation> violation;
  explicit operator bool() const { return !violation; }
};

namespace detail {

inline Verdict fail(std::string what, int k, int l, double lhs, double rhs) {
  return Verdict{Violation{std::move(what), k + 1, l + 1, lhs, rhs}};
}

/// Blocksize restriction for deep insertion, 0-based k.
inline bool deep_allowed(int k, int l, int beta) { return k < beta || l - k <= beta; }

}  // namespace detail

template <class Scalar>
Verdict check_size_reduced(const ExactGso<Scalar>& g) {
  const mpq_class half(1, 2);
  for (int i = 1; i < g.n(); ++i)
    for (int j = 0; j < i; ++j) {
      const mpq_class m = abs(g.mu(i, j));
      if (m > half) return detail::fail("|mu| <= 1/2", j, i, m.get_d(), 0.5);
    }
  return {};
}

template <class Scalar>
Verdict check_lll_reduced(const ExactGso<Scalar>& g, const mpq_class& delta) {
  if (auto v = check_size_reduced(g); !v) return v;
  for (int k = 0; k + 1 < g.n(); ++k) {
    const mpq_class lhs = delta * g.bstar_sq(k);
    const mpq_class mu = g.mu(k + 1, k);
    const mpq_class rhs = g.bstar_sq(k + 1) + mu * mu * g.bstar_sq(k);
    if (lhs > rhs) return detail::fail("Lovasz", k, k + 1, lhs.get_d(), rhs.get_d());
  }
  return {};
}

/// Size-reduced and delta ||pi_k(b_k)||^2 <= ||pi_k(b_l)||^2 for all k < l
/// with k < beta or l - k <= beta (0-based).
template <class Scalar>
Verdict check_deep_reduced(const ExactGso<Scalar>& g, const mpq_class& delta, int beta) {
  if (auto v = check_size_reduced(g); !v) return v;
  for (int l = 1; l < g.n(); ++l) {
    const auto proj = g.proj_sq(l);
    for (int k = 0; k < l; ++k) {
      if (!detail::deep_allowed(k, l, beta)) continue;
      const mpq_class lhs = delta * g.bstar_sq(k);
      if (lhs > proj[static_cast<std::size_t>(k)])
        return detail::fail("deep insertion", k, l, lhs.get_d(), proj[static_cast<std::size_t>(k)].get_d());
    }
  }
  return {};
}

/// Pot(sigma_{k,l} B) / Pot(B) = prod_{i=k}^{l} ||pi_i(b_l)||^2 / ||b*_i||^2,
/// exact, for every k = 0..l.
template <class Scalar>
std::vector<mpq_class> exact_pot_quotients(const ExactGso<Scalar>& g, int l) {
  const auto proj = g.proj_sq(l);
  std::vector<mpq_class> out(static_cast<std::size_t>(l) + 1);
  out[static_cast<std::size_t>(l)] = 1;
  for (int k = l - 1; k >= 0; --k)
    out[static_cast<std::size_t>(k)] = out[static_cast<std::size_t>(k) + 1] * proj[static_cast<std::size_t>(k)] / g.bstar_sq(k);
  return out;
}

/// Size-reduced and delta Pot(B) <= Pot(sigma_{k,l} B) for all k < l.
template <class Scalar>
Verdict check_pot_reduced(const ExactGso<Scalar>& g, const mpq_class& delta) {
  if (auto v = check_size_reduced(g); !v) return v;
  for (int l = 1; l < g.n(); ++l) {
    const auto q = exact_pot_quotients(g, l);
    for (int k = 0; k < l; ++k)
      if (delta > q[static_cast<std::size_t>(k)])
        return detail::fail("potential", k, l, delta.get_d(), q[static_cast<std::size_t>(k)].get_d());
  }
  return {};
}

template <class Scalar>
Verdict check_reduced(const ExactGso<Scalar>& g, Notion notion, const mpq_class& delta, int beta) {
  switch (notion) {
    case Notion::kSize: return check_size_reduced(g);
    case Notion::kLll: return check_lll_reduced(g, delta);
    case Notion::kDeep: return check_deep_reduced(g, delta, beta);
    case Notion::kPot: return check_pot_reduced(g, delta);
  }
  return {};
}

inline bool is_size_reduced(const IntBasis& b) { return bool(check_size_reduced(exact_gso(b))); }
inline bool is_lll_reduced(const IntBasis& b, const mpq_class& delta) { return bool(check_lll_reduced(exact_gso(b), delta)); }
inline bool is_deep_reduced(const IntBasis& b, const mpq_class& delta, int beta) {
  return bool(check_deep_reduced(exact_gso(b), delta, beta));
}
inline bool is_pot_reduced(const IntBasis& b, const mpq_class& delta) { return bool(check_pot_reduced(exact_gso(b), delta)); }

/// Floating counterpart of check_reduced with kGsoEpsilon slack on every
/// inequality. Meant for dimensions where the exact check is too slow.
inline Verdict check_reduced_floating(const IntBasis& b, Notion notion, double delta, int beta) {
  using FT = long double;
  Gso<FT> gso(b);
  const int n = b.n();
  gso.ensure_valid(n);
  const FT eps = FT(kGsoEpsilon);
  const FT d = FT(delta) * (FT(1) - eps);
  for (int i = 1; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (std::fabs(gso.mu(i, j)) > FT(0.5) + eps)
        return detail::fail("|mu| <= 1/2", j, i, static_cast<double>(std::fabs(gso.mu(i, j))), 0.5);
  if (notion == Notion::kSize) return {};
  for (int l = 1; l < n; ++l) {
    gso.compute_row(l);
    const auto proj = gso.proj_sq();
    FT q = 1;
    for (int k = l - 1; k >= 0; --k) {
      const FT lhs = d * gso.bstar_sq(k);
      const FT rhs = proj[static_cast<std::size_t>(k)];
      q *= rhs / gso.bstar_sq(k);
      const bool check_pair = notion == Notion::kPot || (notion == Notion::kLll && k == l - 1) ||
                              (notion == Notion::kDeep && detail::deep_allowed(k, l, beta));
      if (!check_pair) continue;
      if (notion == Notion::kPot) {
        if (d > q) return detail::fail("potential", k, l, delta, static_cast<double>(q));
      } else if (lhs > rhs) {
        return detail::fail(notion == Notion::kLll ? "Lovasz" : "deep insertion", k, l, static_cast<double>(lhs),
                            static_cast<double>(rhs));
      }
    }
  }
  return {};
}

/// Pot(B) = prod_i d_i, exact.
inline mpz_class potential_exact(const IntBasis& b) { return exact_gso(b).potential(); }

/// ln Pot(B), from exact minors.
inline double log_potential(const IntBasis& b) { return log_potential(exact_gso(b)); }

inline constexpr int kMaxSvpDimension = 30;

/// lambda_1(L)^2, exact. Enumerates over an LLL-reduced copy of the basis.
inline mpz_class shortest_vector_len_sq(const IntBasis& b) {
  if (b.n() > kMaxSvpDimension)
    throw InvalidArgument("shortest_vector_len: dimension " + std::to_string(b.n()) + " exceeds " +
                          std::to_string(kMaxSvpDimension));
  const auto reduced = lll_reduce(b, ReductionParams::make(Algorithm::kLll, mpq_class(99, 100))).basis;
  return shortest_vector_gram(gram_matrix(reduced)).norm_sq;
}

namespace detail {
inline mpq_class pow(const mpq_class& q, unsigned long e) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), e);
  return mpq_class(num, den);
}
inline mpz_class pow(const mpz_class& z, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), z.get_mpz_t(), e);
  return r;
}
}  // namespace detail

/// ||b_1|| <= (delta - 1/4)^{-(n-1)/4} vol(L)^{1/n}, compared exactly as
/// ||b_1||^{4n} (delta - 1/4)^{n(n-1)} <= vol^4.
inline bool volume_bound_holds(const IntBasis& b, const mpq_class& delta) {
  const auto n = static_cast<unsigned long>(b.n());
  const mpz_class vol_sq = exact_gso(b).volume_sq();
  const mpq_class lhs = mpq_class(detail::pow(norm_sq(b[0]), 2 * n)) * detail::pow(mpq_class(delta - mpq_class(1, 4)), n * (n - 1));
  return lhs <= mpq_class(vol_sq * vol_sq);
}

/// ||b_1|| <= (delta - 1/4)^{-(n-1)/2} lambda_1, compared exactly as
/// ||b_1||^2 (delta - 1/4)^{n-1} <= lambda_1^2.
inline bool lambda_bound_holds(const IntBasis& b, const mpq_class& delta, const mpz_class& lambda1_sq) {
  const auto n = static_cast<unsigned long>(b.n());
  return mpq_class(norm_sq(b[0])) * detail::pow(mpq_class(delta - mpq_class(1, 4)), n - 1) <= mpq_class(lambda1_sq);
}

/// lambda_1^2 / vol^{2/n} <= 1 + n/4, compared as lambda_1^{2n} <= (1 + n/4)^n vol^2.
inline bool hermite_bound_holds(const mpz_class& lambda1_sq, const mpz_class& vol_sq, int n) {
  const auto e = static_cast<unsigned long>(n);
  return mpq_class(detail::pow(lambda1_sq, e)) <= detail::pow(mpq_class(4 + n, 4), e) * mpq_class(vol_sq);
}

/// swaps <= log_{1/delta}(C^{n(n-1)/2}) with C = max ||b_i||^2 of the input,
/// compared exactly as (1/delta)^swaps <= C^{n(n-1)/2}.
inline bool swap_bound_holds(std::uint64_t swaps, const IntBasis& input, const mpq_class& delta) {
  if (delta == 1) return true;
  mpz_class c = 1;
  for (const auto& row : input.rows()) c = std::max(c, norm_sq(row));
  const auto n = static_cast<unsigned long>(input.n());
  const auto s = static_cast<unsigned long>(swaps);
  // q^s <= C^{n(n-1)/2} p^s for delta = p/q
  return detail::pow(delta.get_den(), s) <= detail::pow(c, n * (n - 1) / 2) * detail::pow(delta.get_num(), s);
}

struct Metrics {
  double norm_b1 = 0;
  double log_vol = 0;  // ln vol(L) = sum_i ln ||b*_i||
  double rhf = 0;
  double hermite_factor = 0;
  double gamma_upper = 0;
};

/// Quality metrics of b. Pass ln vol(L) when it is known (vol = p for the
/// generated HNF lattices); otherwise it comes from the exact Gram determinant.
inline Metrics metrics(const IntBasis& b, std::optional<double> log_vol = std::nullopt) {
  const int n = b.n();
  Metrics m;
  m.log_vol = log_vol ? *log_vol : 0.5 * log_abs(exact_gso(b).volume_sq());
  const double log_b1 = 0.5 * log_abs(norm_sq(b[0]));
  m.norm_b1 = std::exp(log_b1);
  m.hermite_factor = std::exp(log_b1 - m.log_vol / n);
  m.rhf = std::exp((log_b1 - m.log_vol / n) / n);
  m.gamma_upper = 1.0 + n / 4.0;
  return m;
}

}  // namespace latred
