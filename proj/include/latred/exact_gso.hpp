#pragma once

// Exact Gram-Schmidt data from an exact Gram matrix, using the integral
// (fraction-free) recurrence: d_i = det of the leading i x i Gram minor,
// lambda_{i,j} = d_j mu_{i,j}. Over Z every quantity stays integral.

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "latred/basis.hpp"
#include "latred/bigint.hpp"
#include "latred/error.hpp"

namespace latred {

namespace detail {
inline void div_exact(mpz_class& a, const mpz_class& b) { mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t()); }
inline void div_exact(mpq_class& a, const mpq_class& b) { a /= b; }
}  // namespace detail

/// Scalar is mpz_class for integer bases and mpq_class for rational Gram
/// matrices (e.g. the critical basis).
template <class Scalar>
class ExactGso {
 public:
  explicit ExactGso(const std::vector<std::vector<Scalar>>& gram) : n_(static_cast<int>(gram.size())) {
    const auto n = static_cast<std::size_t>(n_);
    d_.assign(n + 1, Scalar(0));
    lambda_.assign(n, std::vector<Scalar>(n, Scalar(0)));
    d_[0] = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (gram[i].size() != n) throw InvalidArgument("Gram matrix is not square");
      for (std::size_t j = 0; j <= i; ++j) {
        Scalar u = gram[i][j];
        for (std::size_t k = 0; k < j; ++k) {
          u = d_[k + 1] * u - lambda_[i][k] * lambda_[j][k];
          detail::div_exact(u, d_[k]);
        }
        if (j < i) {
          lambda_[i][j] = u;
        } else {
          if (u <= 0) throw RankError("exact GSO: rows are linearly dependent");
          d_[i + 1] = u;
        }
      }
    }
  }

  int n() const { return n_; }

  /// d_i for i = 0..n (d_0 = 1): squared volume of the first i vectors.
  const Scalar& d(int i) const { return d_[static_cast<std::size_t>(i)]; }

  mpq_class mu(int i, int j) const { return mpq_class(lambda_[idx(i)][idx(j)]) / mpq_class(d_[idx(j) + 1]); }

  mpq_class bstar_sq(int i) const { return mpq_class(d_[idx(i) + 1]) / mpq_class(d_[idx(i)]); }

  /// ||pi_k(b_l)||^2 for every k = 0..l (0-based), entry l being ||b*_l||^2.
  std::vector<mpq_class> proj_sq(int l) const {
    std::vector<mpq_class> out(idx(l) + 1);
    out[idx(l)] = bstar_sq(l);
    for (int k = l - 1; k >= 0; --k) {
      // mu_{l,k}^2 ||b*_k||^2 = lambda_{l,k}^2 / (d_{k+1} d_k)
      mpq_class t(lambda_[idx(l)][idx(k)] * lambda_[idx(l)][idx(k)]);
      t /= mpq_class(d_[idx(k) + 1] * d_[idx(k)]);
      out[idx(k)] = out[idx(k) + 1] + t;
    }
    return out;
  }

  /// Pot(B) = prod_i d_i.
  Scalar potential() const {
    Scalar p = 1;
    for (int i = 1; i <= n_; ++i) p *= d_[static_cast<std::size_t>(i)];
    return p;
  }

  /// vol(L)^2 = d_n.
  const Scalar& volume_sq() const { return d_.back(); }

 private:
  static std::size_t idx(int i) { return static_cast<std::size_t>(i); }

  int n_;
  std::vector<Scalar> d_;
  std::vector<std::vector<Scalar>> lambda_;
};

inline ExactGso<mpz_class> exact_gso(const IntBasis& b) { return ExactGso<mpz_class>(gram_matrix(b)); }
inline ExactGso<mpq_class> exact_gso(const RationalMatrix& gram) { return ExactGso<mpq_class>(gram); }

/// ln Pot(B) = sum_i ln d_i, from exact minors.
template <class Scalar>
double log_potential(const ExactGso<Scalar>& g) {
  double s = 0;
  for (int i = 1; i <= g.n(); ++i) s += log_abs(g.d(i));
  return s;
}

}  // namespace latred
