#pragma once

// Zint: an integer that lives in an int64 while it fits and in a heap mpz
// otherwise. The reduction engines spend most of their time on row updates
// whose operands have shrunk to a few dozen bits; GMP's per-call overhead
// dominates those, so the hot operations get overflow-checked native paths.

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <memory>
#include <utility>

#include "latred/bigint.hpp"

namespace latred {

class Zint {
 public:
  Zint() = default;
  Zint(std::int64_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Zint(const mpz_class& z) { assign(z); }

  Zint(const Zint& o) : v_(o.v_), big_(o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr) {}
  Zint(Zint&&) noexcept = default;
  Zint& operator=(const Zint& o) {
    if (this != &o) {
      v_ = o.v_;
      big_ = o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr;
    }
    return *this;
  }
  Zint& operator=(Zint&&) noexcept = default;

  void assign(const mpz_class& z) {
    if (z.fits_slong_p()) {
      v_ = z.get_si();
      big_.reset();
    } else {
      if (!big_) big_ = std::make_unique<mpz_class>();
      *big_ = z;
    }
  }

  bool is_small() const { return !big_; }
  std::int64_t small() const { return v_; }

  mpz_class to_mpz() const { return big_ ? *big_ : mpz_class(static_cast<long>(v_)); }

  template <class FT>
  FT to_float() const {
    return big_ ? latred::to_float<FT>(*big_) : static_cast<FT>(v_);
  }

  int sign() const { return big_ ? mpz_sgn(big_->get_mpz_t()) : (v_ > 0) - (v_ < 0); }

  void negate() {
    if (big_) {
      mpz_neg(big_->get_mpz_t(), big_->get_mpz_t());
      demote();
    } else if (v_ == INT64_MIN) {
      promote();
      mpz_neg(big_->get_mpz_t(), big_->get_mpz_t());
    } else {
      v_ = -v_;
    }
  }

  friend void swap(Zint& a, Zint& b) noexcept {
    std::swap(a.v_, b.v_);
    std::swap(a.big_, b.big_);
  }

  /// this += b * x
  void addmul(const Zint& b, std::int64_t x) {
    if (!big_ && !b.big_) {
      std::int64_t p, s;
      if (!__builtin_mul_overflow(b.v_, x, &p) && !__builtin_add_overflow(v_, p, &s)) {
        v_ = s;
        return;
      }
    }
    promote();
    if (b.big_) {
      if (x >= 0)
        mpz_addmul_ui(big_->get_mpz_t(), b.big_->get_mpz_t(), static_cast<unsigned long>(x));
      else
        mpz_submul_ui(big_->get_mpz_t(), b.big_->get_mpz_t(), 0UL - static_cast<unsigned long>(x));
    } else {
      const __int128 p = static_cast<__int128>(b.v_) * x;
      add_int128(p);
    }
    demote();
  }

  /// this += b * x for an arbitrary-size multiplier.
  void addmul(const Zint& b, const mpz_class& x) {
    if (x.fits_slong_p()) {
      addmul(b, static_cast<std::int64_t>(x.get_si()));
      return;
    }
    promote();
    if (b.big_) {
      mpz_addmul(big_->get_mpz_t(), x.get_mpz_t(), b.big_->get_mpz_t());
    } else {
      mpz_class t = x * static_cast<long>(b.v_);
      *big_ += t;
    }
    demote();
  }

  friend bool operator==(const Zint& a, const Zint& b) {
    if (!a.big_ && !b.big_) return a.v_ == b.v_;
    return a.to_mpz() == b.to_mpz();
  }

 private:
  void promote() {
    if (!big_) big_ = std::make_unique<mpz_class>(static_cast<long>(v_));
  }

  void demote() {
    if (big_ && mpz_size(big_->get_mpz_t()) <= 1 && big_->fits_slong_p()) {
      v_ = big_->get_si();
      big_.reset();
    }
  }

  void add_int128(__int128 p) {
    const bool neg = p < 0;
    unsigned __int128 mag = neg ? static_cast<unsigned __int128>(-(p + 1)) + 1 : static_cast<unsigned __int128>(p);
    mpz_class t;
    mpz_set_ui(t.get_mpz_t(), static_cast<unsigned long>(mag >> 64));
    mpz_mul_2exp(t.get_mpz_t(), t.get_mpz_t(), 64);
    mpz_add_ui(t.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(mag));
    if (neg)
      *big_ -= t;
    else
      *big_ += t;
  }

  std::int64_t v_ = 0;
  std::unique_ptr<mpz_class> big_;
};

/// Exact sum of a[i] * b[i].
inline Zint dot(const std::vector<Zint>& a, const std::vector<Zint>& b) {
  __int128 acc = 0;
  mpz_class big = 0;
  bool spilled = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_small() && b[i].is_small()) {
      const __int128 p = static_cast<__int128>(a[i].small()) * b[i].small();
      __int128 s;
      if (!__builtin_add_overflow(acc, p, &s)) {
        acc = s;
        continue;
      }
    }
    mpz_class x = a[i].to_mpz();
    x *= b[i].to_mpz();
    big += x;
    spilled = true;
  }
  Zint out;
  if (!spilled && acc >= INT64_MIN && acc <= INT64_MAX) return Zint(static_cast<std::int64_t>(acc));
  const bool neg = acc < 0;
  unsigned __int128 mag = neg ? static_cast<unsigned __int128>(-(acc + 1)) + 1 : static_cast<unsigned __int128>(acc);
  mpz_class t;
  mpz_set_ui(t.get_mpz_t(), static_cast<unsigned long>(mag >> 64));
  mpz_mul_2exp(t.get_mpz_t(), t.get_mpz_t(), 64);
  mpz_add_ui(t.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(mag));
  big += neg ? mpz_class(-t) : t;
  out.assign(big);
  return out;
}

}  // namespace latred
