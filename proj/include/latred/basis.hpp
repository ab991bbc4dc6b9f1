#pragma once

// Lattice bases over Z and Q, plus the `[[a b][c d]]` text format.

#include <gmpxx.h>

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "latred/error.hpp"

namespace latred {

using IntVector = std::vector<mpz_class>;
using IntMatrix = std::vector<IntVector>;
using RationalMatrix = std::vector<std::vector<mpq_class>>;

/// Integer lattice basis stored as rows b_1..b_n in Z^m, n <= m.
///
/// Linear independence is not checked here (it needs a Gram-Schmidt pass);
/// consumers raise RankError when they detect a dependent row.
class IntBasis {
 public:
  IntBasis() = default;

  explicit IntBasis(IntMatrix rows) : rows_(std::move(rows)) {
    if (rows_.empty()) throw InvalidArgument("basis has no rows");
    const std::size_t m = rows_.front().size();
    if (m == 0) throw InvalidArgument("basis rows are empty");
    for (const auto& r : rows_)
      if (r.size() != m) throw InvalidArgument("ragged basis rows");
    if (rows_.size() > m) throw InvalidArgument("more rows than ambient dimension");
  }

  /// n x n identity.
  static IntBasis identity(int n) {
    IntMatrix rows(static_cast<std::size_t>(n), IntVector(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) rows[i][i] = 1;
    return IntBasis(std::move(rows));
  }

  int n() const { return static_cast<int>(rows_.size()); }
  int m() const { return rows_.empty() ? 0 : static_cast<int>(rows_.front().size()); }

  IntVector& operator[](int i) { return rows_[static_cast<std::size_t>(i)]; }
  const IntVector& operator[](int i) const { return rows_[static_cast<std::size_t>(i)]; }

  const IntMatrix& rows() const { return rows_; }
  IntMatrix& rows() { return rows_; }

  friend bool operator==(const IntBasis&, const IntBasis&) = default;

 private:
  IntMatrix rows_;
};

/// Rows with rational entries; same shape rules as IntBasis.
class RationalBasis {
 public:
  RationalBasis() = default;
  explicit RationalBasis(RationalMatrix rows) : rows_(std::move(rows)) {
    if (rows_.empty() || rows_.front().empty()) throw InvalidArgument("empty rational basis");
    for (const auto& r : rows_)
      if (r.size() != rows_.front().size()) throw InvalidArgument("ragged basis rows");
  }
  int n() const { return static_cast<int>(rows_.size()); }
  int m() const { return rows_.empty() ? 0 : static_cast<int>(rows_.front().size()); }
  const RationalMatrix& rows() const { return rows_; }

 private:
  RationalMatrix rows_;
};

inline mpz_class dot(const IntVector& a, const IntVector& b) {
  mpz_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) mpz_addmul(s.get_mpz_t(), a[i].get_mpz_t(), b[i].get_mpz_t());
  return s;
}

inline mpz_class norm_sq(const IntVector& a) { return dot(a, a); }

/// Exact Gram matrix B B^T.
inline IntMatrix gram_matrix(const IntBasis& b) {
  const auto n = static_cast<std::size_t>(b.n());
  IntMatrix g(n, IntVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      g[i][j] = dot(b.rows()[i], b.rows()[j]);
      g[j][i] = g[i][j];
    }
  return g;
}

inline RationalMatrix gram_matrix(const RationalBasis& b) {
  const auto n = static_cast<std::size_t>(b.n());
  RationalMatrix g(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      mpq_class s = 0;
      for (std::size_t c = 0; c < b.rows()[i].size(); ++c) s += b.rows()[i][c] * b.rows()[j][c];
      g[i][j] = g[j][i] = s;
    }
  return g;
}

/// Determinant of a square integer matrix by Bareiss fraction-free elimination.
inline mpz_class determinant(IntMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  for (const auto& r : a)
    if (r.size() != n) throw InvalidArgument("determinant of non-square matrix");
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_mul(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), a[k][k].get_mpz_t());
        mpz_submul(a[i][j].get_mpz_t(), a[i][k].get_mpz_t(), a[k][j].get_mpz_t());
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

namespace detail {

class Scanner {
 public:
  explicit Scanner(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  void expect(char c) {
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }
  mpz_class integer() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == digits) throw ParseError("expected integer", start);
    return mpz_class(std::string(s_.substr(start, pos_ - start)), 10);
  }
  mpq_class rational() {
    mpz_class num = integer();
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      const std::size_t at = pos_;
      mpz_class den = integer();
      if (den <= 0) throw ParseError("denominator must be positive", at);
      mpq_class q(num, den);
      q.canonicalize();
      return q;
    }
    return mpq_class(num);
  }
  std::size_t pos() const { return pos_; }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

template <class Entry, class Read>
std::vector<std::vector<Entry>> parse_matrix(std::string_view text, Read read) {
  Scanner sc(text);
  std::vector<std::vector<Entry>> rows;
  sc.expect('[');
  while (sc.peek() == '[') {
    const std::size_t row_at = sc.pos();
    sc.expect('[');
    std::vector<Entry> row;
    while (sc.peek() != ']') {
      if (sc.at_end()) throw ParseError("unterminated row", sc.pos());
      row.push_back(read(sc));
    }
    sc.expect(']');
    if (row.empty()) throw ParseError("empty row", row_at);
    if (!rows.empty() && row.size() != rows.front().size()) throw ParseError("ragged row", row_at);
    rows.push_back(std::move(row));
  }
  sc.expect(']');
  if (rows.empty()) throw ParseError("basis has no rows", sc.pos());
  if (!sc.at_end()) throw ParseError("trailing characters", sc.pos());
  return rows;
}

template <class Matrix>
std::string serialize_matrix(const Matrix& rows) {
  std::string out = "[";
  for (const auto& r : rows) {
    out += '[';
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (j) out += ' ';
      out += r[j].get_str();
    }
    out += "]\n";
  }
  out += "]";
  return out;
}

}  // namespace detail

/// Parses `[[1 0][0 1]]`-style text. Whitespace between tokens is ignored.
inline IntBasis parse_basis(std::string_view text) {
  auto rows = detail::parse_matrix<mpz_class>(text, [](detail::Scanner& s) { return s.integer(); });
  if (rows.size() > rows.front().size()) throw ParseError("more rows than columns", 0);
  return IntBasis(std::move(rows));
}

/// Canonical text form: one bracketed row per line inside an outer bracket.
inline std::string serialize_basis(const IntBasis& b) { return detail::serialize_matrix(b.rows()); }

/// Same grammar with `p/q` entries allowed; used for exact Gram matrices.
inline RationalMatrix parse_rational_matrix(std::string_view text) {
  return detail::parse_matrix<mpq_class>(text, [](detail::Scanner& s) { return s.rational(); });
}

inline std::string serialize_rational_matrix(const RationalMatrix& m) { return detail::serialize_matrix(m); }

}  // namespace latred
