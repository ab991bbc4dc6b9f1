#pragma once

// Benchmark harness: generated HNF lattices x algorithms x preprocessing,
// one CSV row per cell, summaries with Student-t confidence intervals.

#include <gmpxx.h>

#include <boost/math/distributions/students_t.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <condition_variable>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <tuple>
#include <vector>

#include "latred/generators.hpp"
#include "latred/hnf.hpp"
#include "latred/reduce.hpp"
#include "latred/verify.hpp"

namespace latred {

/// A named algorithm configuration: lll, potlll, deep<beta>, bkz<beta>.
struct AlgSpec {
  std::string name;
  ReductionParams params;
};

inline AlgSpec parse_alg(std::string_view name, const mpq_class& delta = mpq_class(99, 100)) {
  auto with_beta = [&](std::string_view prefix, Algorithm alg) -> std::optional<AlgSpec> {
    if (!name.starts_with(prefix) || name.size() == prefix.size()) return std::nullopt;
    int beta = 0;
    const auto rest = name.substr(prefix.size());
    auto [p, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), beta);
    if (ec != std::errc() || p != rest.data() + rest.size()) return std::nullopt;
    return AlgSpec{std::string(name), ReductionParams::make(alg, delta, beta)};
  };
  if (name == "lll") return {"lll", ReductionParams::make(Algorithm::kLll, delta)};
  if (name == "potlll") return {"potlll", ReductionParams::make(Algorithm::kPotLll, delta)};
  if (auto a = with_beta("deep", Algorithm::kDeepLll)) return *a;
  if (auto a = with_beta("bkz", Algorithm::kBkz)) return *a;
  throw InvalidArgument("unknown algorithm '" + std::string(name) + "'");
}

/// "a", "a..b", "a..b:step" or a comma-separated list of those.
inline std::vector<std::int64_t> parse_range(std::string_view spec) {
  auto number = [&](std::string_view s) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || s.empty())
      throw InvalidArgument("bad range '" + std::string(spec) + "'");
    return v;
  };
  std::vector<std::int64_t> out;
  while (!spec.empty()) {
    const auto comma = spec.find(',');
    auto item = spec.substr(0, comma);
    spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
    const auto dots = item.find("..");
    if (dots == std::string_view::npos) {
      out.push_back(number(item));
      continue;
    }
    std::int64_t step = 1;
    auto hi = item.substr(dots + 2);
    if (const auto colon = hi.find(':'); colon != std::string_view::npos) {
      step = number(hi.substr(colon + 1));
      hi = hi.substr(0, colon);
    }
    const auto a = number(item.substr(0, dots)), b = number(hi);
    if (step <= 0 || b < a) throw InvalidArgument("bad range '" + std::string(item) + "'");
    for (auto v = a; v <= b; v += step) out.push_back(v);
  }
  if (out.empty()) throw InvalidArgument("empty range");
  return out;
}

/// Exact decimal if the denominator divides a power of 10, else p/q.
inline std::string format_rational(const mpq_class& q) {
  mpz_class den = q.get_den();
  int twos = 0, fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) den /= 2, ++twos;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) den /= 5, ++fives;
  if (den != 1) return q.get_str();
  const int digits = std::max(twos, fives);
  if (digits == 0) return q.get_num().get_str();
  mpz_class scaled = q.get_num();
  mpz_class ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  scaled = scaled * ten_pow / q.get_den();
  const bool neg = scaled < 0;
  std::string s = mpz_class(abs(scaled)).get_str();
  if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
  s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  return (neg ? "-" : "") + s;
}

enum class Outcome { kOk, kCapHit, kError };

struct BenchRecord {
  int dim = 0;
  std::optional<std::uint64_t> seed;
  std::string alg;
  mpq_class delta{99, 100};
  int beta = 0;
  bool preprocessed = false;
  mpz_class norm_b1_sq;
  double rhf = 0;
  std::int64_t time_ms = 0;
  std::uint64_t swaps = 0;
  std::uint64_t deep_insertions = 0;
  std::uint64_t iterations = 0;
  Outcome outcome = Outcome::kOk;
  std::string error;
};

inline constexpr std::string_view kCsvHeader =
    "dim,seed,alg,delta,beta,preprocessed,norm_b1_sq,rhf,time_ms,swaps,deep_insertions,iterations,cap_hit";

inline std::string format_fixed(double x, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
  return buf;
}

inline std::string outcome_field(Outcome o) {
  switch (o) {
    case Outcome::kOk: return "0";
    case Outcome::kCapHit: return "1";
    case Outcome::kError: return "error";
  }
  return "error";
}

/// Field name / value pairs in CSV column order.
inline std::vector<std::pair<std::string, std::string>> record_fields(const BenchRecord& r) {
  const bool ok = r.outcome != Outcome::kError;
  return {
      {"dim", std::to_string(r.dim)},
      {"seed", r.seed ? std::to_string(*r.seed) : ""},
      {"alg", r.alg},
      {"delta", format_rational(r.delta)},
      {"beta", std::to_string(r.beta)},
      {"preprocessed", r.preprocessed ? "1" : "0"},
      {"norm_b1_sq", ok ? r.norm_b1_sq.get_str() : ""},
      {"rhf", ok ? format_fixed(r.rhf, 6) : ""},
      {"time_ms", std::to_string(r.time_ms)},
      {"swaps", std::to_string(r.swaps)},
      {"deep_insertions", std::to_string(r.deep_insertions)},
      {"iterations", std::to_string(r.iterations)},
      {"cap_hit", outcome_field(r.outcome)},
  };
}

inline std::string to_csv(const BenchRecord& r) {
  std::string line;
  for (const auto& [key, value] : record_fields(r)) {
    if (!line.empty()) line += ',';
    line += value;
  }
  return line;
}

/// rhf from ||b_1||^2 and ln vol(L).
inline double rhf_from(const mpz_class& norm_b1_sq, double log_vol, int n) {
  return std::exp((0.5 * log_abs(norm_b1_sq) - log_vol / n) / n);
}

/// Fills a record from a finished reduction.
inline BenchRecord make_record(int dim, std::optional<std::uint64_t> seed, const AlgSpec& alg, bool preprocessed,
                               const ReductionResult& res, double log_vol) {
  BenchRecord r;
  r.dim = dim;
  r.seed = seed;
  r.alg = alg.name;
  r.delta = alg.params.delta;
  r.beta = alg.params.beta.value_or(0);
  r.preprocessed = preprocessed;
  r.norm_b1_sq = norm_sq(res.basis[0]);
  r.rhf = rhf_from(r.norm_b1_sq, log_vol, res.basis.n());
  r.time_ms = std::llround(res.stats.elapsed * 1000.0);
  r.swaps = res.stats.swaps;
  r.deep_insertions = res.stats.deep_insertions;
  r.iterations = res.stats.iterations;
  r.outcome = res.stats.cap_hit ? Outcome::kCapHit : Outcome::kOk;
  return r;
}

enum class Preprocess { kNone, kLll075, kBoth };

inline Preprocess parse_preprocess(std::string_view s) {
  if (s == "none") return Preprocess::kNone;
  if (s == "lll075") return Preprocess::kLll075;
  if (s == "both") return Preprocess::kBoth;
  throw InvalidArgument("preprocess must be none, lll075 or both");
}

struct BenchConfig {
  std::vector<int> dims;
  std::vector<std::uint64_t> seeds;
  std::vector<AlgSpec> algs;
  int bits_factor = 10;
  Preprocess preprocess = Preprocess::kNone;
  int jobs = 1;
};

namespace detail {

inline bool spot_check(int dim, std::uint64_t seed) { return dim <= 40 || seed % 10 == 0; }

/// All cells of one generated lattice, in (alg, preprocessed) order.
inline std::vector<BenchRecord> bench_lattice(const BenchConfig& cfg, int dim, std::uint64_t seed) {
  const IntBasis input = gen_random_hnf(dim, cfg.bits_factor * dim, seed);
  const double log_vol = log_abs(input[0][0]);  // vol = p
  const bool check = spot_check(dim, seed);

  std::vector<bool> modes;
  if (cfg.preprocess != Preprocess::kLll075) modes.push_back(false);
  if (cfg.preprocess != Preprocess::kNone) modes.push_back(true);

  std::optional<IntBasis> pre;
  std::string pre_error;
  if (cfg.preprocess != Preprocess::kNone) {
    try {
      pre = lll_reduce(input, ReductionParams::make(Algorithm::kLll, mpq_class(3, 4))).basis;
    } catch (const std::exception& e) {
      pre_error = std::string("preprocessing: ") + e.what();
    }
  }

  std::vector<BenchRecord> out;
  for (const auto& alg : cfg.algs)
    for (bool preprocessed : modes) {
      BenchRecord rec;
      try {
        if (preprocessed && !pre) throw Error(pre_error);
        auto res = reduce(preprocessed ? *pre : input, alg.params);
        rec = make_record(dim, seed, alg, preprocessed, res, log_vol);
        if (check && !lattices_equal(res.basis, input)) {
          rec.outcome = Outcome::kError;
          rec.error = "output does not generate the input lattice";
        }
      } catch (const std::exception& e) {
        rec.dim = dim;
        rec.seed = seed;
        rec.alg = alg.name;
        rec.delta = alg.params.delta;
        rec.beta = alg.params.beta.value_or(0);
        rec.preprocessed = preprocessed;
        rec.outcome = Outcome::kError;
        rec.error = e.what();
      }
      out.push_back(std::move(rec));
    }
  return out;
}

}  // namespace detail

/// Runs every cell. Lattices are processed by up to cfg.jobs threads, but
/// `emit` always sees records in (dim, seed, alg, preprocessed) order.
inline std::vector<BenchRecord> run_bench(const BenchConfig& cfg,
                                          const std::function<void(const BenchRecord&)>& emit = {}) {
  if (cfg.algs.empty()) throw InvalidArgument("no algorithms given");
  std::vector<std::pair<int, std::uint64_t>> jobs;
  for (int d : cfg.dims)
    for (auto s : cfg.seeds) jobs.emplace_back(d, s);

  std::vector<std::optional<std::vector<BenchRecord>>> done(jobs.size());
  std::mutex mu;
  std::condition_variable cv;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < jobs.size();) {
      auto recs = detail::bench_lattice(cfg, jobs[i].first, jobs[i].second);
      {
        std::lock_guard lock(mu);
        done[i] = std::move(recs);
      }
      cv.notify_all();
    }
  };

  const int threads = std::max(1, std::min<int>(cfg.jobs, static_cast<int>(jobs.size())));
  std::vector<std::thread> pool;
  if (threads > 1)
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);

  std::vector<BenchRecord> all;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    if (threads == 1) {
      done[i] = detail::bench_lattice(cfg, jobs[i].first, jobs[i].second);
    } else {
      std::unique_lock lock(mu);
      cv.wait(lock, [&] { return done[i].has_value(); });
    }
    for (auto& r : *done[i]) {
      if (emit) emit(r);
      all.push_back(std::move(r));
    }
    done[i].reset();
  }
  for (auto& t : pool) t.join();
  return all;
}

struct SummaryLine {
  int dim = 0;
  std::string alg;
  bool preprocessed = false;
  int count = 0;
  double mean_rhf = 0;
  double ci_half_width = 0;  // 99.9%, Student-t; NaN below two samples
  double mean_log_time = 0;  // mean of ln(max(time_ms, 1))
  int cap_hits = 0;
  int errors = 0;
};

/// Two-sided confidence half-width of the mean at the given level.
inline double t_half_width(const std::vector<double>& xs, double level) {
  const auto n = xs.size();
  if (n < 2) return std::nan("");
  double mean = 0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(n);
  double ss = 0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  const double sd = std::sqrt(ss / static_cast<double>(n - 1));
  const boost::math::students_t dist(static_cast<double>(n - 1));
  const double t = boost::math::quantile(dist, 0.5 + level / 2);
  return t * sd / std::sqrt(static_cast<double>(n));
}

/// One line per (dim, alg, preprocessed), in order of first appearance.
/// Error rows are counted but excluded from the means.
inline std::vector<SummaryLine> summarize(const std::vector<BenchRecord>& records) {
  std::vector<SummaryLine> lines;
  std::vector<std::vector<double>> rhfs, logs;
  std::map<std::tuple<int, std::string, bool>, std::size_t> index;
  for (const auto& r : records) {
    auto key = std::make_tuple(r.dim, r.alg, r.preprocessed);
    auto [it, fresh] = index.try_emplace(key, lines.size());
    if (fresh) {
      lines.push_back(SummaryLine{r.dim, r.alg, r.preprocessed});
      rhfs.emplace_back();
      logs.emplace_back();
    }
    auto& line = lines[it->second];
    if (r.outcome == Outcome::kError) {
      ++line.errors;
      continue;
    }
    if (r.outcome == Outcome::kCapHit) ++line.cap_hits;
    rhfs[it->second].push_back(r.rhf);
    logs[it->second].push_back(std::log(static_cast<double>(std::max<std::int64_t>(r.time_ms, 1))));
  }
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto& line = lines[i];
    line.count = static_cast<int>(rhfs[i].size());
    if (line.count == 0) {
      line.mean_rhf = line.ci_half_width = line.mean_log_time = std::nan("");
      continue;
    }
    for (double x : rhfs[i]) line.mean_rhf += x;
    for (double x : logs[i]) line.mean_log_time += x;
    line.mean_rhf /= line.count;
    line.mean_log_time /= line.count;
    line.ci_half_width = t_half_width(rhfs[i], 0.999);
  }
  return lines;
}

inline std::string to_string(const SummaryLine& s) {
  return "dim=" + std::to_string(s.dim) + " alg=" + s.alg + " preprocessed=" + (s.preprocessed ? "1" : "0") +
         " n=" + std::to_string(s.count) + " mean_rhf=" + format_fixed(s.mean_rhf, 6) +
         " ci99.9=" + format_fixed(s.ci_half_width, 6) + " mean_log_time_ms=" + format_fixed(s.mean_log_time, 3) +
         " cap_hits=" + std::to_string(s.cap_hits) + " errors=" + std::to_string(s.errors);
}

}  // namespace latred
