// latred: generate lattices, reduce them, check reducedness, run benchmarks.
//
// Exit codes: 0 ok, 1 error, 2 reduction stopped at its cap, 3 verification
// failed, 64 usage error.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "latred/latred.hpp"

namespace {

constexpr int kExitError = 1;
constexpr int kExitCapHit = 2;
constexpr int kExitNotReduced = 3;
constexpr int kExitUsage = 64;

struct UsageError : latred::Error {
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw latred::Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw latred::Error("cannot write " + path);
}

latred::Notion parse_notion(const std::string& s) {
  if (s == "size") return latred::Notion::kSize;
  if (s == "lll") return latred::Notion::kLll;
  if (s == "deep") return latred::Notion::kDeep;
  if (s == "pot" || s == "potlll") return latred::Notion::kPot;
  throw UsageError("notion must be size, lll, deep or pot");
}

// --alg accepts the shorthands of the bench command, or lll|potlll|deep|bkz
// together with --beta.
latred::AlgSpec alg_from_flags(const std::string& alg, const mpq_class& delta, std::optional<int> beta) {
  if (alg == "deep" || alg == "bkz") {
    if (!beta) throw UsageError("--alg " + alg + " needs --beta");
    return latred::parse_alg(alg + std::to_string(*beta), delta);
  }
  auto spec = latred::parse_alg(alg, delta);
  if (beta) {
    if (!spec.params.beta) throw UsageError("--beta does not apply to " + alg);
    spec.params.beta = beta;
    spec.params.validate();
  }
  return spec;
}

struct GenOpts {
  int dim = 0;
  std::optional<int> bits;
  std::uint64_t seed = 0;
  bool critical = false;
  std::string out = "-";
  std::string gram;
};

int cmd_gen(const GenOpts& o) {
  if (o.critical) {
    const int scale = 64 + o.dim;
    write_file(o.out, latred::serialize_basis(latred::critical_int_basis(o.dim, scale)) + "\n");
    if (!o.gram.empty())
      write_file(o.gram, latred::serialize_rational_matrix(latred::gen_critical(o.dim).gram) + "\n");
    std::cerr << "critical basis A_" << o.dim << " scaled by 2^" << scale << "\n";
    return 0;
  }
  const auto b = latred::gen_random_hnf(o.dim, o.bits.value_or(10 * o.dim), o.seed);
  write_file(o.out, latred::serialize_basis(b) + "\n");
  std::cerr << "p=" << b[0][0].get_str() << "\nvol=" << b[0][0].get_str() << "\n";
  return 0;
}

struct ReduceOpts {
  std::string in;
  std::string alg = "lll";
  std::string delta = "0.99";
  std::optional<int> beta;
  std::string precision = "extended";
  std::string out = "-";
  std::string stats;
};

int cmd_reduce(const ReduceOpts& o) {
  latred::AlgSpec spec;
  try {
    spec = alg_from_flags(o.alg, latred::parse_rational(o.delta), o.beta);
  } catch (const latred::Error& e) {
    throw UsageError(e.what());
  }
  if (o.precision == "double")
    spec.params.precision = latred::Precision::kDouble;
  else if (o.precision != "extended")
    throw UsageError("precision must be extended or double");
  const auto input = latred::parse_basis(read_file(o.in));
  const auto res = latred::reduce(input, spec.params);
  write_file(o.out, latred::serialize_basis(res.basis) + "\n");
  if (!o.stats.empty()) {
    const double log_vol = 0.5 * latred::log_abs(latred::exact_gso(res.basis).volume_sq());
    const auto rec = latred::make_record(input.n(), std::nullopt, spec, false, res, log_vol);
    std::string text;
    for (const auto& [key, value] : latred::record_fields(rec)) text += key + "=" + value + "\n";
    text += "sweeps=" + std::to_string(res.stats.sweeps) + "\n";
    text += "enumerations=" + std::to_string(res.stats.enumerations) + "\n";
    text += "log_potential_initial=" + latred::format_fixed(res.stats.log_potential_initial, 6) + "\n";
    text += "log_potential_final=" + latred::format_fixed(res.stats.log_potential_final, 6) + "\n";
    write_file(o.stats, text);
  }
  return res.stats.cap_hit ? kExitCapHit : 0;
}

struct VerifyOpts {
  std::string in;
  std::string gram;
  std::string notion = "lll";
  std::string delta = "0.99";
  std::optional<int> beta;
};

constexpr int kExactVerifyLimit = 40;

int cmd_verify(const VerifyOpts& o) {
  const auto notion = parse_notion(o.notion);
  mpq_class delta;
  try {
    delta = latred::parse_rational(o.delta);
  } catch (const latred::Error& e) {
    throw UsageError(e.what());
  }
  if (notion == latred::Notion::kDeep && !o.beta) throw UsageError("--notion deep needs --beta");
  const int beta = o.beta.value_or(0);
  if (o.in.empty() == o.gram.empty()) throw UsageError("give exactly one of --in and --gram");

  latred::Verdict verdict;
  if (!o.gram.empty()) {
    verdict = latred::check_reduced(latred::exact_gso(latred::parse_rational_matrix(read_file(o.gram))), notion,
                                    delta, beta);
  } else {
    const auto b = latred::parse_basis(read_file(o.in));
    if (b.n() <= kExactVerifyLimit) {
      verdict = latred::check_reduced(latred::exact_gso(b), notion, delta, beta);
    } else {
      std::cerr << "warning: n=" << b.n() << " > " << kExactVerifyLimit
                << ", checking in floating point with relative slack " << latred::kGsoEpsilon << "\n";
      verdict = latred::check_reduced_floating(b, notion, delta.get_d(), beta);
    }
  }
  if (verdict) {
    std::cout << "reduced\n";
    return 0;
  }
  std::cout << "not reduced: " << verdict.violation->describe() << "\n";
  return kExitNotReduced;
}

struct BenchOpts {
  std::string dims;
  std::string seeds = "0..9";
  std::string algs;
  int bits_factor = 10;
  std::string preprocess = "none";
  std::string csv = "-";
  std::string delta = "0.99";
  int jobs = 1;
};

int cmd_bench(const BenchOpts& o) {
  latred::BenchConfig cfg;
  try {
    for (auto d : latred::parse_range(o.dims)) cfg.dims.push_back(static_cast<int>(d));
    for (auto s : latred::parse_range(o.seeds)) cfg.seeds.push_back(static_cast<std::uint64_t>(s));
    const auto delta = latred::parse_rational(o.delta);
    std::stringstream names(o.algs);
    for (std::string name; std::getline(names, name, ',');)
      if (!name.empty()) cfg.algs.push_back(latred::parse_alg(name, delta));
    cfg.preprocess = latred::parse_preprocess(o.preprocess);
  } catch (const latred::Error& e) {
    throw UsageError(e.what());
  }
  if (cfg.algs.empty()) throw UsageError("--algs is empty");
  cfg.bits_factor = o.bits_factor;
  cfg.jobs = o.jobs;

  std::ofstream file;
  std::ostream* csv = &std::cout;
  if (o.csv != "-") {
    file.open(o.csv, std::ios::binary);
    if (!file) throw latred::Error("cannot write " + o.csv);
    csv = &file;
  }
  *csv << latred::kCsvHeader << "\n";
  const auto records = latred::run_bench(cfg, [&](const latred::BenchRecord& r) {
    *csv << latred::to_csv(r) << "\n" << std::flush;
    if (r.outcome == latred::Outcome::kError)
      std::cerr << "dim=" << r.dim << " seed=" << *r.seed << " alg=" << r.alg << ": " << r.error << "\n";
  });
  for (const auto& line : latred::summarize(records)) std::cout << latred::to_string(line) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lattice basis reduction: LLL, PotLLL, DeepLLL, BKZ"};
  app.require_subcommand(1);

  GenOpts gen;
  auto* g = app.add_subcommand("gen", "random HNF lattice basis");
  g->add_option("--dim", gen.dim, "rank n")->required()->check(CLI::Range(2, 100000));
  g->add_option("--bits", gen.bits, "bit size of the prime (default 10*dim)");
  g->add_option("--seed", gen.seed, "PRNG seed");
  g->add_flag("--critical", gen.critical, "emit the critical basis A_n instead");
  g->add_option("--gram", gen.gram, "with --critical: also write its exact Gram matrix here");
  g->add_option("--out,-o", gen.out, "output file (default stdout)");

  GenOpts crit;
  crit.critical = true;
  auto* c = app.add_subcommand("critical", "critical basis A_n(sqrt(3/4)), integer-scaled");
  c->add_option("--dim", crit.dim, "rank n")->required()->check(CLI::Range(2, 100000));
  c->add_option("--gram", crit.gram, "also write the exact rational Gram matrix here");
  c->add_option("--out,-o", crit.out, "output file (default stdout)");

  ReduceOpts red;
  auto* r = app.add_subcommand("reduce", "reduce a basis");
  r->add_option("--in,-i", red.in, "input basis")->required();
  r->add_option("--alg", red.alg, "lll, potlll, deep, bkz, or deep5/deep10/bkz5/bkz10");
  r->add_option("--delta", red.delta, "delta, decimal or p/q (default 0.99)");
  r->add_option("--beta", red.beta, "blocksize for deep/bkz");
  r->add_option("--precision", red.precision, "extended (default) or double");
  r->add_option("--out,-o", red.out, "output basis (default stdout)");
  r->add_option("--stats", red.stats, "write key=value statistics here");

  VerifyOpts ver;
  auto* v = app.add_subcommand("verify", "check a reducedness notion");
  v->add_option("--in,-i", ver.in, "integer basis");
  v->add_option("--gram", ver.gram, "exact rational Gram matrix instead of a basis");
  v->add_option("--notion", ver.notion, "size, lll, deep or pot");
  v->add_option("--delta", ver.delta, "delta, decimal or p/q (default 0.99)");
  v->add_option("--beta", ver.beta, "blocksize for deep");

  BenchOpts bench;
  auto* b = app.add_subcommand("bench", "benchmark on generated lattices");
  b->add_option("--dims", bench.dims, "e.g. 40..100:20 or 40,60")->required();
  b->add_option("--seeds", bench.seeds, "e.g. 0..19 (default 0..9)");
  b->add_option("--algs", bench.algs, "comma list of lll,potlll,deep5,deep10,bkz5,bkz10")->required();
  b->add_option("--bits-factor", bench.bits_factor, "bits = factor * dim (default 10)")->check(CLI::PositiveNumber);
  b->add_option("--preprocess", bench.preprocess, "none, lll075 or both");
  b->add_option("--csv", bench.csv, "CSV output (default stdout)");
  b->add_option("--delta", bench.delta, "delta for every algorithm (default 0.99)");
  b->add_option("--jobs,-j", bench.jobs, "lattices processed concurrently")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*g) return cmd_gen(gen);
    if (*c) return cmd_gen(crit);
    if (*r) return cmd_reduce(red);
    if (*v) return cmd_verify(ver);
    if (*b) return cmd_bench(bench);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitUsage;
}
