// holocrit: exact and Monte Carlo counts of critical points of random
// holomorphic sections.
//
// Exit codes: 0 success, 1 usage or domain error, 2 verification failure,
// 3 unreliable Monte Carlo run.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "holocrit/chamber.hpp"
#include "holocrit/counts.hpp"
#include "holocrit/cp1_sim.hpp"
#include "holocrit/parallel.hpp"
#include "holocrit/report.hpp"
#include "holocrit/rmt_mc.hpp"
#include "holocrit/selberg.hpp"
#include "holocrit/verify.hpp"

namespace {

using namespace holocrit;

enum class Format { json, csv };

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitVerify = 2;
constexpr int kExitUnreliable = 3;

struct RunConfig {
  int m = 1;
  int N = 2;
  int q = 1;
  std::int64_t samples = 1'000'000;
  std::int64_t trials = 2000;
  std::uint64_t seed = 20240611;
  unsigned jobs = 0;
  int max_m = kDefaultMaxExpansionDim;
  Format format = Format::json;
  std::string out;
  // selberg
  int n = 1;
  std::string alpha = "1", beta = "1", gamma = "0";
  bool exponential = false;
  // simulate
  std::string dump_trials;
  // verify
  std::string level = "exact";
};

void write_text(const std::string& path, const std::string& text) {
  std::string body = text;
  if (body.empty() || body.back() != '\n') body += '\n';
  if (path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw DomainError("cannot open output file " + path);
  file << body;
}

void emit(const RunConfig& cfg, const Json& json, const std::string& csv) {
  write_text(cfg.out, cfg.format == Format::json ? json.dump(2) : csv);
}

int run_exact(const RunConfig& cfg) {
  const auto r = count_report(cfg.m, cfg.N, cfg.max_m);
  emit(cfg, to_json(r), to_csv(r));
  return kExitOk;
}

int run_leading(const RunConfig& cfg) {
  const auto r = leading_report(cfg.m, cfg.max_m);
  emit(cfg, to_json(r), to_csv(r));
  return kExitOk;
}

int run_selberg(const RunConfig& cfg) {
  const SelbergParams p{cfg.n, Rational::parse(cfg.alpha), Rational::parse(cfg.beta),
                        Rational::parse(cfg.gamma)};
  const SelbergValue v = cfg.exponential ? selberg_exp(p.n, p.alpha, p.gamma) : selberg_finite(p);
  emit(cfg, selberg_json(p, cfg.exponential, v), selberg_csv(p, cfg.exponential, v));
  return kExitOk;
}

int run_b0q(const RunConfig& cfg) {
  const auto e = estimate_b0q(cfg.m, cfg.q, cfg.samples, cfg.seed, cfg.jobs);
  emit(cfg, to_json(e), to_csv(e));
  return kExitOk;
}

int run_simulate(const RunConfig& cfg) {
  const auto e = run_trials(cfg.N, cfg.trials, cfg.seed, cfg.jobs);
  emit(cfg, to_json(e), to_csv(e));
  if (!cfg.dump_trials.empty()) write_text(cfg.dump_trials, trials_csv(e));
  if (e.unreliable) {
    std::cerr << "simulate: failure rate " << e.failure_rate << " exceeds " << kMaxFailureRate << "\n";
    return kExitUnreliable;
  }
  return kExitOk;
}

int run_verify(const RunConfig& cfg) {
  VerifyOptions opt;
  opt.level = cfg.level == "exact" ? VerifyLevel::exact
              : cfg.level == "mc"  ? VerifyLevel::mc
                                   : VerifyLevel::all;
  opt.jobs = cfg.jobs;
  opt.seed = cfg.seed;
  opt.matrix_samples = cfg.samples;
  opt.section_trials = cfg.trials;
  const auto results = run_verification(opt);

  bool all_passed = true;
  Json rows = Json::array();
  std::string csv = csv_row({"check", "status", "detail"});
  std::ostringstream table;
  for (const auto& r : results) {
    all_passed = all_passed && r.passed;
    rows.push_back(Json{{"check", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    csv += csv_row({r.name, r.passed ? "PASS" : "FAIL", r.detail});
    table << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(48) << r.name << r.detail << "\n";
  }
  if (cfg.format == Format::json) {
    write_text(cfg.out, Json{{"level", cfg.level}, {"passed", all_passed}, {"checks", rows}}.dump(2));
    if (!cfg.out.empty()) std::cerr << table.str();
  } else {
    write_text(cfg.out, csv);
  }
  return all_passed ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and Monte Carlo counts of critical points of random holomorphic sections"};
  app.require_subcommand(1);
  RunConfig cfg;

  const std::map<std::string, Format> formats{{"json", Format::json}, {"csv", Format::csv}};
  const auto common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--out", cfg.out, "Write the report to this file instead of stdout");
  };
  const auto parallel = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "RNG seed")->envname("HOLOCRIT_SEED");
    sub->add_option("--jobs", cfg.jobs, "Worker threads (0 = all cores)")->envname("HOLOCRIT_JOBS");
  };

  auto* exact = app.add_subcommand("exact", "Exact expected counts per Morse index on CP^m");
  exact->add_option("--m", cfg.m, "Dimension")->required()->check(CLI::PositiveNumber);
  exact->add_option("--N", cfg.N, "Bundle degree")->required()->check(CLI::Range(2, 1 << 20));
  exact->add_option("--max-m", cfg.max_m, "Expansion ceiling");
  common(exact);

  auto* leading = app.add_subcommand("leading", "Universal leading coefficients n_q(m)");
  leading->add_option("--m", cfg.m, "Dimension")->required()->check(CLI::PositiveNumber);
  leading->add_option("--max-m", cfg.max_m, "Expansion ceiling");
  common(leading);

  auto* selberg = app.add_subcommand("selberg", "Selberg integral (finite or exponential form)");
  selberg->add_option("--n", cfg.n, "Number of variables")->required()->check(CLI::PositiveNumber);
  selberg->add_option("--alpha", cfg.alpha, "alpha as p/q")->required();
  selberg->add_option("--beta", cfg.beta, "beta as p/q (finite form)");
  selberg->add_option("--gamma", cfg.gamma, "gamma as p/q")->required();
  selberg->add_flag("--exp", cfg.exponential, "Use the exponential limiting form");
  common(selberg);

  auto* b0q = app.add_subcommand("b0q-mc", "Random-matrix Monte Carlo estimate of b_0q");
  b0q->add_option("--m", cfg.m, "Dimension")->required()->check(CLI::PositiveNumber);
  b0q->add_option("--q", cfg.q, "Morse index in [m, 2m]")->required();
  b0q->add_option("--samples", cfg.samples, "Number of samples")->check(CLI::Range(std::int64_t{1000}, std::int64_t{1} << 40));
  parallel(b0q);
  common(b0q);

  auto* simulate = app.add_subcommand("simulate", "Simulate random sections of O(N) on CP^1");
  simulate->add_option("--N", cfg.N, "Bundle degree")->required()->check(CLI::Range(2, 64));
  simulate->add_option("--trials", cfg.trials, "Number of sections")->check(CLI::PositiveNumber);
  simulate->add_option("--dump-trials", cfg.dump_trials, "Write a per-trial CSV audit file");
  parallel(simulate);
  common(simulate);

  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  verify->add_option("--level", cfg.level, "exact | mc | all")
      ->check(CLI::IsMember({"exact", "mc", "all"}));
  verify->add_option("--samples", cfg.samples, "Random-matrix samples per dimension");
  verify->add_option("--trials", cfg.trials, "CP^1 trials per degree");
  parallel(verify);
  common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitDomain;
  }

  try {
    if (*exact) return run_exact(cfg);
    if (*leading) return run_leading(cfg);
    if (*selberg) return run_selberg(cfg);
    if (*b0q) return run_b0q(cfg);
    if (*simulate) return run_simulate(cfg);
    if (*verify) return run_verify(cfg);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return kExitDomain;
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitDomain;
}
