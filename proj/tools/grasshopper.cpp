// grasshopper: command-line front end. Reports go to stdout as JSON, a
// human summary to stderr. Exit codes: 0 ok, 1 assertion failed, 2 input
// error, 3 capacity error, 4 internal error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "grasshopper/cli/commands.hpp"
#include "grasshopper/errors.hpp"

namespace cli = grasshopper::cli;
using grasshopper::Limits;

namespace {

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream in;
    in << std::cin.rdbuf();
    return in.str();
  }
  std::ifstream file(path);
  if (!file) throw grasshopper::InputError("cannot open instance file '" + path + "'");
  std::ostringstream in;
  in << file.rdbuf();
  return in.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tools for the signed-jump grasshopper problem"};
  app.require_subcommand(1);

  // Flags override GRASSHOPPER_* environment variables.
  Limits limits;
  std::string command = "grasshopper";
  try {
    limits = Limits::from_environment();
  } catch (const std::exception&) {
    cli::Report report = cli::error_report(command, std::current_exception());
    std::cout << report.document.dump(2) << "\n";
    std::cerr << report.summary;
    return report.exit_code;
  }
  app.add_option("--memo-cap", limits.memo_cap, "alpha memo entries per table");
  app.add_option("--alpha-depth-cap", limits.alpha_depth_cap, "max n(u+1)+v for alpha");
  app.add_option("--partition-cap", limits.partition_cap, "max partitions in a coefficient table");
  app.add_option("--expand-vars-cap", limits.expand_vars_cap, "max n for symbolic expansion");
  app.add_option("--factorial-cap", limits.factorial_cap, "max permutation length for evaluation");
  app.add_option("--nullstellensatz-k-cap", limits.nullstellensatz_k_cap,
                 "max k for the Nullstellensatz expansion");
  app.add_option("--subset-cap", limits.subset_cap, "max jumps for the subset search");

  // ck
  auto* ck = app.add_subcommand("ck", "compute c_k");
  cli::CkOptions ck_options;
  std::string ck_mode = "exact";
  ck->add_option("k", ck_options.k, "index k >= 1")->required();
  ck->add_option("--mode", ck_mode, "exact | eval | mod")
      ->check(CLI::IsMember({"exact", "eval", "mod"}));
  ck->add_option("--prime", ck_options.prime, "prime modulus for --mode mod");

  // alpha
  auto* alpha = app.add_subcommand("alpha", "coefficient alpha^(n,u,v)_d");
  int n = 1, u = 0, v = 0;
  std::vector<int> parts;
  alpha->add_option("n", n)->required();
  alpha->add_option("u", u)->required();
  alpha->add_option("v", v)->required();
  alpha->add_option("parts", parts, "d_1 > ... > d_n >= 0")->required();

  // solve
  auto* solve = app.add_subcommand("solve", "find a safe jump order or prove blockage");
  std::string instance_path;
  cli::SolveOptions solve_options;
  solve->add_option("instance", instance_path, "instance JSON file, '-' for stdin")->required();
  solve->add_flag("--exhaustive-check", solve_options.exhaustive_check,
                  "cross-check with all n! orders (n <= 8)");
  solve->add_flag("--olympiad", solve_options.olympiad,
                  "constructive algorithm for positive jumps, at most n-1 mines");

  // tables
  auto* tables = app.add_subcommand("tables", "regenerate the blockage, c_k and factor tables");
  cli::TablesOptions tables_options;
  tables->add_option("--max-k", tables_options.max_k, "largest k for c_k");
  tables->add_option("--max-n", tables_options.max_n, "largest n for extremal instances");
  tables->add_option("--trial-bound", tables_options.trial_bound,
                     "trial division bound for partial factorizations (k >= 7)");

  // campaign
  auto* campaign = app.add_subcommand("campaign", "random instances at the mine bound");
  grasshopper::CampaignConfig config;
  int fixed_n = 0;
  bool nonzero = false;
  bool with_zero = false;
  bool at_bound = true;
  campaign->add_option("--trials", config.trials);
  campaign->add_option("--seed", config.seed);
  campaign->add_option("--n", fixed_n, "fixed jump count (overrides --n-min/--n-max)");
  campaign->add_option("--n-min", config.n_min);
  campaign->add_option("--n-max", config.n_max);
  campaign->add_option("--jump-min", config.jump_min);
  campaign->add_option("--jump-max", config.jump_max);
  campaign->add_option("--threads", config.threads);
  campaign->add_flag("--nonzero", nonzero, "never draw a 0 jump");
  campaign->add_flag("--with-zero", with_zero, "always include a 0 jump");
  campaign->add_flag("--mines-at-bound", at_bound, "mine count exactly at the bound (default)");
  campaign->add_flag("--probe-above-bound", config.probe_above_bound,
                     "also record blockage with one extra mine");

  // modscan
  auto* modscan = app.add_subcommand("modscan", "residues of c_k modulo small primes");
  int scan_k = 1;
  std::uint64_t prime_bound = 100;
  modscan->add_option("k", scan_k)->required();
  modscan->add_option("--bound", prime_bound, "largest prime to scan");

  // factor-verify
  auto* factor = app.add_subcommand("factor-verify", "verify factorizations of c_k");
  int factor_k = 0;
  std::string factors;
  factor->add_option("--k", factor_k, "index of the claim");
  factor->add_option("--factors", factors, "claim such as 2^5*3^3*7*97");

  CLI11_PARSE(app, argc, argv);

  cli::Report report;
  try {
    if (*ck) {
      command = "ck";
      ck_options.mode = ck_mode == "eval"  ? cli::CkMode::kEval
                        : ck_mode == "mod" ? cli::CkMode::kMod
                                           : cli::CkMode::kExact;
      report = cli::cmd_ck(ck_options, limits);
    } else if (*alpha) {
      command = "alpha";
      report = cli::cmd_alpha(grasshopper::PolySpec{n, u, v}, parts, limits);
    } else if (*solve) {
      command = "solve";
      report = cli::cmd_solve(read_file(instance_path), instance_path, solve_options, limits);
    } else if (*tables) {
      command = "tables";
      report = cli::cmd_tables(tables_options, limits);
    } else if (*campaign) {
      command = "campaign";
      if (nonzero && with_zero) throw grasshopper::InputError("--nonzero and --with-zero conflict");
      if (nonzero) config.zero_mode = grasshopper::ZeroMode::kNonzero;
      if (with_zero) config.zero_mode = grasshopper::ZeroMode::kRequired;
      if (fixed_n) config.n_min = config.n_max = fixed_n;
      report = cli::cmd_campaign(config, limits);
    } else if (*modscan) {
      command = "modscan";
      report = cli::cmd_modscan(scan_k, prime_bound, limits);
    } else if (*factor) {
      command = "factor-verify";
      std::optional<grasshopper::FactorizationClaim> claim;
      if (!factors.empty() || factor_k) {
        if (factors.empty() || factor_k < 1) {
          throw grasshopper::InputError("--k and --factors must be given together");
        }
        claim = grasshopper::parse_factorization(factor_k, factors);
      }
      report = cli::cmd_factor_verify(claim, limits);
    }
  } catch (...) {
    report = cli::error_report(command, std::current_exception());
  }

  std::cout << report.document.dump(2) << "\n";
  std::cerr << report.summary;
  return report.exit_code;
}
