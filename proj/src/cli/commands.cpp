#include "grasshopper/cli/commands.hpp"

#include <chrono>

#include "grasshopper/cli/instance_io.hpp"
#include "grasshopper/errors.hpp"
#include "grasshopper/olympiad.hpp"
#include "grasshopper/oracle.hpp"

namespace grasshopper::cli {
namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

json route_json(const Route& route) {
  return {{"order", route.order}, {"prefix_sums", route.prefix_sums}};
}

json rationals_json(const std::vector<Rational>& values) {
  json out = json::array();
  for (const auto& q : values) out.push_back(to_string(q));
  return out;
}

json limits_json(const Limits& limits) {
  return {{"memo_cap", limits.memo_cap},
          {"alpha_depth_cap", limits.alpha_depth_cap},
          {"partition_cap", limits.partition_cap},
          {"expand_vars_cap", limits.expand_vars_cap},
          {"factorial_cap", limits.factorial_cap},
          {"nullstellensatz_k_cap", limits.nullstellensatz_k_cap},
          {"subset_cap", limits.subset_cap}};
}

json value_json(const BigInt& value) {
  return {{"decimal", to_decimal(value)}, {"scientific", to_scientific(value, 4)}};
}

}  // namespace

const std::vector<ReferenceValue>& reference_ck_values() {
  static const std::vector<ReferenceValue> values = {
      {1, "1", true},
      {2, "2", true},
      {3, "90", true},
      {4, "586656", true},
      {5, "1915103977500", true},
      {6, "7886133184567796056800", true},
      {7, "8.587e34", false},
      {8, "4.594e51", false},
      {9, "2.060e72", false},
      {10, "1.237e97", false},
  };
  return values;
}

std::optional<ReferenceValue> reference_ck(int k) {
  for (const auto& ref : reference_ck_values()) {
    if (ref.k == k) return ref;
  }
  return std::nullopt;
}

bool matches_reference(const ReferenceValue& ref, const BigInt& value) {
  return ref.exact ? to_decimal(value) == ref.text : to_scientific(value, 4) == ref.text;
}

Report cmd_ck(const CkOptions& options, const Limits& limits) {
  static const char* mode_names[] = {"exact", "eval", "mod"};
  json inputs = {{"k", options.k}, {"mode", mode_names[static_cast<int>(options.mode)]}};
  if (options.mode == CkMode::kMod) inputs["prime"] = options.prime;
  inputs["limits"] = limits_json(limits);
  Report report = begin_report("ck", inputs);
  auto start = Clock::now();
  json& results = report.document["results"];
  results["k"] = options.k;

  if (options.mode == CkMode::kMod) {
    PrimeModulus p(options.prime);
    std::uint64_t r = ck_mod(options.k, p, limits);
    results["prime"] = options.prime;
    results["residue"] = r;
    results["divides"] = r == 0;
    report.summary += "c_" + std::to_string(options.k) + " mod " + std::to_string(options.prime) +
                      " = " + std::to_string(r) + "\n";
  } else {
    BigInt value = options.mode == CkMode::kExact ? ck(options.k, limits)
                                                  : ck_via_evaluation(options.k, limits);
    results["value"] = value_json(value);
    if (options.mode == CkMode::kEval) results["note"] = "evaluation oracle";
    report.summary += "c_" + std::to_string(options.k) + " = " + to_decimal(value) + " (" +
                      to_scientific(value, 4) + ")\n";
    if (auto ref = reference_ck(options.k)) {
      bool match = matches_reference(*ref, value);
      results["reference"] = {{"value", ref->text}, {"exact", ref->exact}, {"matches", match}};
      if (!match) report.fail("c_" + std::to_string(options.k) + " differs from " + ref->text);
    }
  }
  finish_report(report, ms_since(start));
  return report;
}

Report cmd_alpha(const PolySpec& spec, const std::vector<int>& parts, const Limits& limits) {
  json inputs = {{"n", spec.n}, {"u", spec.u}, {"v", spec.v}, {"parts", parts},
                 {"limits", limits_json(limits)}};
  Report report = begin_report("alpha", inputs);
  auto start = Clock::now();
  PolySpec checked = PolySpec::make(spec.n, spec.u, spec.v);
  DistinctPartition d(parts);
  BigInt value = alpha(checked, d, limits);
  report.document["results"] = {{"value", value_json(value)},
                                {"degree", checked.degree()},
                                {"homogeneous_index", d.sum() == checked.degree()}};
  report.summary += "alpha^(" + std::to_string(spec.n) + "," + std::to_string(spec.u) + "," +
                    std::to_string(spec.v) + ")_" + d.to_string() + " = " + to_decimal(value) +
                    "\n";
  finish_report(report, ms_since(start));
  return report;
}

Report cmd_solve(const std::string& document, const std::string& source,
                 const SolveOptions& options, const Limits& limits) {
  InstanceDocument doc = parse_instance_document(document);
  json inputs = {{"source", source},
                 {"jumps", rationals_json(doc.jumps)},
                 {"mines", rationals_json(doc.mines)},
                 {"exhaustive_check", options.exhaustive_check},
                 {"olympiad", options.olympiad},
                 {"limits", limits_json(limits)}};
  Report report = begin_report("solve", inputs);
  auto start = Clock::now();
  json& results = report.document["results"];

  if (options.olympiad) {
    PositiveInstance instance = to_positive_instance(doc);
    auto t0 = Clock::now();
    PositiveRoute route = positive_safe_order(instance);
    report.document["timings_ms"]["olympiad"] = ms_since(t0);
    bool valid = is_valid_positive_route(route, instance);
    results["algorithm"] = "olympiad";
    results["verdict"] = "found";
    results["route"] = {{"order", rationals_json(route.order)},
                        {"prefix_sums", rationals_json(route.prefix_sums)},
                        {"indices", route.indices}};
    results["route_valid"] = valid;
    if (!valid) report.fail("olympiad route hits a mine");
    report.summary += "olympiad route found for n=" + std::to_string(instance.size()) + "\n";
    if (options.exhaustive_check && all_integral(doc)) {
      Instance integral = to_integer_instance(doc);
      bool agrees = !is_blocked(integral.jumps, integral.mines, limits);
      results["subset_search_agrees"] = agrees;
      if (!agrees) report.fail("subset search reports blocked where the olympiad route exists");
    }
    finish_report(report, ms_since(start));
    return report;
  }

  Instance instance = to_integer_instance(doc);
  VerificationReport verdict = verify_theorem_instance(instance.jumps, instance.mines, limits);
  report.document["timings_ms"]["search"] = verdict.elapsed_ms;
  results["algorithm"] = "subset_lattice";
  results["verdict"] = verdict.route ? "found" : "blocked";
  results["route"] = verdict.route ? route_json(*verdict.route) : json(nullptr);
  results["bound"] = {{"n", verdict.n},
                      {"mines", verdict.mine_count},
                      {"has_zero", verdict.has_zero},
                      {"limit", verdict.bound},
                      {"satisfied", verdict.bound_satisfied}};
  results["theorem_violation"] = verdict.violation;
  report.summary += std::string("verdict: ") + (verdict.route ? "found" : "blocked") + " (n=" +
                    std::to_string(verdict.n) + ", |M|=" + std::to_string(verdict.mine_count) +
                    ", bound " + std::to_string(verdict.bound) + ")\n";
  if (verdict.violation) report.fail("blocked although |M| is within the bound");

  if (verdict.n % 2 == 1 && verdict.bound_satisfied) {
    results["odd_reduction_route"] = route_json(odd_reduction_route(instance.jumps, instance.mines,
                                                                    limits));
  }
  if (options.exhaustive_check) {
    if (verdict.n > 8) throw InputError("--exhaustive-check supports at most 8 jumps");
    bool blocked = is_blocked_exhaustive(instance.jumps, instance.mines);
    bool agrees = blocked == !verdict.route.has_value();
    results["exhaustive_agrees"] = agrees;
    if (!agrees) report.fail("subset search and exhaustive enumeration disagree");
  }
  finish_report(report, ms_since(start));
  return report;
}

Report cmd_tables(const TablesOptions& options, const Limits& limits) {
  json inputs = {{"max_k", options.max_k},
                 {"max_n", options.max_n},
                 {"trial_bound", options.trial_bound},
                 {"limits", limits_json(limits)}};
  Report report = begin_report("tables", inputs);
  auto start = Clock::now();
  json& results = report.document["results"];

  auto t1 = Clock::now();
  json blocked_rows = json::array();
  for (int n = 2; n <= options.max_n; ++n) {
    for (bool hops : {true, false}) {
      if (n % 2 == 0 && !hops) continue;
      Instance instance = extremal_instance(n, hops);
      bool blocked = is_blocked(instance.jumps, instance.mines, limits);
      std::string mode = n % 2 == 0 ? "even" : (hops ? "hops_allowed" : "hops_prohibited");
      blocked_rows.push_back({{"n", n},
                              {"mode", mode},
                              {"jumps", instance.jumps.values()},
                              {"mines", instance.mines.values()},
                              {"blocked", blocked}});
      if (!blocked) report.fail("extremal instance n=" + std::to_string(n) + " " + mode +
                                " is not blocked");
    }
  }
  results["extremal_instances"] = blocked_rows;
  report.document["timings_ms"]["extremal_instances"] = ms_since(t1);
  report.summary += "extremal: " + std::to_string(blocked_rows.size()) + " extremal instances\n";

  auto t2 = Clock::now();
  json ck_rows = json::array();
  for (int k = 1; k <= options.max_k; ++k) {
    BigInt value = ck(k, limits);
    json row = {{"k", k}, {"value", value_json(value)}};
    if (auto ref = reference_ck(k)) {
      bool match = matches_reference(*ref, value);
      row["reference"] = ref->text;
      row["matches"] = match;
      if (!match) report.fail("c_" + std::to_string(k) + " does not match " + ref->text);
    }
    if (k >= 7) {
      PartialFactorization partial = partial_factorization(k, options.trial_bound, limits);
      json factors = json::array();
      for (const auto& f : partial.small_factors) {
        factors.push_back({{"prime", to_decimal(f.prime)}, {"exponent", f.exponent}});
      }
      row["partial_factorization"] = {{"small_factors", factors},
                                      {"cofactor", to_decimal(partial.cofactor)},
                                      {"cofactor_probable_prime", partial.cofactor_probable_prime},
                                      {"trial_bound", options.trial_bound}};
    }
    ck_rows.push_back(row);
    report.summary += "c_" + std::to_string(k) + " = " + to_scientific(value, 4) + "\n";
  }
  results["ck_values"] = ck_rows;
  report.document["timings_ms"]["ck_values"] = ms_since(t2);

  auto t3 = Clock::now();
  json factor_rows = json::array();
  for (const auto& claim : known_factorizations()) {
    bool verified = verify_factorization(claim, limits);
    factor_rows.push_back({{"k", claim.k}, {"claim", claim.to_string()}, {"verified", verified}});
    if (!verified) report.fail("factorization of c_" + std::to_string(claim.k) + " rejected");
  }
  results["factorizations"] = factor_rows;
  report.document["timings_ms"]["factorizations"] = ms_since(t3);

  finish_report(report, ms_since(start));
  return report;
}

Report cmd_campaign(const CampaignConfig& config, const Limits& limits) {
  json inputs = {{"n_min", config.n_min},
                 {"n_max", config.n_max},
                 {"jump_min", config.jump_min},
                 {"jump_max", config.jump_max},
                 {"trials", config.trials},
                 {"zero_mode", to_string(config.zero_mode)},
                 {"probe_above_bound", config.probe_above_bound},
                 {"mine_range", "[sum of negative jumps, sum of positive jumps]"},
                 {"limits", limits_json(limits)}};
  Report report = begin_report("campaign", inputs, config.seed);
  auto start = Clock::now();
  json& results = report.document["results"];
  try {
    CampaignStats stats = random_campaign(config, limits);
    results = {{"trials", stats.trials},
               {"found", stats.found},
               {"violations", stats.violations},
               {"with_zero", stats.with_zero},
               {"per_n", stats.per_n}};
    if (config.probe_above_bound) {
      results["above_bound"] = {{"probes", stats.above_bound_probes},
                                {"blocked", stats.above_bound_blocked}};
    }
    report.summary += std::to_string(stats.trials) + " trials, " +
                      std::to_string(stats.violations) + " violations\n";
  } catch (const TheoremViolation& e) {
    results["violation"] = e.what();
    report.fail(e.what());
  }
  finish_report(report, ms_since(start));
  return report;
}

Report cmd_modscan(int k, std::uint64_t prime_bound, const Limits& limits) {
  Report report = begin_report(
      "modscan", {{"k", k}, {"prime_bound", prime_bound}, {"limits", limits_json(limits)}});
  auto start = Clock::now();
  std::vector<ScanRow> rows = residue_table(k, prime_bound, limits);
  json table = json::array();
  json divisors = json::array();
  for (const auto& row : rows) {
    table.push_back({{"prime", row.prime}, {"residue", row.residue}, {"divides", row.divides}});
    if (row.divides) divisors.push_back(row.prime);
  }
  report.document["results"] = {{"k", k}, {"table", table}, {"divisors", divisors}};
  report.summary += "c_" + std::to_string(k) + ": " + std::to_string(divisors.size()) +
                    " prime divisors <= " + std::to_string(prime_bound) + "\n";
  finish_report(report, ms_since(start));
  return report;
}

Report cmd_factor_verify(const std::optional<FactorizationClaim>& claim, const Limits& limits) {
  json inputs = {{"limits", limits_json(limits)}};
  if (claim) inputs["claim"] = {{"k", claim->k}, {"factors", claim->to_string()}};
  Report report = begin_report("factor-verify", inputs);
  auto start = Clock::now();
  std::vector<FactorizationClaim> claims = claim ? std::vector{*claim} : known_factorizations();
  json rows = json::array();
  for (const auto& c : claims) {
    bool verified = verify_factorization(c, limits);
    rows.push_back({{"k", c.k}, {"claim", c.to_string()}, {"verified", verified}});
    report.summary += "c_" + std::to_string(c.k) + " = " + c.to_string() + ": " +
                      (verified ? "verified" : "REJECTED") + "\n";
    if (!verified) report.fail("c_" + std::to_string(c.k) + " != " + c.to_string());
  }
  report.document["results"] = {{"claims", rows}};
  finish_report(report, ms_since(start));
  return report;
}

}  // namespace grasshopper::cli
