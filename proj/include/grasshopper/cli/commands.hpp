#pragma once

// Subcommand implementations behind tools/grasshopper. Each returns a
// Report; the executable only parses arguments and prints.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grasshopper/cli/report.hpp"
#include "grasshopper/coeffs.hpp"
#include "grasshopper/limits.hpp"
#include "grasshopper/modular.hpp"
#include "grasshopper/route.hpp"

namespace grasshopper::cli {

/// Reference values of c_k: exact decimal for k <= 6, four significant
/// digits ("8.587e34") for 7 <= k <= 10.
struct ReferenceValue {
  int k;
  std::string text;
  bool exact;
};
const std::vector<ReferenceValue>& reference_ck_values();
std::optional<ReferenceValue> reference_ck(int k);
/// Exact match for exact references, 4-digit rounding match otherwise.
bool matches_reference(const ReferenceValue& ref, const BigInt& value);

enum class CkMode { kExact, kEval, kMod };

struct CkOptions {
  int k = 1;
  CkMode mode = CkMode::kExact;
  std::uint64_t prime = 0;
};
Report cmd_ck(const CkOptions& options, const Limits& limits);

Report cmd_alpha(const PolySpec& spec, const std::vector<int>& parts, const Limits& limits);

struct SolveOptions {
  bool exhaustive_check = false;
  bool olympiad = false;
};
/// `document` is the instance JSON text; `source` names it in the report.
Report cmd_solve(const std::string& document, const std::string& source,
                 const SolveOptions& options, const Limits& limits);

struct TablesOptions {
  int max_k = 6;
  int max_n = 20;
  /// Trial-division bound for the unasserted partial factorizations of c_7.. .
  std::uint64_t trial_bound = 100'000;
};
Report cmd_tables(const TablesOptions& options, const Limits& limits);

Report cmd_campaign(const CampaignConfig& config, const Limits& limits);

Report cmd_modscan(int k, std::uint64_t prime_bound, const Limits& limits);

/// Verifies `claim`, or every known factorization when absent.
Report cmd_factor_verify(const std::optional<FactorizationClaim>& claim, const Limits& limits);

}  // namespace grasshopper::cli
