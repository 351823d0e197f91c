#pragma once

// Exact decision and construction for signed-jump grasshopper instances.
//
// The landing point after using a set S of jumps is sum(S), whatever the
// order inside S. A safe order therefore exists iff the subset lattice has
// a chain {} < S_1 < ... < S_n with |S_i| = i and sum(S_i) outside the mine
// field for i < n, which is a 2^n-state search instead of n! orders.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grasshopper/limits.hpp"
#include "grasshopper/mines.hpp"

namespace grasshopper {

/// Distinct integer jump lengths, in caller order.
class JumpMultiset {
 public:
  /// Throws InputError on duplicates, on 0 when !allow_zero, or on
  /// magnitudes above max_magnitude().
  explicit JumpMultiset(std::vector<std::int64_t> jumps, bool allow_zero = true);

  const std::vector<std::int64_t>& values() const { return jumps_; }
  std::size_t size() const { return jumps_.size(); }
  bool allow_zero() const { return allow_zero_; }
  bool contains_zero() const;
  std::int64_t operator[](std::size_t i) const { return jumps_[i]; }

  static constexpr std::int64_t max_magnitude() { return std::int64_t{1} << 50; }

 private:
  std::vector<std::int64_t> jumps_;
  bool allow_zero_;
};

/// A jump order with its guarded partial sums b_1, b_1+b_2, ..., b_1+...+b_{n-1}.
struct Route {
  std::vector<std::int64_t> order;
  std::vector<std::int64_t> prefix_sums;

  static Route from_order(std::vector<std::int64_t> order);
  bool operator==(const Route&) const = default;
};

/// True iff `route` is a permutation of `jumps` with consistent prefix sums
/// avoiding `mines`.
bool is_valid_route(const Route& route, const JumpMultiset& jumps, const MineField& mines);

/// Subset-lattice search. Returns a safe order or nullopt (blocked).
/// Reconstruction keeps, for every reachable subset, the lowest jump index
/// that can be taken last, so results are deterministic.
std::optional<Route> find_safe_order(const JumpMultiset& jumps, const MineField& mines,
                                     const Limits& limits = {});

bool is_blocked(const JumpMultiset& jumps, const MineField& mines, const Limits& limits = {});

/// Second implementation: tries all n! orders. Limited to n <= 10.
std::optional<Route> find_safe_order_exhaustive(const JumpMultiset& jumps,
                                                const MineField& mines);

bool is_blocked_exhaustive(const JumpMultiset& jumps, const MineField& mines);

struct Instance {
  JumpMultiset jumps;
  MineField mines;
};

/// Blocked configurations one mine above the proven bound:
///   n = 2k:                  jumps {-k+1..k+1} \ {0},  mines {1..k+1}
///   n = 2k+1, hops allowed:  jumps {-k+1..k+1},        mines {1..k+1}
///   n = 2k+1, no hops:       jumps {-k+1..k+2} \ {0},  mines {1..k+2}
/// `hops_allowed` is ignored for even n.
Instance extremal_instance(int n, bool hops_allowed);

/// floor(n/2) if any jump is 0, floor((n+1)/2) otherwise.
std::size_t theorem_mine_bound(const JumpMultiset& jumps);

struct VerificationReport {
  std::size_t n = 0;
  std::size_t mine_count = 0;
  bool has_zero = false;
  std::size_t bound = 0;
  bool bound_satisfied = false;
  std::optional<Route> route;
  /// bound_satisfied and still blocked.
  bool violation = false;
  double elapsed_ms = 0;
};

VerificationReport verify_theorem_instance(const JumpMultiset& jumps, const MineField& mines,
                                           const Limits& limits = {});

/// Odd n = 2k+1 via an even instance. With a 0 jump: route the other 2k
/// jumps and insert 0 between the first and second positions. Without:
/// route jumps + {0} and delete the 0. Throws InputError for even n or for
/// more mines than the bound, TheoremViolation if the even subproblem is
/// blocked.
Route odd_reduction_route(const JumpMultiset& jumps, const MineField& mines,
                          const Limits& limits = {});

enum class ZeroMode {
  kAllowed,   // 0 may be drawn like any other value
  kNonzero,   // 0 never drawn
  kRequired,  // 0 always among the jumps
};

std::string to_string(ZeroMode mode);

struct CampaignConfig {
  int n_min = 2;
  int n_max = 12;
  std::int64_t jump_min = -20;
  std::int64_t jump_max = 20;
  std::size_t trials = 10'000;
  ZeroMode zero_mode = ZeroMode::kAllowed;
  std::uint64_t seed = 0;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
  /// Also re-run each solved instance with its route's first landing point
  /// added as a mine (bound + 1) and record, without asserting, how often
  /// that blocks.
  bool probe_above_bound = false;
};

struct CampaignStats {
  std::size_t trials = 0;
  std::size_t found = 0;
  std::size_t violations = 0;
  std::size_t with_zero = 0;
  std::size_t above_bound_probes = 0;
  std::size_t above_bound_blocked = 0;
  /// trials per n, indexed by n.
  std::vector<std::size_t> per_n;
};

/// Draws one random instance exactly at the bound for trial `index`.
/// Mines are distinct and lie in [sum of negative jumps, sum of positive jumps].
Instance campaign_instance(const CampaignConfig& config, std::size_t index);

/// Runs verify_theorem_instance on `config.trials` random instances.
/// Throws TheoremViolation naming the offending instance as JSON text.
CampaignStats random_campaign(const CampaignConfig& config, const Limits& limits = {});

/// {"jumps":[...],"mines":[...]} on one line.
std::string instance_to_json(const JumpMultiset& jumps, const MineField& mines);

}  // namespace grasshopper
