#include "grasshopper/route.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include "grasshopper/errors.hpp"

namespace grasshopper {
namespace {

constexpr std::uint8_t kUnreached = 0xFF;

void check_subset_cap(std::size_t n, const Limits& limits) {
  if (n > static_cast<std::size_t>(limits.subset_cap) || n > 30) {
    throw CapacityError("subset_cap", "instance with n=" + std::to_string(n) +
                                          " jumps exceeds subset_cap=" +
                                          std::to_string(limits.subset_cap));
  }
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

JumpMultiset::JumpMultiset(std::vector<std::int64_t> jumps, bool allow_zero)
    : jumps_(std::move(jumps)), allow_zero_(allow_zero) {
  std::vector<std::int64_t> sorted = jumps_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InputError("jumps must be pairwise distinct");
  }
  for (auto a : jumps_) {
    if (a == 0 && !allow_zero_) throw InputError("jump 0 given but zero jumps are not allowed");
    if (a > max_magnitude() || a < -max_magnitude()) {
      throw InputError("jump magnitude above 2^50");
    }
  }
}

bool JumpMultiset::contains_zero() const {
  return std::find(jumps_.begin(), jumps_.end(), 0) != jumps_.end();
}

Route Route::from_order(std::vector<std::int64_t> order) {
  Route route;
  std::int64_t position = 0;
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    position += order[i];
    route.prefix_sums.push_back(position);
  }
  route.order = std::move(order);
  return route;
}

bool is_valid_route(const Route& route, const JumpMultiset& jumps, const MineField& mines) {
  std::vector<std::int64_t> a = route.order;
  std::vector<std::int64_t> b = jumps.values();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) return false;
  if (route.prefix_sums.size() + 1 != std::max<std::size_t>(route.order.size(), 1)) return false;
  std::int64_t position = 0;
  for (std::size_t i = 0; i < route.prefix_sums.size(); ++i) {
    position += route.order[i];
    if (route.prefix_sums[i] != position || mines.contains(position)) return false;
  }
  return true;
}

std::optional<Route> find_safe_order(const JumpMultiset& jumps, const MineField& mines,
                                     const Limits& limits) {
  const std::size_t n = jumps.size();
  if (n == 0) throw InputError("at least one jump is required");
  check_subset_cap(n, limits);

  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  // last[S]: lowest jump index j such that S \ {j} is reachable and the
  // landing point sum(S) is safe; kUnreached otherwise.
  std::vector<std::uint8_t> last(std::size_t{full} + 1, kUnreached);

  for (std::uint32_t subset = 1; subset <= full; ++subset) {
    std::int64_t position = 0;
    for (std::uint32_t bits = subset; bits; bits &= bits - 1) {
      position += jumps[std::countr_zero(bits)];
    }
    if (subset != full && mines.contains(position)) continue;
    for (std::uint32_t bits = subset; bits; bits &= bits - 1) {
      int j = std::countr_zero(bits);
      std::uint32_t before = subset & ~(std::uint32_t{1} << j);
      if (before == 0 || last[before] != kUnreached) {
        last[subset] = static_cast<std::uint8_t>(j);
        break;
      }
    }
  }
  if (last[full] == kUnreached) return std::nullopt;

  std::vector<std::int64_t> order(n);
  std::uint32_t subset = full;
  for (std::size_t slot = n; slot-- > 0;) {
    int j = last[subset];
    order[slot] = jumps[j];
    subset &= ~(std::uint32_t{1} << j);
  }
  return Route::from_order(std::move(order));
}

bool is_blocked(const JumpMultiset& jumps, const MineField& mines, const Limits& limits) {
  return !find_safe_order(jumps, mines, limits).has_value();
}

std::optional<Route> find_safe_order_exhaustive(const JumpMultiset& jumps,
                                                const MineField& mines) {
  const std::size_t n = jumps.size();
  if (n == 0) throw InputError("at least one jump is required");
  if (n > 10) throw CapacityError("exhaustive_cap", "exhaustive enumeration limited to n <= 10");
  std::vector<std::int64_t> order = jumps.values();
  std::sort(order.begin(), order.end());
  do {
    std::int64_t position = 0;
    bool safe = true;
    for (std::size_t i = 0; i + 1 < n && safe; ++i) {
      position += order[i];
      safe = !mines.contains(position);
    }
    if (safe) return Route::from_order(order);
  } while (std::next_permutation(order.begin(), order.end()));
  return std::nullopt;
}

bool is_blocked_exhaustive(const JumpMultiset& jumps, const MineField& mines) {
  return !find_safe_order_exhaustive(jumps, mines).has_value();
}

Instance extremal_instance(int n, bool hops_allowed) {
  if (n < 2) throw InputError("extremal instances need n >= 2");
  const std::int64_t k = n / 2;
  std::int64_t top = k + 1;
  bool include_zero = false;
  if (n % 2 == 1) {
    if (hops_allowed) include_zero = true;
    else top = k + 2;
  }
  std::vector<std::int64_t> jumps;
  for (std::int64_t a = -k + 1; a <= top; ++a) {
    if (a != 0 || include_zero) jumps.push_back(a);
  }
  std::vector<std::int64_t> mines;
  for (std::int64_t m = 1; m <= top; ++m) mines.push_back(m);
  return Instance{JumpMultiset(std::move(jumps)), MineField(std::move(mines))};
}

std::size_t theorem_mine_bound(const JumpMultiset& jumps) {
  const std::size_t n = jumps.size();
  return jumps.contains_zero() ? n / 2 : (n + 1) / 2;
}

VerificationReport verify_theorem_instance(const JumpMultiset& jumps, const MineField& mines,
                                           const Limits& limits) {
  auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.n = jumps.size();
  report.mine_count = mines.size();
  report.has_zero = jumps.contains_zero();
  report.bound = theorem_mine_bound(jumps);
  report.bound_satisfied = report.mine_count <= report.bound;
  report.route = find_safe_order(jumps, mines, limits);
  report.violation = report.bound_satisfied && !report.route;
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

Route odd_reduction_route(const JumpMultiset& jumps, const MineField& mines,
                          const Limits& limits) {
  const std::size_t n = jumps.size();
  if (n % 2 == 0) throw InputError("odd_reduction_route needs an odd number of jumps");
  if (mines.size() > theorem_mine_bound(jumps)) {
    throw InputError("mine field larger than the bound " +
                     std::to_string(theorem_mine_bound(jumps)));
  }
  if (n == 1) return Route::from_order(jumps.values());

  auto solve_even = [&](const JumpMultiset& even) {
    auto route = find_safe_order(even, mines, limits);
    if (!route) {
      throw TheoremViolation("even subproblem blocked within bound: " +
                             instance_to_json(even, mines));
    }
    return *route;
  };

  std::vector<std::int64_t> order;
  if (jumps.contains_zero()) {
    std::vector<std::int64_t> rest;
    for (auto a : jumps.values()) {
      if (a != 0) rest.push_back(a);
    }
    order = solve_even(JumpMultiset(std::move(rest))).order;
    order.insert(order.begin() + 1, 0);
  } else {
    std::vector<std::int64_t> extended = jumps.values();
    extended.push_back(0);
    order = solve_even(JumpMultiset(std::move(extended))).order;
    order.erase(std::find(order.begin(), order.end(), 0));
  }
  Route route = Route::from_order(std::move(order));
  if (!is_valid_route(route, jumps, mines)) {
    throw ConsistencyError("odd reduction produced an invalid route");
  }
  return route;
}

std::string to_string(ZeroMode mode) {
  switch (mode) {
    case ZeroMode::kAllowed: return "allowed";
    case ZeroMode::kNonzero: return "nonzero";
    case ZeroMode::kRequired: return "required";
  }
  return "unknown";
}

Instance campaign_instance(const CampaignConfig& config, std::size_t index) {
  std::mt19937_64 rng(splitmix64(config.seed ^ splitmix64(index)));

  int n = std::uniform_int_distribution<int>(config.n_min, config.n_max)(rng);
  std::vector<std::int64_t> pool;
  for (std::int64_t a = config.jump_min; a <= config.jump_max; ++a) {
    if (a != 0 || config.zero_mode == ZeroMode::kAllowed) pool.push_back(a);
  }
  std::vector<std::int64_t> jumps;
  if (config.zero_mode == ZeroMode::kRequired) jumps.push_back(0);
  // Partial Fisher-Yates draw of the remaining distinct values.
  for (std::size_t i = 0; jumps.size() < static_cast<std::size_t>(n); ++i) {
    std::size_t pick = std::uniform_int_distribution<std::size_t>(i, pool.size() - 1)(rng);
    std::swap(pool[i], pool[pick]);
    jumps.push_back(pool[i]);
  }
  std::shuffle(jumps.begin(), jumps.end(), rng);
  JumpMultiset multiset(std::move(jumps));

  std::int64_t low = 0;
  std::int64_t high = 0;
  for (auto a : multiset.values()) (a < 0 ? low : high) += a;
  std::size_t wanted = std::min<std::size_t>(theorem_mine_bound(multiset),
                                             static_cast<std::size_t>(high - low + 1));
  std::set<std::int64_t> mines;
  std::uniform_int_distribution<std::int64_t> where(low, high);
  while (mines.size() < wanted) mines.insert(where(rng));
  return Instance{std::move(multiset), MineField({mines.begin(), mines.end()})};
}

CampaignStats random_campaign(const CampaignConfig& config, const Limits& limits) {
  if (config.n_min < 1 || config.n_max < config.n_min) throw InputError("bad n range");
  if (config.jump_max < config.jump_min) throw InputError("bad jump range");
  std::int64_t pool = config.jump_max - config.jump_min + 1;
  bool zero_in_range = config.jump_min <= 0 && config.jump_max >= 0;
  if (config.zero_mode != ZeroMode::kAllowed && zero_in_range) --pool;
  if (config.zero_mode == ZeroMode::kRequired) {
    if (!zero_in_range) throw InputError("zero mode 'required' but 0 is outside the jump range");
    ++pool;
  }
  if (pool < config.n_max) throw InputError("jump range too small for n_max distinct jumps");
  check_subset_cap(static_cast<std::size_t>(config.n_max), limits);

  CampaignStats stats;
  stats.per_n.assign(config.n_max + 1, 0);
  unsigned workers = config.threads ? config.threads : std::thread::hardware_concurrency();
  workers = std::max(1u, std::min<unsigned>(workers, std::max<std::size_t>(config.trials, 1)));

  std::mutex merge;
  std::atomic<bool> stop{false};
  std::optional<std::pair<std::size_t, std::string>> first_violation;

  auto work = [&](unsigned w) {
    CampaignStats local;
    local.per_n.assign(config.n_max + 1, 0);
    for (std::size_t i = w; i < config.trials && !stop.load(); i += workers) {
      Instance instance = campaign_instance(config, i);
      VerificationReport report = verify_theorem_instance(instance.jumps, instance.mines, limits);
      ++local.trials;
      ++local.per_n[report.n];
      if (report.has_zero) ++local.with_zero;
      if (report.route) ++local.found;
      if (report.violation) {
        ++local.violations;
        std::lock_guard lock(merge);
        if (!first_violation || first_violation->first > i) {
          first_violation = {i, instance_to_json(instance.jumps, instance.mines)};
        }
        stop = true;
      }
      if (config.probe_above_bound && report.route && !report.route->prefix_sums.empty()) {
        // Mine the first landing point of the route just found.
        std::vector<std::int64_t> more(instance.mines.values().begin(),
                                       instance.mines.values().end());
        more.push_back(report.route->prefix_sums.front());
        ++local.above_bound_probes;
        if (is_blocked(instance.jumps, MineField(std::move(more)), limits)) {
          ++local.above_bound_blocked;
        }
      }
    }
    std::lock_guard lock(merge);
    stats.trials += local.trials;
    stats.found += local.found;
    stats.violations += local.violations;
    stats.with_zero += local.with_zero;
    stats.above_bound_probes += local.above_bound_probes;
    stats.above_bound_blocked += local.above_bound_blocked;
    for (std::size_t n = 0; n < local.per_n.size(); ++n) stats.per_n[n] += local.per_n[n];
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool_threads;
    for (unsigned w = 0; w < workers; ++w) pool_threads.emplace_back(work, w);
    for (auto& t : pool_threads) t.join();
  }

  if (first_violation) {
    throw TheoremViolation("blocked instance within the bound (trial " +
                           std::to_string(first_violation->first) +
                           "): " + first_violation->second);
  }
  return stats;
}

std::string instance_to_json(const JumpMultiset& jumps, const MineField& mines) {
  auto list = [](auto&& values) {
    std::string out = "[";
    bool first = true;
    for (auto x : values) {
      if (!first) out += ",";
      out += std::to_string(x);
      first = false;
    }
    return out + "]";
  };
  return "{\"jumps\":" + list(jumps.values()) + ",\"mines\":" + list(mines.values()) + "}";
}

}  // namespace grasshopper
