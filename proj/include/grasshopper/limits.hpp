#pragma once

#include <cstddef>
#include <cstdint>

namespace grasshopper {

/// Resource caps shared by every module. Exceeding one raises
/// CapacityError naming the cap; nothing is ever silently truncated.
struct Limits {
  /// Entries in one alpha memo table.
  std::size_t memo_cap = 50'000'000;
  /// Recursion depth n(u+1)+v accepted by the alpha recurrence.
  std::int64_t alpha_depth_cap = 20'000;
  /// Distinct partitions enumerated by coefficient_table.
  std::size_t partition_cap = 1'000'000;
  /// Largest variable count for symbolic expansion of Q^{(n,u,v)}.
  int expand_vars_cap = 4;
  /// Largest permutation length summed by the evaluation oracle (10!).
  int factorial_cap = 10;
  /// Largest k for the Nullstellensatz coefficient expansion.
  int nullstellensatz_k_cap = 2;
  /// Largest jump count handled by the subset-lattice search.
  int subset_cap = 24;

  /// Defaults overridden by GRASSHOPPER_* environment variables, e.g.
  /// GRASSHOPPER_MEMO_CAP or GRASSHOPPER_SUBSET_CAP.
  static Limits from_environment();
};

}  // namespace grasshopper
