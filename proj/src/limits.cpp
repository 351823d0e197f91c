#include "grasshopper/limits.hpp"

#include <cstdlib>
#include <string>

#include "grasshopper/errors.hpp"

namespace grasshopper {
namespace {

template <typename T>
void read_env(const char* name, T& field) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return;
  try {
    std::size_t used = 0;
    long long value = std::stoll(raw, &used);
    if (used != std::string(raw).size() || value < 0) throw std::invalid_argument(raw);
    field = static_cast<T>(value);
  } catch (const std::exception&) {
    throw InputError(std::string(name) + ": expected a nonnegative integer, got '" + raw + "'");
  }
}

}  // namespace

Limits Limits::from_environment() {
  Limits limits;
  read_env("GRASSHOPPER_MEMO_CAP", limits.memo_cap);
  read_env("GRASSHOPPER_ALPHA_DEPTH_CAP", limits.alpha_depth_cap);
  read_env("GRASSHOPPER_PARTITION_CAP", limits.partition_cap);
  read_env("GRASSHOPPER_EXPAND_VARS_CAP", limits.expand_vars_cap);
  read_env("GRASSHOPPER_FACTORIAL_CAP", limits.factorial_cap);
  read_env("GRASSHOPPER_NULLSTELLENSATZ_K_CAP", limits.nullstellensatz_k_cap);
  read_env("GRASSHOPPER_SUBSET_CAP", limits.subset_cap);
  return limits;
}

}  // namespace grasshopper
