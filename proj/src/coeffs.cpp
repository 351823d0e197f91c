#include "grasshopper/coeffs.hpp"

#include <functional>

namespace grasshopper {

PolySpec PolySpec::make(int n, int u, int v) {
  if (n < 1) throw InputError("n must be at least 1");
  if (u < 0 || v < 0) throw InputError("u and v must be nonnegative");
  return PolySpec{n, u, v};
}

DistinctPartition::DistinctPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw InputError("negative part in " + to_string());
    if (i + 1 < parts_.size() && parts_[i] <= parts_[i + 1]) {
      throw InputError("parts not strictly decreasing in " + to_string());
    }
  }
}

std::int64_t DistinctPartition::sum() const {
  std::int64_t total = 0;
  for (int p : parts_) total += p;
  return total;
}

std::string DistinctPartition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

DistinctPartition staircase(int m) {
  if (m < 1) throw InputError("staircase length must be positive");
  std::vector<int> parts(m);
  for (int i = 0; i < m; ++i) parts[i] = m - 1 - i;
  return DistinctPartition(std::move(parts));
}

BigInt alpha(const PolySpec& spec, const DistinctPartition& d, const Limits& limits) {
  AlphaEngine<IntegerRing> engine(spec.u, IntegerRing{}, limits);
  return engine.alpha(spec, d);
}

PolySpec ck_spec(int k) {
  if (k < 1) throw InputError("k must be at least 1");
  return PolySpec::make(2 * k, k, 0);
}

BigInt ck(int k, const Limits& limits) {
  PolySpec spec = ck_spec(k);
  return alpha(spec, staircase(spec.n), limits);
}

std::vector<DistinctPartition> distinct_partitions(int n, std::int64_t total, std::size_t cap) {
  if (n < 1) throw InputError("n must be at least 1");
  std::vector<DistinctPartition> out;
  std::vector<int> parts(n);  // filled from the smallest part upward

  // Minimum sum of `count` distinct parts each greater than `floor`.
  auto min_sum_above = [](std::int64_t count, std::int64_t floor) {
    return count * (floor + 1) + count * (count - 1) / 2;
  };

  std::function<void(int, int, std::int64_t)> fill = [&](int slot, int lowest, std::int64_t left) {
    if (slot < 0) {
      if (left == 0) {
        if (out.size() >= cap) {
          throw CapacityError("partition_cap", "more than " + std::to_string(cap) +
                                                   " distinct partitions of " +
                                                   std::to_string(total));
        }
        out.emplace_back(parts);
      }
      return;
    }
    // The slot takes value p; the `slot` larger parts must exceed p.
    for (std::int64_t p = lowest; p + min_sum_above(slot, p) <= left; ++p) {
      if (slot == 0 && p != left) continue;
      parts[slot] = static_cast<int>(p);
      fill(slot - 1, static_cast<int>(p) + 1, left - p);
    }
  };
  if (total >= 0) fill(n - 1, 0, total);
  std::sort(out.begin(), out.end());
  return out;
}

CoefficientTable coefficient_table(const PolySpec& spec, const Limits& limits) {
  CoefficientTable table{spec, {}};
  AlphaEngine<IntegerRing> engine(spec.u, IntegerRing{}, limits);
  for (auto& d : distinct_partitions(spec.n, spec.degree(), limits.partition_cap)) {
    BigInt value = engine.alpha(spec, d);
    if (value != 0) table.entries.emplace(std::move(d), std::move(value));
  }
  return table;
}

}  // namespace grasshopper
