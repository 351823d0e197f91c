#pragma once

// Coefficients of the alternating prefix-sum polynomials
//
//   Q^{(n,u,v)}(x) = sum_{pi in S_n} sgn(pi) * prod_{l<n} (x_{pi(1)}+...+x_{pi(l)})^u
//                    * (x_1+...+x_n)^v,                      Q^{(1,u,v)} = x^v,
//
// computed through two exact recurrences on the coefficient of
// x_1^{d_1}...x_n^{d_n} (d strictly decreasing):
//
//   v = 0, n >= 2:  alpha^{(n,u,0)}_d = [d_n = 0] * alpha^{(n-1,u,u)}_{d_1..d_{n-1}}
//   v >= 1:         alpha^{(n,u,v)}_d = sum_i alpha^{(n,u,v-1)}_{d - e_i}
//
// where a decrement that creates a tie or a negative part contributes 0.
// c_k is the coefficient at the staircase (2k-1, ..., 1, 0) of Q^{(2k,k,0)}.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "grasshopper/bigint.hpp"
#include "grasshopper/errors.hpp"
#include "grasshopper/limits.hpp"

namespace grasshopper {

/// Index (n, u, v) of Q^{(n,u,v)}.
struct PolySpec {
  int n = 1;
  int u = 0;
  int v = 0;

  /// Validating constructor: n >= 1, u >= 0, v >= 0.
  static PolySpec make(int n, int u, int v);

  /// Homogeneous degree (n-1)u + v of every monomial of Q^{(n,u,v)}.
  std::int64_t degree() const {
    return static_cast<std::int64_t>(n - 1) * u + v;
  }

  /// Induction measure n(u+1)+v; bounds the recurrence depth.
  std::int64_t depth() const {
    return static_cast<std::int64_t>(n) * (u + 1) + v;
  }

  auto operator<=>(const PolySpec&) const = default;
};

/// Strictly decreasing sequence of nonnegative integers.
class DistinctPartition {
 public:
  DistinctPartition() = default;
  /// Throws InputError unless parts are strictly decreasing and >= 0.
  explicit DistinctPartition(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  std::int64_t sum() const;
  int operator[](std::size_t i) const { return parts_[i]; }

  std::string to_string() const;

  auto operator<=>(const DistinctPartition&) const = default;

 private:
  std::vector<int> parts_;
};

/// (m-1, m-2, ..., 1, 0).
DistinctPartition staircase(int m);

/// All nonzero coefficients of one Q^{(n,u,v)}.
struct CoefficientTable {
  PolySpec spec;
  std::map<DistinctPartition, BigInt> entries;
};

/// Exact integers; the default coefficient ring.
struct IntegerRing {
  using Value = BigInt;
  Value zero() const { return 0; }
  Value one() const { return 1; }
  void add(Value& acc, const Value& x) const { acc += x; }
};

/// Memoized alpha recurrence for one family of fixed u.
///
/// `Ring` supplies zero(), one() and add(acc, x); it is the only
/// difference between the exact and the residue pipelines, so both visit
/// exactly the same memo keys. Lookups take a shared lock and insertions
/// an exclusive one, so one engine may serve several threads.
template <typename Ring>
class AlphaEngine {
 public:
  using Value = typename Ring::Value;

  explicit AlphaEngine(int u, Ring ring = Ring{}, Limits limits = {})
      : u_(u), ring_(std::move(ring)), limits_(limits) {
    if (u < 0) throw InputError("u must be nonnegative");
  }

  AlphaEngine(const AlphaEngine&) = delete;
  AlphaEngine& operator=(const AlphaEngine&) = delete;

  int u() const { return u_; }

  /// Coefficient of x^d in Q^{(spec)}; spec.u must equal u().
  Value alpha(const PolySpec& spec, const DistinctPartition& d) {
    if (spec.u != u_) {
      throw InputError("engine built for u=" + std::to_string(u_) +
                       " queried with u=" + std::to_string(spec.u));
    }
    if (d.size() != static_cast<std::size_t>(spec.n)) {
      throw InputError("partition " + d.to_string() + " has length " +
                       std::to_string(d.size()) + ", expected n=" +
                       std::to_string(spec.n));
    }
    if (d.sum() != spec.degree()) return ring_.zero();
    if (spec.depth() > limits_.alpha_depth_cap) {
      throw CapacityError("alpha_depth_cap",
                          "recursion depth n(u+1)+v=" + std::to_string(spec.depth()) +
                              " exceeds alpha_depth_cap=" +
                              std::to_string(limits_.alpha_depth_cap));
    }
    std::vector<int> parts(d.parts().begin(), d.parts().end());
    return eval(parts, spec.v);
  }

  std::size_t memo_size() const {
    std::shared_lock lock(mutex_);
    return memo_.size();
  }

  /// Every memoized index, sorted; used to compare traversal between rings.
  std::vector<DistinctPartition> memo_keys() const {
    std::vector<DistinctPartition> keys;
    {
      std::shared_lock lock(mutex_);
      keys.reserve(memo_.size());
      for (const auto& [key, value] : memo_) keys.push_back(decode(key));
    }
    std::sort(keys.begin(), keys.end());
    return keys;
  }

 private:
  // Parts are distinct, so the set bitmask identifies them; n and v follow
  // from the popcount and the sum.
  using Key = std::vector<std::uint64_t>;

  struct KeyHash {
    std::size_t operator()(const Key& key) const noexcept {
      std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ key.size();
      for (std::uint64_t word : key) {
        h ^= word + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h *= 0xbf58476d1ce4e5b9ULL;
      }
      return static_cast<std::size_t>(h ^ (h >> 31));
    }
  };

  static Key encode(const std::vector<int>& parts) {
    Key key(static_cast<std::size_t>(parts.front()) / 64 + 1, 0);
    for (int p : parts) key[p / 64] |= std::uint64_t{1} << (p % 64);
    return key;
  }

  static DistinctPartition decode(const Key& key) {
    std::vector<int> parts;
    for (std::size_t w = key.size(); w-- > 0;) {
      for (int b = 63; b >= 0; --b) {
        if (key[w] >> b & 1) parts.push_back(static_cast<int>(w * 64 + b));
      }
    }
    return DistinctPartition(std::move(parts));
  }

  // Invariant: parts strictly decreasing, >= 0, sum == (n-1)u + v.
  Value eval(const std::vector<int>& parts, int v) {
    const std::size_t n = parts.size();
    if (n == 1) return ring_.one();  // Q^{(1,u,v)} = x^v and d_1 == v

    Key key = encode(parts);
    {
      std::shared_lock lock(mutex_);
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }

    Value result = ring_.zero();
    if (v == 0) {
      if (parts.back() == 0) {
        std::vector<int> head(parts.begin(), parts.end() - 1);
        result = eval(head, u_);
      }
    } else {
      std::vector<int> child = parts;
      for (std::size_t i = 0; i < n; ++i) {
        int lowered = parts[i] - 1;
        bool keeps_order = i + 1 < n ? lowered > parts[i + 1] : lowered >= 0;
        if (!keeps_order) continue;
        child[i] = lowered;
        ring_.add(result, eval(child, v - 1));
        child[i] = parts[i];
      }
    }

    std::unique_lock lock(mutex_);
    if (memo_.size() >= limits_.memo_cap) {
      throw CapacityError("memo_cap", "alpha memo table reached memo_cap=" +
                                          std::to_string(limits_.memo_cap) + " entries");
    }
    memo_.try_emplace(std::move(key), result);
    return result;
  }

  int u_;
  Ring ring_;
  Limits limits_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<Key, Value, KeyHash> memo_;
};

/// Exact alpha^{(spec)}_d using a fresh memo table.
BigInt alpha(const PolySpec& spec, const DistinctPartition& d, const Limits& limits = {});

/// c_k = alpha^{(2k,k,0)}_{2k-1,...,1,0}; k >= 1.
BigInt ck(int k, const Limits& limits = {});

/// Index of c_k inside the u = k family.
PolySpec ck_spec(int k);

/// Every strictly decreasing n-tuple of nonnegative integers with the
/// given sum. Throws CapacityError past `cap` tuples.
std::vector<DistinctPartition> distinct_partitions(int n, std::int64_t total, std::size_t cap);

/// All nonzero coefficients of Q^{(spec)}.
CoefficientTable coefficient_table(const PolySpec& spec, const Limits& limits = {});

}  // namespace grasshopper
