#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

namespace grasshopper {

/// Set of forbidden landing points, stored sorted without duplicates.
class MineField {
 public:
  MineField() = default;
  explicit MineField(std::vector<std::int64_t> mines) : mines_(std::move(mines)) {
    std::sort(mines_.begin(), mines_.end());
    mines_.erase(std::unique(mines_.begin(), mines_.end()), mines_.end());
  }

  bool contains(std::int64_t point) const {
    return std::binary_search(mines_.begin(), mines_.end(), point);
  }
  std::size_t size() const { return mines_.size(); }
  bool empty() const { return mines_.empty(); }
  std::span<const std::int64_t> values() const { return mines_; }

  /// Copy with one mine removed (no-op if absent).
  MineField without(std::int64_t mine) const {
    std::vector<std::int64_t> rest;
    for (auto m : mines_) {
      if (m != mine) rest.push_back(m);
    }
    return MineField(std::move(rest));
  }

  bool operator==(const MineField&) const = default;

 private:
  std::vector<std::int64_t> mines_;
};

}  // namespace grasshopper
