#include "grasshopper/olympiad.hpp"

#include <algorithm>
#include <numeric>

#include "grasshopper/errors.hpp"

namespace grasshopper {
namespace {

void sort_unique(std::vector<Rational>& values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
}

// Pads a sorted mine list to `count` entries with values above `reach`.
void pad_sorted(std::vector<Rational>& mines, std::size_t count, const Rational& reach) {
  Rational next = reach + 1;
  if (!mines.empty() && mines.back() >= next) next = mines.back() + 1;
  while (mines.size() < count) {
    mines.push_back(next);
    next += 1;
  }
}

struct Level {
  OlympiadStep step;
  Rational first_mine;  // m_1, used by kLargestNotMine
};

}  // namespace

PositiveInstance::PositiveInstance(std::vector<Rational> jumps, std::vector<Rational> mines)
    : jumps_(std::move(jumps)), mines_(std::move(mines)) {
  for (auto& a : jumps_) {
    a.canonicalize();
    if (a <= 0) throw InputError("jumps must be positive, got " + to_string(a));
  }
  std::vector<Rational> sorted = jumps_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InputError("jumps must be pairwise distinct");
  }
  for (auto& m : mines_) m.canonicalize();
  sort_unique(mines_);
  if (!jumps_.empty() && mines_.size() > jumps_.size() - 1) {
    throw InputError("at most n-1 = " + std::to_string(jumps_.size() - 1) + " mines allowed, got " +
                     std::to_string(mines_.size()));
  }
  if (jumps_.empty()) throw InputError("at least one jump is required");
}

Rational PositiveInstance::total() const {
  Rational sum = 0;
  for (const auto& a : jumps_) sum += a;
  return sum;
}

PositiveInstance pad_mines(const PositiveInstance& instance) {
  std::vector<Rational> mines = instance.mines();
  pad_sorted(mines, instance.size() - 1, instance.total());
  return PositiveInstance(instance.jumps(), std::move(mines));
}

PositiveRoute positive_safe_order(const PositiveInstance& instance, OlympiadTrace* trace) {
  const std::size_t n = instance.size();
  const auto& a = instance.jumps();

  // rank[r] = input index of the r-th smallest jump.
  std::vector<std::size_t> rank(n);
  std::iota(rank.begin(), rank.end(), 0);
  std::sort(rank.begin(), rank.end(), [&](std::size_t x, std::size_t y) { return a[x] < a[y]; });

  std::vector<Rational> below(n + 1);  // below[i] = sum of the i smallest jumps
  below[0] = 0;
  for (std::size_t r = 0; r < n; ++r) below[r + 1] = below[r] + a[rank[r]];

  // Top-down: derive each level's mine set from the one above.
  std::vector<Level> levels(n + 1);
  std::vector<Rational> mines = pad_mines(instance).mines();
  std::size_t size = n;
  for (; size >= 2; --size) {
    pad_sorted(mines, size - 1, below[size]);
    const Rational& largest = a[rank[size - 1]];
    if (below[size - 1] < mines.front()) {
      levels[size] = {OlympiadStep::kShortPrefix, {}};
      break;
    }
    auto hit = std::lower_bound(mines.begin(), mines.end(), largest);
    std::vector<Rational> next;
    next.reserve(size - 2);
    if (hit != mines.end() && *hit == largest) {
      levels[size] = {OlympiadStep::kLargestIsMine, {}};
      next.assign(mines.begin(), hit);
      for (auto it = hit + 1; it != mines.end(); ++it) next.push_back(*it - largest);
    } else {
      levels[size] = {OlympiadStep::kLargestNotMine, mines.front()};
      for (auto it = mines.begin() + 1; it != mines.end(); ++it) next.push_back(*it - largest);
    }
    sort_unique(next);
    mines = std::move(next);
  }
  if (size < 2) {
    size = 1;
    levels[1] = {OlympiadStep::kBase, {}};
  }

  // Bottom-up: `perm` holds ranks 0..size-1 in route order.
  std::vector<std::size_t> perm(size);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t level = size + 1; level <= n; ++level) {
    const std::size_t largest = level - 1;
    if (levels[level].step == OlympiadStep::kLargestIsMine) {
      perm.insert(perm.begin() + 1, largest);
    } else {
      // First l whose partial sum reaches m_1; it exists because the
      // short-prefix exit did not fire at this level.
      Rational running = 0;
      std::size_t l = 0;
      while (l < perm.size()) {
        running += a[rank[perm[l]]];
        if (running >= levels[level].first_mine) break;
        ++l;
      }
      if (l == perm.size()) throw ConsistencyError("no partial sum reaches the smallest mine");
      perm.insert(perm.begin() + static_cast<std::ptrdiff_t>(l), largest);
    }
  }

  if (trace) {
    trace->steps.clear();
    for (std::size_t level = 1; level <= n; ++level) {
      trace->steps.push_back(level < size ? OlympiadStep::kBase : levels[level].step);
    }
  }

  PositiveRoute route;
  Rational running = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t index = rank[perm[i]];
    route.indices.push_back(index);
    route.order.push_back(a[index]);
    running += a[index];
    if (i + 1 < n) route.prefix_sums.push_back(running);
  }
  return route;
}

bool is_valid_positive_route(const PositiveRoute& route, const PositiveInstance& instance) {
  const std::size_t n = instance.size();
  if (route.indices.size() != n || route.order.size() != n) return false;
  if (route.prefix_sums.size() + 1 != n) return false;
  std::vector<bool> seen(n, false);
  Rational running = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t index = route.indices[i];
    if (index >= n || seen[index]) return false;
    seen[index] = true;
    if (route.order[i] != instance.jumps()[index]) return false;
    running += route.order[i];
    if (i + 1 < n) {
      if (route.prefix_sums[i] != running) return false;
      if (std::binary_search(instance.mines().begin(), instance.mines().end(), running)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace grasshopper
