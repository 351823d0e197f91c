#pragma once

// Constructive order for distinct positive jumps and at most n-1 mines,
// following the inductive argument on the largest jump a_n:
//
//  * a_1+...+a_{n-1} < m_1: put a_n last, anything before it.
//  * a_n = m_l: route a_1..a_{n-1} around
//      {m_1..m_{l-1}} u {m_{l+1}-a_n, ..., m_{n-1}-a_n}
//    and place a_n second.
//  * a_n not a mine: route a_1..a_{n-1} around {m_2-a_n, ..., m_{n-1}-a_n}
//    and place a_n just before the first jump whose partial sum reaches m_1.
//
// The recursion is unrolled into two loops, so n is limited only by time.

#include <cstddef>
#include <vector>

#include "grasshopper/bigint.hpp"

namespace grasshopper {

class PositiveInstance {
 public:
  /// Throws InputError for nonpositive or repeated jumps, or when there
  /// are more than n-1 distinct mines. Mines are canonicalized, sorted and
  /// deduplicated.
  PositiveInstance(std::vector<Rational> jumps, std::vector<Rational> mines);

  const std::vector<Rational>& jumps() const { return jumps_; }
  const std::vector<Rational>& mines() const { return mines_; }
  std::size_t size() const { return jumps_.size(); }
  Rational total() const;

 private:
  std::vector<Rational> jumps_;
  std::vector<Rational> mines_;
};

/// Same jumps with exactly n-1 mines; added mines are total+1, total+2, ...
/// skipping existing values, so they are out of reach.
PositiveInstance pad_mines(const PositiveInstance& instance);

struct PositiveRoute {
  /// Permutation of input indices.
  std::vector<std::size_t> indices;
  std::vector<Rational> order;
  /// Partial sums of lengths 1..n-1.
  std::vector<Rational> prefix_sums;
};

/// Which branch each induction level took; exposed for tests.
enum class OlympiadStep { kBase, kShortPrefix, kLargestIsMine, kLargestNotMine };

struct OlympiadTrace {
  /// steps[i] is the step for the level with i+1 jumps.
  std::vector<OlympiadStep> steps;
};

PositiveRoute positive_safe_order(const PositiveInstance& instance,
                                  OlympiadTrace* trace = nullptr);

bool is_valid_positive_route(const PositiveRoute& route, const PositiveInstance& instance);

}  // namespace grasshopper
