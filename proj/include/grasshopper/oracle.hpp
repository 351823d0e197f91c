#pragma once

// Brute-force ground truth for the coefficient recurrences: symbolic
// expansion of Q^{(n,u,v)} and direct evaluation of the alternating
// permutation sums. Nothing here calls into coeffs.hpp except for the
// PolySpec type, so it can be used to check that module.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "grasshopper/bigint.hpp"
#include "grasshopper/coeffs.hpp"
#include "grasshopper/limits.hpp"
#include "grasshopper/mines.hpp"

namespace grasshopper {

using Exponents = std::vector<unsigned>;

/// Graded lexicographic order: total degree first, then lexicographic.
struct GradedLexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial over the integers, keyed by exponent
/// vector. Zero coefficients are never stored.
class DensePoly {
 public:
  using TermMap = std::map<Exponents, BigInt, GradedLexLess>;

  explicit DensePoly(int n_vars);
  static DensePoly constant(int n_vars, const BigInt& c);
  /// x_index, 0-based.
  static DensePoly variable(int n_vars, int index);

  int n_vars() const { return n_vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int total_degree() const;

  BigInt coefficient(const Exponents& e) const;
  void add_term(const Exponents& e, const BigInt& c);

  DensePoly& operator+=(const DensePoly& other);
  DensePoly& operator-=(const DensePoly& other);
  DensePoly& operator*=(const BigInt& scalar);
  DensePoly operator*(const DensePoly& other) const;
  DensePoly pow(unsigned exponent) const;

  /// Product keeping only monomials whose every exponent is <= max_exponent.
  DensePoly multiply_bounded(const DensePoly& other, unsigned max_exponent) const;

  /// Renames x_i to x_{target[i]}; target must be a permutation.
  DensePoly permute_variables(std::span<const int> target) const;
  DensePoly swap_variables(int i, int j) const;

  bool operator==(const DensePoly& other) const {
    return n_vars_ == other.n_vars_ && terms_ == other.terms_;
  }

  std::string to_string() const;

 private:
  int n_vars_;
  TermMap terms_;
};

/// Integer evaluation point for the permutation-sum identities.
struct EvalPoint {
  std::vector<std::int64_t> coordinates;

  std::size_t size() const { return coordinates.size(); }
  bool pairwise_distinct() const;
};

/// x_1 + ... + x_count in n_vars variables.
DensePoly prefix_sum_poly(int n_vars, int count);

/// prod_{i<j} (x_j - x_i), expanded.
DensePoly vandermonde_poly(int n_vars);

/// Q^{(n,u,v)} expanded over all n! permutations. n is limited by
/// limits.expand_vars_cap.
DensePoly expand_Q(const PolySpec& spec, const Limits& limits = {});

/// prod_{i<j} (p_j - p_i).
BigInt eval_vandermonde(const EvalPoint& point);

/// sum_{pi} sgn(pi) prod_{l=1}^{n-1} prod_{m in mines} (p_{pi(1)}+...+p_{pi(l)} - m)
/// with `mines` a multiset. Permutation prefixes are shared, subtrees with
/// a zero factor are pruned, and top-level branches may run on separate
/// threads with a fixed-order reduction.
BigInt alternating_prefix_product_sum(const EvalPoint& point,
                                      std::span<const std::int64_t> mines,
                                      const Limits& limits = {});

/// Q(point) for the n = 2k instance with mine set `mines` (|mines| = k).
BigInt eval_Q_mines(int k, const MineField& mines, const EvalPoint& point,
                    const Limits& limits = {});

/// c_k as Q(a) / ((-1)^k V(a)) with all mines at 0. The default point is
/// (1, 2, ..., 2k). Throws ConsistencyError if the division is inexact.
BigInt ck_via_evaluation(int k, const Limits& limits = {},
                         const std::optional<EvalPoint>& point = std::nullopt);

/// V(x) * prod_{l=1}^{2k-1} (x_1+...+x_l)^k, fully expanded.
DensePoly nullstellensatz_polynomial(int k, const Limits& limits = {});

/// Coefficient of x_1^{2k-1} ... x_{2k}^{2k-1} in nullstellensatz_polynomial(k),
/// computed with exponent truncation at 2k-1.
BigInt nullstellensatz_coefficient(int k, const Limits& limits = {});

}  // namespace grasshopper
