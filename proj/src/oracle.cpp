#include "grasshopper/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <thread>

#include "grasshopper/errors.hpp"

namespace grasshopper {
namespace {

constexpr std::int64_t kCoordinateBound = std::int64_t{1} << 40;

unsigned degree_of(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

int permutation_sign(const std::vector<int>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) ++inversions;
    }
  }
  return inversions % 2 ? -1 : 1;
}

void check_magnitudes(const EvalPoint& point, std::span<const std::int64_t> mines) {
  auto small = [](std::int64_t x) { return x > -kCoordinateBound && x < kCoordinateBound; };
  for (auto x : point.coordinates) {
    if (!small(x)) throw InputError("evaluation coordinate out of range (|x| < 2^40)");
  }
  for (auto m : mines) {
    if (!small(m)) throw InputError("mine out of range (|m| < 2^40)");
  }
}

// Depth-first walk over permutations; level l holds the product of the
// guarded factors for the first l chosen coordinates.
class PermutationWalker {
 public:
  PermutationWalker(std::span<const std::int64_t> point, std::span<const std::int64_t> mines)
      : point_(point),
        mines_(mines),
        n_(static_cast<int>(point.size())),
        all_((1u << n_) - 1),
        products_(n_ + 1) {
    products_[0] = 1;
  }

  BigInt branch(int first) {
    BigInt acc = 0;
    step(0, 0, 0, false, first, acc);
    return acc;
  }

 private:
  void step(int depth, std::uint32_t used, std::int64_t prefix, bool negative, int j,
            BigInt& acc) {
    std::uint32_t below = ~used & all_ & ((1u << j) - 1);
    bool sign = negative ^ (std::popcount(below) & 1);
    std::int64_t next_prefix = prefix + point_[j];
    int level = depth + 1;
    if (level == n_) {
      if (sign) acc -= products_[depth];
      else acc += products_[depth];
      return;
    }
    BigInt& product = products_[level];
    product = products_[depth];
    for (auto m : mines_) {
      std::int64_t factor = next_prefix - m;
      if (factor == 0) return;
      mpz_mul_si(product.get_mpz_t(), product.get_mpz_t(), factor);
    }
    std::uint32_t now_used = used | (1u << j);
    for (int next = 0; next < n_; ++next) {
      if (!(now_used >> next & 1)) step(level, now_used, next_prefix, sign, next, acc);
    }
  }

  std::span<const std::int64_t> point_;
  std::span<const std::int64_t> mines_;
  int n_;
  std::uint32_t all_;
  std::vector<BigInt> products_;
};

}  // namespace

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
  unsigned da = degree_of(a);
  unsigned db = degree_of(b);
  if (da != db) return da < db;
  return a < b;
}

DensePoly::DensePoly(int n_vars) : n_vars_(n_vars) {
  if (n_vars < 1) throw InputError("polynomial needs at least one variable");
}

DensePoly DensePoly::constant(int n_vars, const BigInt& c) {
  DensePoly p(n_vars);
  p.add_term(Exponents(n_vars, 0), c);
  return p;
}

DensePoly DensePoly::variable(int n_vars, int index) {
  if (index < 0 || index >= n_vars) throw InputError("variable index out of range");
  DensePoly p(n_vars);
  Exponents e(n_vars, 0);
  e[index] = 1;
  p.add_term(e, 1);
  return p;
}

int DensePoly::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(degree_of(terms_.rbegin()->first));
}

BigInt DensePoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void DensePoly::add_term(const Exponents& e, const BigInt& c) {
  if (static_cast<int>(e.size()) != n_vars_) throw InputError("exponent vector length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

DensePoly& DensePoly::operator+=(const DensePoly& other) {
  if (other.n_vars_ != n_vars_) throw InputError("variable count mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

DensePoly& DensePoly::operator-=(const DensePoly& other) {
  if (other.n_vars_ != n_vars_) throw InputError("variable count mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

DensePoly& DensePoly::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

DensePoly DensePoly::operator*(const DensePoly& other) const {
  return multiply_bounded(other, ~0u);
}

DensePoly DensePoly::multiply_bounded(const DensePoly& other, unsigned max_exponent) const {
  if (other.n_vars_ != n_vars_) throw InputError("variable count mismatch");
  DensePoly out(n_vars_);
  Exponents e(n_vars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      bool keep = true;
      for (int i = 0; i < n_vars_ && keep; ++i) {
        e[i] = ea[i] + eb[i];
        keep = e[i] <= max_exponent;
      }
      if (keep) out.add_term(e, ca * cb);
    }
  }
  return out;
}

DensePoly DensePoly::pow(unsigned exponent) const {
  DensePoly result = constant(n_vars_, 1);
  DensePoly base = *this;
  while (exponent) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return result;
}

DensePoly DensePoly::permute_variables(std::span<const int> target) const {
  if (static_cast<int>(target.size()) != n_vars_) throw InputError("permutation length mismatch");
  std::vector<int> check(target.begin(), target.end());
  std::sort(check.begin(), check.end());
  for (int i = 0; i < n_vars_; ++i) {
    if (check[i] != i) throw InputError("not a permutation of the variables");
  }
  DensePoly out(n_vars_);
  Exponents renamed(n_vars_);
  for (const auto& [e, c] : terms_) {
    for (int i = 0; i < n_vars_; ++i) renamed[target[i]] = e[i];
    out.add_term(renamed, c);
  }
  return out;
}

DensePoly DensePoly::swap_variables(int i, int j) const {
  std::vector<int> target(n_vars_);
  std::iota(target.begin(), target.end(), 0);
  std::swap(target.at(i), target.at(j));
  return permute_variables(target);
}

std::string DensePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string coeff = c.get_str(10);
    if (!out.empty()) {
      if (c < 0) {
        out += " - ";
        coeff.erase(0, 1);
      } else {
        out += " + ";
      }
    }
    bool constant_term = degree_of(e) == 0;
    if (constant_term || (coeff != "1" && coeff != "-1")) {
      out += coeff;
      if (!constant_term) out += "*";
    } else if (coeff == "-1") {
      out += "-";
    }
    bool first = true;
    for (int i = 0; i < n_vars_; ++i) {
      if (e[i] == 0) continue;
      if (!first) out += "*";
      out += "x" + std::to_string(i + 1);
      if (e[i] > 1) out += "^" + std::to_string(e[i]);
      first = false;
    }
  }
  return out;
}

bool EvalPoint::pairwise_distinct() const {
  std::vector<std::int64_t> sorted = coordinates;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

DensePoly prefix_sum_poly(int n_vars, int count) {
  DensePoly p(n_vars);
  for (int i = 0; i < count; ++i) p += DensePoly::variable(n_vars, i);
  return p;
}

DensePoly vandermonde_poly(int n_vars) {
  DensePoly v = DensePoly::constant(n_vars, 1);
  for (int j = 0; j < n_vars; ++j) {
    for (int i = 0; i < j; ++i) {
      DensePoly factor = DensePoly::variable(n_vars, j);
      factor -= DensePoly::variable(n_vars, i);
      v = v * factor;
    }
  }
  return v;
}

DensePoly expand_Q(const PolySpec& spec, const Limits& limits) {
  const int n = spec.n;
  if (n < 1 || spec.u < 0 || spec.v < 0) throw InputError("invalid PolySpec");
  if (n > limits.expand_vars_cap) {
    throw CapacityError("expand_vars_cap", "expand_Q with n=" + std::to_string(n) +
                                               " exceeds expand_vars_cap=" +
                                               std::to_string(limits.expand_vars_cap));
  }
  if (n == 1) {
    DensePoly q(1);
    q.add_term(Exponents{static_cast<unsigned>(spec.v)}, 1);
    return q;
  }

  // Identity-order product; each permutation is a renaming of it.
  DensePoly base = DensePoly::constant(n, 1);
  for (int l = 1; l < n; ++l) base = base * prefix_sum_poly(n, l).pow(spec.u);

  DensePoly q(n);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    // Position l holds x_{perm[l]}, i.e. x_l is renamed to x_{perm[l]}.
    DensePoly term = base.permute_variables(perm);
    if (permutation_sign(perm) < 0) q -= term;
    else q += term;
  } while (std::next_permutation(perm.begin(), perm.end()));

  return q * prefix_sum_poly(n, n).pow(spec.v);
}

BigInt eval_vandermonde(const EvalPoint& point) {
  const auto& x = point.coordinates;
  BigInt product = 1;
  for (std::size_t j = 0; j < x.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      product *= BigInt(static_cast<long>(x[j])) - BigInt(static_cast<long>(x[i]));
    }
  }
  return product;
}

BigInt alternating_prefix_product_sum(const EvalPoint& point,
                                      std::span<const std::int64_t> mines,
                                      const Limits& limits) {
  const int n = static_cast<int>(point.size());
  if (n < 1) throw InputError("empty evaluation point");
  if (n > limits.factorial_cap) {
    throw CapacityError("factorial_cap", "permutation sum over " + std::to_string(n) +
                                             "! terms exceeds factorial_cap=" +
                                             std::to_string(limits.factorial_cap));
  }
  if (n > 31) throw CapacityError("factorial_cap", "permutation length above 31");
  check_magnitudes(point, mines);

  std::vector<BigInt> partial(n);
  unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), n));
  if (workers == 1) {
    PermutationWalker walker(point.coordinates, mines);
    for (int first = 0; first < n; ++first) partial[first] = walker.branch(first);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        PermutationWalker walker(point.coordinates, mines);
        for (int first = static_cast<int>(w); first < n; first += static_cast<int>(workers)) {
          partial[first] = walker.branch(first);
        }
      });
    }
    for (auto& t : pool) t.join();
  }
  BigInt total = 0;
  for (const auto& p : partial) total += p;
  return total;
}

BigInt eval_Q_mines(int k, const MineField& mines, const EvalPoint& point, const Limits& limits) {
  if (k < 1) throw InputError("k must be at least 1");
  if (mines.size() != static_cast<std::size_t>(k)) {
    throw InputError("expected exactly k=" + std::to_string(k) + " mines, got " +
                     std::to_string(mines.size()));
  }
  if (point.size() != static_cast<std::size_t>(2 * k)) {
    throw InputError("evaluation point must have 2k=" + std::to_string(2 * k) + " coordinates");
  }
  return alternating_prefix_product_sum(point, mines.values(), limits);
}

BigInt ck_via_evaluation(int k, const Limits& limits, const std::optional<EvalPoint>& point) {
  if (k < 1) throw InputError("k must be at least 1");
  EvalPoint at;
  if (point) {
    at = *point;
  } else {
    for (int i = 1; i <= 2 * k; ++i) at.coordinates.push_back(i);
  }
  if (at.size() != static_cast<std::size_t>(2 * k)) {
    throw InputError("evaluation point must have 2k coordinates");
  }
  if (!at.pairwise_distinct()) throw InputError("evaluation point coordinates must be distinct");

  std::vector<std::int64_t> zero_mines(k, 0);
  BigInt q = alternating_prefix_product_sum(at, zero_mines, limits);
  BigInt denominator = eval_vandermonde(at);
  if (k % 2) denominator = -denominator;
  if (!mpz_divisible_p(q.get_mpz_t(), denominator.get_mpz_t())) {
    throw ConsistencyError("Q(a) is not a multiple of (-1)^k V(a) for k=" + std::to_string(k));
  }
  return q / denominator;
}

namespace {

void check_nullstellensatz_cap(int k, const Limits& limits) {
  if (k < 1) throw InputError("k must be at least 1");
  if (k > limits.nullstellensatz_k_cap) {
    throw CapacityError("nullstellensatz_k_cap",
                        "nullstellensatz expansion with k=" + std::to_string(k) +
                            " exceeds nullstellensatz_k_cap=" +
                            std::to_string(limits.nullstellensatz_k_cap));
  }
}

DensePoly nullstellensatz_product(int k, unsigned max_exponent) {
  const int n = 2 * k;
  DensePoly p = vandermonde_poly(n);
  for (int l = 1; l < n; ++l) {
    p = p.multiply_bounded(prefix_sum_poly(n, l).pow(k), max_exponent);
  }
  return p;
}

}  // namespace

DensePoly nullstellensatz_polynomial(int k, const Limits& limits) {
  check_nullstellensatz_cap(k, limits);
  return nullstellensatz_product(k, ~0u);
}

BigInt nullstellensatz_coefficient(int k, const Limits& limits) {
  check_nullstellensatz_cap(k, limits);
  const unsigned top = static_cast<unsigned>(2 * k - 1);
  DensePoly p = nullstellensatz_product(k, top);
  return p.coefficient(Exponents(2 * k, top));
}

}  // namespace grasshopper
