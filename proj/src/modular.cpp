#include "grasshopper/modular.hpp"

#include <algorithm>
#include <cctype>

#include "grasshopper/errors.hpp"

namespace grasshopper {
namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t residue(const BigInt& value, std::uint64_t p) {
  BigInt r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), p);
  return r.get_ui();
}

constexpr std::uint64_t kSieveCap = 100'000'000;
constexpr std::uint64_t kTrialDivisionCap = 100'000'000'000'000ULL;  // 10^14

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are a deterministic witness set for all n < 3.3 * 10^24.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeModulus::PrimeModulus(std::uint64_t p) : p_(p) {
  if (p >= (std::uint64_t{1} << 63)) throw InputError("modulus must be below 2^63");
  if (!is_prime_u64(p)) throw InputError(std::to_string(p) + " is not prime");
}

std::uint64_t ck_mod(int k, const PrimeModulus& p, const Limits& limits) {
  PolySpec spec = ck_spec(k);
  AlphaEngine<ModRing> engine(spec.u, ModRing(p), limits);
  return engine.alpha(spec, staircase(spec.n));
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  if (bound > kSieveCap) {
    throw CapacityError("prime_bound", "prime bound above 10^8");
  }
  std::vector<std::uint64_t> primes;
  if (bound < 2) return primes;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return primes;
}

std::vector<ScanRow> residue_table(int k, std::uint64_t prime_bound, const Limits& limits) {
  BigInt exact = ck(k, limits);
  std::vector<ScanRow> rows;
  for (std::uint64_t p : primes_up_to(prime_bound)) {
    std::uint64_t r = residue(exact, p);
    rows.push_back({p, r, r == 0});
  }
  // Recompute a few residues through the modular pipeline.
  std::size_t checked = 0;
  for (const auto& row : rows) {
    if (checked >= 8 && !row.divides) continue;
    if (ck_mod(k, PrimeModulus(row.prime), limits) != row.residue) {
      throw ConsistencyError("ck_mod disagrees with exact c_" + std::to_string(k) + " mod " +
                             std::to_string(row.prime));
    }
    ++checked;
  }
  return rows;
}

std::vector<std::uint64_t> divisor_scan(int k, std::uint64_t prime_bound, const Limits& limits) {
  std::vector<std::uint64_t> divisors;
  for (const auto& row : residue_table(k, prime_bound, limits)) {
    if (row.divides) divisors.push_back(row.prime);
  }
  return divisors;
}

BigInt FactorizationClaim::product() const {
  BigInt value = 1;
  for (const auto& f : factors) {
    BigInt power;
    mpz_pow_ui(power.get_mpz_t(), f.prime.get_mpz_t(), f.exponent);
    value *= power;
  }
  return value;
}

std::string FactorizationClaim::to_string() const {
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty()) out += "*";
    out += to_decimal(f.prime);
    if (f.exponent != 1) out += "^" + std::to_string(f.exponent);
  }
  return out.empty() ? "1" : out;
}

bool certify_prime(const BigInt& p) {
  if (p < 2) return false;
  if (p <= kTrialDivisionCap) {
    std::uint64_t n = p.get_ui();
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
      if (n % d == 0) return false;
    }
    return true;
  }
  return mpz_probab_prime_p(p.get_mpz_t(), 40) > 0;
}

bool verify_factorization(const FactorizationClaim& claim, const Limits& limits) {
  for (const auto& f : claim.factors) {
    if (!certify_prime(f.prime)) {
      throw InputError("claimed prime " + to_decimal(f.prime) + " is composite");
    }
  }
  return claim.product() == ck(claim.k, limits);
}

std::vector<FactorizationClaim> known_factorizations() {
  auto pp = [](const char* p, unsigned e) { return PrimePower{BigInt(p), e}; };
  return {
      {3, {pp("2", 1), pp("3", 2), pp("5", 1)}},
      {4, {pp("2", 5), pp("3", 3), pp("7", 1), pp("97", 1)}},
      {5, {pp("2", 2), pp("3", 1), pp("5", 4), pp("7", 1), pp("79", 1), pp("103", 1),
           pp("4483", 1)}},
      {6, {pp("2", 5), pp("3", 6), pp("5", 2), pp("11", 1), pp("23", 1), pp("223", 1),
           pp("239", 1), pp("1002820739", 1)}},
  };
}

FactorizationClaim parse_factorization(int k, const std::string& text) {
  FactorizationClaim claim{k, {}};
  std::string token;
  auto flush = [&] {
    if (token.empty()) throw InputError("empty factor in '" + text + "'");
    auto caret = token.find('^');
    PrimePower f;
    f.prime = parse_bigint(token.substr(0, caret));
    if (caret != std::string::npos) {
      BigInt e = parse_bigint(token.substr(caret + 1));
      if (e < 1 || e > 100000) throw InputError("bad exponent in '" + token + "'");
      f.exponent = static_cast<unsigned>(e.get_ui());
    }
    claim.factors.push_back(f);
    token.clear();
  };
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '*') flush();
    else token += c;
  }
  flush();
  return claim;
}

PartialFactorization partial_factorization(int k, std::uint64_t trial_bound,
                                           const Limits& limits) {
  PartialFactorization result;
  result.k = k;
  result.value = ck(k, limits);
  result.cofactor = result.value;
  for (std::uint64_t p : primes_up_to(trial_bound)) {
    unsigned exponent = 0;
    while (mpz_divisible_ui_p(result.cofactor.get_mpz_t(), p)) {
      mpz_divexact_ui(result.cofactor.get_mpz_t(), result.cofactor.get_mpz_t(), p);
      ++exponent;
    }
    if (exponent) result.small_factors.push_back({BigInt(static_cast<unsigned long>(p)), exponent});
  }
  result.cofactor_probable_prime =
      result.cofactor > 1 && mpz_probab_prime_p(result.cofactor.get_mpz_t(), 40) > 0;
  return result;
}

}  // namespace grasshopper
