#include <doctest.h>

#include <random>

#include "grasshopper/coeffs.hpp"
#include "grasshopper/errors.hpp"
#include "grasshopper/modular.hpp"

using namespace grasshopper;

namespace {

std::uint64_t exact_mod(const BigInt& value, std::uint64_t p) {
  BigInt r = value % BigInt(static_cast<unsigned long>(p));
  return r.get_ui();
}

bool naive_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("primality") {
  for (std::uint64_t n = 0; n < 5000; ++n) CHECK(is_prime_u64(n) == naive_prime(n));
  CHECK(is_prime_u64(1002820739));
  CHECK(is_prime_u64(2147483647));
  CHECK(is_prime_u64(18446744073709551557ULL));
  CHECK_FALSE(is_prime_u64(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
  CHECK_FALSE(is_prime_u64(18446744073709551615ULL));

  CHECK_THROWS_AS(PrimeModulus(4), InputError);
  CHECK_THROWS_AS(PrimeModulus(1), InputError);
  CHECK_THROWS_AS(PrimeModulus(18446744073709551557ULL), InputError);  // >= 2^63
  CHECK(PrimeModulus(2).value() == 2);

  CHECK(primes_up_to(30) == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
  CHECK(primes_up_to(1).empty());
}

TEST_CASE("c_k modulo small primes") {
  CHECK(ck_mod(3, PrimeModulus(7)) == 6);
  CHECK(ck_mod(3, PrimeModulus(5)) == 0);
  for (std::uint64_t p : {2, 3, 101, 2147483647}) CHECK(ck_mod(1, PrimeModulus(p)) == 1);
  CHECK(ck_mod(2, PrimeModulus(2)) == 0);
}

TEST_CASE("residues agree with exact values on random primes") {
  std::mt19937_64 rng(31);
  std::vector<std::uint64_t> primes;
  while (primes.size() < 5) {
    std::uint64_t candidate = std::uniform_int_distribution<std::uint64_t>(1u << 30, (1u << 31) - 1)(rng);
    if (is_prime_u64(candidate)) primes.push_back(candidate);
  }
  for (int k = 1; k <= 6; ++k) {
    BigInt exact = ck(k);
    for (auto p : primes) CHECK(ck_mod(k, PrimeModulus(p)) == exact_mod(exact, p));
  }
}

TEST_CASE("modular and exact runs visit the same memo keys") {
  for (int k = 2; k <= 6; ++k) {
    PolySpec spec = ck_spec(k);
    AlphaEngine<IntegerRing> exact(spec.u);
    AlphaEngine<ModRing> mod(spec.u, ModRing(PrimeModulus(1000003)));
    exact.alpha(spec, staircase(spec.n));
    mod.alpha(spec, staircase(spec.n));
    CHECK(exact.memo_keys() == mod.memo_keys());
  }
}

TEST_CASE("divisor scans") {
  CHECK(divisor_scan(4, 100) == std::vector<std::uint64_t>{2, 3, 7, 97});
  CHECK(divisor_scan(3, 10) == std::vector<std::uint64_t>{2, 3, 5});
  CHECK(divisor_scan(1, 100).empty());

  auto rows = residue_table(3, 7);
  REQUIRE(rows.size() == 4);
  CHECK(rows[3].prime == 7);
  CHECK(rows[3].residue == 6);
  CHECK_FALSE(rows[3].divides);
}

TEST_CASE("published factorizations") {
  auto claims = known_factorizations();
  REQUIRE(claims.size() == 4);
  for (const auto& claim : claims) {
    CHECK_MESSAGE(verify_factorization(claim), claim.to_string());
    // Any single exponent bump breaks the product.
    for (std::size_t i = 0; i < claim.factors.size(); ++i) {
      auto up = claim;
      ++up.factors[i].exponent;
      CHECK_FALSE(verify_factorization(up));
      if (claim.factors[i].exponent > 1) {
        auto down = claim;
        --down.factors[i].exponent;
        CHECK_FALSE(verify_factorization(down));
      }
    }
  }
  CHECK(claims[1].to_string() == "2^5*3^3*7*97");
}

TEST_CASE("factorization claims") {
  CHECK_FALSE(verify_factorization(parse_factorization(3, "2*3^2*7")));
  CHECK(verify_factorization(parse_factorization(3, "2 * 3^2 * 5")));
  CHECK_THROWS_AS(verify_factorization(parse_factorization(3, "6*15")), InputError);
  CHECK_THROWS_AS(parse_factorization(3, "2**3"), InputError);
  CHECK_THROWS_AS(parse_factorization(3, "2^0"), InputError);
  CHECK_THROWS_AS(parse_factorization(3, "2^x"), InputError);

  CHECK(certify_prime(BigInt("1002820739")));
  CHECK_FALSE(certify_prime(BigInt("1002820737")));
  CHECK(certify_prime(BigInt("170141183460469231731687303715884105727")));
  CHECK_FALSE(certify_prime(BigInt(1)));
}

TEST_CASE("partial factorization of a large c_k") {
  auto partial = partial_factorization(7, 1000);
  FactorizationClaim small{7, partial.small_factors};
  CHECK(small.product() * partial.cofactor == partial.value);
  CHECK(partial.value == ck(7));
  for (const auto& f : partial.small_factors) CHECK(f.prime < 1000);
  for (std::uint64_t p : primes_up_to(1000)) {
    CHECK_FALSE(mpz_divisible_ui_p(partial.cofactor.get_mpz_t(), p));
  }
}
