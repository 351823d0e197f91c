#pragma once

// c_k modulo primes: the alpha recurrence run over Z/pZ, divisor scans,
// and verification of claimed prime factorizations.

#include <cstdint>
#include <string>
#include <vector>

#include "grasshopper/bigint.hpp"
#include "grasshopper/coeffs.hpp"
#include "grasshopper/limits.hpp"

namespace grasshopper {

/// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime_u64(std::uint64_t n);

/// A prime below 2^63.
class PrimeModulus {
 public:
  /// Throws InputError if p is not prime or p >= 2^63.
  explicit PrimeModulus(std::uint64_t p);
  std::uint64_t value() const { return p_; }

 private:
  std::uint64_t p_;
};

/// Residues mod p as the coefficient ring of AlphaEngine.
struct ModRing {
  using Value = std::uint64_t;
  std::uint64_t p;

  explicit ModRing(const PrimeModulus& modulus) : p(modulus.value()) {}
  Value zero() const { return 0; }
  Value one() const { return 1 % p; }
  void add(Value& acc, const Value& x) const {
    acc += x;  // both < p < 2^63
    if (acc >= p) acc -= p;
  }
};

/// c_k mod p through the same recurrence (and memo keys) as ck().
std::uint64_t ck_mod(int k, const PrimeModulus& p, const Limits& limits = {});

/// Primes up to `bound` (sieve); bound is capped at 10^8.
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

/// Primes p <= prime_bound with p | c_k, from the exact value. A sample of
/// residues is recomputed with ck_mod; disagreement raises ConsistencyError.
std::vector<std::uint64_t> divisor_scan(int k, std::uint64_t prime_bound,
                                        const Limits& limits = {});

struct ScanRow {
  std::uint64_t prime;
  std::uint64_t residue;  // c_k mod prime
  bool divides;
};

/// One row per prime <= prime_bound.
std::vector<ScanRow> residue_table(int k, std::uint64_t prime_bound, const Limits& limits = {});

struct PrimePower {
  BigInt prime;
  unsigned exponent = 1;
};

struct FactorizationClaim {
  int k = 0;
  std::vector<PrimePower> factors;

  BigInt product() const;
  std::string to_string() const;
};

/// Primality certificate for claimed factors: trial division up to the
/// square root for p <= 10^14, otherwise GMP's probabilistic test with 40
/// rounds (error below 2^-80).
bool certify_prime(const BigInt& p);

/// True iff the claimed product equals the exact c_k. Throws InputError if
/// a claimed prime is not prime.
bool verify_factorization(const FactorizationClaim& claim, const Limits& limits = {});

/// Published factorizations of c_3, c_4, c_5 and c_6.
std::vector<FactorizationClaim> known_factorizations();

/// Parses "2^5*3^3*7*97"; whitespace is ignored.
FactorizationClaim parse_factorization(int k, const std::string& text);

struct PartialFactorization {
  int k = 0;
  BigInt value;
  std::vector<PrimePower> small_factors;
  BigInt cofactor;
  bool cofactor_probable_prime = false;
};

/// Strips primes below `trial_bound` from c_k; the cofactor is left
/// unfactored.
PartialFactorization partial_factorization(int k, std::uint64_t trial_bound,
                                           const Limits& limits = {});

}  // namespace grasshopper
