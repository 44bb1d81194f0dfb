#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "powmap/caps.hpp"
#include "powmap/errors.hpp"
#include "powmap/numeric.hpp"

namespace powmap::arith {

struct PrimePower {
  Integer prime;
  unsigned exponent = 0;
  bool operator==(const PrimePower&) const = default;
};

/// Prime factorization with primes strictly ascending and exponents >= 1.
/// The integer 1 has an empty factor list.
struct Factorization {
  std::vector<PrimePower> factors;

  /// Product of prime^exponent; reconstructs the factored integer.
  Integer value() const;
  bool operator==(const Factorization&) const = default;
};

/// Deterministic primality test (12-base Miller-Rabin below 2^64, trial
/// division + BPSW-style testing above).
bool is_prime(const Integer& n);

/// Factors n >= 1. Throws CapExceeded when bit_length(n) exceeds
/// caps.factor_bit_cap; the caller must reduce the request or raise the cap.
Factorization factorize(const Integer& n, const Caps& caps = {});

Integer euler_phi(const Factorization& f);

/// Number of positive divisors.
Integer tau(const Factorization& f);

/// 0 if any exponent >= 2, else (-1)^(number of primes).
int moebius(const Factorization& f);

/// All divisors, ascending.
std::vector<Integer> divisors(const Factorization& f);

/// Streams every divisor once (odometer order, not sorted) together with its
/// exponent vector aligned with f.factors.
void for_each_divisor(const Factorization& f,
                      const std::function<void(const Integer&, const std::vector<unsigned>&)>& fn);

/// Least e >= 1 with k^e = 1 (mod d); ord_1 k = 1 by convention.
/// Computed by factoring phi of each prime-power part of d and descending
/// exponents. Throws NotCoprime when gcd(k, d) > 1.
Integer multiplicative_order(const Integer& k, const Integer& d, const Caps& caps = {});

/// Same, with d already factored.
Integer multiplicative_order(const Integer& k, const Factorization& d_factors,
                             const Caps& caps = {});

/// Largest e with p^e | n (n >= 1, p prime).
unsigned p_adic_valuation(const Integer& n, const Integer& p);

struct CoprimeSplit {
  /// Largest divisor of n coprime to every listed prime.
  Integer coprime;
  /// Valuations of n at each listed prime, aligned with the ascending list.
  std::vector<unsigned> exponents;
};

/// s_primes must be distinct primes in ascending order.
CoprimeSplit coprime_part(const Integer& n, const std::vector<Integer>& s_primes);
CoprimeSplit coprime_part(const Factorization& n, const std::vector<Integer>& s_primes);

/// Segmented sieve of Eratosthenes. Throws ResourceLimit beyond caps.sieve_cap.
std::vector<std::uint64_t> primes_up_to(std::uint64_t n, const Caps& caps = {});
void for_each_prime_up_to(std::uint64_t n, const Caps& caps,
                          const std::function<void(std::uint64_t)>& fn);

/// Every integer <= bound whose prime divisors all lie in s_primes
/// (including 1), ascending.
std::vector<Integer> s_units_ascending(const std::vector<Integer>& s_primes,
                                       const Integer& bound);

/// Unbounded ascending S-unit enumeration (1, then each S-unit exactly once,
/// smallest first). Backed by a min-heap frontier that expands each popped
/// value by primes at or after its own largest prime, so no dedup set is
/// needed.
class SUnitStream {
 public:
  explicit SUnitStream(std::vector<Integer> s_primes);
  ~SUnitStream();
  SUnitStream(SUnitStream&&) noexcept;
  SUnitStream& operator=(SUnitStream&&) noexcept;

  struct Item {
    Integer value;
    std::vector<unsigned> exponents;  // aligned with the ascending prime list
  };
  Item next();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace powmap::arith
