#pragma once

#include <cstdint>

namespace powmap {

/// Size caps that make expensive requests fail loudly instead of hanging.
/// Defaults are sized for desk-scale runs; every field is overridable from
/// the CLI (flags or POWMAP_* environment variables).
struct Caps {
  /// Largest bit length accepted by factorize(). tau(k^r - 1) needs a full
  /// factorization, which stops being routine well before 2^128.
  unsigned factor_bit_cap = 128;
  /// Largest N accepted by the prime sieve.
  std::uint64_t sieve_cap = 100'000'000;
  /// Largest phi(M) the brute-force oracle will enumerate.
  std::uint64_t oracle_cap = 10'000'000;
  /// Most S-units s_limit() may enumerate while growing its truncation bound.
  std::uint64_t s_unit_cap = 1'000'000;
};

}  // namespace powmap
