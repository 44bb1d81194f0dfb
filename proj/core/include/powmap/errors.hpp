#pragma once

#include <stdexcept>
#include <string>

namespace powmap {

/// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An input exceeds a configured size cap (factorization bit cap, ...).
/// The message names the cap and the offending size so callers can either
/// reduce the request or raise the cap.
struct CapExceeded : Error {
  using Error::Error;
};

/// A computation would exceed a configured resource cap (sieve bound,
/// oracle unit-count cap, S-unit enumeration cap).
struct ResourceLimit : Error {
  using Error::Error;
};

/// gcd(k, d) > 1 where a multiplicative order was requested.
struct NotCoprime : Error {
  using Error::Error;
};

/// The closed forms require an odd prime; p = 2 (or a non-prime) was given.
struct NotOddPrime : Error {
  using Error::Error;
};

/// psi(q) requested for q with a prime divisor outside k's support.
struct NotSUnit : Error {
  using Error::Error;
};

}  // namespace powmap
