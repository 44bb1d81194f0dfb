#pragma once

#include <cstdint>
#include <vector>

#include "powmap/arith.hpp"
#include "powmap/caps.hpp"
#include "powmap/dynamics.hpp"
#include "powmap/numeric.hpp"

namespace powmap::closed_form {

/// Everything the exact formulas need about one pair (k, p^m) with p an odd
/// prime: phi = p^m - p^(m-1) split as p1^r1...ps^rs * rho with rho coprime
/// to the radical of k. rho equals the number of periodic points.
class PrimePowerContext {
 public:
  /// Throws NotOddPrime unless p is an odd prime; m >= 1, k >= 2.
  PrimePowerContext(const Integer& k, const Integer& p, unsigned m, const Caps& caps = {});

  const Integer& k() const { return k_; }
  const arith::Factorization& k_factors() const { return k_factors_; }
  const Integer& p() const { return p_; }
  unsigned m() const { return m_; }
  const Integer& modulus() const { return modulus_; }          // p^m
  const Integer& phi() const { return phi_; }                  // p^m - p^(m-1)
  const Integer& rho() const { return rho_; }
  const Integer& smooth_part() const { return smooth_part_; }  // p1^r1...ps^rs
  const std::vector<unsigned>& r_exponents() const { return r_exponents_; }
  const Caps& caps() const { return caps_; }

 private:
  Integer k_;
  arith::Factorization k_factors_;
  Integer p_;
  unsigned m_;
  Integer modulus_;
  Integer phi_;
  Integer rho_;
  Integer smooth_part_;
  std::vector<unsigned> r_exponents_;
  Caps caps_;
};

/// C_r = (1/r) sum_{d|r} mu(d) gcd(phi, k^(r/d) - 1). The gcd is taken
/// against k^(r/d) mod phi, so no huge power is ever materialized; any r >= 1
/// is accepted and non-achievable periods come out as 0.
Integer cycles_with_length(const Integer& r, const PrimePowerContext& ctx);

/// P_r = sum_{d|r} mu(d) gcd(phi, k^(r/d) - 1).
Integer periodic_points_with_period(const Integer& r, const PrimePowerContext& ctx);

/// P = rho.
Integer periodic_point_count(const PrimePowerContext& ctx);

/// C = sum_{d|rho} phi(d) / ord_d k.
Integer cycle_count(const PrimePowerContext& ctx);

/// c(x) = ord_{gcd(ord x, rho)} k, with ord_1 k = 1.
Integer cycle_length_of(const Integer& x, const PrimePowerContext& ctx);

/// c = (1/rho) sum_{d|rho} phi(d) ord_d k.
Rational avg_cycle_length(const PrimePowerContext& ctx);

/// t(x) = max_i ceil(v_{p_i}(ord x) / n_i) over the primes p_i^{n_i} of k.
std::uint64_t tail_of(const Integer& x, const PrimePowerContext& ctx);

/// Average of max_i ceil(v_{p_i}(d)/n_i) under the weights phi(d), over the
/// divisors d of prod p_i^{exponents[i]}. Shared by avg_tail and psi.
Rational smooth_tail_average(const std::vector<unsigned>& exponents,
                             const arith::Factorization& k_factors);

/// t = (1/w) sum_{d|w} phi(d) max_i ceil(v_{p_i}(d)/n_i), w = smooth part of phi.
Rational avg_tail(const PrimePowerContext& ctx);

/// All counts and averages assembled into GraphStats. Period keys are
/// enumerated as {ord_d k : d | rho}, which is complete, instead of scanning
/// r up to a guessed bound.
dynamics::GraphStats graph_stats_closed(const PrimePowerContext& ctx);

}  // namespace powmap::closed_form
