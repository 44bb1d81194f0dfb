#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "powmap/arith.hpp"
#include "powmap/caps.hpp"
#include "powmap/numeric.hpp"

namespace powmap::dynamics {

struct PrimePowerModulus {
  Integer p;
  unsigned m = 1;
};

/// The system under study: the map x -> x^k on (Z/MZ)*.
struct PowerMapParams {
  Integer k;
  arith::Factorization k_factors;
  Integer modulus;
  std::optional<PrimePowerModulus> prime_power;

  static PowerMapParams for_modulus(const Integer& k, const Integer& modulus,
                                    const Caps& caps = {});
  static PowerMapParams for_prime_power(const Integer& k, const Integer& p, unsigned m,
                                        const Caps& caps = {});
};

struct OrbitRecord {
  Integer element;
  std::uint64_t tail = 0;         // steps before the orbit enters its cycle
  std::uint64_t cycle_length = 1;
  std::uint64_t preperiod() const { return tail + cycle_length; }
};

/// Aggregate statistics of the functional graph for one (k, M).
struct GraphStats {
  std::map<Integer, Integer> periodic_by_period;  // r -> P_r
  std::map<Integer, Integer> cycles_by_length;    // r -> C_r
  Integer periodic_total;                         // P
  Integer cycle_total;                            // C
  Rational avg_cycle_length;
  Rational avg_tail;
  Integer unit_count;                             // phi(M)

  bool operator==(const GraphStats& other) const;
};

/// Ascending units of Z/MZ. Throws ResourceLimit when phi(M) exceeds
/// caps.oracle_cap (checked before any enumeration).
std::vector<std::uint64_t> unit_group(const Integer& modulus, const Caps& caps = {});

/// Walks one orbit by iteration with a first-visit index map. x must be a
/// unit mod M.
OrbitRecord orbit(const Integer& x, const PowerMapParams& params);

/// Brute-force multiplicative order of x modulo M (repeated multiplication;
/// kept deliberately formula-free as a test oracle).
Integer element_order(const Integer& x, const Integer& modulus);

/// Per-element tails and cycle lengths for the whole unit group, computed by
/// memoized traversal: a walk that reaches an element with a known record
/// splices (tail, cycle) instead of re-walking, so the pass is linear in
/// phi(M).
struct OrbitTable {
  std::uint64_t modulus = 0;
  std::vector<std::uint64_t> units;   // ascending
  std::vector<std::uint32_t> tail;    // by unit index
  std::vector<std::uint32_t> cycle;   // by unit index
  GraphStats stats;

  std::size_t index_of(std::uint64_t unit) const;

 private:
  friend OrbitTable orbit_table(const PowerMapParams&, const Caps&);
  enum class IndexMode { kPrime, kPrimePower, kGeneral };
  IndexMode index_mode_ = IndexMode::kGeneral;
  std::uint64_t index_prime_ = 0;
};

OrbitTable orbit_table(const PowerMapParams& params, const Caps& caps = {});

/// The formula-free oracle: graph statistics measured from orbit records only.
GraphStats graph_stats_oracle(const PowerMapParams& params, const Caps& caps = {});

}  // namespace powmap::dynamics
