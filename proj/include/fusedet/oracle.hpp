#ifndef FUSEDET_ORACLE_HPP
#define FUSEDET_ORACLE_HPP

#include <cstdint>

#include "fusedet/exec.hpp"
#include "fusedet/sensor_model.hpp"

namespace fusedet {

/// Exhaustive-search ground truth for small instances.
struct OracleResult {
  /// Best rule found; entries index decision vectors (general search) or
  /// vote counts (count search).
  BinaryVector best_rule;
  double objective = 0.0;
  double pf = 0.0;
  /// Always 2^(rule length): every candidate rule is evaluated.
  std::uint64_t n_evaluated = 0;
};

/// Enumerates all 2^(2^N) fusion rules in ascending bitmask order and
/// returns the best feasible one. Feasibility is judged on exact weights
/// when quantized is false and on integerized weights (same rounding as
/// the DP) when true. Ties break toward smaller exact P_F, then toward the
/// smaller rule bitmask; the order is total, so the parallel path can
/// partition the range and reduce deterministically.
/// Throws std::length_error for N > 4.
OracleResult brute_force_gdfp(const SensorProfile& profile,
                              const ProblemSpec& spec, bool quantized,
                              std::uint64_t scale, Exec exec = Exec::parallel);

/// Same search over the 2^(N+1) count rules. Throws std::length_error for
/// N > 14.
OracleResult brute_force_count(const SensorProfile& profile,
                               const ProblemSpec& spec, bool quantized,
                               std::uint64_t scale,
                               Exec exec = Exec::parallel);

/// True iff the rule is positive unate: turning any sensor report from 0
/// to 1 never turns the fused decision from 1 to 0 (m subset of m' bitwise
/// implies x[m] <= x[m']).
bool check_positive_unate(const FusionRule& rule, int n);

}  // namespace fusedet

#endif  // FUSEDET_ORACLE_HPP
