#ifndef FUSEDET_MONTECARLO_HPP
#define FUSEDET_MONTECARLO_HPP

#include <cstdint>

#include "fusedet/sensor_model.hpp"

namespace fusedet {

struct SimConfig {
  std::uint64_t trials = 100000;
  std::uint64_t seed = 0;
};

struct SimResult {
  double pd_hat = 0.0;
  double pf_hat = 0.0;
  std::uint64_t trials = 0;
  /// Binomial standard errors sqrt(p_hat*(1-p_hat)/trials).
  double stderr_pd = 0.0;
  double stderr_pf = 0.0;
};

/// Simulates sensing cycles: per cycle each sensor fires independently
/// (probability pd[i] under the target-present block, pf[i] under the
/// target-absent block), the decision vector indexes the rule, and firing
/// frequencies are tallied.
///
/// Stream contract (fixed so results reproduce across implementations):
/// one SplitMix64 stream from the seed, consumed one draw per sensor in
/// bit order 0..N-1 within a cycle, all target-present cycles before all
/// target-absent cycles. Single-threaded by design.
SimResult simulate(const SensorProfile& profile, const FusionRule& rule,
                   const SimConfig& config);

/// Same stream, but fuses by thresholding the vote count through y
/// directly instead of expanding to a full rule. Tallies are identical to
/// simulate() on the expanded rule for the same seed.
SimResult simulate_count(const SensorProfile& profile,
                         const CountFusionRule& rule, const SimConfig& config);

}  // namespace fusedet

#endif  // FUSEDET_MONTECARLO_HPP
