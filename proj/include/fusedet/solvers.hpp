#ifndef FUSEDET_SOLVERS_HPP
#define FUSEDET_SOLVERS_HPP

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "fusedet/exec.hpp"
#include "fusedet/sensor_model.hpp"

namespace fusedet {

/// Default fixed-point scales for the budget axis.
inline constexpr std::uint64_t kDefaultScale = 100000;
inline constexpr std::uint64_t kDefaultCountScale = 1000;

enum class Method {
  gdfp,
  count_gdfp,
  np,
  bayes,
  hm_bayes,
  k_out_of_n,
};

const char* method_name(Method method);

/// Result of one solve: the chosen rule (over decision vectors or vote
/// counts), its analytic operating point, and solver bookkeeping.
struct SolveReport {
  Method method = Method::gdfp;
  std::variant<FusionRule, CountFusionRule> rule;
  double objective = 0.0;
  double pd = 0.0;
  double pf = 0.0;
  std::uint64_t flops = 0;
  /// Selected integerized weight within the integer budget (always true
  /// for DP-produced rules).
  bool feasible_scaled = true;
  /// Selected exact weight within alpha; can be false by quantization
  /// slack, which is reported rather than hidden.
  bool feasible_true = true;
};

/// General solve: maximize cd*P_D - cf*P_F subject to P_F <= alpha over
/// deterministic rules, as a 0-1 knapsack with one item per decision
/// vector (value cd*g(pd,m) - cf*g(pf,m), weight g(pf,m), budget alpha).
SolveReport solve_gdfp(const SensorProfile& profile, const ProblemSpec& spec,
                       std::uint64_t scale = kDefaultScale,
                       Exec exec = Exec::parallel);

/// Discrete Neyman-Pearson: maximize P_D subject to P_F <= alpha.
/// Identical to solve_gdfp with cd=1, cf=0.
SolveReport solve_np(const SensorProfile& profile, double alpha,
                     std::uint64_t scale = kDefaultScale,
                     Exec exec = Exec::parallel);

/// Bayesian (Chair-Varshney) solve. The P_F constraint is vacuous, so no
/// table is needed: select exactly the indices with positive value under
/// the derived coefficients (ties excluded, minimizing P_F at no cost).
/// Costs M flops, one sign test per index.
SolveReport solve_bayes(const SensorProfile& profile,
                        const BayesParams& params, Exec exec = Exec::parallel);

/// Count-rule solve: the same knapsack over N+1 vote-count classes, with
/// values and weights aggregated per count.
SolveReport solve_count_gdfp(const SensorProfile& profile,
                             const ProblemSpec& spec,
                             std::uint64_t scale = kDefaultCountScale,
                             Exec exec = Exec::parallel);

/// Bayesian solve for homogeneous sensors. The per-index value depends on
/// m only through its vote count k, so the optimum is a count rule:
/// y[k] = 1 iff binom(n,k) * (cd*pd^k*(1-pd)^(n-k) - cf*pf^k*(1-pf)^(n-k))
/// is positive, with cd, cf derived from the params. Costs n+1 flops.
SolveReport solve_hm_bayes(double pd, double pf, int n,
                           const BayesParams& params);

/// Threshold of the optimal K-out-of-N voting rule for homogeneous sensors
/// with equal priors: ceil(n / (1 + beta)) with
/// beta = ln(pf/pd) / ln((1-pd)/(1-pf)). Requires 0 < pf < pd < 1.
int k_star(double pd, double pf, int n);

/// The K-out-of-N voting rule as a count rule: fire iff at least k of n
/// sensors report a detection.
CountFusionRule k_out_of_n_rule(int k, int n);

/// K-out-of-N fast path for homogeneous sensors with pd > pf and equal
/// priors: the count rule thresholded at k_star. Equals solve_hm_bayes for
/// the same operating point.
SolveReport solve_k_out_of_n(double pd, double pf, int n);

struct RocPoint {
  double alpha = 0.0;
  double pf_star = 0.0;
  double pm_star = 0.0;
  std::uint64_t flops = 0;
};

/// Neyman-Pearson sweep over false-alarm caps. Each point records the
/// achieved (P_F*, P_M* = 1 - P_D*) pair, not the requested alpha alone.
/// The parallel path solves distinct alphas concurrently; output order
/// follows the input order either way.
std::vector<RocPoint> roc_sweep(const SensorProfile& profile,
                                std::span<const double> alphas,
                                std::uint64_t scale, bool use_count_rule,
                                Exec exec = Exec::parallel);

}  // namespace fusedet

#endif  // FUSEDET_SOLVERS_HPP
