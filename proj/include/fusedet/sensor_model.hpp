#ifndef FUSEDET_SENSOR_MODEL_HPP
#define FUSEDET_SENSOR_MODEL_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "fusedet/exec.hpp"

namespace fusedet {

/// Hard cap on the sensor count. Keeps M = 2^N at or below 2^20 so that
/// probability products of at most 20 factors stay well away from underflow
/// and full enumeration of the decision-vector index remains cheap.
inline constexpr int kMaxSensors = 20;

using BinaryVector = std::vector<std::uint8_t>;

/// Fusion rule over decision vectors: x[m] = 1 iff the fusion center
/// declares a detection when the sensors report the bit pattern m.
struct FusionRule {
  BinaryVector x;
};

/// Fusion rule over vote counts: y[k] = 1 iff the fusion center declares a
/// detection when exactly k sensors report a detection.
struct CountFusionRule {
  BinaryVector y;
};

/// Objective coefficients and false-alarm cap for one fusion problem:
/// maximize cd*P_D - cf*P_F subject to P_F <= alpha.
struct ProblemSpec {
  double cd = 1.0;
  double cf = 0.0;
  double alpha = 1.0;

  /// Throws std::invalid_argument unless cd >= 0, cf >= 0, alpha in [0,1].
  void validate() const;
};

/// Priors and decision costs for the Bayesian criterion. cij is the cost of
/// deciding hypothesis i when hypothesis j is true.
struct BayesParams {
  double p0 = 0.5;
  double p1 = 0.5;
  double c00 = 0.0;
  double c01 = 1.0;
  double c10 = 1.0;
  double c11 = 0.0;

  /// Equivalent objective coefficients (Bayesian risk rearranged into the
  /// detection/false-alarm form). Valid params make both nonnegative.
  double derived_cd() const { return p1 * (c01 - c11); }
  double derived_cf() const { return p0 * (c10 - c00); }

  /// Throws std::invalid_argument unless p0 + p1 = 1 with both in [0,1],
  /// all costs nonnegative, c01 >= c11 and c10 >= c00.
  void validate() const;
};

/// Per-sensor operating points (detection and false-alarm probabilities).
///
/// Bit convention: profile listings (constructor arguments, profile files)
/// name sensors from the most significant bit of the decision index down to
/// bit 0. Internally the vectors are stored so that pd()[i] and pf()[i]
/// belong to the sensor that drives bit i of a decision index m; reading a
/// profile file top to bottom therefore spells m's bits MSB first.
class SensorProfile {
 public:
  /// Both lists in listing order (MSB first), same length N in [1, 20],
  /// every entry in [0, 1]. Throws std::invalid_argument on bad entries or
  /// mismatched lengths, std::length_error when N exceeds kMaxSensors.
  SensorProfile(std::vector<double> pd_listed, std::vector<double> pf_listed);

  int size() const { return n_; }

  /// M = 2^N, the number of distinct decision vectors.
  std::uint32_t pattern_count() const { return std::uint32_t{1} << n_; }

  /// Detection probabilities in bit order: pd()[i] pairs with bit i of m.
  std::span<const double> pd() const { return pd_; }
  /// False-alarm probabilities in bit order.
  std::span<const double> pf() const { return pf_; }

  /// True when every sensor shares one (pd, pf) operating point.
  bool homogeneous() const;

  /// Copies in listing order (MSB first), as written to profile files.
  std::vector<double> pd_listed() const;
  std::vector<double> pf_listed() const;

 private:
  int n_;
  std::vector<double> pd_;  // index i <-> bit i of the decision index
  std::vector<double> pf_;
};

/// Number of set bits among the low n bits of m (the vote count).
/// Throws std::invalid_argument when m >= 2^n or n is out of [1, 20].
int vote_count(std::uint32_t m, int n);

/// Probability of decision vector m given per-sensor marginals p, assuming
/// conditional independence: product over bits of p[i] or 1-p[i]. p is in
/// bit order (p[i] pairs with bit i of m). Throws std::invalid_argument
/// when m >= 2^p.size().
double joint_prob(std::span<const double> p, std::uint32_t m);

/// Objective contribution of index m: cd*g(pd,m) - cf*g(pf,m).
double item_value(const SensorProfile& profile, const ProblemSpec& spec,
                  std::uint32_t m);

/// Constraint contribution of index m: its false-alarm mass g(pf,m).
double item_weight(const SensorProfile& profile, std::uint32_t m);

struct RulePerformance {
  double pd = 0.0;
  double pf = 0.0;
};

/// System-level (P_D, P_F) of a fusion rule: the rule-selected mass under
/// each hypothesis. Rule length must equal 2^N.
RulePerformance rule_performance(const SensorProfile& profile,
                                 const FusionRule& rule);

/// Objective and false-alarm mass aggregated by vote count:
/// rk[k] sums item_value over {m : cnt(m)=k}, pfk[k] sums item_weight.
struct CountAggregates {
  std::vector<double> rk;
  std::vector<double> pfk;
};

CountAggregates count_aggregates(const SensorProfile& profile,
                                 const ProblemSpec& spec);

/// Expands a count rule to the full decision-vector rule:
/// x[m] = y[cnt(m)]. y must have length n+1.
FusionRule expand_count_rule(const CountFusionRule& rule, int n);

/// All M item values and weights, the knapsack inputs. The parallel path
/// splits the index range across threads; entries are written independently
/// so both policies produce identical bits.
struct ItemTable {
  std::vector<double> values;
  std::vector<double> weights;
};

ItemTable item_table(const SensorProfile& profile, const ProblemSpec& spec,
                     Exec exec = Exec::parallel);

}  // namespace fusedet

#endif  // FUSEDET_SENSOR_MODEL_HPP
