#ifndef FUSEDET_KNAPSACK_HPP
#define FUSEDET_KNAPSACK_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "fusedet/exec.hpp"
#include "fusedet/sensor_model.hpp"

namespace fusedet {

/// 0-1 knapsack instance over real-valued items. Values may be negative;
/// weights must be nonnegative. The budget axis is discretized with a
/// fixed-point scale C: a weight b maps to the integer floor(C*b + 1/2),
/// so feasibility inside the solver is judged on integerized weights.
struct KnapsackInstance {
  std::vector<double> values;
  std::vector<double> weights;
  double w_lim = 0.0;
  std::uint64_t scale = 1;
};

struct KnapsackSolution {
  BinaryVector selection;
  /// Sum of selected values (exact in doubles, compensated).
  double objective = 0.0;
  /// Sum of selected integerized weights; never exceeds quantize(w_lim).
  std::uint64_t scaled_weight = 0;
  /// Sum of selected exact weights. Can exceed w_lim by at most 0.5/scale
  /// per selected item; callers report that, it is not an error.
  double true_weight = 0.0;
  /// 3 per inner table cell whose budget test passed (see solve_knapsack).
  std::uint64_t flops = 0;
};

/// Round-half-up fixed-point mapping: floor(scale*b + 1/2).
/// Throws std::invalid_argument for negative b or zero scale.
std::uint64_t quantize(double b, std::uint64_t scale);

/// Worst-case flop count of a table fill: 3 * quantize(w_lim) * loops,
/// where loops defaults to m_items - 1 (the table loop skips item 0, which
/// is handled by row initialization). Pass item_count_override for the
/// reduced count-rule loop, which runs N iterations for N+1 items.
std::uint64_t flop_estimate(
    std::uint64_t m_items, double w_lim, std::uint64_t scale,
    std::optional<std::uint64_t> item_count_override = std::nullopt);

/// Exact DP solve of the integerized instance.
///
/// Table semantics: cell (a, b) holds the best achievable value using items
/// 0..a within integer budget b, taking the skip branch on ties so that the
/// lower-weight alternative wins. Memory is two rolling value rows plus a
/// one-bit-per-cell take matrix for backtracking; backtracking starts from
/// the smallest budget column that achieves the optimum, which yields a
/// minimal-scaled-weight selection among equal-objective ones.
///
/// Items whose integerized weight exceeds the budget stay in the instance
/// (their rows copy through and cost no flops). Items with integerized
/// weight 0 and positive value are always selected, even at budget 0.
///
/// The parallel path splits each row's budget axis across threads on
/// 64-cell boundaries; cells depend only on the previous row, so both
/// policies produce bit-identical solutions and flop counts.
///
/// Throws std::invalid_argument on malformed instances and
/// std::length_error when the take matrix would exceed the memory cap
/// (lower the scale or the budget in that case).
KnapsackSolution solve_knapsack(const KnapsackInstance& inst,
                                Exec exec = Exec::parallel);

}  // namespace fusedet

#endif  // FUSEDET_KNAPSACK_HPP
