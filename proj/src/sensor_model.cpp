#include "fusedet/sensor_model.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "fusedet/kahan.hpp"

namespace fusedet {

namespace {

bool is_probability(double p) { return p >= 0.0 && p <= 1.0; }

// g(pd, m) and g(pf, m) in one bit scan.
void joint_pair(std::span<const double> pd, std::span<const double> pf,
                std::uint32_t m, double& gd, double& gf) {
  gd = 1.0;
  gf = 1.0;
  for (std::size_t i = 0; i < pd.size(); ++i) {
    if (m >> i & 1u) {
      gd *= pd[i];
      gf *= pf[i];
    } else {
      gd *= 1.0 - pd[i];
      gf *= 1.0 - pf[i];
    }
  }
}

}  // namespace

void ProblemSpec::validate() const {
  if (!(cd >= 0.0) || !(cf >= 0.0)) {
    throw std::invalid_argument("objective coefficients must be nonnegative");
  }
  if (!is_probability(alpha)) {
    throw std::invalid_argument("alpha must lie in [0,1]");
  }
}

void BayesParams::validate() const {
  if (!is_probability(p0) || !is_probability(p1) ||
      std::abs(p0 + p1 - 1.0) > 1e-12) {
    throw std::invalid_argument("priors must be probabilities summing to 1");
  }
  if (!(c00 >= 0.0) || !(c01 >= 0.0) || !(c10 >= 0.0) || !(c11 >= 0.0)) {
    throw std::invalid_argument("costs must be nonnegative");
  }
  if (c01 < c11 || c10 < c00) {
    throw std::invalid_argument(
        "wrong decisions must cost at least as much as right ones "
        "(c01 >= c11, c10 >= c00)");
  }
}

SensorProfile::SensorProfile(std::vector<double> pd_listed,
                             std::vector<double> pf_listed) {
  if (pd_listed.size() != pf_listed.size()) {
    throw std::invalid_argument("pd and pf lists differ in length");
  }
  if (pd_listed.empty()) {
    throw std::invalid_argument("profile needs at least one sensor");
  }
  if (pd_listed.size() > static_cast<std::size_t>(kMaxSensors)) {
    throw std::length_error("profile exceeds the sensor cap of " +
                            std::to_string(kMaxSensors));
  }
  for (std::size_t i = 0; i < pd_listed.size(); ++i) {
    if (!is_probability(pd_listed[i]) || !is_probability(pf_listed[i])) {
      throw std::invalid_argument("sensor probabilities must lie in [0,1]");
    }
  }
  n_ = static_cast<int>(pd_listed.size());
  // Listing order is MSB first; flip so index i pairs with bit i.
  pd_.assign(pd_listed.rbegin(), pd_listed.rend());
  pf_.assign(pf_listed.rbegin(), pf_listed.rend());
}

bool SensorProfile::homogeneous() const {
  for (int i = 1; i < n_; ++i) {
    if (pd_[i] != pd_[0] || pf_[i] != pf_[0]) return false;
  }
  return true;
}

std::vector<double> SensorProfile::pd_listed() const {
  return {pd_.rbegin(), pd_.rend()};
}

std::vector<double> SensorProfile::pf_listed() const {
  return {pf_.rbegin(), pf_.rend()};
}

int vote_count(std::uint32_t m, int n) {
  if (n < 1 || n > kMaxSensors) {
    throw std::invalid_argument("sensor count out of range");
  }
  if (m >= (std::uint32_t{1} << n)) {
    throw std::invalid_argument("decision index out of range");
  }
  return std::popcount(m);
}

double joint_prob(std::span<const double> p, std::uint32_t m) {
  if (p.empty() || p.size() > static_cast<std::size_t>(kMaxSensors)) {
    throw std::invalid_argument("marginal list length out of range");
  }
  if (m >= (std::uint32_t{1} << p.size())) {
    throw std::invalid_argument("decision index out of range");
  }
  double g = 1.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    g *= (m >> i & 1u) ? p[i] : 1.0 - p[i];
  }
  return g;
}

double item_value(const SensorProfile& profile, const ProblemSpec& spec,
                  std::uint32_t m) {
  double gd = 0.0;
  double gf = 0.0;
  if (m >= profile.pattern_count()) {
    throw std::invalid_argument("decision index out of range");
  }
  joint_pair(profile.pd(), profile.pf(), m, gd, gf);
  return spec.cd * gd - spec.cf * gf;
}

double item_weight(const SensorProfile& profile, std::uint32_t m) {
  return joint_prob(profile.pf(), m);
}

RulePerformance rule_performance(const SensorProfile& profile,
                                 const FusionRule& rule) {
  const std::uint32_t m_count = profile.pattern_count();
  if (rule.x.size() != m_count) {
    throw std::invalid_argument("rule length must equal 2^N");
  }
  KahanSum pd_sum;
  KahanSum pf_sum;
  for (std::uint32_t m = 0; m < m_count; ++m) {
    if (!rule.x[m]) continue;
    double gd = 0.0;
    double gf = 0.0;
    joint_pair(profile.pd(), profile.pf(), m, gd, gf);
    pd_sum.add(gd);
    pf_sum.add(gf);
  }
  return {pd_sum.value(), pf_sum.value()};
}

CountAggregates count_aggregates(const SensorProfile& profile,
                                 const ProblemSpec& spec) {
  const int n = profile.size();
  const std::uint32_t m_count = profile.pattern_count();
  std::vector<KahanSum> rk(n + 1);
  std::vector<KahanSum> pfk(n + 1);
  for (std::uint32_t m = 0; m < m_count; ++m) {
    const int k = std::popcount(m);
    double gd = 0.0;
    double gf = 0.0;
    joint_pair(profile.pd(), profile.pf(), m, gd, gf);
    rk[k].add(spec.cd * gd - spec.cf * gf);
    pfk[k].add(gf);
  }
  CountAggregates agg;
  agg.rk.resize(n + 1);
  agg.pfk.resize(n + 1);
  for (int k = 0; k <= n; ++k) {
    agg.rk[k] = rk[k].value();
    agg.pfk[k] = pfk[k].value();
  }
  return agg;
}

FusionRule expand_count_rule(const CountFusionRule& rule, int n) {
  if (n < 1 || n > kMaxSensors) {
    throw std::invalid_argument("sensor count out of range");
  }
  if (rule.y.size() != static_cast<std::size_t>(n) + 1) {
    throw std::invalid_argument("count rule length must equal n+1");
  }
  const std::uint32_t m_count = std::uint32_t{1} << n;
  FusionRule expanded;
  expanded.x.resize(m_count);
  for (std::uint32_t m = 0; m < m_count; ++m) {
    expanded.x[m] = rule.y[static_cast<std::size_t>(std::popcount(m))];
  }
  return expanded;
}

ItemTable item_table(const SensorProfile& profile, const ProblemSpec& spec,
                     Exec exec) {
  spec.validate();
  const std::uint32_t m_count = profile.pattern_count();
  ItemTable table;
  table.values.resize(m_count);
  table.weights.resize(m_count);
  const std::span<const double> pd = profile.pd();
  const std::span<const double> pf = profile.pf();
  const double cd = spec.cd;
  const double cf = spec.cf;
  const bool parallel = exec == Exec::parallel && m_count >= 4096;
#pragma omp parallel for schedule(static) if (parallel)
  for (std::int64_t m = 0; m < static_cast<std::int64_t>(m_count); ++m) {
    double gd = 0.0;
    double gf = 0.0;
    joint_pair(pd, pf, static_cast<std::uint32_t>(m), gd, gf);
    table.values[m] = cd * gd - cf * gf;
    table.weights[m] = gf;
  }
  return table;
}

}  // namespace fusedet
