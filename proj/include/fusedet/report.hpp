#ifndef FUSEDET_REPORT_HPP
#define FUSEDET_REPORT_HPP

#include <iosfwd>
#include <span>
#include <string>

#include "fusedet/sensor_model.hpp"
#include "fusedet/solvers.hpp"

namespace fusedet {

// Profile files are line oriented: a `pd,pf` header, then one sensor per
// line as two comma-separated probabilities, `#` starting a comment.
// Sensors are listed MSB first (see SensorProfile).

SensorProfile parse_profile(std::istream& in);
SensorProfile load_profile(const std::string& path);

/// Writes a profile with full double precision; re-parsing the output
/// reproduces the profile exactly.
void write_profile(std::ostream& out, const SensorProfile& profile);

/// Rule as a hex bitmask, least significant bit = decision vector 0.
std::string rule_hex(const BinaryVector& bits);

/// Selected indices, ascending, comma separated ("2,3").
std::string selected_list(const BinaryVector& bits);

/// Key-value text block for one solve. Reals print with 6 significant
/// digits; general rules render as hex mask plus index list, count rules
/// as the list of selected vote counts.
std::string format_report(const SolveReport& report);

/// Sweep rows as CSV with header `alpha,pf_star,pm_star,flops`, full
/// double precision, newline-terminated rows.
std::string format_roc_csv(std::span<const RocPoint> points);

}  // namespace fusedet

#endif  // FUSEDET_REPORT_HPP
