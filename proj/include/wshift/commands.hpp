#pragma once

#include "wshift/config.hpp"
#include "wshift/report.hpp"

#include <iosfwd>
#include <string_view>

namespace wshift {

enum class ThresholdMode { KHyp, Subnormal, Pqh };

ThresholdMode parse_threshold_mode(std::string_view name);

/// gamma_0 .. gamma_{count-1} of every piece of the family.
Report cmd_moments(const FamilyConfig& config, std::size_t count);

/// Windowed k-hyponormality of the power-th power (all pieces). ok is false
/// when some Hankel window fails.
Report cmd_check(const FamilyConfig& config, std::size_t k, std::size_t window, std::size_t power);

/// Exact threshold on the squared back-step weight. Throws
/// UnsupportedFamilyError when the base is not subnormal-presentable, or for
/// pqh mode on anything but the Bergman tail.
Report cmd_threshold(const FamilyConfig& config, std::size_t k, std::size_t power, ThresholdMode mode);

/// Squared weights and moments of each power piece.
Report cmd_decompose(const FamilyConfig& config, std::size_t power, std::size_t count);

/// Back-step thresholds of the Bergman-tail shift for powers 1..8, computed
/// from moments and root isolation and compared with the closed forms.
/// ok is false on any mismatch.
Report cmd_paper_tables();

/// Entry point of the wshift tool. Exit codes: 0 success, 1 negative verdict
/// or mismatch, 2 usage, parse or family error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace wshift
