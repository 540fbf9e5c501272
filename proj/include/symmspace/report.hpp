#ifndef SYMMSPACE_REPORT_HPP
#define SYMMSPACE_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace symmspace {

/// One named numeric comparison.  The stored tolerance is interpreted through
/// passed == (|measured - expected| <= tolerance * max(1, |expected|)),
/// so a check built from a relative tolerance stores rel*|e|/max(1,|e|) and a
/// one-sided slack check stores the slack itself against expected 0.
struct Check {
  std::string name;
  double measured = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct VerificationReport {
  std::string space;
  std::uint64_t seed = 0;
  std::string metric = "killing";
  std::vector<Check> checks;
  long wall_time_ms = 0;

  bool all_passed() const;

  /// Pass iff |measured - expected| <= rel * |expected|.
  Check& add_relative(const std::string& name, double measured, double expected, double rel);
  /// Pass iff |violation| <= slack; rendered against expected 0.  Callers feed
  /// max(0, signed violation) of one-sided bounds.
  Check& add_deficit(const std::string& name, double violation, double slack);
  /// Pass iff measured equals expected exactly (integer-valued facts).
  Check& add_exact(const std::string& name, double measured, double expected);
};

/// Aligned fixed-width table with a PASS/FAIL column, one row per check.
std::string render_table(const VerificationReport& report);

/// Stable field order {space, seed, metric, checks, wall_time_ms}; reals with
/// 12 significant digits; byte-identical across runs except wall_time_ms
/// (which include_wall_time can drop entirely).
std::string render_json(const VerificationReport& report, bool include_wall_time = true);

/// 12-significant-digit rendering used by every JSON emitter.
std::string format_real(double value);

/// Minimal string escaping for JSON output.
std::string json_escape(const std::string& text);

}  // namespace symmspace

#endif
