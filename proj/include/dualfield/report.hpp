#pragma once

// Run reports: informational key=value records plus check records, each check
// carrying the identity it tests, the measured value, its tolerance and outcome.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace dualfield::report {

enum class Format { Text, Csv };

struct CheckRecord {
  std::string name;
  std::string identity;
  double value;
  double tolerance;
  bool pass;
};

/// Passes when value <= tolerance.
CheckRecord at_most(std::string name, std::string identity, double value, double tolerance);
/// Passes when value >= bound.
CheckRecord at_least(std::string name, std::string identity, double value, double bound);
/// Passes when lo <= value <= hi; tolerance records the half-width.
CheckRecord within(std::string name, std::string identity, double value, double lo, double hi);
/// Passes when flag is true; value is 1 or 0 and tolerance 0.
CheckRecord holds(std::string name, std::string identity, bool flag);

/// 64-bit FNV-1a, printed as 16 hex digits.
std::string digest(const std::string& text);

class RunReport {
 public:
  RunReport(std::string command, std::string inputs);

  void value(const std::string& key, const std::string& text);
  void value(const std::string& key, double v);
  void check(CheckRecord rec);

  bool all_pass() const;
  const std::vector<CheckRecord>& checks() const { return checks_; }
  void set_wall_time(double seconds) { wall_time_ = seconds; }

  void write(std::ostream& os, Format fmt) const;

 private:
  std::string command_;
  std::string inputs_digest_;
  std::vector<std::pair<std::string, std::string>> values_;
  std::vector<CheckRecord> checks_;
  std::optional<double> wall_time_;
};

/// %.17g for values, %.3g for tolerances.
std::string format_number(double v, int digits = 17);

}  // namespace dualfield::report
