#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lgh/groups.hpp"
#include "lgh/rational.hpp"

namespace lgh {

inline constexpr int kReportSchemaVersion = 1;

struct GroupDescriptor {
  GroupFamily family = GroupFamily::GLC;
  GroupParams params;
  Rational lambda{0};
  Rational mu{0};

  static GroupDescriptor of(const GroupSpec& spec);
  std::string label() const;
};

struct CheckResult {
  std::string name;
  double max_abs = 0.0;
  double max_rel = 0.0;
};

/// Outcome of one verification run. pass <=> max_rel <= tol and accepted >= 1.
struct VerificationReport {
  GroupDescriptor group;
  std::string test;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::size_t accepted = 0;
  std::size_t rejected = 0;
  double max_abs = 0.0;
  double max_rel = 0.0;
  double tol = 0.0;
  bool pass = false;
  std::vector<CheckResult> checks;
  /// Worst scale-free residual per accepted sample. Kept in memory only.
  std::vector<double> sample_max_rel;

  const CheckResult* check(std::string_view name) const;
  /// Fraction of accepted samples whose worst residual exceeds threshold.
  double fraction_above(double threshold) const;
};

/// Accumulates residuals with max-reductions, so the result does not depend
/// on the order in which samples are recorded.
class ReportBuilder {
 public:
  ReportBuilder(GroupDescriptor group, std::string test, std::uint64_t seed, double tol);

  /// Registers a check so it is reported even when it never records.
  void declare(const std::string& check);
  void record(const std::string& check, std::size_t sample, double abs_residual,
              double rel_residual);
  void record_pair(const std::string& check, std::size_t sample, std::complex<double> lhs,
                   std::complex<double> rhs);
  void set_counts(std::size_t requested, std::size_t accepted, std::size_t rejected);
  VerificationReport build() const;

 private:
  VerificationReport report_;
};

enum class Format { Json, Markdown, Csv };

/// Throws UsageError for anything other than json, markdown, csv.
Format parse_format(std::string_view name);

/// Deterministic serialization. Reports are grouped by (family catalog order,
/// params); tests inside a group keep their input order.
/// Throws UsageError on an empty set.
std::string emit(std::span<const VerificationReport> reports, Format format);

/// Inverse of emit(..., Format::Json).
std::vector<VerificationReport> parse_report_json(std::string_view text);

/// Shortest round-trip decimal form of a double.
std::string format_double(double v);

}  // namespace lgh
