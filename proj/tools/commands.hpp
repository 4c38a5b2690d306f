#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lgh/groups.hpp"
#include "lgh/report.hpp"

namespace lgh::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2, kNumerical = 3 };

struct RunConfig {
  std::string command;
  std::optional<GroupFamily> group;
  GroupParams params;
  std::size_t samples = 25;
  std::uint64_t seed = 42;
  std::optional<double> tol;
  double radius = 0.5;
  int power = 2;
  std::string c1 = "1";
  std::string c2 = "0";
  std::string numerator;
  std::string denominator;
  std::string json_params;
  std::string out;
  Format format = Format::Json;
};

struct TableCase {
  GroupFamily family;
  GroupParams params;
};

/// Every (family, params) pair exercised by the table reproduction.
std::vector<TableCase> table_cases();

std::string groups_listing();

/// Reports of the table reproduction, in case order. cfg.group restricts
/// the run to one family.
std::vector<VerificationReport> run_tables(const RunConfig& cfg);

int cmd_groups(const RunConfig& cfg, std::ostream& out);
int cmd_verify_tables(const RunConfig& cfg, std::ostream& out);
int cmd_verify(const RunConfig& cfg, std::ostream& out);
int cmd_pharm(const RunConfig& cfg, std::ostream& out);
int cmd_morphism(const RunConfig& cfg, std::ostream& out);

/// Parses argv, dispatches, and maps errors to exit codes.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace lgh::cli
