#include <doctest.h>

#include <algorithm>
#include <nlohmann/json.hpp>
#include <random>

#include "lgh/eigenfamilies.hpp"
#include "lgh/errors.hpp"
#include "lgh/report.hpp"

using namespace lgh;
using F = GroupFamily;

namespace {

VerificationReport glc_report() {
  return verify_eigen(desk_family(make_group(F::GLC, {2, 0, 0})), {5, 42, 1e-8, 0.5});
}

}  // namespace

TEST_CASE("JSON for a passing GLC report") {
  const std::vector<VerificationReport> reports{glc_report()};
  const auto doc = nlohmann::json::parse(emit(reports, Format::Json));
  CHECK(doc["schema_version"] == kReportSchemaVersion);
  const auto& group = doc["results"][0]["group"];
  CHECK(group["family"] == "glc");
  CHECK(group["n"] == 2);
  CHECK(group["lambda"]["num"] == -4);
  CHECK(group["lambda"]["den"] == 1);
  CHECK(group["mu"]["num"] == -2);
  CHECK_FALSE(group.contains("p"));
  const auto& test = doc["results"][0]["tests"][0];
  CHECK(test["pass"] == true);
  CHECK(test["samples"] == 5);
  CHECK(test["accepted"] == 5);
  CHECK(test["checks"].size() == 5);
}

TEST_CASE("format handling") {
  CHECK(parse_format("json") == Format::Json);
  CHECK(parse_format("markdown") == Format::Markdown);
  CHECK(parse_format("csv") == Format::Csv);
  CHECK_THROWS_AS(parse_format("xml"), UsageError);
  CHECK_THROWS_AS(emit(std::vector<VerificationReport>{}, Format::Json), UsageError);
}

TEST_CASE("round trip is byte-identical") {
  std::vector<VerificationReport> reports{glc_report()};
  reports.push_back(verify_eigen(desk_family(make_group(F::SUpq, {0, 1, 2})), {3, 1, 1e-8, 0.5}));
  reports.push_back(verify_eigen(desk_family(make_group(F::SpR, {1, 0, 0})), {3, 1, 1e-8, 0.5}));
  ReportBuilder failing(GroupDescriptor::of(make_group(F::SO, {3, 0, 0})), "synthetic", 7, 1e-8);
  failing.record("nan_check", 0, std::nan(""), std::nan(""));
  failing.set_counts(1, 1, 0);
  reports.push_back(failing.build());
  const std::string once = emit(reports, Format::Json);
  const std::string twice = emit(parse_report_json(once), Format::Json);
  CHECK(once == twice);
  const auto parsed = parse_report_json(once);
  const auto it = std::find_if(parsed.begin(), parsed.end(),
                               [](const auto& r) { return r.test == "synthetic"; });
  REQUIRE(it != parsed.end());
  CHECK(std::isinf(it->max_rel));
  CHECK_FALSE(it->pass);
}

TEST_CASE("ordering follows the catalog, then parameters") {
  std::vector<VerificationReport> reports;
  for (auto [f, gp] : {std::pair{F::SO, GroupParams{3, 0, 0}}, {F::GLC, {3, 0, 0}}, {F::GLC, {2, 0, 0}},
                       {F::SUpq, {0, 1, 1}}}) {
    reports.push_back(verify_eigen(desk_family(make_group(f, gp)), {2, 1, 1e-8, 0.5}));
  }
  const auto doc = nlohmann::ordered_json::parse(emit(reports, Format::Json));
  REQUIRE(doc["results"].size() == 4);
  CHECK(doc["results"][0]["group"]["n"] == 2);
  CHECK(doc["results"][1]["group"]["n"] == 3);
  CHECK(doc["results"][2]["group"]["family"] == "su_pq");
  CHECK(doc["results"][3]["group"]["family"] == "so");
  std::reverse(reports.begin(), reports.end());
  CHECK(emit(reports, Format::Json) == doc.dump(2) + "\n");
}

TEST_CASE("property: aggregation does not depend on record order") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1e-9);
  std::vector<std::tuple<std::string, std::size_t, double, double>> records;
  for (std::size_t i = 0; i < 40; ++i) {
    records.emplace_back(i % 2 ? "a" : "b", i % 10, u(rng), u(rng));
  }
  const GroupDescriptor g = GroupDescriptor::of(make_group(F::GLC, {2, 0, 0}));
  auto build = [&](const auto& recs) {
    ReportBuilder rb(g, "t", 1, 1e-8);
    rb.declare("a");
    rb.declare("b");
    for (const auto& [c, s, a, r] : recs) rb.record(c, s, a, r);
    rb.set_counts(10, 10, 0);
    return emit(std::vector{rb.build()}, Format::Json);
  };
  const std::string base = build(records);
  for (int trial = 0; trial < 10; ++trial) {
    std::shuffle(records.begin(), records.end(), rng);
    CHECK(build(records) == base);
  }
}

TEST_CASE("pass requires an accepted sample") {
  ReportBuilder rb(GroupDescriptor::of(make_group(F::GLC, {2, 0, 0})), "t", 1, 1e-8);
  rb.set_counts(5, 0, 5);
  CHECK_FALSE(rb.build().pass);
}

TEST_CASE("markdown and csv") {
  std::vector<VerificationReport> reports{glc_report()};
  reports.push_back(verify_eigen(desk_family(make_group(F::GLC, {2, 0, 0})), {2, 5, 1e-20, 0.5}, "strict"));
  const std::string md = emit(reports, Format::Markdown);
  CHECK(md.find("| glc(n=2) |") != std::string::npos);
  CHECK(md.find("✗") != std::string::npos);
  CHECK(std::count(md.begin(), md.end(), '\n') == 3);
  const std::string csv = emit(reports, Format::Csv);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
  CHECK(csv.rfind("family,", 0) == 0);
}

TEST_CASE("shortest decimal form") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(1e-8) == "1e-08");
  CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
}
