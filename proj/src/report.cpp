#include "lgh/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <nlohmann/json.hpp>
#include <sstream>

#include "lgh/errors.hpp"

namespace lgh {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

GroupDescriptor GroupDescriptor::of(const GroupSpec& spec) {
  return GroupDescriptor{spec.family(), spec.params(), spec.lambda(), spec.mu()};
}

std::string GroupDescriptor::label() const {
  std::string out(family_name(family));
  if (is_pq_family(family)) {
    out += "(p=" + std::to_string(params.p) + ",q=" + std::to_string(params.q) + ")";
  } else {
    out += "(n=" + std::to_string(params.n) + ")";
  }
  return out;
}

const CheckResult* VerificationReport::check(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

double VerificationReport::fraction_above(double threshold) const {
  if (sample_max_rel.empty()) return 0.0;
  const auto n = std::count_if(sample_max_rel.begin(), sample_max_rel.end(),
                               [threshold](double r) { return r > threshold; });
  return static_cast<double>(n) / static_cast<double>(sample_max_rel.size());
}

ReportBuilder::ReportBuilder(GroupDescriptor group, std::string test, std::uint64_t seed,
                             double tol) {
  report_.group = std::move(group);
  report_.test = std::move(test);
  report_.seed = seed;
  report_.tol = tol;
}

void ReportBuilder::declare(const std::string& check) {
  for (const auto& c : report_.checks)
    if (c.name == check) return;
  report_.checks.push_back(CheckResult{check, 0.0, 0.0});
}

void ReportBuilder::record(const std::string& check, std::size_t sample, double abs_residual,
                           double rel_residual) {
  declare(check);
  auto it = std::find_if(report_.checks.begin(), report_.checks.end(),
                         [&](const CheckResult& c) { return c.name == check; });
  // NaN must never read as a pass.
  if (std::isnan(abs_residual)) abs_residual = INFINITY;
  if (std::isnan(rel_residual)) rel_residual = INFINITY;
  it->max_abs = std::max(it->max_abs, abs_residual);
  it->max_rel = std::max(it->max_rel, rel_residual);
  if (report_.sample_max_rel.size() <= sample) report_.sample_max_rel.resize(sample + 1, 0.0);
  report_.sample_max_rel[sample] = std::max(report_.sample_max_rel[sample], rel_residual);
}

void ReportBuilder::record_pair(const std::string& check, std::size_t sample,
                                std::complex<double> lhs, std::complex<double> rhs) {
  const double abs_r = std::abs(lhs - rhs);
  record(check, sample, abs_r, abs_r / (1.0 + std::abs(lhs) + std::abs(rhs)));
}

void ReportBuilder::set_counts(std::size_t requested, std::size_t accepted, std::size_t rejected) {
  report_.samples = requested;
  report_.accepted = accepted;
  report_.rejected = rejected;
}

VerificationReport ReportBuilder::build() const {
  VerificationReport r = report_;
  r.max_abs = 0.0;
  r.max_rel = 0.0;
  for (const auto& c : r.checks) {
    r.max_abs = std::max(r.max_abs, c.max_abs);
    r.max_rel = std::max(r.max_rel, c.max_rel);
  }
  r.pass = r.accepted >= 1 && r.max_rel <= r.tol;
  return r;
}

Format parse_format(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "markdown" || name == "md") return Format::Markdown;
  if (name == "csv") return Format::Csv;
  throw UsageError("unknown output format '" + std::string(name) + "'");
}

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

struct GroupKey {
  std::size_t family_index;
  GroupParams params;
  friend auto operator<=>(const GroupKey&, const GroupKey&) = default;
};

GroupKey key_of(const GroupDescriptor& g) { return {catalog_index(g.family), g.params}; }

/// Reports bucketed by group, buckets in catalog order, input order inside.
std::vector<std::vector<const VerificationReport*>> bucket(
    std::span<const VerificationReport> reports) {
  std::map<GroupKey, std::vector<const VerificationReport*>> buckets;
  for (const auto& r : reports) buckets[key_of(r.group)].push_back(&r);
  std::vector<std::vector<const VerificationReport*>> out;
  for (auto& [key, list] : buckets) out.push_back(std::move(list));
  return out;
}

ordered_json rational_json(const Rational& r) {
  return ordered_json{{"num", numerator_i64(r)}, {"den", denominator_i64(r)}};
}

Rational rational_from(const json& j) {
  return Rational(j.at("num").get<std::int64_t>(), j.at("den").get<std::int64_t>());
}

// Non-finite residuals do not survive JSON numbers; they are written as strings.
ordered_json number_json(double v) {
  if (std::isfinite(v)) return v;
  return format_double(v);
}

double number_from(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return INFINITY;
    if (s == "-inf") return -INFINITY;
    return NAN;
  }
  return j.get<double>();
}

std::string emit_json(std::span<const VerificationReport> reports) {
  ordered_json results = ordered_json::array();
  for (const auto& list : bucket(reports)) {
    const GroupDescriptor& g = list.front()->group;
    ordered_json group{{"family", std::string(family_name(g.family))}};
    if (is_pq_family(g.family)) {
      group["p"] = g.params.p;
      group["q"] = g.params.q;
    } else {
      group["n"] = g.params.n;
    }
    group["lambda"] = rational_json(g.lambda);
    group["mu"] = rational_json(g.mu);
    ordered_json tests = ordered_json::array();
    for (const auto* r : list) {
      ordered_json checks = ordered_json::array();
      for (const auto& c : r->checks) {
        checks.push_back(ordered_json{{"name", c.name},
                                      {"max_abs", number_json(c.max_abs)},
                                      {"max_rel", number_json(c.max_rel)}});
      }
      tests.push_back(ordered_json{{"name", r->test},
                                   {"seed", r->seed},
                                   {"samples", r->samples},
                                   {"accepted", r->accepted},
                                   {"rejected", r->rejected},
                                   {"max_abs", number_json(r->max_abs)},
                                   {"max_rel", number_json(r->max_rel)},
                                   {"tol", number_json(r->tol)},
                                   {"pass", r->pass},
                                   {"checks", std::move(checks)}});
    }
    results.push_back(ordered_json{{"group", std::move(group)}, {"tests", std::move(tests)}});
  }
  ordered_json doc{{"schema_version", kReportSchemaVersion}, {"results", std::move(results)}};
  return doc.dump(2) + "\n";
}

std::string eigenfunction_shape(GroupFamily f) {
  if (is_block_family(f)) return "trace(u^t a z^t + v^t b w^t)";
  return "trace(v^t a z^t)";
}

std::string conditions(GroupFamily f) {
  switch (f) {
    case GroupFamily::SOC: case GroupFamily::SOpq: case GroupFamily::SO:
      return "a in C^n, (v,v)=0";
    default:
      return is_block_family(f) ? "a,b in C^n, u = v" : "a in C^n";
  }
}

std::string emit_markdown(std::span<const VerificationReport> reports) {
  std::ostringstream out;
  out << "| Group | Eigenfunctions | lambda | mu | Conditions | Tests | Max residual | Tol | "
         "Result |\n";
  out << "|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& list : bucket(reports)) {
    const GroupDescriptor& g = list.front()->group;
    double worst = 0.0;
    double tol = 0.0;
    bool pass = true;
    for (const auto* r : list) {
      worst = std::max(worst, r->max_rel);
      tol = std::max(tol, r->tol);
      pass = pass && r->pass;
    }
    out << "| " << g.label() << " | " << eigenfunction_shape(g.family) << " | "
        << to_string(g.lambda) << " | " << to_string(g.mu) << " | " << conditions(g.family)
        << " | " << list.size() << " | " << format_double(worst) << " | " << format_double(tol)
        << " | " << (pass ? "✓" : "✗") << " |\n";
  }
  return out.str();
}

std::string emit_csv(std::span<const VerificationReport> reports) {
  std::ostringstream out;
  out << "family,n,p,q,lambda,mu,test,seed,samples,accepted,rejected,max_abs,max_rel,tol,pass\n";
  for (const auto& list : bucket(reports)) {
    for (const auto* r : list) {
      const GroupDescriptor& g = r->group;
      out << family_name(g.family) << ',' << g.params.n << ',' << g.params.p << ','
          << g.params.q << ',' << to_string(g.lambda) << ',' << to_string(g.mu) << ','
          << r->test << ',' << r->seed << ',' << r->samples << ',' << r->accepted << ','
          << r->rejected << ',' << format_double(r->max_abs) << ','
          << format_double(r->max_rel) << ',' << format_double(r->tol) << ','
          << (r->pass ? "true" : "false") << '\n';
    }
  }
  return out.str();
}

}  // namespace

std::string emit(std::span<const VerificationReport> reports, Format format) {
  if (reports.empty()) throw UsageError("emit: empty report set");
  switch (format) {
    case Format::Json: return emit_json(reports);
    case Format::Markdown: return emit_markdown(reports);
    case Format::Csv: return emit_csv(reports);
  }
  throw UsageError("emit: unknown format");
}

std::vector<VerificationReport> parse_report_json(std::string_view text) {
  std::vector<VerificationReport> out;
  try {
    const json doc = json::parse(text);
    if (doc.at("schema_version").get<int>() != kReportSchemaVersion) {
      throw UsageError("unsupported report schema_version");
    }
    for (const auto& entry : doc.at("results")) {
      const json& g = entry.at("group");
      const auto family = parse_family(g.at("family").get<std::string>());
      if (!family) throw UsageError("unknown family in report");
      GroupDescriptor desc;
      desc.family = *family;
      if (is_pq_family(*family)) {
        desc.params.p = g.at("p").get<int>();
        desc.params.q = g.at("q").get<int>();
      } else {
        desc.params.n = g.at("n").get<int>();
      }
      desc.lambda = rational_from(g.at("lambda"));
      desc.mu = rational_from(g.at("mu"));
      for (const auto& t : entry.at("tests")) {
        VerificationReport r;
        r.group = desc;
        r.test = t.at("name").get<std::string>();
        r.seed = t.at("seed").get<std::uint64_t>();
        r.samples = t.at("samples").get<std::size_t>();
        r.accepted = t.at("accepted").get<std::size_t>();
        r.rejected = t.at("rejected").get<std::size_t>();
        r.max_abs = number_from(t.at("max_abs"));
        r.max_rel = number_from(t.at("max_rel"));
        r.tol = number_from(t.at("tol"));
        r.pass = t.at("pass").get<bool>();
        for (const auto& c : t.at("checks")) {
          r.checks.push_back(CheckResult{c.at("name").get<std::string>(),
                                         number_from(c.at("max_abs")),
                                         number_from(c.at("max_rel"))});
        }
        out.push_back(std::move(r));
      }
    }
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed report JSON: ") + e.what());
  }
  return out;
}

}  // namespace lgh
