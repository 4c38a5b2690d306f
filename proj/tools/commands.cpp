#include "commands.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "lgh/eigenfamilies.hpp"
#include "lgh/errors.hpp"
#include "lgh/logpower.hpp"
#include "lgh/morphisms.hpp"

namespace lgh::cli {
namespace {

using F = GroupFamily;

struct CatalogRow {
  GroupFamily family;
  const char* dimension;
  const char* lambda;
  const char* mu;
};

constexpr CatalogRow kCatalog[] = {
    {F::GLC, "2n^2", "-2n", "-2"},
    {F::GLR, "n^2", "-n", "-1"},
    {F::GLH, "4n^2", "-2n", "-1"},
    {F::SLC, "2(n^2-1)", "-2(n^2-1)/n", "-2(n-1)/n"},
    {F::SLR, "n^2-1", "-(n^2-1)/n", "-(n-1)/n"},
    {F::SLH, "4n^2-1", "-(4n^2-1)/2n", "-(2n-1)/2n"},
    {F::SOC, "n(n-1)", "-(n-1)", "-1"},
    {F::SpC, "2n(2n+1)", "-(2n+1)", "-1"},
    {F::SpR, "n(2n+1)", "-(2n+1)/2", "-1/2"},
    {F::SOstar, "n(2n-1)", "-(2n-1)/2", "-1/2"},
    {F::SUpq, "(p+q)^2-1", "-((p+q)^2-1)/(p+q)", "-(p+q-1)/(p+q)"},
    {F::SOpq, "(p+q)(p+q-1)/2", "-(p+q-1)/2", "-1/2"},
    {F::Sppq, "(p+q)(2(p+q)+1)", "-(2(p+q)+1)/2", "-1/2"},
    {F::U, "n^2", "-n", "-1"},
    {F::SU, "n^2-1", "-(n^2-1)/n", "-(n-1)/n"},
    {F::SO, "n(n-1)/2", "-(n-1)/2", "-1/2"},
    {F::Sp, "n(2n+1)", "-(2n+1)/2", "-1/2"},
};

GroupParams n_param(int n) { return GroupParams{n, 0, 0}; }
GroupParams pq_param(int p, int q) { return GroupParams{0, p, q}; }

std::string read_json_arg(const std::string& value) {
  const auto first = value.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (value[first] == '{' || value[first] == '[')) return value;
  std::ifstream in(value);
  if (!in) throw UsageError("cannot read JSON file '" + value + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GroupSpec selected_group(const RunConfig& cfg) {
  if (!cfg.group) throw UsageError(cfg.command + " requires --group");
  return make_group(*cfg.group, cfg.params);
}

FamilySpec selected_family(const RunConfig& cfg, const GroupSpec& spec) {
  if (cfg.json_params.empty()) return desk_family(spec);
  return family_from_json(spec, read_json_arg(cfg.json_params));
}

VerifyOptions options(const RunConfig& cfg, double default_tol) {
  return VerifyOptions{cfg.samples, cfg.seed, cfg.tol.value_or(default_tol), cfg.radius};
}

void write_output(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + cfg.out + "'");
  file << text;
}

int exit_for(std::span<const VerificationReport> reports) {
  for (const auto& r : reports)
    if (!r.pass) return kFail;
  return kPass;
}

}  // namespace

std::vector<TableCase> table_cases() {
  std::vector<TableCase> cases;
  for (F f : {F::GLC, F::GLR}) {
    for (int n : {2, 3}) cases.push_back({f, n_param(n)});
  }
  for (int n : {1, 2}) cases.push_back({F::GLH, n_param(n)});
  for (F f : {F::SLC, F::SLR}) {
    for (int n : {2, 3}) cases.push_back({f, n_param(n)});
  }
  for (int n : {1, 2}) cases.push_back({F::SLH, n_param(n)});
  for (int n : {2, 3, 4}) cases.push_back({F::SOC, n_param(n)});
  for (F f : {F::SpC, F::SpR}) {
    for (int n : {1, 2}) cases.push_back({f, n_param(n)});
  }
  for (int n : {2, 3}) cases.push_back({F::SOstar, n_param(n)});
  for (F f : {F::SUpq, F::SOpq, F::Sppq}) {
    for (auto [p, q] : {std::pair{1, 1}, {1, 2}, {2, 1}, {2, 2}}) cases.push_back({f, pq_param(p, q)});
  }
  for (F f : {F::U, F::SU, F::SO, F::Sp}) {
    for (int n : {2, 3}) cases.push_back({f, n_param(n)});
  }
  return cases;
}

std::string groups_listing() {
  std::ostringstream os;
  os << "family  dimension           lambda                mu\n";
  for (const auto& row : kCatalog) {
    std::string name(family_name(row.family));
    name.resize(8, ' ');
    std::string dim = row.dimension;
    dim.resize(20, ' ');
    std::string lam = row.lambda;
    lam.resize(22, ' ');
    os << name << dim << lam << row.mu << '\n';
  }
  return os.str();
}

std::vector<VerificationReport> run_tables(const RunConfig& cfg) {
  const VerifyOptions opts = options(cfg, 1e-8);
  std::vector<VerificationReport> reports;
  for (const auto& c : table_cases()) {
    if (cfg.group && *cfg.group != c.family) continue;
    const GroupSpec spec = make_group(c.family, c.params);
    reports.push_back(verify_eigen(desk_family(spec), opts));
    if (c.family == F::SpR) {
      reports.push_back(verify_eigen(spr_full_rank_family(spec), opts, "eigenfamily_full_rank"));
    }
  }
  return reports;
}

int cmd_groups(const RunConfig& cfg, std::ostream& out) {
  write_output(cfg, out, groups_listing());
  return kPass;
}

int cmd_verify_tables(const RunConfig& cfg, std::ostream& out) {
  const auto reports = run_tables(cfg);
  write_output(cfg, out, emit(reports, cfg.format));
  return exit_for(reports);
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const GroupSpec spec = selected_group(cfg);
  const std::vector<VerificationReport> reports{
      verify_eigen(selected_family(cfg, spec), options(cfg, 1e-8))};
  write_output(cfg, out, emit(reports, cfg.format));
  return exit_for(reports);
}

int cmd_pharm(const RunConfig& cfg, std::ostream& out) {
  const GroupSpec spec = selected_group(cfg);
  const FamilySpec family = selected_family(cfg, spec);
  const auto result = verify_p_harmonic(family, 0, cfg.power, parse_rational_complex(cfg.c1),
                                        parse_rational_complex(cfg.c2), options(cfg, 1e-7));
  const std::vector<VerificationReport> reports{result.report};
  std::string text;
  if (cfg.format == Format::Json) {
    nlohmann::ordered_json doc;
    doc["schema_version"] = kReportSchemaVersion;
    doc["phi_p"] = nlohmann::ordered_json::parse(result.certificate.phi_p.to_json());
    doc["tau_chain"] = nlohmann::ordered_json::array();
    for (const auto& f : result.certificate.chain) {
      doc["tau_chain"].push_back(nlohmann::ordered_json::parse(f.to_json()));
    }
    doc["report"] = nlohmann::ordered_json::parse(emit(reports, Format::Json));
    text = doc.dump(2) + "\n";
  } else if (cfg.format == Format::Markdown) {
    std::ostringstream os;
    os << "Phi_p = " << result.certificate.phi_p.to_string() << "\n\n";
    for (std::size_t j = 1; j < result.certificate.chain.size(); ++j) {
      os << "tau^" << j << " = " << result.certificate.chain[j].to_string() << "\n\n";
    }
    text = os.str() + emit(reports, cfg.format);
  } else {
    text = emit(reports, cfg.format);
  }
  write_output(cfg, out, text);
  return exit_for(reports);
}

int cmd_morphism(const RunConfig& cfg, std::ostream& out) {
  if (cfg.numerator.empty() || cfg.denominator.empty()) {
    throw UsageError("morphism requires --numerator and --denominator");
  }
  const GroupSpec spec = selected_group(cfg);
  const RationalMorphism m =
      make_morphism(selected_family(cfg, spec),
                    EigenPolynomial::from_json(read_json_arg(cfg.numerator)),
                    EigenPolynomial::from_json(read_json_arg(cfg.denominator)));
  const std::vector<VerificationReport> reports{verify_morphism(m, options(cfg, 1e-7))};
  write_output(cfg, out, emit(reports, cfg.format));
  return exit_for(reports);
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  if (const char* env = std::getenv("LGH_SEED")) {
    try {
      std::size_t used = 0;
      cfg.seed = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
    } catch (const std::exception&) {
      err << "error: LGH_SEED must be an unsigned 64-bit integer\n";
      return kUsage;
    }
  }

  CLI::App app{"Eigenfunctions, p-harmonic functions and harmonic morphisms on classical Lie groups",
               "lgh"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string group_name;
  std::string format_name = "json";
  double tol = 0.0;
  app.add_option("--group", group_name, "Group family (glc, slr, su_pq, ...)");
  app.add_option("--n", cfg.params.n, "Matrix size n")->check(CLI::PositiveNumber);
  app.add_option("--p", cfg.params.p, "Signature p")->check(CLI::PositiveNumber);
  app.add_option("--q", cfg.params.q, "Signature q")->check(CLI::PositiveNumber);
  app.add_option("--samples", cfg.samples, "Sample count")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "RNG seed (default 42 or LGH_SEED)");
  auto* tol_opt = app.add_option("--tol", tol, "Scale-free tolerance")->check(CLI::PositiveNumber);
  app.add_option("--radius", cfg.radius, "Sampling radius in the Lie algebra")
      ->check(CLI::PositiveNumber);
  app.add_option("--power", cfg.power, "p of the p-harmonic construction")
      ->check(CLI::PositiveNumber);
  app.add_option("--c1", cfg.c1, "Rational complex coefficient \"re[,im]\"");
  app.add_option("--c2", cfg.c2, "Rational complex coefficient \"re[,im]\"");
  app.add_option("--numerator", cfg.numerator, "Polynomial P as JSON or a JSON file");
  app.add_option("--denominator", cfg.denominator, "Polynomial Q as JSON or a JSON file");
  app.add_option("--json-params", cfg.json_params, "Family parameters as JSON or a JSON file");
  app.add_option("--out", cfg.out, "Output file (default stdout)");
  app.add_option("--format", format_name, "json, markdown or csv");

  auto* groups = app.add_subcommand("groups", "List the group catalog");
  auto* tables = app.add_subcommand("verify-tables", "Reproduce the eigenvalue tables");
  auto* verify = app.add_subcommand("verify", "Verify one eigenfamily");
  auto* pharm = app.add_subcommand("pharm", "Build and verify a proper p-harmonic function");
  auto* morphism = app.add_subcommand("morphism", "Verify a rational harmonic morphism P/Q");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (tol_opt->count() > 0) cfg.tol = tol;
    cfg.format = parse_format(format_name);
    if (!group_name.empty()) {
      cfg.group = parse_family(group_name);
      if (!cfg.group) throw UsageError("unknown group family '" + group_name + "'");
    }
    if (cfg.group) {
      if (is_pq_family(*cfg.group)) {
        if (cfg.params.p == 0) cfg.params.p = 1;
        if (cfg.params.q == 0) cfg.params.q = 1;
      } else if (cfg.params.n == 0) {
        cfg.params.n = 2;
      }
    }
    if (groups->parsed()) {
      cfg.command = "groups";
      return cmd_groups(cfg, out);
    }
    if (tables->parsed()) {
      cfg.command = "verify-tables";
      return cmd_verify_tables(cfg, out);
    }
    if (verify->parsed()) {
      cfg.command = "verify";
      return cmd_verify(cfg, out);
    }
    if (pharm->parsed()) {
      cfg.command = "pharm";
      return cmd_pharm(cfg, out);
    }
    if (morphism->parsed()) {
      cfg.command = "morphism";
      return cmd_morphism(cfg, out);
    }
  } catch (const EvaluationError& e) {
    err << "numerical error: " << e.what() << '\n';
    return kNumerical;
  } catch (const SamplingExhaustedError& e) {
    err << "numerical error: " << e.what() << '\n';
    return kNumerical;
  } catch (const BranchCutError& e) {
    err << "numerical error: " << e.what() << '\n';
    return kNumerical;
  } catch (const SingularPointError& e) {
    err << "numerical error: " << e.what() << '\n';
    return kNumerical;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace lgh::cli
