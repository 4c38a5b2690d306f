#include "lgh/logpower.hpp"

#include <algorithm>
#include <cmath>
#include <nlohmann/json.hpp>

#include "lgh/errors.hpp"

namespace lgh {
namespace {

bool term_less(const LogPowerTerm& a, const LogPowerTerm& b) {
  if (a.s != b.s) return a.s < b.s;
  return a.k < b.k;
}

void canonicalize(std::vector<LogPowerTerm>& terms) {
  std::stable_sort(terms.begin(), terms.end(), term_less);
  std::vector<LogPowerTerm> merged;
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().s == t.s && merged.back().k == t.k) {
      merged.back().c += t.c;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const LogPowerTerm& t) { return t.c.is_zero(); });
  terms = std::move(merged);
}

bool is_integer(const Rational& r) { return denominator(r) == 1; }

}  // namespace

LogPowerSum::LogPowerSum(std::vector<LogPowerTerm> terms) : terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    if (t.k < 0) throw ParameterError("log power must be non-negative");
  }
  canonicalize(terms_);
}

LogPowerSum LogPowerSum::term(RationalC c, Rational s, int k) {
  return LogPowerSum({LogPowerTerm{std::move(c), std::move(s), k}});
}

int LogPowerSum::max_log_power() const {
  int k = -1;
  for (const auto& t : terms_) k = std::max(k, t.k);
  return k;
}

LogPowerSum& LogPowerSum::operator+=(const LogPowerSum& other) {
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  canonicalize(terms_);
  return *this;
}

LogPowerSum operator*(const RationalC& c, const LogPowerSum& f) {
  std::vector<LogPowerTerm> terms = f.terms_;
  for (auto& t : terms) t.c *= c;
  return LogPowerSum(std::move(terms));
}

std::string LogPowerSum::to_json() const {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& t : terms_) {
    nlohmann::ordered_json entry;
    entry["c"] = {lgh::to_string(t.c.re), lgh::to_string(t.c.im)};
    entry["s"] = lgh::to_string(t.s);
    entry["k"] = t.k;
    out.push_back(std::move(entry));
  }
  return out.dump();
}

LogPowerSum LogPowerSum::from_json(std::string_view text) {
  try {
    const auto doc = nlohmann::json::parse(text);
    if (!doc.is_array()) throw ParameterError("log-power JSON must be an array");
    std::vector<LogPowerTerm> terms;
    for (const auto& e : doc) {
      const auto& c = e.at("c");
      if (!c.is_array() || c.size() != 2) throw ParameterError("log-power c must be [re, im]");
      terms.push_back(LogPowerTerm{
          RationalC(parse_rational(c[0].get<std::string>()),
                    parse_rational(c[1].get<std::string>())),
          parse_rational(e.at("s").get<std::string>()), e.at("k").get<int>()});
    }
    return LogPowerSum(std::move(terms));
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError(std::string("malformed log-power JSON: ") + e.what());
  }
}

std::string LogPowerSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    out += lgh::to_string(t.c);
    if (t.s != 0) out += "*phi^(" + lgh::to_string(t.s) + ")";
    if (t.k != 0) out += "*L^" + std::to_string(t.k);
  }
  return out;
}

LogPowerSum tau_symbolic(const LogPowerTerm& t, const Rational& lambda, const Rational& mu) {
  const Rational& s = t.s;
  const Rational k(t.k);
  std::vector<LogPowerTerm> out;
  const Rational a = lambda * s + mu * s * (s - 1);
  if (a != 0) out.push_back({t.c * RationalC(a), s, t.k});
  if (t.k >= 1) {
    const Rational b = k * (lambda + mu * (2 * s - 1));
    if (b != 0) out.push_back({t.c * RationalC(b), s, t.k - 1});
  }
  if (t.k >= 2) {
    const Rational c = mu * k * (k - 1);
    if (c != 0) out.push_back({t.c * RationalC(c), s, t.k - 2});
  }
  return LogPowerSum(std::move(out));
}

LogPowerSum tau_symbolic(const LogPowerSum& f, const Rational& lambda, const Rational& mu) {
  LogPowerSum out;
  for (const auto& t : f.terms()) out += tau_symbolic(t, lambda, mu);
  return out;
}

LogPowerSum iterate_tau(const LogPowerSum& f, const Rational& lambda, const Rational& mu,
                        unsigned times) {
  LogPowerSum out = f;
  for (unsigned i = 0; i < times && !out.empty(); ++i) out = tau_symbolic(out, lambda, mu);
  return out;
}

LogPowerSum build_phi_p(const Rational& lambda, const Rational& mu, int p, const RationalC& c1,
                        const RationalC& c2) {
  if (lambda == 0 && mu == 0) throw ParameterError("build_phi_p: (lambda, mu) = (0, 0)");
  if (p < 1) throw ParameterError("build_phi_p: p must be a positive integer");
  if (c1.is_zero() && c2.is_zero()) throw ParameterError("build_phi_p: c1 = c2 = 0");
  if (mu == 0) return LogPowerSum::term(c1, 0, p - 1);
  if (lambda == mu) {
    return LogPowerSum({{c1, 0, 2 * p - 1}, {c2, 0, 2 * p - 2}});
  }
  return LogPowerSum({{c1, 1 - lambda / mu, p - 1}, {c2, 0, p - 1}});
}

Complex eval_numeric(const LogPowerSum& f, Complex phi) {
  if (near_branch_cut(phi)) {
    throw BranchCutError("log-power evaluation inside the branch-cut guard band");
  }
  const Complex log_phi = std::log(phi);
  Complex sum = 0.0;
  for (const auto& t : f.terms()) {
    Complex term = t.c.to_complex();
    if (t.s != 0) {
      term *= is_integer(t.s) ? std::pow(phi, static_cast<int>(numerator_i64(t.s)))
                              : std::pow(phi, to_double(t.s));
    }
    for (int j = 0; j < t.k; ++j) term *= log_phi;
    sum += term;
  }
  return sum;
}

Jet2 eval_jet(const LogPowerSum& f, const Jet2& phi) {
  Jet2 sum = Jet2::constant(0.0);
  bool need_log = false;
  for (const auto& t : f.terms()) need_log = need_log || t.k > 0;
  const Jet2 log_phi = need_log ? log(phi) : Jet2::constant(0.0);
  for (const auto& t : f.terms()) {
    Jet2 term = Jet2::constant(t.c.to_complex());
    if (t.s != 0) term = term * pow(phi, Complex(to_double(t.s)));
    if (t.k > 0) term = term * pow(log_phi, t.k);
    sum = sum + term;
  }
  return sum;
}

ScalarField compose(const LogPowerSum& f, const ScalarField& phi) {
  return compose(phi, [f](const Jet2& j) { return eval_jet(f, j); });
}

PHarmonicCertificate certify_p_harmonic(const Rational& lambda, const Rational& mu, int p,
                                        const RationalC& c1, const RationalC& c2) {
  PHarmonicCertificate cert;
  cert.phi_p = build_phi_p(lambda, mu, p, c1, c2);
  cert.chain.push_back(cert.phi_p);
  for (int j = 1; j <= p; ++j) cert.chain.push_back(tau_symbolic(cert.chain.back(), lambda, mu));
  cert.annihilated = cert.chain[static_cast<std::size_t>(p)].empty();
  cert.proper = !cert.chain[static_cast<std::size_t>(p - 1)].empty();
  return cert;
}

PHarmonicResult verify_p_harmonic(const FamilySpec& family, std::size_t member, int p,
                                  const RationalC& c1, const RationalC& c2,
                                  const VerifyOptions& opts) {
  if (opts.samples < 1) throw ParameterError("verify_p_harmonic: samples must be >= 1");
  if (member >= family.members.size()) {
    throw ParameterError("verify_p_harmonic: member index " + std::to_string(member) +
                         " out of range");
  }
  const GroupSpec& spec = family.group;
  PHarmonicResult result{certify_p_harmonic(spec.lambda(), spec.mu(), p, c1, c2), {}};
  const auto& cert = result.certificate;

  ReportBuilder rb(GroupDescriptor::of(spec), "p_harmonic_p" + std::to_string(p), opts.seed,
                   opts.tol);
  for (const char* c :
       {"symbolic_annihilation", "symbolic_proper", "tau_jet_vs_symbolic", "tau_of_last_nonzero"}) {
    rb.declare(c);
  }
  const double bad_annihilation = cert.annihilated ? 0.0 : 1.0;
  const double bad_proper = cert.proper ? 0.0 : 1.0;
  rb.record("symbolic_annihilation", 0, bad_annihilation, bad_annihilation);
  rb.record("symbolic_proper", 0, bad_proper, bad_proper);

  const ScalarField phi = ScalarField::linear(family.members[member]);
  const ScalarField big_phi = compose(cert.phi_p, phi);
  const ScalarField last = compose(cert.chain[static_cast<std::size_t>(p - 1)], phi);
  const LogPowerSum& tau_once = cert.chain[1];

  std::size_t accepted = 0;
  std::size_t rejected = 0;
  const std::size_t max_draws = 10 * opts.samples;
  for (std::size_t index = 0; index < max_draws && accepted < opts.samples; ++index) {
    const ComplexMatrix point = sample_point(spec, opts.seed, index, opts.radius);
    const Complex value = family.members[member](point);
    if (near_branch_cut(value)) {
      ++rejected;
      continue;
    }
    Complex numeric_tau;
    Complex numeric_last;
    try {
      numeric_tau = tau(big_phi, spec, point);
      numeric_last = tau(last, spec, point);
    } catch (const EvaluationError&) {
      ++rejected;
      continue;
    }
    rb.record_pair("tau_jet_vs_symbolic", accepted, numeric_tau, eval_numeric(tau_once, value));
    rb.record_pair("tau_of_last_nonzero", accepted, numeric_last, 0.0);
    ++accepted;
  }
  if (accepted == 0) {
    throw SamplingExhaustedError("verify_p_harmonic on " + spec.label() + ": all " +
                                 std::to_string(rejected) +
                                 " draws fell inside the branch-cut guard band");
  }
  rb.set_counts(opts.samples, accepted, rejected);
  result.report = rb.build();
  return result;
}

}  // namespace lgh
