#include "lgh/morphisms.hpp"

#include <cmath>
#include <set>

#include "lgh/errors.hpp"

namespace lgh {
namespace {

constexpr double kDependenceTol = 1e-12;

std::vector<Complex> member_values(const FamilySpec& family, const ComplexMatrix& point) {
  std::vector<Complex> values;
  values.reserve(family.members.size());
  for (const auto& m : family.members) values.push_back(m(point));
  return values;
}

}  // namespace

RationalMorphism make_morphism(FamilySpec family, EigenPolynomial p, EigenPolynomial q) {
  if (p.degree() != q.degree()) {
    throw DegreeError("numerator has degree " + std::to_string(p.degree()) +
                      ", denominator has degree " + std::to_string(q.degree()));
  }
  if (p.variables() != family.members.size() || q.variables() != family.members.size()) {
    throw DimensionError("polynomial variable count does not match the family size " +
                         std::to_string(family.members.size()));
  }
  std::set<EigenPolynomial::Powers> support;
  for (const auto& [k, c] : p.terms()) support.insert(k);
  for (const auto& [k, c] : q.terms()) support.insert(k);
  std::vector<Complex> pv;
  std::vector<Complex> qv;
  for (const auto& k : support) {
    auto ip = p.terms().find(k);
    auto iq = q.terms().find(k);
    pv.push_back(ip == p.terms().end() ? Complex{} : ip->second);
    qv.push_back(iq == q.terms().end() ? Complex{} : iq->second);
  }
  double np = 0.0;
  double nq = 0.0;
  for (std::size_t i = 0; i < pv.size(); ++i) {
    np = std::max(np, std::abs(pv[i]));
    nq = std::max(nq, std::abs(qv[i]));
  }
  if (np == 0.0 || nq == 0.0) throw DependenceError("numerator or denominator is zero");
  double minor = 0.0;
  for (std::size_t i = 0; i < pv.size(); ++i)
    for (std::size_t j = i + 1; j < pv.size(); ++j)
      minor = std::max(minor, std::abs(pv[i] * qv[j] - pv[j] * qv[i]));
  if (minor <= kDependenceTol * np * nq) {
    throw DependenceError("numerator and denominator are proportional");
  }
  return RationalMorphism{std::move(family), std::move(p), std::move(q)};
}

QuotientExpansion quotient_expansion(const RationalMorphism& m, const ComplexMatrix& point) {
  const GroupSpec& spec = m.family.group;
  const ScalarField pf = m.numerator();
  const ScalarField qf = m.denominator();
  const Complex pval = pf.value_at(point);
  const Complex qval = qf.value_at(point);
  if (qval == Complex{}) throw SingularPointError("quotient_expansion: Q vanishes at the point");
  QuotientExpansion e{};
  e.tau_p_term = tau(pf, spec, point) / qval;
  e.kappa_pq_term = -2.0 * kappa(pf, qf, spec, point) / (qval * qval);
  e.tau_q_term = -pval * tau(qf, spec, point) / (qval * qval);
  e.kappa_qq_term = 2.0 * pval * kappa(qf, qf, spec, point) / (qval * qval * qval);
  e.total = e.tau_p_term + e.kappa_pq_term + e.tau_q_term + e.kappa_qq_term;
  return e;
}

std::pair<Rational, Rational> predicted_quotient_coefficients(const RationalMorphism& m) {
  const auto [lam_d, mu_d] =
      polynomial_eigenvalues(m.family.group.lambda(), m.family.group.mu(), m.degree());
  const Rational c_tau = lam_d - 2 * mu_d - lam_d + 2 * mu_d;
  const Rational c_kappa = mu_d - 2 * mu_d + mu_d;
  return {c_tau, c_kappa};
}

VerificationReport verify_morphism(const RationalMorphism& m, const VerifyOptions& opts,
                                   double q_floor) {
  if (!(q_floor > 0.0)) throw ParameterError("verify_morphism: q_floor must be positive");
  if (opts.samples < 1) throw ParameterError("verify_morphism: samples must be >= 1");
  const GroupSpec& spec = m.family.group;
  const ScalarField f = m.field();

  ReportBuilder rb(GroupDescriptor::of(spec), "harmonic_morphism", opts.seed, opts.tol);
  for (const char* c : {"tau", "kappa", "tau_expansion"}) rb.declare(c);

  std::size_t accepted = 0;
  std::size_t rejected = 0;
  const std::size_t max_draws = 10 * opts.samples;
  for (std::size_t index = 0; index < max_draws && accepted < opts.samples; ++index) {
    const ComplexMatrix point = sample_point(spec, opts.seed, index, opts.radius);
    const auto values = member_values(m.family, point);
    const Complex pval = m.p.evaluate(std::span<const Complex>(values));
    const Complex qval = m.q.evaluate(std::span<const Complex>(values));
    if (!(std::abs(qval) > q_floor * (1.0 + std::abs(pval)))) {
      ++rejected;
      continue;
    }
    rb.record_pair("tau", accepted, tau(f, spec, point), 0.0);
    rb.record_pair("kappa", accepted, kappa(f, f, spec, point), 0.0);
    rb.record_pair("tau_expansion", accepted, quotient_expansion(m, point).total, 0.0);
    ++accepted;
  }
  if (accepted == 0) {
    throw SamplingExhaustedError("verify_morphism on " + spec.label() + ": all " +
                                 std::to_string(rejected) + " draws had |Q| below the floor");
  }
  rb.set_counts(opts.samples, accepted, rejected);
  return rb.build();
}

}  // namespace lgh
