#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lgh/calculus.hpp"
#include "lgh/eigenfamilies.hpp"
#include "lgh/rational.hpp"
#include "lgh/report.hpp"

namespace lgh {

/// c * phi^s * log(phi)^k.
struct LogPowerTerm {
  RationalC c;
  Rational s{0};
  int k = 0;

  friend bool operator==(const LogPowerTerm&, const LogPowerTerm&) = default;
};

/// Exact sum of log-power terms in canonical form: sorted by (s, k), with
/// like terms merged and zero coefficients dropped. The empty sum is zero.
class LogPowerSum {
 public:
  LogPowerSum() = default;
  explicit LogPowerSum(std::vector<LogPowerTerm> terms);

  static LogPowerSum term(RationalC c, Rational s, int k);
  static LogPowerSum from_json(std::string_view text);

  const std::vector<LogPowerTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  int max_log_power() const;

  LogPowerSum& operator+=(const LogPowerSum& other);
  friend LogPowerSum operator+(LogPowerSum a, const LogPowerSum& b) { return a += b; }
  friend LogPowerSum operator*(const RationalC& c, const LogPowerSum& f);
  friend bool operator==(const LogPowerSum&, const LogPowerSum&) = default;

  /// [{"c": ["n/d", "n/d"], "s": "n/d", "k": int}, ...]
  std::string to_json() const;
  /// Human-readable form, e.g. "(1/1)*phi^(-1/1)*L^1 + (1/1)*L^1".
  std::string to_string() const;

 private:
  std::vector<LogPowerTerm> terms_;
};

/// tau(c phi^s L^k) for an eigenfunction phi with eigenvalues (lambda, mu).
LogPowerSum tau_symbolic(const LogPowerTerm& t, const Rational& lambda, const Rational& mu);
LogPowerSum tau_symbolic(const LogPowerSum& f, const Rational& lambda, const Rational& mu);

/// tau applied `times` times.
LogPowerSum iterate_tau(const LogPowerSum& f, const Rational& lambda, const Rational& mu,
                        unsigned times);

/// The proper p-harmonic function built from an eigenfunction:
///   mu = 0:            c1 L^(p-1)
///   lambda = mu != 0:  c1 L^(2p-1) + c2 L^(2p-2)
///   otherwise:         c1 phi^(1 - lambda/mu) L^(p-1) + c2 L^(p-1)
/// Throws ParameterError for (lambda, mu) = (0, 0), p < 1, or c1 = c2 = 0.
LogPowerSum build_phi_p(const Rational& lambda, const Rational& mu, int p, const RationalC& c1,
                        const RationalC& c2);

/// Principal-branch value at phi. Throws BranchCutError inside the guard band.
Complex eval_numeric(const LogPowerSum& f, Complex phi);

/// Jet of f(phi) given the jet of phi.
Jet2 eval_jet(const LogPowerSum& f, const Jet2& phi);

/// The scalar field f o phi.
ScalarField compose(const LogPowerSum& f, const ScalarField& phi);

/// Purely symbolic outcome of the construction.
struct PHarmonicCertificate {
  LogPowerSum phi_p;
  /// chain[j] = tau^j(phi_p), j = 0..p.
  std::vector<LogPowerSum> chain;
  /// tau^p(phi_p) is the empty sum.
  bool annihilated = false;
  /// tau^(p-1)(phi_p) is not the empty sum.
  bool proper = false;
};

PHarmonicCertificate certify_p_harmonic(const Rational& lambda, const Rational& mu, int p,
                                        const RationalC& c1, const RationalC& c2);

struct PHarmonicResult {
  PHarmonicCertificate certificate;
  VerificationReport report;
};

/// Symbolic certification plus numeric cross-checks at sampled points where
/// the chosen member avoids the branch-cut guard band. Checks:
///   symbolic_annihilation, symbolic_proper (0 or 1 residuals),
///   tau_jet_vs_symbolic, tau_of_last_nonzero.
/// Rejected samples are replaced, up to 10 * samples draws in total.
/// Throws SamplingExhaustedError when no sample is accepted.
PHarmonicResult verify_p_harmonic(const FamilySpec& family, std::size_t member, int p,
                                  const RationalC& c1, const RationalC& c2,
                                  const VerifyOptions& opts);

}  // namespace lgh
