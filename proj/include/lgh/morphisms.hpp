#pragma once

#include "lgh/calculus.hpp"
#include "lgh/eigenfamilies.hpp"
#include "lgh/report.hpp"

namespace lgh {

inline constexpr double kDefaultQFloor = 0.1;

/// F = P(phi_1, ..., phi_n) / Q(phi_1, ..., phi_n) over an eigenfamily.
struct RationalMorphism {
  FamilySpec family;
  EigenPolynomial p;
  EigenPolynomial q;

  int degree() const { return p.degree(); }
  ScalarField numerator() const { return p.field(family); }
  ScalarField denominator() const { return q.field(family); }
  ScalarField field() const { return numerator() / denominator(); }
};

/// Throws DegreeError when deg P != deg Q, DependenceError when P and Q are
/// proportional (or one is zero), DimensionError when the variable count
/// differs from the family size.
RationalMorphism make_morphism(FamilySpec family, EigenPolynomial p, EigenPolynomial q);

/// Terms of tau(P/Q) = tau(P)/Q - 2 kappa(P,Q)/Q^2 - P tau(Q)/Q^2 + 2 P kappa(Q,Q)/Q^3
/// evaluated at one point.
struct QuotientExpansion {
  Complex tau_p_term;
  Complex kappa_pq_term;
  Complex tau_q_term;
  Complex kappa_qq_term;
  Complex total;
};

QuotientExpansion quotient_expansion(const RationalMorphism& m, const ComplexMatrix& point);

/// Coefficients c with tau(P/Q) = c_tau F and kappa(F, F) = c_kappa F^2,
/// computed exactly from the degree-d eigenvalues. Both are zero.
std::pair<Rational, Rational> predicted_quotient_coefficients(const RationalMorphism& m);

/// Jet-computed tau(F) and kappa(F, F) against zero, plus the term-by-term
/// expansion, at sampled points with |Q| > q_floor (1 + |P|). Rejected points
/// are replaced, up to 10 * samples draws in total.
/// Throws ParameterError if q_floor <= 0, SamplingExhaustedError if nothing
/// is accepted.
VerificationReport verify_morphism(const RationalMorphism& m, const VerifyOptions& opts,
                                   double q_floor = kDefaultQFloor);

}  // namespace lgh
