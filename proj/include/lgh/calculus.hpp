#pragma once

#include <functional>
#include <memory>

#include "lgh/cmatrix.hpp"
#include "lgh/groups.hpp"
#include "lgh/jets.hpp"

namespace lgh {

/// phi_C(g) = trace(C g^t) = sum_{j,a} C_ja g_ja.
struct LinearForm {
  ComplexMatrix c;

  Complex operator()(const ComplexMatrix& g) const;
};

/// A complex-valued function of a group element, evaluated on the order-2
/// jet of a curve through the point. Built from entry selectors, constants,
/// linear forms, arithmetic, powers, and the principal logarithm.
class ScalarField {
 public:
  using Evaluator = std::function<Jet2(const JetMatrix&)>;

  explicit ScalarField(Evaluator eval) : eval_(std::make_shared<Evaluator>(std::move(eval))) {}

  static ScalarField constant(Complex c);
  /// The matrix element g_ij (0-based).
  static ScalarField entry(std::size_t i, std::size_t j);
  static ScalarField linear(LinearForm form);

  Jet2 operator()(const JetMatrix& curve) const { return (*eval_)(curve); }
  Complex value_at(const ComplexMatrix& point) const;

 private:
  std::shared_ptr<const Evaluator> eval_;
};

ScalarField operator+(const ScalarField& a, const ScalarField& b);
ScalarField operator-(const ScalarField& a, const ScalarField& b);
ScalarField operator*(const ScalarField& a, const ScalarField& b);
ScalarField operator*(Complex c, const ScalarField& a);
ScalarField operator/(const ScalarField& a, const ScalarField& b);
ScalarField pow(const ScalarField& a, int k);
ScalarField pow(const ScalarField& a, Complex s);
ScalarField log(const ScalarField& a);
ScalarField conj(const ScalarField& a);
/// f o phi for a scalar function given by its jet action.
ScalarField compose(const ScalarField& inner, std::function<Jet2(const Jet2&)> outer);

/// tau(f)(p) = sum_Z eps_Z Z^2(f)(p), second derivatives along p exp(sZ).
/// Branch-cut or singular evaluations are rethrown as EvaluationError naming
/// the basis vector.
Complex tau(const ScalarField& f, const GroupSpec& spec, const ComplexMatrix& p);

/// kappa(f, h)(p) = sum_Z eps_Z Z(f)(p) Z(h)(p).
Complex kappa(const ScalarField& f, const ScalarField& h, const GroupSpec& spec,
              const ComplexMatrix& p);

/// trace(C (p S)^t) with S the cached structure sum.
Complex tau_linear(const LinearForm& c, const GroupSpec& spec, const ComplexMatrix& p);

/// sum_Z eps_Z trace(C (pZ)^t) trace(D (pZ)^t).
Complex kappa_linear(const LinearForm& c, const LinearForm& d, const GroupSpec& spec,
                     const ComplexMatrix& p);

/// |lhs - rhs| / (1 + |lhs| + |rhs|).
double scale_free_residual(Complex lhs, Complex rhs);

}  // namespace lgh
