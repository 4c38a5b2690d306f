#include "lgh/calculus.hpp"

#include <cmath>
#include <string>

#include "lgh/errors.hpp"

namespace lgh {

Complex LinearForm::operator()(const ComplexMatrix& g) const {
  if (g.rows() != c.rows() || g.cols() != c.cols()) {
    throw DimensionError("LinearForm: coefficient and argument shapes differ");
  }
  Complex sum = 0.0;
  const auto ce = c.entries();
  const auto ge = g.entries();
  for (std::size_t i = 0; i < ce.size(); ++i) sum += ce[i] * ge[i];
  return sum;
}

ScalarField ScalarField::constant(Complex c) {
  return ScalarField([c](const JetMatrix&) { return Jet2::constant(c); });
}

ScalarField ScalarField::entry(std::size_t i, std::size_t j) {
  return ScalarField([i, j](const JetMatrix& m) { return m(i, j); });
}

ScalarField ScalarField::linear(LinearForm form) {
  return ScalarField([form = std::move(form)](const JetMatrix& m) {
    return Jet2{form(m.value), form(m.d1), form(m.d2)};
  });
}

Complex ScalarField::value_at(const ComplexMatrix& point) const {
  return (*this)(JetMatrix::constant(point)).f0;
}

ScalarField operator+(const ScalarField& a, const ScalarField& b) {
  return ScalarField([a, b](const JetMatrix& m) { return a(m) + b(m); });
}

ScalarField operator-(const ScalarField& a, const ScalarField& b) {
  return ScalarField([a, b](const JetMatrix& m) { return a(m) - b(m); });
}

ScalarField operator*(const ScalarField& a, const ScalarField& b) {
  return ScalarField([a, b](const JetMatrix& m) { return a(m) * b(m); });
}

ScalarField operator*(Complex c, const ScalarField& a) {
  return ScalarField([c, a](const JetMatrix& m) { return c * a(m); });
}

ScalarField operator/(const ScalarField& a, const ScalarField& b) {
  return ScalarField([a, b](const JetMatrix& m) { return a(m) / b(m); });
}

ScalarField pow(const ScalarField& a, int k) {
  return ScalarField([a, k](const JetMatrix& m) { return pow(a(m), k); });
}

ScalarField pow(const ScalarField& a, Complex s) {
  return ScalarField([a, s](const JetMatrix& m) { return pow(a(m), s); });
}

ScalarField log(const ScalarField& a) {
  return ScalarField([a](const JetMatrix& m) { return log(a(m)); });
}

ScalarField conj(const ScalarField& a) {
  return ScalarField([a](const JetMatrix& m) { return conj(a(m)); });
}

ScalarField compose(const ScalarField& inner, std::function<Jet2(const Jet2&)> outer) {
  return ScalarField(
      [inner, outer = std::move(outer)](const JetMatrix& m) { return outer(inner(m)); });
}

namespace {

Jet2 evaluate_along(const ScalarField& f, const GroupSpec& spec, const ComplexMatrix& p,
                    std::size_t index) {
  try {
    return f(curve_jet(p, spec.basis()[index].z));
  } catch (const BranchCutError& e) {
    throw EvaluationError(spec.label() + ": basis vector " + std::to_string(index) + ": " +
                          e.what());
  } catch (const SingularPointError& e) {
    throw EvaluationError(spec.label() + ": basis vector " + std::to_string(index) + ": " +
                          e.what());
  }
}

void require_point(const GroupSpec& spec, const ComplexMatrix& p) {
  if (p.rows() != spec.ambient() || p.cols() != spec.ambient()) {
    throw DimensionError("point does not have the ambient size of " + spec.label());
  }
}

}  // namespace

Complex tau(const ScalarField& f, const GroupSpec& spec, const ComplexMatrix& p) {
  require_point(spec, p);
  Complex sum = 0.0;
  for (std::size_t i = 0; i < spec.dimension(); ++i) {
    const Jet2 j = evaluate_along(f, spec, p, i);
    sum += static_cast<double>(spec.basis()[i].eps) * j.f2;
  }
  return sum;
}

Complex kappa(const ScalarField& f, const ScalarField& h, const GroupSpec& spec,
              const ComplexMatrix& p) {
  require_point(spec, p);
  Complex sum = 0.0;
  for (std::size_t i = 0; i < spec.dimension(); ++i) {
    const Jet2 jf = evaluate_along(f, spec, p, i);
    const Jet2 jh = evaluate_along(h, spec, p, i);
    sum += static_cast<double>(spec.basis()[i].eps) * jf.f1 * jh.f1;
  }
  return sum;
}

Complex tau_linear(const LinearForm& c, const GroupSpec& spec, const ComplexMatrix& p) {
  require_point(spec, p);
  return c(p * spec.structure_sum());
}

Complex kappa_linear(const LinearForm& c, const LinearForm& d, const GroupSpec& spec,
                     const ComplexMatrix& p) {
  require_point(spec, p);
  Complex sum = 0.0;
  for (const auto& v : spec.basis()) {
    const ComplexMatrix pz = p * v.z;
    sum += static_cast<double>(v.eps) * c(pz) * d(pz);
  }
  return sum;
}

double scale_free_residual(Complex lhs, Complex rhs) {
  return std::abs(lhs - rhs) / (1.0 + std::abs(lhs) + std::abs(rhs));
}

}  // namespace lgh
