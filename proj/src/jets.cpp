#include "lgh/jets.hpp"

#include <algorithm>
#include <cmath>

#include "lgh/errors.hpp"

namespace lgh {
namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Chain rule for g(a) given g(a0), g'(a0), g''(a0).
Jet2 compose(const Jet2& a, Complex g0, Complex g1, Complex g2) {
  return Jet2{g0, g1 * a.f1, g2 * a.f1 * a.f1 + g1 * a.f2};
}

bool is_integer_valued(Complex s, int& out) {
  if (s.imag() != 0.0) return false;
  const double r = std::round(s.real());
  if (r != s.real() || std::abs(r) > 1 << 20) return false;
  out = static_cast<int>(r);
  return true;
}

}  // namespace

bool Jet2::is_finite() const { return finite(f0) && finite(f1) && finite(f2); }

Jet2 operator+(const Jet2& a, const Jet2& b) { return {a.f0 + b.f0, a.f1 + b.f1, a.f2 + b.f2}; }
Jet2 operator-(const Jet2& a, const Jet2& b) { return {a.f0 - b.f0, a.f1 - b.f1, a.f2 - b.f2}; }
Jet2 operator-(const Jet2& a) { return {-a.f0, -a.f1, -a.f2}; }

Jet2 operator*(const Jet2& a, const Jet2& b) {
  return {a.f0 * b.f0, a.f1 * b.f0 + a.f0 * b.f1, a.f2 * b.f0 + 2.0 * a.f1 * b.f1 + a.f0 * b.f2};
}

Jet2 operator*(Complex c, const Jet2& a) { return {c * a.f0, c * a.f1, c * a.f2}; }
Jet2 operator*(const Jet2& a, Complex c) { return c * a; }

Jet2 operator/(const Jet2& a, const Jet2& b) {
  if (std::abs(b.f0) == 0.0) throw SingularPointError("jet division by a zero-valued jet");
  const Complex q0 = a.f0 / b.f0;
  const Complex q1 = (a.f1 - q0 * b.f1) / b.f0;
  const Complex q2 = (a.f2 - 2.0 * q1 * b.f1 - q0 * b.f2) / b.f0;
  return {q0, q1, q2};
}

Jet2 conj(const Jet2& a) { return {std::conj(a.f0), std::conj(a.f1), std::conj(a.f2)}; }
Jet2 real(const Jet2& a) { return {a.f0.real(), a.f1.real(), a.f2.real()}; }
Jet2 imag(const Jet2& a) { return {a.f0.imag(), a.f1.imag(), a.f2.imag()}; }

Jet2 pow(const Jet2& a, int k) {
  if (k == 0) return Jet2::constant(1.0);
  if (k < 0) {
    if (std::abs(a.f0) == 0.0) throw SingularPointError("negative power of a zero-valued jet");
    return Jet2::constant(1.0) / pow(a, -k);
  }
  const double kd = k;
  const Complex g0 = std::pow(a.f0, k);
  const Complex g1 = kd * (k >= 1 ? std::pow(a.f0, k - 1) : Complex{});
  const Complex g2 = kd * (kd - 1.0) * (k >= 2 ? std::pow(a.f0, k - 2) : Complex{});
  return compose(a, g0, g1, g2);
}

Jet2 pow(const Jet2& a, Complex s) {
  int k = 0;
  if (is_integer_valued(s, k)) return pow(a, k);
  if (near_branch_cut(a.f0)) {
    throw BranchCutError("non-integer power evaluated on the branch cut (-inf, 0]");
  }
  const Complex g0 = std::exp(s * std::log(a.f0));
  const Complex g1 = s * g0 / a.f0;
  const Complex g2 = s * (s - 1.0) * g0 / (a.f0 * a.f0);
  return compose(a, g0, g1, g2);
}

Jet2 log(const Jet2& a) {
  if (near_branch_cut(a.f0)) throw BranchCutError("log evaluated on the branch cut (-inf, 0]");
  const Complex inv = 1.0 / a.f0;
  return compose(a, std::log(a.f0), inv, -inv * inv);
}

Jet2 exp(const Jet2& a) {
  const Complex e = std::exp(a.f0);
  return compose(a, e, e, e);
}

bool near_branch_cut(Complex z, double band) {
  const double dist = z.real() <= 0.0 ? std::abs(z.imag()) : std::abs(z);
  return dist <= band * std::max(1.0, std::abs(z));
}

JetMatrix JetMatrix::constant(const ComplexMatrix& m) {
  return JetMatrix{m, ComplexMatrix(m.rows(), m.cols()), ComplexMatrix(m.rows(), m.cols())};
}

JetMatrix curve_jet(const ComplexMatrix& p, const ComplexMatrix& z) {
  if (!p.is_square() || !z.is_square() || p.rows() != z.rows()) {
    throw DimensionError("curve_jet: point and direction must be square of equal size");
  }
  ComplexMatrix pz = p * z;
  ComplexMatrix pzz = pz * z;
  return JetMatrix{p, std::move(pz), std::move(pzz)};
}

}  // namespace lgh
