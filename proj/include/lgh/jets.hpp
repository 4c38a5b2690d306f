#pragma once

#include <complex>
#include <cstddef>

#include "lgh/cmatrix.hpp"

namespace lgh {

/// Second-order jet of a complex quantity along a real curve parameter s:
/// value, first and second derivative at s = 0.
struct Jet2 {
  Complex f0{};
  Complex f1{};
  Complex f2{};

  static constexpr Jet2 constant(Complex c) { return Jet2{c, 0.0, 0.0}; }
  /// The identity curve s + c.
  static constexpr Jet2 variable(Complex c) { return Jet2{c, 1.0, 0.0}; }

  bool is_finite() const;
  friend bool operator==(const Jet2&, const Jet2&) = default;
};

Jet2 operator+(const Jet2& a, const Jet2& b);
Jet2 operator-(const Jet2& a, const Jet2& b);
Jet2 operator-(const Jet2& a);
Jet2 operator*(const Jet2& a, const Jet2& b);
Jet2 operator*(Complex c, const Jet2& a);
Jet2 operator*(const Jet2& a, Complex c);
/// Throws SingularPointError when |b.f0| == 0.
Jet2 operator/(const Jet2& a, const Jet2& b);

Jet2 conj(const Jet2& a);
Jet2 real(const Jet2& a);
Jet2 imag(const Jet2& a);

/// Integer power; negative exponents require a non-zero value.
Jet2 pow(const Jet2& a, int k);
/// Principal-branch power a^s. Integer-valued s takes the integer path,
/// anything else requires a.f0 off the branch-cut guard band.
Jet2 pow(const Jet2& a, Complex s);
/// Principal logarithm; throws BranchCutError inside the guard band.
Jet2 log(const Jet2& a);
Jet2 exp(const Jet2& a);

/// Guard band around the ray (-inf, 0] used by log and non-integer powers.
inline constexpr double kBranchCutBand = 1e-6;

/// True when z lies within kBranchCutBand * max(1, |z|) of (-inf, 0].
bool near_branch_cut(Complex z, double band = kBranchCutBand);

/// A matrix of jets, stored as its three Taylor coefficient matrices.
struct JetMatrix {
  ComplexMatrix value;
  ComplexMatrix d1;
  ComplexMatrix d2;

  std::size_t rows() const noexcept { return value.rows(); }
  std::size_t cols() const noexcept { return value.cols(); }
  Jet2 operator()(std::size_t i, std::size_t j) const {
    return Jet2{value(i, j), d1(i, j), d2(i, j)};
  }

  static JetMatrix constant(const ComplexMatrix& m);
};

/// Order-2 expansion of s -> p * exp(sZ): (p, pZ, pZ^2).
JetMatrix curve_jet(const ComplexMatrix& p, const ComplexMatrix& z);

}  // namespace lgh
