#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <cstdint>
#include <string>
#include <string_view>

namespace lgh {

/// Arbitrary-precision exact rational; always stored reduced with a positive
/// denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// "num/den", denominator always written (e.g. "3/1").
std::string to_string(const Rational& r);
/// Accepts "a", "-a", "a/b". Throws ParameterError on malformed input or b == 0.
Rational parse_rational(std::string_view text);
double to_double(const Rational& r);
/// Numerator/denominator as 64-bit integers; throws ParameterError if they do not fit.
std::int64_t numerator_i64(const Rational& r);
std::int64_t denominator_i64(const Rational& r);

/// Complex number with exact rational real and imaginary parts.
struct RationalC {
  Rational re{0};
  Rational im{0};

  RationalC() = default;
  RationalC(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  RationalC(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  RationalC(long long r) : re(r) {}  // NOLINT(google-explicit-constructor)

  bool is_zero() const { return re == 0 && im == 0; }
  std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }

  RationalC& operator+=(const RationalC& o);
  RationalC& operator-=(const RationalC& o);
  RationalC& operator*=(const RationalC& o);

  friend bool operator==(const RationalC& a, const RationalC& b) {
    return a.re == b.re && a.im == b.im;
  }
};

RationalC operator+(RationalC a, const RationalC& b);
RationalC operator-(RationalC a, const RationalC& b);
RationalC operator-(const RationalC& a);
RationalC operator*(RationalC a, const RationalC& b);

/// "re" or "re,im", each part parsed by parse_rational.
RationalC parse_rational_complex(std::string_view text);
std::string to_string(const RationalC& c);

}  // namespace lgh
