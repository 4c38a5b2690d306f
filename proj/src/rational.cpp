#include "lgh/rational.hpp"

#include <cctype>
#include <limits>

#include "lgh/errors.hpp"

namespace lgh {
namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw ParameterError("malformed rational '" + std::string(whole) + "'");
  BigInt value = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ParameterError("malformed rational '" + std::string(whole) + "'");
    }
    value = value * 10 + (text[i] - '0');
  }
  return negative ? BigInt(-value) : value;
}

std::int64_t to_i64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw ParameterError("rational component does not fit in 64 bits");
  }
  return v.convert_to<std::int64_t>();
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

Rational parse_rational(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  const BigInt num = parse_integer(trim(text.substr(0, slash)), text);
  const BigInt den = parse_integer(trim(text.substr(slash + 1)), text);
  if (den == 0) throw ParameterError("rational with zero denominator '" + std::string(text) + "'");
  return den < 0 ? Rational(BigInt(-num), BigInt(-den)) : Rational(num, den);
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::int64_t numerator_i64(const Rational& r) {
  return to_i64(boost::multiprecision::numerator(r));
}

std::int64_t denominator_i64(const Rational& r) {
  return to_i64(boost::multiprecision::denominator(r));
}

RationalC& RationalC::operator+=(const RationalC& o) {
  re += o.re;
  im += o.im;
  return *this;
}

RationalC& RationalC::operator-=(const RationalC& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

RationalC& RationalC::operator*=(const RationalC& o) {
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

RationalC operator+(RationalC a, const RationalC& b) { return a += b; }
RationalC operator-(RationalC a, const RationalC& b) { return a -= b; }
RationalC operator-(const RationalC& a) { return RationalC(-a.re, -a.im); }
RationalC operator*(RationalC a, const RationalC& b) { return a *= b; }

RationalC parse_rational_complex(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) return RationalC(parse_rational(text));
  return RationalC(parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1)));
}

std::string to_string(const RationalC& c) {
  return "(" + to_string(c.re) + ", " + to_string(c.im) + ")";
}

}  // namespace lgh
