#include <doctest.h>

#include <cmath>

#include "catalog.hpp"
#include "lgh/errors.hpp"
#include "lgh/groups.hpp"

using namespace lgh;
using F = GroupFamily;

namespace {

std::size_t dimension_formula(F f, int n, int p, int q) {
  const int m = p + q;
  switch (f) {
    case F::GLC: return 2 * n * n;
    case F::GLR: return n * n;
    case F::GLH: return 4 * n * n;
    case F::SLC: return 2 * (n * n - 1);
    case F::SLR: return n * n - 1;
    case F::SLH: return 4 * n * n - 1;
    case F::SOC: return n * (n - 1);
    case F::SpC: return 2 * n * (2 * n + 1);
    case F::SpR: return n * (2 * n + 1);
    case F::SOstar: return n * (2 * n - 1);
    case F::SUpq: return m * m - 1;
    case F::SOpq: return m * (m - 1) / 2;
    case F::Sppq: return m * (2 * m + 1);
    case F::U: return n * n;
    case F::SU: return n * n - 1;
    case F::SO: return n * (n - 1) / 2;
    case F::Sp: return n * (2 * n + 1);
  }
  return 0;
}

std::size_t compact_dimension(F f, int n, int p, int q) {
  switch (f) {
    case F::GLC: case F::U: return n * n;
    case F::GLR: case F::SOC: case F::SO: return n * (n - 1) / 2;
    case F::GLH: case F::SpC: case F::Sp: return n * (2 * n + 1);
    case F::SLC: case F::SU: return n * n - 1;
    case F::SLR: return n * (n - 1) / 2;
    case F::SLH: return n * (2 * n + 1);
    case F::SpR: return n * n;
    case F::SOstar: return n * n;
    case F::SUpq: return p * p + q * q - 1;
    case F::SOpq: return p * (p - 1) / 2 + q * (q - 1) / 2;
    case F::Sppq: return p * (2 * p + 1) + q * (2 * q + 1);
  }
  return 0;
}

std::size_t expected_ambient(F f, int n, int p, int q) {
  switch (f) {
    case F::GLH: case F::SLH: case F::SpC: case F::SpR: case F::SOstar: case F::Sp: return 2 * n;
    case F::SUpq: case F::SOpq: return p + q;
    case F::Sppq: return 2 * (p + q);
    default: return n;
  }
}

}  // namespace

TEST_CASE("eigenvalue table entries") {
  auto check = [](F f, GroupParams gp, Rational lam, Rational mu) {
    const GroupSpec s = make_group(f, gp);
    CHECK(s.lambda() == lam);
    CHECK(s.mu() == mu);
  };
  check(F::GLC, {2, 0, 0}, -4, -2);
  check(F::GLR, {3, 0, 0}, -3, -1);
  check(F::GLH, {2, 0, 0}, -4, -1);
  check(F::SLC, {3, 0, 0}, Rational(-16, 3), Rational(-4, 3));
  check(F::SLR, {2, 0, 0}, Rational(-3, 2), Rational(-1, 2));
  check(F::SLH, {2, 0, 0}, Rational(-15, 4), Rational(-3, 4));
  check(F::SLH, {1, 0, 0}, Rational(-3, 2), Rational(-1, 2));
  check(F::SOC, {4, 0, 0}, -3, -1);
  check(F::SpC, {2, 0, 0}, -5, -1);
  check(F::SpR, {2, 0, 0}, Rational(-5, 2), Rational(-1, 2));
  check(F::SOstar, {3, 0, 0}, Rational(-5, 2), Rational(-1, 2));
  check(F::SUpq, {0, 1, 1}, Rational(-3, 2), Rational(-1, 2));
  check(F::SOpq, {0, 1, 2}, -1, Rational(-1, 2));
  check(F::Sppq, {0, 1, 1}, Rational(-5, 2), Rational(-1, 2));
  check(F::U, {3, 0, 0}, -3, -1);
  check(F::SU, {3, 0, 0}, Rational(-8, 3), Rational(-2, 3));
  check(F::SO, {3, 0, 0}, -1, Rational(-1, 2));
  check(F::Sp, {2, 0, 0}, Rational(-5, 2), Rational(-1, 2));
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(make_group(F::GLC, {0, 0, 0}), ParameterError);
  CHECK_THROWS_AS(make_group(F::SLC, {1, 0, 0}), ParameterError);
  CHECK_THROWS_AS(make_group(F::SOC, {1, 0, 0}), ParameterError);
  CHECK_THROWS_AS(make_group(F::SU, {1, 0, 0}), ParameterError);
  CHECK_THROWS_AS(make_group(F::SUpq, {0, 0, 1}), ParameterError);
  CHECK_THROWS_AS(make_group(F::Sppq, {0, 1, 0}), ParameterError);
  CHECK(make_group(F::SUpq, {3, 1, 1}).params() == GroupParams{0, 1, 1});
  CHECK(make_group(F::GLC, {2, 0, 0}).label() == "glc(n=2)");
  CHECK(make_group(F::SUpq, {0, 1, 2}).label() == "su_pq(p=1,q=2)");
}

TEST_CASE("names round trip") {
  for (auto f : kAllFamilies) CHECK(parse_family(family_name(f)) == f);
  CHECK_FALSE(parse_family("gl").has_value());
  CHECK(catalog_index(F::GLC) == 0);
  CHECK(catalog_index(F::Sp) == 16);
}

TEST_CASE("small bases") {
  const GroupSpec glc1 = make_group(F::GLC, {1, 0, 0});
  REQUIRE(glc1.dimension() == 2);
  CHECK(std::abs(glc1.basis()[0].z(0, 0) - Complex(0, 1)) < 1e-15);
  CHECK(glc1.basis()[0].eps == 1);
  CHECK(std::abs(glc1.basis()[1].z(0, 0) + 1.0) < 1e-15);
  CHECK(glc1.basis()[1].eps == -1);
  const GroupSpec sostar = make_group(F::SOstar, {2, 0, 0});
  CHECK(sostar.dimension() == 6);
  CHECK(sostar.positive_count() == 4);
}

TEST_CASE("property: cardinality, signature and ambient size over the catalog") {
  for (const auto& s : catalog::small_specs()) {
    CAPTURE(s.label());
    const auto [n, p, q] = s.params();
    CHECK(s.dimension() == dimension_formula(s.family(), n, p, q));
    CHECK(s.dimension() == expected_dimension(s.family(), s.params()));
    CHECK(s.positive_count() == compact_dimension(s.family(), n, p, q));
    CHECK(s.ambient() == expected_ambient(s.family(), n, p, q));
  }
}

TEST_CASE("property: Gram matrix equals diag(eps)") {
  for (const auto& s : catalog::small_specs()) {
    CAPTURE(s.label());
    const auto& b = s.basis();
    double worst = 0.0;
    for (std::size_t i = 0; i < b.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        const double g = -(b[i].z * b[j].z).trace().real();
        worst = std::max(worst, std::abs(g - (i == j ? b[i].eps : 0)));
      }
    }
    CHECK(worst <= 1e-12);
  }
}

TEST_CASE("property: algebra closure under commutators") {
  for (const auto& s : catalog::small_specs()) {
    if (s.dimension() > 40) continue;
    CAPTURE(s.label());
    const auto& b = s.basis();
    double worst = 0.0;
    for (std::size_t i = 0; i < b.size(); ++i) {
      for (std::size_t j = i + 1; j < b.size(); ++j) {
        const ComplexMatrix c = commutator(b[i].z, b[j].z);
        ComplexMatrix rebuilt(c.rows(), c.cols());
        for (const auto& e : b) rebuilt += Complex(e.eps * metric(c, e.z)) * e.z;
        worst = std::max(worst, (c - rebuilt).frobenius_norm());
      }
    }
    CHECK(worst <= 1e-9);
  }
}

TEST_CASE("property: the structure sum is lambda times the identity") {
  for (const auto& s : catalog::small_specs()) {
    CAPTURE(s.label());
    ComplexMatrix direct(s.ambient(), s.ambient());
    for (const auto& e : s.basis()) direct += Complex(e.eps) * (e.z * e.z);
    CHECK((direct - s.structure_sum()).max_abs() < 1e-13);
    const ComplexMatrix expected = to_double(s.lambda()) * ComplexMatrix::identity(s.ambient());
    CHECK((direct - expected).max_abs() < 1e-12);
  }
}

TEST_CASE("property: sampled points lie in the group") {
  for (const auto& s : catalog::small_specs()) {
    CAPTURE(s.label());
    for (std::uint64_t i = 0; i < 10; ++i) {
      const Membership m = contains(s, sample_point(s, 42, i));
      CHECK(m.member);
      CHECK(m.residual <= 1e-8);
    }
  }
}

TEST_CASE("sampling is deterministic and the zero element maps to the identity") {
  const GroupSpec s = make_group(F::SLR, {2, 0, 0});
  CHECK(sample_point(s, 5, 3) == sample_point(s, 5, 3));
  CHECK_FALSE(sample_point(s, 5, 3) == sample_point(s, 5, 4));
  CHECK_FALSE(sample_point(s, 5, 3) == sample_point(s, 6, 3));
  const std::vector<double> zero(s.dimension(), 0.0);
  CHECK(expm(algebra_element(s, zero)) == ComplexMatrix::identity(2));
  for (std::uint64_t i = 0; i < 10; ++i) {
    const ComplexMatrix p = sample_point(s, 9, i);
    CHECK(std::abs(det(p) - 1.0) < 1e-10);
    for (auto e : p.entries()) CHECK(std::abs(e.imag()) < 1e-14);
  }
  CHECK_THROWS_AS(sample_point(s, 1, 1, 0.0), ParameterError);
}

TEST_CASE("membership examples") {
  const Complex theta(0.3, 0.7);
  const ComplexMatrix rot{{std::cos(theta), -std::sin(theta)}, {std::sin(theta), std::cos(theta)}};
  const Membership soc = contains(make_group(F::SOC, {2, 0, 0}), rot);
  CHECK(soc.member);
  CHECK(soc.residual <= 1e-12);

  const ComplexMatrix unimodular{{Complex(2, 1), 3.0}, {Complex(0, 1), Complex(0.6, 0.2)}};
  const Complex d = det(unimodular);
  const ComplexMatrix scaled = (1.0 / std::sqrt(d)) * unimodular;
  CHECK(contains(make_group(F::SpC, {1, 0, 0}), scaled).member);

  const Membership slc = contains(make_group(F::SLC, {2, 0, 0}), ComplexMatrix{{2.0, 0.0}, {0.0, 1.0}});
  CHECK_FALSE(slc.member);
  CHECK(slc.residual == doctest::Approx(1.0));

  const GroupSpec su11 = make_group(F::SUpq, {0, 1, 1});
  const ComplexMatrix ipq = signature_form(1, 1);
  for (std::uint64_t i = 0; i < 5; ++i) {
    const ComplexMatrix z = sample_point(su11, 3, i);
    CHECK((z * ipq * z.adjoint() - ipq).frobenius_norm() < 1e-9);
  }
  CHECK_FALSE(contains(make_group(F::GLR, {2, 0, 0}), ComplexMatrix{{Complex(0, 1), 0.0}, {0.0, 1.0}}).member);
  CHECK_THROWS_AS(contains(su11, ComplexMatrix::identity(3)), DimensionError);
}
