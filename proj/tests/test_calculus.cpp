#include <doctest.h>

#include "catalog.hpp"
#include "lgh/calculus.hpp"
#include "lgh/errors.hpp"
#include "oracles.hpp"

using namespace lgh;
using F = GroupFamily;

namespace {

ComplexMatrix coefficient(std::size_t n, std::uint64_t seed) {
  const auto re = uniform_stream(seed, 0, 7, n * n, -1.0, 1.0);
  const auto im = uniform_stream(seed, 0, 8, n * n, -1.0, 1.0);
  ComplexMatrix c(n, n);
  for (std::size_t i = 0; i < n * n; ++i) c(i / n, i % n) = Complex(re[i], im[i]);
  return c;
}

ScalarField entry(std::size_t i, std::size_t j) { return ScalarField::entry(i, j); }

}  // namespace

TEST_CASE("matrix-element values at the identity") {
  const ComplexMatrix i2 = ComplexMatrix::identity(2);
  const GroupSpec glc = make_group(F::GLC, {2, 0, 0});
  CHECK(std::abs(tau(entry(0, 0), glc, i2) + 4.0) < 1e-13);
  CHECK(std::abs(kappa(entry(0, 0), entry(1, 1), glc, i2)) < 1e-13);
  CHECK(std::abs(kappa(entry(0, 0), entry(0, 0), glc, i2) + 2.0) < 1e-13);
  CHECK(std::abs(tau(entry(0, 0), make_group(F::GLR, {3, 0, 0}), ComplexMatrix::identity(3)) + 3.0) <
        1e-13);
  const ScalarField soc_field = entry(0, 0) + Complex(0, 1) * entry(1, 0);
  CHECK(std::abs(tau(soc_field, make_group(F::SOC, {2, 0, 0}), i2) + 1.0) < 1e-13);
  CHECK(std::abs(kappa(entry(0, 0), entry(0, 0), make_group(F::U, {2, 0, 0}), i2) + 1.0) < 1e-13);
}

TEST_CASE("linear path values") {
  const GroupSpec glc = make_group(F::GLC, {2, 0, 0});
  const LinearForm e11{ComplexMatrix::unit(2, 0, 0)};
  CHECK((glc.structure_sum() + 4.0 * ComplexMatrix::identity(2)).max_abs() < 1e-13);
  CHECK(std::abs(tau_linear(e11, glc, ComplexMatrix::identity(2)) + 4.0) < 1e-13);
  CHECK(std::abs(kappa_linear(e11, e11, glc, ComplexMatrix::identity(2)) + 2.0) < 1e-13);

  const GroupSpec soc2 = make_group(F::SOC, {2, 0, 0});
  const LinearForm c{ComplexMatrix{{1.0, 2.0}, {1.0, 2.0}}};
  const LinearForm d{ComplexMatrix{{3.0, -1.0}, {3.0, -1.0}}};
  const ComplexMatrix id = ComplexMatrix::identity(2);
  const Complex expected = -c(id) * d(id) + 2.0 * (1.0 * 3.0 + 2.0 * -1.0);
  CHECK(std::abs(kappa_linear(c, d, soc2, id) - expected) < 1e-13);
}

TEST_CASE("property: jets agree with finite differences") {
  for (auto [f, gp] : {std::pair{F::GLC, GroupParams{2, 0, 0}}, {F::SOstar, {2, 0, 0}},
                       {F::SUpq, {0, 1, 2}}, {F::SpR, {1, 0, 0}}}) {
    const GroupSpec s = make_group(f, gp);
    CAPTURE(s.label());
    const std::size_t n = s.ambient();
    const LinearForm lf{coefficient(n, 3)};
    const LinearForm lg{coefficient(n, 4)};
    const ScalarField field = ScalarField::linear(lf) * ScalarField::linear(lg) /
                              (ScalarField::constant(3.0) + ScalarField::linear(lf));
    const oracle::PointFunction fn = [&](const ComplexMatrix& g) {
      return lf(g) * lg(g) / (3.0 + lf(g));
    };
    const oracle::PointFunction gn = [&](const ComplexMatrix& g) { return lg(g); };
    for (std::uint64_t i = 0; i < 3; ++i) {
      const ComplexMatrix p = sample_point(s, 21, i);
      CHECK(oracle::rel(tau(field, s, p), oracle::fd_tau(fn, s, p)) < 1e-6);
      CHECK(oracle::rel(kappa(field, ScalarField::linear(lg), s, p), oracle::fd_kappa(fn, gn, s, p)) <
            1e-6);
    }
  }
}

TEST_CASE("property: product rule, symmetry and linear/jet agreement over the catalog") {
  for (const auto& s : catalog::small_specs()) {
    CAPTURE(s.label());
    const std::size_t n = s.ambient();
    const LinearForm lf{coefficient(n, 1)};
    const LinearForm lg{coefficient(n, 2)};
    const ScalarField f = ScalarField::linear(lf);
    const ScalarField g = ScalarField::linear(lg);
    for (std::uint64_t i = 0; i < 5; ++i) {
      const ComplexMatrix p = sample_point(s, 17, i);
      const Complex lhs = tau(f * g, s, p);
      const Complex rhs = tau(f, s, p) * g.value_at(p) + 2.0 * kappa(f, g, s, p) +
                          f.value_at(p) * tau(g, s, p);
      CHECK(scale_free_residual(lhs, rhs) <= 1e-8);
      CHECK(scale_free_residual(kappa(f, g, s, p), kappa(g, f, s, p)) <= 1e-14);
      CHECK(scale_free_residual(tau_linear(lf, s, p), tau(f, s, p)) <= 1e-10);
      CHECK(scale_free_residual(kappa_linear(lf, lg, s, p), kappa(f, g, s, p)) <= 1e-10);
      const Complex a(0.3, -1.2);
      CHECK(scale_free_residual(kappa(a * f + g, g, s, p),
                                a * kappa(f, g, s, p) + kappa(g, g, s, p)) <= 1e-12);
    }
  }
}

TEST_CASE("property: matrix elements are tau-eigen with the table lambda") {
  for (const auto& s : catalog::small_specs()) {
    CAPTURE(s.label());
    const double lam = to_double(s.lambda());
    for (std::uint64_t k = 0; k < 3; ++k) {
      const ComplexMatrix p = sample_point(s, 5, k);
      for (std::size_t j = 0; j < s.block_size(); ++j) {
        const ScalarField z = ScalarField::entry(0, j);
        CHECK(scale_free_residual(tau(z, s, p), lam * p(0, j)) <= 1e-8);
      }
    }
  }
}

TEST_CASE("matrix-element conformality relations") {
  const GroupSpec glc = make_group(F::GLC, {3, 0, 0});
  const GroupSpec glh = make_group(F::GLH, {2, 0, 0});
  const GroupSpec u3 = make_group(F::U, {3, 0, 0});
  for (std::uint64_t k = 0; k < 5; ++k) {
    const ComplexMatrix p = sample_point(glc, 8, k);
    const ComplexMatrix pu = sample_point(u3, 8, k);
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t kk = 0; kk < 3; ++kk)
          for (std::size_t b = 0; b < 3; ++b) {
            CHECK(scale_free_residual(kappa(entry(j, a), entry(kk, b), glc, p),
                                      -2.0 * p(kk, a) * p(j, b)) <= 1e-8);
            CHECK(scale_free_residual(kappa(entry(j, a), entry(kk, b), u3, pu),
                                      -pu(kk, a) * pu(j, b)) <= 1e-8);
          }
    const ComplexMatrix q = sample_point(glh, 8, k);
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t kk = 0; kk < 2; ++kk)
          for (std::size_t b = 0; b < 2; ++b) {
            const Complex z_ka = q(kk, a);
            const Complex w_jb = q(j, 2 + b);
            CHECK(scale_free_residual(kappa(entry(j, a), entry(kk, 2 + b), glh, q), -z_ka * w_jb) <=
                  1e-8);
          }
  }
}

TEST_CASE("property: left invariance") {
  const GroupSpec s = make_group(F::SLC, {3, 0, 0});
  const LinearForm lf{coefficient(3, 9)};
  const ScalarField f = ScalarField::linear(lf) * ScalarField::linear(lf);
  for (std::uint64_t k = 0; k < 5; ++k) {
    const ComplexMatrix q = sample_point(s, 1, k);
    const ComplexMatrix p = sample_point(s, 2, k);
    // (phi o L_q)(g) = phi(q g) is again a quadratic in g.
    const LinearForm shifted{(q.transpose() * lf.c)};
    const ScalarField translated = ScalarField::linear(shifted) * ScalarField::linear(shifted);
    CHECK(std::abs(shifted(p) - lf(q * p)) < 1e-12);
    CHECK(scale_free_residual(tau(translated, s, p), tau(f, s, q * p)) <= 1e-8);
  }
}

TEST_CASE("evaluation errors name the basis vector") {
  const GroupSpec s = make_group(F::GLC, {1, 0, 0});
  const ComplexMatrix minus_one{{-1.0}};
  const ScalarField lg = log(ScalarField::entry(0, 0));
  CHECK_THROWS_AS(tau(lg, s, minus_one), EvaluationError);
  try {
    tau(lg, s, minus_one);
  } catch (const EvaluationError& e) {
    CHECK(std::string(e.what()).find("basis vector 0") != std::string::npos);
  }
  const ScalarField inv = ScalarField::constant(1.0) / ScalarField::entry(0, 0);
  CHECK_THROWS_AS(kappa(inv, inv, s, ComplexMatrix{{0.0}}), EvaluationError);
  CHECK_THROWS_AS(tau(inv, s, ComplexMatrix::identity(2)), DimensionError);
}

TEST_CASE("constant jets have vanishing derivatives") {
  const ScalarField f = pow(ScalarField::entry(0, 1), 3) + conj(ScalarField::entry(1, 0));
  const Jet2 j = f(JetMatrix::constant(ComplexMatrix{{1.0, 2.0}, {Complex(0, 1), 4.0}}));
  CHECK(j.f1 == Complex{});
  CHECK(j.f2 == Complex{});
  CHECK(j.f0 == Complex(8.0, -1.0));
}
