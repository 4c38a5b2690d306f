#include "lgh/eigenfamilies.hpp"

#include <cmath>
#include <nlohmann/json.hpp>

#include "lgh/errors.hpp"

namespace lgh {
namespace {

using nlohmann::json;

constexpr double kIsotropyTol = 1e-12;

double norm2(std::span<const Complex> x) {
  double s = 0.0;
  for (const auto& e : x) s += std::norm(e);
  return s;
}

void require_nonzero(std::span<const Complex> x, const char* name) {
  if (norm2(x) == 0.0) throw ParameterError(std::string("family vector ") + name + " is zero");
}

void require_length(std::span<const Complex> x, std::size_t n, const std::string& what) {
  if (x.size() != n) {
    throw DimensionError(what + " has length " + std::to_string(x.size()) + ", expected " +
                         std::to_string(n));
  }
}

ComplexMatrix outer(std::span<const Complex> x, std::span<const Complex> y) {
  ComplexMatrix m(x.size(), y.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) m(i, j) = x[i] * y[j];
  return m;
}

ComplexVector unit_vector(std::size_t n, std::size_t k) {
  ComplexVector e(n);
  e[k] = 1.0;
  return e;
}

ComplexVector generic_vector(std::size_t n, double re0, double re_step, double im0,
                             double im_step) {
  ComplexVector out(n);
  for (std::size_t j = 0; j < n; ++j) {
    out[j] = Complex(re0 + re_step * static_cast<double>(j), im0 + im_step * static_cast<double>(j));
  }
  return out;
}

ComplexVector isotropic_vector(std::size_t n) {
  ComplexVector v(n);
  v[0] = 1.0;
  v[1] = Complex(0.0, 1.0);
  return v;
}

Complex complex_from(const json& j) {
  if (j.is_array()) {
    if (j.size() != 2) throw ParameterError("complex value must be [re, im]");
    return Complex(j[0].get<double>(), j[1].get<double>());
  }
  return Complex(j.get<double>(), 0.0);
}

ComplexVector vector_from(const json& j) {
  ComplexVector out;
  for (const auto& e : j) out.push_back(complex_from(e));
  return out;
}

}  // namespace

std::vector<ScalarField> FamilySpec::fields() const {
  std::vector<ScalarField> out;
  out.reserve(members.size());
  for (const auto& m : members) out.push_back(ScalarField::linear(m));
  return out;
}

Complex bilinear(std::span<const Complex> x, std::span<const Complex> y) {
  if (x.size() != y.size()) throw DimensionError("bilinear: length mismatch");
  Complex s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

bool requires_isotropy(GroupFamily f) {
  return f == GroupFamily::SOC || f == GroupFamily::SOpq || f == GroupFamily::SO;
}

FamilySpec make_family(const GroupSpec& spec, ComplexVector v, std::optional<ComplexVector> u,
                       std::vector<MemberParams> params, bool enforce_isotropy) {
  const std::size_t ambient = spec.ambient();
  const std::size_t half = spec.block_size();
  FamilySpec fam{spec, FamilyShape::RankOne, {}, {}, {}, {}};

  const bool spr_full = spec.family() == GroupFamily::SpR && v.size() == ambient;
  const bool block = is_block_family(spec.family()) && !spr_full;

  require_length(v, block ? half : ambient, "v");
  require_nonzero(v, "v");

  if (block) {
    fam.shape = FamilyShape::Block;
    ComplexVector uu = u ? std::move(*u) : v;
    require_length(uu, half, "u");
    require_nonzero(uu, "u");
    for (std::size_t k = 0; k < params.size(); ++k) {
      auto& mp = params[k];
      if (mp.b.empty()) mp.b.assign(half, 0.0);
      require_length(mp.a, half, "member " + std::to_string(k) + " a");
      require_length(mp.b, half, "member " + std::to_string(k) + " b");
      const ComplexMatrix top_left = outer(uu, mp.a);
      const ComplexMatrix top_right = outer(v, mp.b);
      const ComplexMatrix o(half, half);
      fam.members.push_back(LinearForm{block2x2(top_left, top_right, o, o)});
    }
    fam.u = std::move(uu);
  } else {
    if (u) throw ParameterError(spec.label() + ": u is only meaningful for block families");
    if (enforce_isotropy && requires_isotropy(spec.family())) {
      const double residual = std::abs(bilinear(v, v));
      if (residual > kIsotropyTol * (1.0 + norm2(v))) {
        throw IsotropyError(spec.label() + ": v is not isotropic, (v,v) has modulus " +
                                std::to_string(residual),
                            residual);
      }
    }
    for (std::size_t k = 0; k < params.size(); ++k) {
      const auto& mp = params[k];
      if (!mp.b.empty()) {
        throw ParameterError(spec.label() + ": member b is only meaningful for block families");
      }
      require_length(mp.a, ambient, "member " + std::to_string(k) + " a");
      fam.members.push_back(LinearForm{outer(v, mp.a)});
    }
  }
  fam.v = std::move(v);
  fam.params = std::move(params);
  return fam;
}

FamilySpec make_raw_family(const GroupSpec& spec, std::vector<ComplexMatrix> coefficients) {
  FamilySpec fam{spec, FamilyShape::Raw, {}, {}, {}, {}};
  for (auto& c : coefficients) {
    if (c.rows() != spec.ambient() || c.cols() != spec.ambient()) {
      throw DimensionError("raw family coefficient has the wrong shape for " + spec.label());
    }
    fam.members.push_back(LinearForm{std::move(c)});
  }
  return fam;
}

FamilySpec desk_family(const GroupSpec& spec) {
  const bool block = is_block_family(spec.family());
  const std::size_t m = spec.block_size();
  ComplexVector v = requires_isotropy(spec.family()) ? isotropic_vector(m)
                                                     : generic_vector(m, 1.0, -0.25, 0.5, 0.3);
  const ComplexVector a_generic = generic_vector(m, 0.6, -0.15, -0.35, 0.2);
  const ComplexVector b_generic = generic_vector(m, -0.4, 0.1, 0.7, -0.05);
  std::vector<MemberParams> params;
  for (std::size_t k = 0; k < m; ++k) {
    params.push_back({unit_vector(m, k), block ? ComplexVector(m) : ComplexVector{}});
  }
  if (block) {
    for (std::size_t k = 0; k < m; ++k) params.push_back({ComplexVector(m), unit_vector(m, k)});
    params.push_back({a_generic, b_generic});
  } else {
    params.push_back({a_generic, {}});
  }
  return make_family(spec, std::move(v), std::nullopt, std::move(params));
}

FamilySpec spr_full_rank_family(const GroupSpec& spec) {
  if (spec.family() != GroupFamily::SpR) {
    throw ParameterError("spr_full_rank_family: group is not spr");
  }
  const std::size_t n = spec.ambient();
  std::vector<MemberParams> params;
  for (std::size_t k = 0; k < n; ++k) params.push_back({unit_vector(n, k), {}});
  params.push_back({generic_vector(n, 0.6, -0.15, -0.35, 0.2), {}});
  return make_family(spec, generic_vector(n, 1.0, -0.25, 0.5, 0.3), std::nullopt,
                     std::move(params));
}

FamilySpec family_from_json(const GroupSpec& spec, std::string_view text) {
  try {
    const json doc = json::parse(text);
    ComplexVector v = vector_from(doc.at("v"));
    std::optional<ComplexVector> u;
    if (doc.contains("u") && !doc.at("u").is_null()) u = vector_from(doc.at("u"));
    std::vector<MemberParams> params;
    for (const auto& m : doc.at("members")) {
      MemberParams mp;
      mp.a = vector_from(m.at("a"));
      if (m.contains("b")) mp.b = vector_from(m.at("b"));
      params.push_back(std::move(mp));
    }
    return make_family(spec, std::move(v), std::move(u), std::move(params));
  } catch (const json::exception& e) {
    throw ParameterError(std::string("malformed family JSON: ") + e.what());
  }
}

VerificationReport verify_eigen(const FamilySpec& family, const VerifyOptions& opts,
                                std::string test_name) {
  if (opts.samples < 1) throw ParameterError("verify_eigen: samples must be >= 1");
  const GroupSpec& spec = family.group;
  const Complex lambda = to_double(spec.lambda());
  const Complex mu = to_double(spec.mu());
  const auto fields = family.fields();
  const std::size_t m = family.members.size();

  ReportBuilder rb(GroupDescriptor::of(spec), std::move(test_name), opts.seed, opts.tol);
  for (const char* c : {"tau_linear", "kappa_linear", "tau_jet", "kappa_jet", "linear_vs_jet"}) {
    rb.declare(c);
  }
  for (std::size_t s = 0; s < opts.samples; ++s) {
    const ComplexMatrix p = sample_point(spec, opts.seed, s, opts.radius);
    std::vector<Complex> phi(m);
    for (std::size_t i = 0; i < m; ++i) phi[i] = family.members[i](p);

    // Jet path: one curve per basis vector, shared by all members.
    std::vector<Complex> tau_j(m, 0.0);
    std::vector<Complex> kappa_j(m * m, 0.0);
    std::vector<Jet2> jets(m);
    for (const auto& bv : spec.basis()) {
      const JetMatrix curve = curve_jet(p, bv.z);
      const double eps = bv.eps;
      for (std::size_t i = 0; i < m; ++i) {
        jets[i] = fields[i](curve);
        tau_j[i] += eps * jets[i].f2;
      }
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) kappa_j[i * m + j] += eps * jets[i].f1 * jets[j].f1;
    }

    for (std::size_t i = 0; i < m; ++i) {
      const Complex t_lin = tau_linear(family.members[i], spec, p);
      rb.record_pair("tau_linear", s, t_lin, lambda * phi[i]);
      rb.record_pair("tau_jet", s, tau_j[i], lambda * phi[i]);
      rb.record_pair("linear_vs_jet", s, t_lin, tau_j[i]);
      for (std::size_t j = 0; j < m; ++j) {
        const Complex k_lin = kappa_linear(family.members[i], family.members[j], spec, p);
        rb.record_pair("kappa_linear", s, k_lin, mu * phi[i] * phi[j]);
        rb.record_pair("kappa_jet", s, kappa_j[i * m + j], mu * phi[i] * phi[j]);
        rb.record_pair("linear_vs_jet", s, k_lin, kappa_j[i * m + j]);
      }
    }
  }
  rb.set_counts(opts.samples, opts.samples, 0);
  return rb.build();
}

VerificationReport verify_fields(const GroupSpec& spec, std::span<const ScalarField> fields,
                                 Complex lambda, Complex mu, const VerifyOptions& opts,
                                 std::string test_name) {
  if (opts.samples < 1) throw ParameterError("verify_fields: samples must be >= 1");
  const std::size_t m = fields.size();
  ReportBuilder rb(GroupDescriptor::of(spec), std::move(test_name), opts.seed, opts.tol);
  rb.declare("tau_jet");
  rb.declare("kappa_jet");
  for (std::size_t s = 0; s < opts.samples; ++s) {
    const ComplexMatrix p = sample_point(spec, opts.seed, s, opts.radius);
    std::vector<Complex> value(m);
    std::vector<Complex> tau_j(m, 0.0);
    std::vector<Complex> kappa_j(m * m, 0.0);
    std::vector<Jet2> jets(m);
    for (const auto& bv : spec.basis()) {
      const JetMatrix curve = curve_jet(p, bv.z);
      const double eps = bv.eps;
      for (std::size_t i = 0; i < m; ++i) {
        jets[i] = fields[i](curve);
        value[i] = jets[i].f0;
        tau_j[i] += eps * jets[i].f2;
      }
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) kappa_j[i * m + j] += eps * jets[i].f1 * jets[j].f1;
    }
    for (std::size_t i = 0; i < m; ++i) {
      rb.record_pair("tau_jet", s, tau_j[i], lambda * value[i]);
      for (std::size_t j = 0; j < m; ++j) {
        rb.record_pair("kappa_jet", s, kappa_j[i * m + j], mu * value[i] * value[j]);
      }
    }
  }
  rb.set_counts(opts.samples, opts.samples, 0);
  return rb.build();
}

VerificationReport verify_orthogonal_offset(const FamilySpec& family, const VerifyOptions& opts) {
  const GroupSpec& spec = family.group;
  if (!requires_isotropy(spec.family()) || family.shape != FamilyShape::RankOne) {
    throw ParameterError("orthogonal offset identity applies to soc, so_pq and so families");
  }
  const Complex mu = to_double(spec.mu());
  const Complex vv = bilinear(family.v, family.v);
  const std::size_t m = family.members.size();
  ReportBuilder rb(GroupDescriptor::of(spec), "orthogonal_offset", opts.seed, opts.tol);
  rb.declare("offset");
  for (std::size_t s = 0; s < opts.samples; ++s) {
    const ComplexMatrix p = sample_point(spec, opts.seed, s, opts.radius);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        const auto& fi = family.members[i];
        const auto& fj = family.members[j];
        const Complex lhs = kappa_linear(fi, fj, spec, p) - mu * fi(p) * fj(p);
        const Complex rhs = -mu * vv * bilinear(family.params[i].a, family.params[j].a);
        rb.record_pair("offset", s, lhs, rhs);
      }
  }
  rb.set_counts(opts.samples, opts.samples, 0);
  return rb.build();
}

EigenPolynomial::EigenPolynomial(std::size_t variables, int degree,
                                 std::map<Powers, Complex> terms)
    : variables_(variables), degree_(degree), terms_(std::move(terms)) {
  if (degree_ < 1) throw HomogeneityError("polynomial degree must be positive");
  for (const auto& [powers, coeff] : terms_) {
    if (powers.size() != variables_) {
      throw DimensionError("polynomial term has " + std::to_string(powers.size()) +
                           " powers, expected " + std::to_string(variables_));
    }
    int total = 0;
    for (int e : powers) {
      if (e < 0) throw HomogeneityError("polynomial term has a negative power");
      total += e;
    }
    if (total != degree_) {
      throw HomogeneityError("polynomial term of degree " + std::to_string(total) +
                             " in a polynomial of degree " + std::to_string(degree_));
    }
  }
  std::erase_if(terms_, [](const auto& kv) { return kv.second == Complex{}; });
}

EigenPolynomial EigenPolynomial::monomial(Powers powers, Complex coeff) {
  int degree = 0;
  for (int e : powers) degree += e;
  const std::size_t vars = powers.size();
  return EigenPolynomial(vars, degree, {{std::move(powers), coeff}});
}

EigenPolynomial EigenPolynomial::from_json(std::string_view text) {
  try {
    const json doc = json::parse(text);
    const int degree = doc.at("degree").get<int>();
    std::map<Powers, Complex> terms;
    std::size_t vars = 0;
    bool first = true;
    for (const auto& t : doc.at("terms")) {
      Powers powers = t.at("powers").get<Powers>();
      if (first) vars = powers.size();
      first = false;
      terms[std::move(powers)] += complex_from(t.at("coeff"));
    }
    if (first) throw HomogeneityError("polynomial has no terms");
    return EigenPolynomial(vars, degree, std::move(terms));
  } catch (const json::exception& e) {
    throw ParameterError(std::string("malformed polynomial JSON: ") + e.what());
  }
}

Complex EigenPolynomial::evaluate(std::span<const Complex> values) const {
  if (values.size() != variables_) throw DimensionError("polynomial: wrong number of values");
  Complex sum = 0.0;
  for (const auto& [powers, coeff] : terms_) {
    Complex term = coeff;
    for (std::size_t k = 0; k < variables_; ++k)
      for (int e = 0; e < powers[k]; ++e) term *= values[k];
    sum += term;
  }
  return sum;
}

Jet2 EigenPolynomial::evaluate(std::span<const Jet2> values) const {
  if (values.size() != variables_) throw DimensionError("polynomial: wrong number of values");
  Jet2 sum = Jet2::constant(0.0);
  for (const auto& [powers, coeff] : terms_) {
    Jet2 term = Jet2::constant(coeff);
    for (std::size_t k = 0; k < variables_; ++k) {
      if (powers[k] > 0) term = term * pow(values[k], powers[k]);
    }
    sum = sum + term;
  }
  return sum;
}

ScalarField EigenPolynomial::field(const FamilySpec& family) const {
  if (family.members.size() != variables_) {
    throw DimensionError("polynomial has " + std::to_string(variables_) +
                         " variables but the family has " +
                         std::to_string(family.members.size()) + " members");
  }
  auto fields = family.fields();
  EigenPolynomial self = *this;
  return ScalarField([fields = std::move(fields), self = std::move(self)](const JetMatrix& curve) {
    std::vector<Jet2> values;
    values.reserve(fields.size());
    for (const auto& f : fields) values.push_back(f(curve));
    return self.evaluate(std::span<const Jet2>(values));
  });
}

std::string EigenPolynomial::to_json() const {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [powers, coeff] : terms_) {
    terms.push_back({{"powers", powers}, {"coeff", {coeff.real(), coeff.imag()}}});
  }
  nlohmann::ordered_json doc{{"degree", degree_}, {"terms", std::move(terms)}};
  return doc.dump();
}

std::pair<Rational, Rational> polynomial_eigenvalues(const Rational& lambda, const Rational& mu,
                                                     int degree) {
  const Rational d(degree);
  return {d * lambda + d * (d - 1) * mu, d * d * mu};
}

VerificationReport poly_family(const FamilySpec& family, int degree,
                               std::span<const EigenPolynomial> polys, const VerifyOptions& opts) {
  if (polys.empty()) throw ParameterError("poly_family: no polynomials given");
  std::vector<ScalarField> fields;
  for (const auto& poly : polys) {
    if (poly.degree() != degree) {
      throw HomogeneityError("poly_family: polynomial of degree " + std::to_string(poly.degree()) +
                             " in a degree-" + std::to_string(degree) + " family");
    }
    fields.push_back(poly.field(family));
  }
  const auto [lam_d, mu_d] =
      polynomial_eigenvalues(family.group.lambda(), family.group.mu(), degree);
  return verify_fields(family.group, fields, to_double(lam_d), to_double(mu_d), opts,
                       "polynomial_degree_" + std::to_string(degree));
}

}  // namespace lgh
