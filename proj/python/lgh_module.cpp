#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "commands.hpp"
#include "lgh/eigenfamilies.hpp"
#include "lgh/errors.hpp"
#include "lgh/logpower.hpp"
#include "lgh/morphisms.hpp"

namespace py = pybind11;
using namespace lgh;

namespace {

GroupSpec group(const std::string& name, int n, int p, int q) {
  const auto family = parse_family(name);
  if (!family) throw UsageError("unknown group family '" + name + "'");
  return make_group(*family, GroupParams{n, p, q});
}

py::array_t<Complex> to_array(const ComplexMatrix& m) {
  py::array_t<Complex> out({m.rows(), m.cols()});
  auto view = out.mutable_unchecked<2>();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) view(i, j) = m(i, j);
  return out;
}

FamilySpec family_for(const GroupSpec& spec, const std::optional<std::string>& family_json) {
  return family_json ? family_from_json(spec, *family_json) : desk_family(spec);
}

std::string emit_one(const VerificationReport& r) {
  return emit(std::vector<VerificationReport>{r}, Format::Json);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Eigenfamilies, p-harmonic functions and harmonic morphisms on classical Lie groups";

  auto base = py::register_exception<Error>(m, "LghError", PyExc_RuntimeError);
  py::register_exception<DimensionError>(m, "DimensionError", base.ptr());
  auto parameter = py::register_exception<ParameterError>(m, "ParameterError", base.ptr());
  py::register_exception<IsotropyError>(m, "IsotropyError", parameter.ptr());
  py::register_exception<HomogeneityError>(m, "HomogeneityError", parameter.ptr());
  py::register_exception<DegreeError>(m, "DegreeError", parameter.ptr());
  py::register_exception<DependenceError>(m, "DependenceError", parameter.ptr());
  py::register_exception<SingularPointError>(m, "SingularPointError", base.ptr());
  py::register_exception<BranchCutError>(m, "BranchCutError", base.ptr());
  py::register_exception<EvaluationError>(m, "EvaluationError", base.ptr());
  py::register_exception<SamplingExhaustedError>(m, "SamplingExhaustedError", base.ptr());
  py::register_exception<UsageError>(m, "UsageError", base.ptr());

  m.attr("SCHEMA_VERSION") = kReportSchemaVersion;

  m.def("families", [] {
    std::vector<std::string> out;
    for (auto f : kAllFamilies) out.emplace_back(family_name(f));
    return out;
  });

  py::class_<GroupSpec>(m, "Group")
      .def(py::init(&group), py::arg("family"), py::arg("n") = 0, py::arg("p") = 0, py::arg("q") = 0)
      .def_property_readonly("family", [](const GroupSpec& g) { return std::string(family_name(g.family())); })
      .def_property_readonly("label", &GroupSpec::label)
      .def_property_readonly("ambient", &GroupSpec::ambient)
      .def_property_readonly("dimension", &GroupSpec::dimension)
      .def_property_readonly("positive_count", &GroupSpec::positive_count)
      .def_property_readonly("lambda_", [](const GroupSpec& g) { return to_string(g.lambda()); })
      .def_property_readonly("mu", [](const GroupSpec& g) { return to_string(g.mu()); })
      .def("basis",
           [](const GroupSpec& g) {
             py::list out;
             for (const auto& b : g.basis()) out.append(py::make_tuple(to_array(b.z), b.eps));
             return out;
           })
      .def("sample_point",
           [](const GroupSpec& g, std::uint64_t seed, std::uint64_t index, double radius) {
             return to_array(sample_point(g, seed, index, radius));
           },
           py::arg("seed"), py::arg("index"), py::arg("radius") = kDefaultRadius)
      .def("contains",
           [](const GroupSpec& g, const std::vector<std::vector<Complex>>& rows, double tol) {
             ComplexMatrix mat(rows.size(), rows.empty() ? 0 : rows[0].size());
             for (std::size_t i = 0; i < rows.size(); ++i) {
               if (rows[i].size() != mat.cols()) throw DimensionError("ragged matrix");
               for (std::size_t j = 0; j < rows[i].size(); ++j) mat(i, j) = rows[i][j];
             }
             const Membership r = contains(g, mat, tol);
             return py::make_tuple(r.member, r.residual);
           },
           py::arg("matrix"), py::arg("tol") = kMembershipTol)
      .def("__repr__", [](const GroupSpec& g) { return "<Group " + g.label() + ">"; });

  m.def("verify_eigen",
        [](const GroupSpec& g, std::size_t samples, std::uint64_t seed, double tol, double radius,
           std::optional<std::string> family_json) {
          return emit_one(verify_eigen(family_for(g, family_json), {samples, seed, tol, radius}));
        },
        py::arg("group"), py::arg("samples") = 25, py::arg("seed") = 42, py::arg("tol") = 1e-8,
        py::arg("radius") = kDefaultRadius, py::arg("family_json") = py::none());

  m.def("verify_tables",
        [](std::size_t samples, std::uint64_t seed, double tol, const std::string& format) {
          cli::RunConfig cfg;
          cfg.samples = samples;
          cfg.seed = seed;
          cfg.tol = tol;
          return emit(cli::run_tables(cfg), parse_format(format));
        },
        py::arg("samples") = 25, py::arg("seed") = 42, py::arg("tol") = 1e-8,
        py::arg("format") = "json");

  m.def("build_phi_p",
        [](const std::string& lam, const std::string& mu, int p, const std::string& c1,
           const std::string& c2) {
          return build_phi_p(parse_rational(lam), parse_rational(mu), p, parse_rational_complex(c1),
                             parse_rational_complex(c2))
              .to_json();
        },
        py::arg("lam"), py::arg("mu"), py::arg("p"), py::arg("c1") = "1", py::arg("c2") = "0");

  m.def("iterate_tau",
        [](const std::string& sum_json, const std::string& lam, const std::string& mu, unsigned times) {
          return iterate_tau(LogPowerSum::from_json(sum_json), parse_rational(lam), parse_rational(mu), times)
              .to_json();
        },
        py::arg("sum_json"), py::arg("lam"), py::arg("mu"), py::arg("times"));

  m.def("eval_log_power",
        [](const std::string& sum_json, Complex phi) { return eval_numeric(LogPowerSum::from_json(sum_json), phi); },
        py::arg("sum_json"), py::arg("phi"));

  m.def("verify_p_harmonic",
        [](const GroupSpec& g, int p, const std::string& c1, const std::string& c2, std::size_t samples,
           std::uint64_t seed, double tol, std::optional<std::string> family_json, std::size_t member) {
          const PHarmonicResult r =
              verify_p_harmonic(family_for(g, family_json), member, p, parse_rational_complex(c1),
                                parse_rational_complex(c2), {samples, seed, tol, kDefaultRadius});
          std::vector<std::string> chain;
          for (const auto& f : r.certificate.chain) chain.push_back(f.to_json());
          return py::make_tuple(r.certificate.phi_p.to_json(), chain, emit_one(r.report));
        },
        py::arg("group"), py::arg("p"), py::arg("c1") = "1", py::arg("c2") = "0", py::arg("samples") = 10,
        py::arg("seed") = 42, py::arg("tol") = 1e-7, py::arg("family_json") = py::none(),
        py::arg("member") = 0);

  m.def("verify_morphism",
        [](const GroupSpec& g, const std::string& numerator, const std::string& denominator,
           std::optional<std::string> family_json, std::size_t samples, std::uint64_t seed, double tol,
           double q_floor) {
          const RationalMorphism mor =
              make_morphism(family_for(g, family_json), EigenPolynomial::from_json(numerator),
                            EigenPolynomial::from_json(denominator));
          return emit_one(verify_morphism(mor, {samples, seed, tol, kDefaultRadius}, q_floor));
        },
        py::arg("group"), py::arg("numerator"), py::arg("denominator"), py::arg("family_json") = py::none(),
        py::arg("samples") = 25, py::arg("seed") = 42, py::arg("tol") = 1e-7,
        py::arg("q_floor") = kDefaultQFloor);
}
