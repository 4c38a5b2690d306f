#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lgh/cmatrix.hpp"
#include "lgh/rational.hpp"

namespace lgh {

/// The catalogued matrix groups. The first thirteen are the non-compact
/// semi-Riemannian groups; U, SU, SO and Sp are compact cross-checks.
enum class GroupFamily {
  GLC, GLR, GLH, SLC, SLR, SLH, SOC, SpC, SpR, SOstar, SUpq, SOpq, Sppq, U, SU, SO, Sp
};

/// Catalog order; reports and listings follow it.
inline constexpr std::array<GroupFamily, 17> kAllFamilies = {
    GroupFamily::GLC,  GroupFamily::GLR,  GroupFamily::GLH,    GroupFamily::SLC,
    GroupFamily::SLR,  GroupFamily::SLH,  GroupFamily::SOC,    GroupFamily::SpC,
    GroupFamily::SpR,  GroupFamily::SOstar, GroupFamily::SUpq, GroupFamily::SOpq,
    GroupFamily::Sppq, GroupFamily::U,    GroupFamily::SU,     GroupFamily::SO,
    GroupFamily::Sp};

/// CLI/JSON name: "glc", "su_pq", ...
std::string_view family_name(GroupFamily f);
std::optional<GroupFamily> parse_family(std::string_view name);
std::size_t catalog_index(GroupFamily f);

bool is_pq_family(GroupFamily f);
bool is_compact_family(GroupFamily f);
/// Families realized on 2n x 2n matrices whose eigenfunctions read the top
/// n x 2n block as (z, w).
bool is_block_family(GroupFamily f);

struct GroupParams {
  int n = 0;
  int p = 0;
  int q = 0;

  friend bool operator==(const GroupParams&, const GroupParams&) = default;
  friend auto operator<=>(const GroupParams&, const GroupParams&) = default;
};

struct SignedBasisVector {
  ComplexMatrix z;
  int eps = 1;
};

using SignedBasis = std::vector<SignedBasisVector>;

/// g(Z, W) = -Re trace(Z W).
double metric(const ComplexMatrix& z, const ComplexMatrix& w);

/// Immutable, cheaply copyable description of one catalogued group.
class GroupSpec {
 public:
  GroupFamily family() const { return data_->family; }
  const GroupParams& params() const { return data_->params; }
  std::size_t ambient() const { return data_->ambient; }
  const Rational& lambda() const { return data_->lambda; }
  const Rational& mu() const { return data_->mu; }
  const SignedBasis& basis() const { return data_->basis; }
  std::size_t dimension() const { return data_->basis.size(); }
  std::size_t positive_count() const;
  /// S = sum_Z eps_Z Z^2, the point-independent part of tau on linear forms.
  const ComplexMatrix& structure_sum() const { return data_->structure_sum; }
  /// Block size of the (z, w) split for block families, ambient otherwise.
  std::size_t block_size() const;
  /// e.g. "glc(n=2)", "su_pq(p=1,q=2)".
  std::string label() const;

 private:
  struct Data {
    GroupFamily family;
    GroupParams params;
    std::size_t ambient;
    Rational lambda;
    Rational mu;
    SignedBasis basis;
    ComplexMatrix structure_sum;
  };
  explicit GroupSpec(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_;

  friend GroupSpec make_group(GroupFamily, GroupParams);
};

/// Builds and self-checks a group: orthonormality of the signed basis and the
/// vanishing of g(nabla_Z Z, W) are verified at construction.
/// Throws ParameterError when parameters are out of range.
GroupSpec make_group(GroupFamily family, GroupParams params);

/// Real dimension of the Lie algebra from the closed-form table.
std::size_t expected_dimension(GroupFamily family, GroupParams params);
/// Dimension of the maximal compact subalgebra (the eps = +1 count).
std::size_t expected_positive_count(GroupFamily family, GroupParams params);
/// Eigenvalue pair (lambda, mu) from the closed-form table.
std::pair<Rational, Rational> eigenvalue_pair(GroupFamily family, GroupParams params);
void validate_params(GroupFamily family, GroupParams params);

struct Membership {
  bool member = false;
  double residual = 0.0;
};

inline constexpr double kMembershipTol = 1e-8;

/// Checks every defining relation of the family; relation residuals are
/// Frobenius norms divided by (1 + ||M||_F), determinant residuals are |det - 1|.
Membership contains(const GroupSpec& spec, const ComplexMatrix& m, double tol = kMembershipTol);

/// sum_i coeffs[i] * Z_i over the signed basis.
ComplexMatrix algebra_element(const GroupSpec& spec, std::span<const double> coeffs);

inline constexpr double kDefaultRadius = 0.5;

/// exp(X1) * exp(X2) with X1, X2 random algebra elements whose coefficients
/// are uniform in [-radius, radius], fully determined by (seed, index).
ComplexMatrix sample_point(const GroupSpec& spec, std::uint64_t seed, std::uint64_t index,
                           double radius = kDefaultRadius);

/// Deterministic uniform doubles in [lo, hi) for stream (seed, index, stream).
std::vector<double> uniform_stream(std::uint64_t seed, std::uint64_t index, std::uint64_t stream,
                                   std::size_t count, double lo, double hi);

}  // namespace lgh
