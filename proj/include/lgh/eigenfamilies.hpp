#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lgh/calculus.hpp"
#include "lgh/groups.hpp"
#include "lgh/report.hpp"

namespace lgh {

using ComplexVector = std::vector<Complex>;

/// Parameters of one family member: a (and b for block families).
struct MemberParams {
  ComplexVector a;
  ComplexVector b;
};

enum class FamilyShape {
  /// C = v a^t over the whole ambient matrix.
  RankOne,
  /// C = [u a^t, v b^t; 0, 0] on the (z, w) top block.
  Block,
  /// Arbitrary coefficient matrices; only used for negative controls.
  Raw,
};

/// Eigenfamily candidate: every member is a linear form phi_C(g) = trace(C g^t).
struct FamilySpec {
  GroupSpec group;
  FamilyShape shape = FamilyShape::RankOne;
  ComplexVector v;
  ComplexVector u;
  std::vector<MemberParams> params;
  std::vector<LinearForm> members;

  std::vector<ScalarField> fields() const;
};

/// (x, y) = sum x_j y_j, the complex bilinear (not Hermitian) form.
Complex bilinear(std::span<const Complex> x, std::span<const Complex> y);

/// Families that need an isotropic v.
bool requires_isotropy(GroupFamily f);

/// Validated family. Single-block groups take C = v a^t. Block groups take
/// C = [u a^t, v b^t; 0, 0] with u defaulting to v. SpR accepts both: v of
/// length 2n selects the full rank-one form, length n the block form.
/// With enforce_isotropy = false a non-isotropic v is accepted (used by the
/// offset identity and the negative controls).
/// Throws ParameterError (zero v/u), IsotropyError, DimensionError.
FamilySpec make_family(const GroupSpec& spec, ComplexVector v, std::optional<ComplexVector> u,
                       std::vector<MemberParams> params, bool enforce_isotropy = true);

/// Family from arbitrary coefficient matrices, without admissibility checks.
FamilySpec make_raw_family(const GroupSpec& spec, std::vector<ComplexMatrix> coefficients);

/// Deterministic default family used by the table reproduction.
FamilySpec desk_family(const GroupSpec& spec);
/// The alternative SpR family: v, a in C^{2n}, C = v a^t.
FamilySpec spr_full_rank_family(const GroupSpec& spec);

/// {"v": [[re,im],...], "u": [...], "members": [{"a": [...], "b": [...]}]}.
/// Entries may also be plain real numbers.
FamilySpec family_from_json(const GroupSpec& spec, std::string_view text);

struct VerifyOptions {
  std::size_t samples = 25;
  std::uint64_t seed = 42;
  double tol = 1e-8;
  double radius = kDefaultRadius;
};

/// Checks tau(phi) = lambda phi and kappa(phi, psi) = mu phi psi for every
/// member and ordered pair at sampled points, through both the exact linear
/// path and the jet path.
VerificationReport verify_eigen(const FamilySpec& family, const VerifyOptions& opts,
                                std::string test_name = "eigenfamily");

/// Same relations against an explicit (lambda, mu), for arbitrary fields.
VerificationReport verify_fields(const GroupSpec& spec, std::span<const ScalarField> fields,
                                 Complex lambda, Complex mu, const VerifyOptions& opts,
                                 std::string test_name);

/// kappa(phi_a, phi_b) - mu phi_a phi_b = -mu (v, v)(a, b) on the orthogonal
/// families, for any v.
VerificationReport verify_orthogonal_offset(const FamilySpec& family, const VerifyOptions& opts);

/// Homogeneous polynomial in the members of a family.
class EigenPolynomial {
 public:
  using Powers = std::vector<int>;

  /// Throws HomogeneityError if a term's total degree differs from `degree`
  /// or a power is negative, DimensionError on inconsistent power lengths.
  EigenPolynomial(std::size_t variables, int degree, std::map<Powers, Complex> terms);

  static EigenPolynomial monomial(Powers powers, Complex coeff = 1.0);
  /// {"degree": d, "terms": [{"powers": [...], "coeff": [re, im]}]}.
  static EigenPolynomial from_json(std::string_view text);

  std::size_t variables() const { return variables_; }
  int degree() const { return degree_; }
  const std::map<Powers, Complex>& terms() const { return terms_; }

  Complex evaluate(std::span<const Complex> values) const;
  Jet2 evaluate(std::span<const Jet2> values) const;
  /// The polynomial composed with the family's members.
  ScalarField field(const FamilySpec& family) const;
  std::string to_json() const;

 private:
  std::size_t variables_;
  int degree_;
  std::map<Powers, Complex> terms_;
};

/// Transformed eigenvalues of degree-d polynomials: (d lambda + d(d-1) mu, d^2 mu).
std::pair<Rational, Rational> polynomial_eigenvalues(const Rational& lambda, const Rational& mu,
                                                     int degree);

/// Verifies that degree-d polynomials over the family form an eigenfamily
/// with the transformed eigenvalues. Throws HomogeneityError on inputs whose
/// degree differs from d.
VerificationReport poly_family(const FamilySpec& family, int degree,
                               std::span<const EigenPolynomial> polys, const VerifyOptions& opts);

}  // namespace lgh
