#include "lgh/groups.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "lgh/errors.hpp"

namespace lgh {
namespace {

using F = GroupFamily;

constexpr Complex kI{0.0, 1.0};
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

struct FamilyInfo {
  F family;
  std::string_view name;
};

constexpr std::array<FamilyInfo, 17> kNames = {{
    {F::GLC, "glc"},   {F::GLR, "glr"},     {F::GLH, "glh"},   {F::SLC, "slc"},
    {F::SLR, "slr"},   {F::SLH, "slh"},     {F::SOC, "soc"},   {F::SpC, "spc"},
    {F::SpR, "spr"},   {F::SOstar, "sostar"}, {F::SUpq, "su_pq"}, {F::SOpq, "so_pq"},
    {F::Sppq, "sp_pq"}, {F::U, "u"},         {F::SU, "su"},     {F::SO, "so"},
    {F::Sp, "sp"},
}};

// X_rs, Y_rs, D_t as in the standard gl(n) notation; indices are 0-based.
ComplexMatrix sym(std::size_t n, std::size_t r, std::size_t s) {
  ComplexMatrix m(n, n);
  m(r, s) = kInvSqrt2;
  m(s, r) = kInvSqrt2;
  return m;
}

ComplexMatrix skew(std::size_t n, std::size_t r, std::size_t s) {
  ComplexMatrix m(n, n);
  m(r, s) = kInvSqrt2;
  m(s, r) = -kInvSqrt2;
  return m;
}

ComplexMatrix diag_unit(std::size_t n, std::size_t t) { return ComplexMatrix::unit(n, t, t); }

// Real traceless diagonal generator diag(1,...,1,-k,0,...,0)/sqrt(k(k+1)), k = 1..n-1.
ComplexMatrix staircase(std::size_t n, std::size_t k) {
  ComplexMatrix m(n, n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(k * (k + 1)));
  for (std::size_t i = 0; i < k; ++i) m(i, i) = scale;
  m(k, k) = -static_cast<double>(k) * scale;
  return m;
}

template <typename Pred>
void for_pairs(std::size_t n, Pred&& fn) {
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = r + 1; s < n; ++s) fn(r, s);
}

void push(SignedBasis& b, ComplexMatrix z, int eps) { b.push_back({std::move(z), eps}); }

/// Orthonormal basis of u(n) (traceless = true gives su(n)).
std::vector<ComplexMatrix> unitary_algebra(std::size_t n, bool traceless) {
  std::vector<ComplexMatrix> out;
  for_pairs(n, [&](auto r, auto s) { out.push_back(skew(n, r, s)); });
  for_pairs(n, [&](auto r, auto s) { out.push_back(kI * sym(n, r, s)); });
  if (traceless) {
    for (std::size_t k = 1; k < n; ++k) out.push_back(kI * staircase(n, k));
  } else {
    for (std::size_t t = 0; t < n; ++t) out.push_back(kI * diag_unit(n, t));
  }
  return out;
}

SignedBasis split_complexified(const std::vector<ComplexMatrix>& compact) {
  SignedBasis b;
  for (const auto& z : compact) push(b, z, +1);
  for (const auto& z : compact) push(b, kI * z, -1);
  return b;
}

ComplexMatrix quat(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                   const ComplexMatrix& d) {
  return kInvSqrt2 * block2x2(a, b, c, d);
}

/// The sp(n) basis inside gl(n, H) = {[Z W; -conj(W) conj(Z)]}. When `cross`
/// marks a pair (r, s), the four compact generators of that pair are swapped
/// for the non-compact ones that sit in the same quaternionic slot.
template <typename Cross>
SignedBasis quaternionic_unitary(std::size_t n, Cross&& cross) {
  SignedBasis b;
  const ComplexMatrix o(n, n);
  for_pairs(n, [&](auto r, auto s) {
    const ComplexMatrix x = sym(n, r, s);
    const ComplexMatrix y = skew(n, r, s);
    if (!cross(r, s)) {
      push(b, quat(o, kI * x, kI * x, o), +1);
      push(b, quat(o, x, -x, o), +1);
      push(b, quat(kI * x, o, o, -kI * x), +1);
      push(b, quat(y, o, o, y), +1);
    } else {
      push(b, quat(o, y, -y, o), -1);
      push(b, quat(o, kI * y, kI * y, o), -1);
      push(b, quat(kI * y, o, o, -kI * y), -1);
      push(b, quat(x, o, o, x), -1);
    }
  });
  for (std::size_t t = 0; t < n; ++t) {
    const ComplexMatrix d = diag_unit(n, t);
    push(b, quat(o, d, -d, o), +1);
    push(b, quat(kI * d, o, o, -kI * d), +1);
    push(b, quat(o, kI * d, kI * d, o), +1);
  }
  return b;
}

SignedBasis sp_compact(std::size_t n) {
  return quaternionic_unitary(n, [](auto, auto) { return false; });
}

/// Complement of sp(n) in gl(n, H); `traceless` drops the I_2n direction.
void append_glh_noncompact(SignedBasis& b, std::size_t n, bool traceless) {
  const ComplexMatrix o(n, n);
  for_pairs(n, [&](auto r, auto s) {
    const ComplexMatrix x = sym(n, r, s);
    const ComplexMatrix y = skew(n, r, s);
    push(b, quat(o, y, -y, o), -1);
    push(b, quat(o, kI * y, kI * y, o), -1);
    push(b, quat(kI * y, o, o, -kI * y), -1);
    push(b, quat(x, o, o, x), -1);
  });
  if (traceless) {
    for (std::size_t k = 1; k < n; ++k) {
      const ComplexMatrix t = staircase(n, k);
      push(b, quat(t, o, o, t), -1);
    }
  } else {
    for (std::size_t t = 0; t < n; ++t) {
      const ComplexMatrix d = diag_unit(n, t);
      push(b, quat(d, o, o, d), -1);
    }
  }
}

SignedBasis build_basis(F family, const GroupParams& prm) {
  const auto n = static_cast<std::size_t>(prm.n);
  const auto p = static_cast<std::size_t>(prm.p);
  const auto pq = static_cast<std::size_t>(prm.p + prm.q);
  // Pairs (r, s) with r in the first p indices and s in the last q.
  auto crosses = [p](std::size_t r, std::size_t s) { return (r < p) != (s < p); };
  SignedBasis b;
  switch (family) {
    case F::GLC:
      return split_complexified(unitary_algebra(n, false));
    case F::SLC:
      return split_complexified(unitary_algebra(n, true));
    case F::U:
      for (auto& z : unitary_algebra(n, false)) push(b, std::move(z), +1);
      return b;
    case F::SU:
      for (auto& z : unitary_algebra(n, true)) push(b, std::move(z), +1);
      return b;
    case F::GLR:
    case F::SLR:
      for_pairs(n, [&](auto r, auto s) { push(b, skew(n, r, s), +1); });
      for_pairs(n, [&](auto r, auto s) { push(b, sym(n, r, s), -1); });
      if (family == F::GLR) {
        for (std::size_t t = 0; t < n; ++t) push(b, diag_unit(n, t), -1);
      } else {
        for (std::size_t k = 1; k < n; ++k) push(b, staircase(n, k), -1);
      }
      return b;
    case F::SO:
      for_pairs(n, [&](auto r, auto s) { push(b, skew(n, r, s), +1); });
      return b;
    case F::SOC:
      for_pairs(n, [&](auto r, auto s) { push(b, skew(n, r, s), +1); });
      for_pairs(n, [&](auto r, auto s) { push(b, kI * skew(n, r, s), -1); });
      return b;
    case F::Sp:
      return sp_compact(n);
    case F::SpC: {
      SignedBasis compact = sp_compact(n);
      b = compact;
      for (const auto& v : compact) push(b, kI * v.z, -1);
      return b;
    }
    case F::GLH:
      b = sp_compact(n);
      append_glh_noncompact(b, n, false);
      return b;
    case F::SLH:
      b = sp_compact(n);
      append_glh_noncompact(b, n, true);
      return b;
    case F::SpR: {
      // sp(n, R) = {[A B; C -A^t] : B, C symmetric}.
      const ComplexMatrix o(n, n);
      for_pairs(n, [&](auto r, auto s) {
        const ComplexMatrix x = sym(n, r, s);
        const ComplexMatrix y = skew(n, r, s);
        push(b, quat(y, o, o, y), +1);
        push(b, quat(x, o, o, -x), -1);
        push(b, quat(o, x, -x, o), +1);
        push(b, quat(o, x, x, o), -1);
      });
      for (std::size_t t = 0; t < n; ++t) {
        const ComplexMatrix d = diag_unit(n, t);
        push(b, quat(d, o, o, -d), -1);
        push(b, quat(o, d, -d, o), +1);
        push(b, quat(o, d, d, o), -1);
      }
      return b;
    }
    case F::SOstar: {
      const ComplexMatrix o(n, n);
      for_pairs(n, [&](auto r, auto s) {
        push(b, quat(skew(n, r, s), o, o, skew(n, r, s)), +1);
        push(b, quat(kI * sym(n, r, s), o, o, -kI * sym(n, r, s)), +1);
      });
      for (std::size_t t = 0; t < n; ++t) {
        push(b, quat(kI * diag_unit(n, t), o, o, -kI * diag_unit(n, t)), +1);
      }
      for_pairs(n, [&](auto r, auto s) {
        const ComplexMatrix y = skew(n, r, s);
        push(b, quat(o, y, -y, o), -1);
        push(b, quat(o, kI * y, kI * y, o), -1);
      });
      return b;
    }
    case F::SUpq: {
      // s(u(p) + u(q)) keeps the compact generators; the off-diagonal part m
      // of su(p+q) enters as i*m with negative sign.
      for_pairs(pq, [&](auto r, auto s) {
        if (!crosses(r, s)) push(b, skew(pq, r, s), +1);
      });
      for_pairs(pq, [&](auto r, auto s) {
        if (!crosses(r, s)) push(b, kI * sym(pq, r, s), +1);
      });
      for (std::size_t k = 1; k < pq; ++k) push(b, kI * staircase(pq, k), +1);
      for_pairs(pq, [&](auto r, auto s) {
        if (crosses(r, s)) push(b, kI * skew(pq, r, s), -1);
      });
      for_pairs(pq, [&](auto r, auto s) {
        if (crosses(r, s)) push(b, -sym(pq, r, s), -1);
      });
      return b;
    }
    case F::SOpq:
      for_pairs(pq, [&](auto r, auto s) {
        if (!crosses(r, s)) push(b, skew(pq, r, s), +1);
      });
      for_pairs(pq, [&](auto r, auto s) {
        if (crosses(r, s)) push(b, kI * skew(pq, r, s), -1);
      });
      return b;
    case F::Sppq:
      return quaternionic_unitary(pq, crosses);
  }
  throw std::logic_error("unhandled group family");
}

std::size_t ambient_size(F family, const GroupParams& prm) {
  const auto n = static_cast<std::size_t>(prm.n);
  const auto pq = static_cast<std::size_t>(prm.p + prm.q);
  switch (family) {
    case F::GLH: case F::SLH: case F::SpC: case F::SpR: case F::SOstar: case F::Sp:
      return 2 * n;
    case F::SUpq: case F::SOpq:
      return pq;
    case F::Sppq:
      return 2 * pq;
    default:
      return n;
  }
}

// Orthonormality and the Koszul term g([W, Z], Z) must hold to rounding for
// every constructed basis; a failure here is a construction bug.
void self_check(const SignedBasis& basis, const std::string& label) {
  constexpr double kTol = 1e-12;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const double g = metric(basis[i].z, basis[j].z);
      const double expected = i == j ? basis[i].eps : 0.0;
      if (std::abs(g - expected) > kTol) {
        throw std::logic_error(label + ": basis is not signed-orthonormal at (" +
                               std::to_string(i) + ", " + std::to_string(j) + ")");
      }
      const double koszul = metric(commutator(basis[j].z, basis[i].z), basis[i].z);
      if (std::abs(koszul) > kTol) {
        throw std::logic_error(label + ": g(nabla_Z Z, W) does not vanish");
      }
    }
  }
}

double rel_residual(const ComplexMatrix& lhs, const ComplexMatrix& rhs, double scale) {
  return (lhs - rhs).frobenius_norm() / scale;
}

double realness_residual(const ComplexMatrix& m, double scale) {
  double r = 0.0;
  for (const auto& e : m.entries()) r = std::max(r, std::abs(e.imag()));
  return r / scale;
}

// M must have the form [z w; -conj(w) conj(z)].
double quaternionic_residual(const ComplexMatrix& m, double scale) {
  const std::size_t n = m.rows() / 2;
  double r = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      r = std::max(r, std::abs(m(i + n, j + n) - std::conj(m(i, j))));
      r = std::max(r, std::abs(m(i + n, j) + std::conj(m(i, j + n))));
    }
  return r / scale;
}

}  // namespace

std::string_view family_name(GroupFamily f) {
  for (const auto& info : kNames)
    if (info.family == f) return info.name;
  return "?";
}

std::optional<GroupFamily> parse_family(std::string_view name) {
  for (const auto& info : kNames)
    if (info.name == name) return info.family;
  return std::nullopt;
}

std::size_t catalog_index(GroupFamily f) {
  return static_cast<std::size_t>(
      std::find(kAllFamilies.begin(), kAllFamilies.end(), f) - kAllFamilies.begin());
}

bool is_pq_family(GroupFamily f) { return f == F::SUpq || f == F::SOpq || f == F::Sppq; }

bool is_compact_family(GroupFamily f) {
  return f == F::U || f == F::SU || f == F::SO || f == F::Sp;
}

bool is_block_family(GroupFamily f) {
  switch (f) {
    case F::GLH: case F::SLH: case F::SpC: case F::SpR: case F::SOstar: case F::Sppq: case F::Sp:
      return true;
    default:
      return false;
  }
}

double metric(const ComplexMatrix& z, const ComplexMatrix& w) { return -(z * w).trace().real(); }

std::size_t GroupSpec::positive_count() const {
  return static_cast<std::size_t>(std::count_if(
      data_->basis.begin(), data_->basis.end(), [](const auto& v) { return v.eps > 0; }));
}

std::size_t GroupSpec::block_size() const {
  return is_block_family(family()) ? ambient() / 2 : ambient();
}

std::string GroupSpec::label() const {
  std::string out(family_name(family()));
  if (is_pq_family(family())) {
    out += "(p=" + std::to_string(params().p) + ",q=" + std::to_string(params().q) + ")";
  } else {
    out += "(n=" + std::to_string(params().n) + ")";
  }
  return out;
}

void validate_params(GroupFamily family, GroupParams params) {
  const std::string name(family_name(family));
  if (is_pq_family(family)) {
    if (params.p < 1 || params.q < 1) throw ParameterError(name + ": requires p >= 1 and q >= 1");
    if (params.p + params.q > 8) throw ParameterError(name + ": p + q above 8 is not supported");
    return;
  }
  if (params.n < 1) throw ParameterError(name + ": requires n >= 1");
  switch (family) {
    case F::SLC: case F::SLR: case F::SOC: case F::SU: case F::SO:
      if (params.n < 2) throw ParameterError(name + ": requires n >= 2");
      break;
    default:
      break;
  }
  if (ambient_size(family, params) > 16) {
    throw ParameterError(name + ": ambient size above 16 is not supported");
  }
}

std::size_t expected_dimension(GroupFamily family, GroupParams prm) {
  const std::size_t n = prm.n;
  const std::size_t m = prm.p + prm.q;
  switch (family) {
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

std::size_t expected_positive_count(GroupFamily family, GroupParams prm) {
  const std::size_t n = prm.n;
  const std::size_t p = prm.p;
  const std::size_t q = prm.q;
  switch (family) {
    case F::GLC: return n * n;
    case F::GLR: case F::SLR: case F::SOC: return n * (n - 1) / 2;
    case F::GLH: case F::SLH: case F::SpC: return n * (2 * n + 1);
    case F::SLC: return n * n - 1;
    case F::SpR: case F::SOstar: return n * n;
    case F::SUpq: return p * p + q * q - 1;
    case F::SOpq: return p * (p - 1) / 2 + q * (q - 1) / 2;
    case F::Sppq: return p * (2 * p + 1) + q * (2 * q + 1);
    default: return expected_dimension(family, prm);
  }
}

std::pair<Rational, Rational> eigenvalue_pair(GroupFamily family, GroupParams prm) {
  const long long n = prm.n;
  const long long m = prm.p + prm.q;
  auto r = [](long long num, long long den) { return Rational(num, den); };
  switch (family) {
    case F::GLC: return {r(-2 * n, 1), r(-2, 1)};
    case F::GLR: return {r(-n, 1), r(-1, 1)};
    case F::GLH: return {r(-2 * n, 1), r(-1, 1)};
    case F::SLC: return {r(-2 * (n * n - 1), n), r(-2 * (n - 1), n)};
    case F::SLR: return {r(-(n * n - 1), n), r(-(n - 1), n)};
    case F::SLH: return {r(-(4 * n * n - 1), 2 * n), r(-(2 * n - 1), 2 * n)};
    case F::SOC: return {r(-(n - 1), 1), r(-1, 1)};
    case F::SpC: return {r(-(2 * n + 1), 1), r(-1, 1)};
    case F::SpR: return {r(-(2 * n + 1), 2), r(-1, 2)};
    case F::SOstar: return {r(-(2 * n - 1), 2), r(-1, 2)};
    case F::SUpq: return {r(-(m * m - 1), m), r(-(m - 1), m)};
    case F::SOpq: return {r(-(m - 1), 2), r(-1, 2)};
    case F::Sppq: return {r(-(2 * m + 1), 2), r(-1, 2)};
    case F::U: return {r(-n, 1), r(-1, 1)};
    case F::SU: return {r(-(n * n - 1), n), r(-(n - 1), n)};
    case F::SO: return {r(-(n - 1), 2), r(-1, 2)};
    case F::Sp: return {r(-(2 * n + 1), 2), r(-1, 2)};
  }
  throw std::logic_error("unhandled group family");
}

GroupSpec make_group(GroupFamily family, GroupParams params) {
  validate_params(family, params);
  if (is_pq_family(family)) {
    params.n = 0;
  } else {
    params.p = params.q = 0;
  }
  auto [lam, mu] = eigenvalue_pair(family, params);
  const std::size_t ambient = ambient_size(family, params);
  SignedBasis basis = build_basis(family, params);
  if (basis.size() != expected_dimension(family, params)) {
    throw std::logic_error(std::string(family_name(family)) + ": basis has wrong cardinality");
  }
  ComplexMatrix structure(ambient, ambient);
  for (const auto& v : basis) structure += static_cast<double>(v.eps) * (v.z * v.z);

  auto data = std::make_shared<GroupSpec::Data>(GroupSpec::Data{
      family, params, ambient, std::move(lam), std::move(mu), std::move(basis),
      std::move(structure)});
  GroupSpec spec(std::move(data));
  self_check(spec.basis(), spec.label());
  return spec;
}

Membership contains(const GroupSpec& spec, const ComplexMatrix& m, double tol) {
  const std::size_t n = spec.ambient();
  if (m.rows() != n || m.cols() != n) {
    throw DimensionError("contains: expected a " + std::to_string(n) + "x" + std::to_string(n) +
                         " matrix for " + spec.label());
  }
  const double scale = 1.0 + m.frobenius_norm();
  const ComplexMatrix id = ComplexMatrix::identity(n);
  const Complex d = det(m);
  double residual = 0.0;
  auto track = [&residual](double r) { residual = std::max(residual, r); };
  auto unit_det = [&] { track(std::abs(d - 1.0)); };
  auto invertible = [&] { track(std::abs(d) > tol ? 0.0 : 1.0); };
  auto form = [&](const ComplexMatrix& k, bool hermitian) {
    const ComplexMatrix other = hermitian ? m.adjoint() : m.transpose();
    track(rel_residual(m * k * other, k, scale));
  };

  const auto prm = spec.params();
  switch (spec.family()) {
    case F::GLC: invertible(); break;
    case F::GLR: track(realness_residual(m, scale)); invertible(); break;
    case F::GLH: track(quaternionic_residual(m, scale)); invertible(); break;
    case F::SLC: unit_det(); break;
    case F::SLR: track(realness_residual(m, scale)); unit_det(); break;
    case F::SLH: track(quaternionic_residual(m, scale)); unit_det(); break;
    case F::SOC: form(id, false); unit_det(); break;
    case F::SpC: form(symplectic_form(n / 2), false); unit_det(); break;
    case F::SpR:
      track(realness_residual(m, scale));
      form(symplectic_form(n / 2), false);
      break;
    case F::SOstar: {
      const ComplexMatrix inn = signature_form(n / 2, n / 2);
      track(quaternionic_residual(m, scale));
      form(inn, true);
      form(inn * symplectic_form(n / 2), false);
      unit_det();
      break;
    }
    case F::SUpq: form(signature_form(prm.p, prm.q), true); unit_det(); break;
    case F::SOpq: {
      // so(p, q) realized as so(p) + so(q) + i*m inside so(p + q, C): complex
      // orthogonal, and conjugation acts as the signature flip.
      const ComplexMatrix ipq = signature_form(prm.p, prm.q);
      form(id, false);
      track(rel_residual(m.conj(), ipq * m * ipq, scale));
      unit_det();
      break;
    }
    case F::Sppq: {
      const ComplexMatrix ipq = signature_form(prm.p, prm.q);
      const ComplexMatrix o(prm.p + prm.q, prm.p + prm.q);
      track(quaternionic_residual(m, scale));
      form(block2x2(ipq, o, o, ipq), true);
      unit_det();
      break;
    }
    case F::U: form(id, true); break;
    case F::SU: form(id, true); unit_det(); break;
    case F::SO: track(realness_residual(m, scale)); form(id, false); unit_det(); break;
    case F::Sp: form(id, true); form(symplectic_form(n / 2), false); break;
  }
  return Membership{residual <= tol, residual};
}

ComplexMatrix algebra_element(const GroupSpec& spec, std::span<const double> coeffs) {
  if (coeffs.size() != spec.dimension()) {
    throw DimensionError("algebra_element: expected " + std::to_string(spec.dimension()) +
                         " coefficients");
  }
  ComplexMatrix x(spec.ambient(), spec.ambient());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0.0) x += coeffs[i] * spec.basis()[i].z;
  }
  return x;
}

std::vector<double> uniform_stream(std::uint64_t seed, std::uint64_t index, std::uint64_t stream,
                                   std::size_t count, double lo, double hi) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                    static_cast<std::uint32_t>(stream)};
  std::mt19937_64 rng(seq);
  std::vector<double> out(count);
  for (auto& v : out) {
    const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    v = lo + (hi - lo) * unit;
  }
  return out;
}

ComplexMatrix sample_point(const GroupSpec& spec, std::uint64_t seed, std::uint64_t index,
                           double radius) {
  if (!(radius > 0.0)) throw ParameterError("sample_point: radius must be positive");
  const auto c1 = uniform_stream(seed, index, 1, spec.dimension(), -radius, radius);
  const auto c2 = uniform_stream(seed, index, 2, spec.dimension(), -radius, radius);
  return expm(algebra_element(spec, c1)) * expm(algebra_element(spec, c2));
}

}  // namespace lgh
