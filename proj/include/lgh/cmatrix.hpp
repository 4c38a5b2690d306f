#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace lgh {

using Complex = std::complex<double>;

/// Dense, owned, row-major complex matrix. Sizes in this library stay small
/// (ambient dimension <= 16), so every operation works on plain values.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zeros(std::size_t rows, std::size_t cols);
  static ComplexMatrix diagonal(std::span<const Complex> diag);
  /// Single unit entry at (r, s): the matrix E_rs.
  static ComplexMatrix unit(std::size_t n, std::size_t r, std::size_t s);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return entries_.empty(); }

  Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  std::span<const Complex> entries() const noexcept { return entries_; }

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex scalar);

  ComplexMatrix transpose() const;
  ComplexMatrix conj() const;
  /// Conjugate transpose.
  ComplexMatrix adjoint() const;
  Complex trace() const;
  double frobenius_norm() const;
  double max_abs() const;
  bool all_finite() const;

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix m);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(Complex scalar, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, Complex scalar);

/// [A, B] = AB - BA
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Assemble [[a, b], [c, d]] from four equally sized square blocks.
ComplexMatrix block2x2(const ComplexMatrix& a, const ComplexMatrix& b,
                       const ComplexMatrix& c, const ComplexMatrix& d);

ComplexMatrix submatrix(const ComplexMatrix& m, std::size_t row0, std::size_t col0,
                        std::size_t rows, std::size_t cols);

/// Determinant by LU factorization with partial pivoting.
Complex det(const ComplexMatrix& a);

/// Matrix exponential: scaling and squaring around a degree-12 Taylor kernel.
/// The scaled argument satisfies ||A / 2^k||_F <= 0.5.
ComplexMatrix expm(const ComplexMatrix& a);

/// J_n = [[0, I_n], [-I_n, 0]].
ComplexMatrix symplectic_form(std::size_t n);
/// I_{p,q} = diag(-I_p, I_q).
ComplexMatrix signature_form(std::size_t p, std::size_t q);

}  // namespace lgh
