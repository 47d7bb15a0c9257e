// SPDX-License-Identifier: Apache-2.0
//
// Dense complex linear algebra for 2-, 3- and 4-dimensional operators:
// Kronecker products, partial trace / partial transpose over the second
// qubit, Hermitian spectra, determinants and pure-state overlaps. All
// functions are pure; Eigen is the only math dependency.
//
// Two-qubit matrices use the computational basis {|00>, |01>, |10>, |11>}
// with the second qubit as the fast index: row = 2*m + mu for |m mu>.
#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>

#include "bhc/tolerances.hpp"

namespace bhc {

template <typename Scalar> using Complex  = std::complex<Scalar>;
template <typename Scalar> using Matrix2c = Eigen::Matrix<Complex<Scalar>, 2, 2>;
template <typename Scalar> using Matrix3c = Eigen::Matrix<Complex<Scalar>, 3, 3>;
template <typename Scalar> using Matrix4c = Eigen::Matrix<Complex<Scalar>, 4, 4>;
template <typename Scalar> using Matrix3r = Eigen::Matrix<Scalar, 3, 3>;
template <typename Scalar> using Vector2c = Eigen::Matrix<Complex<Scalar>, 2, 1>;
template <typename Scalar> using Vector3r = Eigen::Matrix<Scalar, 3, 1>;
template <typename Scalar> using Vector4c = Eigen::Matrix<Complex<Scalar>, 4, 1>;

// ---------------------------------------------------------------------------
// Fixed operator and state constants

template <typename Scalar>
Matrix2c<Scalar> identity2() {
  return Matrix2c<Scalar>::Identity();
}

template <typename Scalar>
Matrix2c<Scalar> sigma_x() {
  Matrix2c<Scalar> m;
  m << 0, 1, 1, 0;
  return m;
}

template <typename Scalar>
Matrix2c<Scalar> sigma_y() {
  const Complex<Scalar> i{0, 1};
  Matrix2c<Scalar> m;
  m << Complex<Scalar>{0, 0}, -i, i, Complex<Scalar>{0, 0};
  return m;
}

template <typename Scalar>
Matrix2c<Scalar> sigma_z() {
  Matrix2c<Scalar> m;
  m << 1, 0, 0, -1;
  return m;
}

// sigma_1 = x, sigma_2 = y, sigma_3 = z.
template <typename Scalar>
Matrix2c<Scalar> pauli(int index) {
  switch (index) {
    case 1: return sigma_x<Scalar>();
    case 2: return sigma_y<Scalar>();
    case 3: return sigma_z<Scalar>();
    default: throw std::invalid_argument("pauli: index must be 1, 2 or 3");
  }
}

enum class BellState : int { phi_plus = 0, phi_minus = 1, psi_plus = 2, psi_minus = 3 };

// Bell basis in the fixed qubit ordering: Phi+- = (|00> +- |11>)/sqrt(2),
// Psi+- = (|01> +- |10>)/sqrt(2).
template <typename Scalar>
Vector4c<Scalar> bell_vector(BellState which) {
  const Scalar s = Scalar(1) / std::sqrt(Scalar(2));
  Vector4c<Scalar> v = Vector4c<Scalar>::Zero();
  switch (which) {
    case BellState::phi_plus:  v(0) = s; v(3) = s;  break;
    case BellState::phi_minus: v(0) = s; v(3) = -s; break;
    case BellState::psi_plus:  v(1) = s; v(2) = s;  break;
    case BellState::psi_minus: v(1) = s; v(2) = -s; break;
  }
  return v;
}

// ---------------------------------------------------------------------------
// Free functions

namespace detail {
constexpr int kron_dim(int a, int b) {
  return (a == Eigen::Dynamic || b == Eigen::Dynamic) ? Eigen::Dynamic : a * b;
}
}  // namespace detail

// Kronecker product, out(i*rb + k, j*cb + l) = a(i,j) * b(k,l). The left
// factor is the slow (first-qubit) index, consistent with the basis above.
template <typename DerivedA, typename DerivedB>
auto kron(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using ResultScalar = typename Eigen::ScalarBinaryOpTraits<typename DerivedA::Scalar,
                                                            typename DerivedB::Scalar>::ReturnType;
  constexpr int kRows = detail::kron_dim(DerivedA::RowsAtCompileTime, DerivedB::RowsAtCompileTime);
  constexpr int kCols = detail::kron_dim(DerivedA::ColsAtCompileTime, DerivedB::ColsAtCompileTime);
  Eigen::Matrix<ResultScalar, kRows, kCols> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
          ResultScalar(a(i, j)) * b.derived().template cast<ResultScalar>();
  return out;
}

template <typename Derived>
auto hermiticity_defect(const Eigen::MatrixBase<Derived>& m) {
  if (m.size() == 0) return typename Eigen::NumTraits<typename Derived::Scalar>::Real(0);
  return (m.derived() - m.derived().adjoint().eval()).cwiseAbs().maxCoeff();
}

// Entrywise equality within an absolute tolerance.
template <typename DerivedA, typename DerivedB>
bool approx_equal(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b,
                  typename Eigen::NumTraits<typename DerivedA::Scalar>::Real atol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  if (a.size() == 0) return true;
  return (a.derived() - b.derived()).cwiseAbs().maxCoeff() <= atol;
}

namespace detail {
template <typename Derived>
void require_4x4(const Eigen::MatrixBase<Derived>& m, const char* who) {
  if (m.rows() != 4 || m.cols() != 4)
    throw std::invalid_argument(std::string(who) + ": expected a 4x4 matrix");
}
}  // namespace detail

// Transpose on the second-qubit indices: out_{m mu, n nu} = in_{m nu, n mu}.
// The result of transposing a Hermitian matrix is Hermitian but in general
// not positive, so this returns a plain matrix.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, 4, 4> partial_transpose_b(
    const Eigen::MatrixBase<Derived>& rho) {
  detail::require_4x4(rho, "partial_transpose_b");
  Eigen::Matrix<typename Derived::Scalar, 4, 4> out;
  for (int m = 0; m < 2; ++m)
    for (int mu = 0; mu < 2; ++mu)
      for (int n = 0; n < 2; ++n)
        for (int nu = 0; nu < 2; ++nu)
          out(2 * m + mu, 2 * n + nu) = rho(2 * m + nu, 2 * n + mu);
  return out;
}

// Trace over the second qubit: out(i,j) = sum_k in(2i+k, 2j+k).
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, 2, 2> partial_trace_b(
    const Eigen::MatrixBase<Derived>& rho) {
  detail::require_4x4(rho, "partial_trace_b");
  Eigen::Matrix<typename Derived::Scalar, 2, 2> out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out(i, j) = rho(2 * i, 2 * j) + rho(2 * i + 1, 2 * j + 1);
  return out;
}

// Trace over the first qubit: out(i,j) = sum_k in(2k+i, 2k+j).
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, 2, 2> partial_trace_a(
    const Eigen::MatrixBase<Derived>& rho) {
  detail::require_4x4(rho, "partial_trace_a");
  Eigen::Matrix<typename Derived::Scalar, 2, 2> out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out(i, j) = rho(i, j) + rho(2 + i, 2 + j);
  return out;
}

// Ascending eigenvalues of a Hermitian (or real symmetric) matrix. Rejects
// inputs whose Hermiticity defect exceeds `defect_tol`.
template <typename Derived>
auto hermitian_eigenvalues(
    const Eigen::MatrixBase<Derived>& m,
    typename Eigen::NumTraits<typename Derived::Scalar>::Real defect_tol =
        static_cast<typename Eigen::NumTraits<typename Derived::Scalar>::Real>(
            tol::hermitian_input)) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("hermitian_eigenvalues: matrix is not square");
  if (hermiticity_defect(m) > defect_tol)
    throw std::invalid_argument("hermitian_eigenvalues: matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<typename Derived::PlainObject> solver(m.derived(),
                                                                      Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("hermitian_eigenvalues: eigenvalue iteration failed");
  return solver.eigenvalues().eval();
}

// Determinant for dimension <= 4 (cofactor expansion at fixed size).
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols() || m.rows() > 4)
    throw std::invalid_argument("determinant: expected a square matrix of dimension <= 4");
  return m.derived().determinant();
}

// <psi| rho |psi> for a normalized |psi>; real for Hermitian rho.
template <typename DerivedV, typename DerivedM>
auto fidelity_with_pure(const Eigen::MatrixBase<DerivedV>& psi,
                        const Eigen::MatrixBase<DerivedM>& rho) {
  using Real = typename Eigen::NumTraits<typename DerivedM::Scalar>::Real;
  if (psi.cols() != 1 || rho.rows() != rho.cols() || psi.rows() != rho.rows())
    throw std::invalid_argument("fidelity_with_pure: dimension mismatch");
  if (std::abs(psi.norm() - Real(1)) > static_cast<Real>(tol::normalization))
    throw std::invalid_argument("fidelity_with_pure: |psi> is not normalized");
  const auto value = (psi.adjoint() * rho.derived() * psi.derived()).eval()(0, 0);
  using std::real;
  return real(value);
}

// ---------------------------------------------------------------------------
// Validated two-qubit density operator in the {|00>,|01>,|10>,|11>} basis.

template <typename Scalar>
class TwoQubitState {
 public:
  using Matrix = Matrix4c<Scalar>;

  explicit TwoQubitState(Matrix rho) : rho_(std::move(rho)) { validate(rho_); }

  const Matrix& matrix() const { return rho_; }

 private:
  static void validate(const Matrix& rho) {
    using std::abs;
    if (hermiticity_defect(rho) > static_cast<Scalar>(tol::hermiticity))
      throw std::invalid_argument("TwoQubitState: matrix is not Hermitian");
    if (abs(rho.trace() - Complex<Scalar>(1)) > static_cast<Scalar>(tol::unit_trace))
      throw std::invalid_argument("TwoQubitState: trace is not 1");
    const auto eigenvalues = hermitian_eigenvalues(rho);
    if (eigenvalues(0) < static_cast<Scalar>(tol::psd_floor))
      throw std::invalid_argument("TwoQubitState: matrix is not positive semidefinite");
  }

  Matrix rho_;
};

template <typename Scalar>
Matrix4c<Scalar> partial_transpose_b(const TwoQubitState<Scalar>& rho) {
  return partial_transpose_b(rho.matrix());
}

template <typename Scalar>
Matrix2c<Scalar> partial_trace_b(const TwoQubitState<Scalar>& rho) {
  return partial_trace_b(rho.matrix());
}

template <typename Scalar>
Matrix2c<Scalar> partial_trace_a(const TwoQubitState<Scalar>& rho) {
  return partial_trace_a(rho.matrix());
}

}  // namespace bhc
