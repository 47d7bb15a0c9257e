// SPDX-License-Identifier: Apache-2.0
//
// Bloch-vector / correlation-matrix decomposition and the Horodecki CHSH
// criterion: a state admits a CHSH violation iff M(rho) > 1, where M is the
// sum of the two largest eigenvalues of U = C^T C. A direct numerical
// maximization of the CHSH expectation over measurement settings serves as
// an oracle that never touches the U-eigenvalue formula.
#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

#include "bhc/linalg.hpp"
#include "bhc/machine.hpp"
#include "bhc/tolerances.hpp"

namespace bhc {

template <typename Scalar>
struct CorrelationData {
  Vector3r<Scalar> r;  // Bloch vector of clone a
  Vector3r<Scalar> s;  // Bloch vector of clone b
  Matrix3r<Scalar> c;  // c(i,j) = tr(rho sigma_{i+1} x sigma_{j+1})
};

template <typename Scalar>
struct BellReport {
  std::array<Scalar, 3> u{};   // ascending eigenvalues of C^T C
  Scalar m_value{};            // sum of the two largest u
  Scalar chsh_max_numeric{};   // grid-plus-descent maximum of tr(rho B)
  bool violates{};             // m_value > 1 + tol::sign (boundary counts as no violation)
};

// Thrown when the CHSH refinement exceeds its pass cap; carries the best
// value found so far.
class ChshConvergenceError : public std::runtime_error {
 public:
  ChshConvergenceError(double best, int passes)
      : std::runtime_error("chsh_max_numeric: refinement did not converge"),
        best_value(best),
        passes_used(passes) {}
  double best_value;
  int passes_used;
};

template <typename Scalar>
CorrelationData<Scalar> correlation_data(const TwoQubitState<Scalar>& rho) {
  const auto check_real = [](Complex<Scalar> value) {
    if (std::abs(value.imag()) > static_cast<Scalar>(tol::imag_leak))
      throw std::invalid_argument("correlation_data: trace has a nonreal part");
    return value.real();
  };
  CorrelationData<Scalar> data;
  const Matrix2c<Scalar> id = identity2<Scalar>();
  for (int i = 1; i <= 3; ++i) {
    const Matrix2c<Scalar> sigma_i = pauli<Scalar>(i);
    data.r(i - 1) = check_real((rho.matrix() * kron(sigma_i, id)).trace());
    data.s(i - 1) = check_real((rho.matrix() * kron(id, sigma_i)).trace());
    for (int j = 1; j <= 3; ++j)
      data.c(i - 1, j - 1) =
          check_real((rho.matrix() * kron(sigma_i, pauli<Scalar>(j))).trace());
  }
  return data;
}

// Ascending eigenvalues of U = C^T C. U is a Gram matrix, so eigenvalues in
// [psd_floor, 0) are rounding noise and are clamped to zero.
template <typename Scalar>
std::array<Scalar, 3> u_eigenvalues(const CorrelationData<Scalar>& data) {
  const Matrix3r<Scalar> u = data.c.transpose() * data.c;
  const auto eigenvalues = hermitian_eigenvalues(u);
  std::array<Scalar, 3> out;
  for (int i = 0; i < 3; ++i) {
    if (eigenvalues(i) < static_cast<Scalar>(tol::psd_floor))
      throw std::invalid_argument("u_eigenvalues: C^T C has a negative eigenvalue");
    out[i] = std::max(eigenvalues(i), Scalar(0));
  }
  return out;
}

// For the two-clone family: u1 = u2 = 4 xi^2 and u3 = 1 - 8 xi + 16 xi^2,
// which is (1 - 4 xi)^2. Returned ascending.
template <typename Scalar>
std::array<Scalar, 3> u_eigenvalues_closed_form(const MachineParameter<Scalar>& machine) {
  const Scalar xi = machine.xi();
  const Scalar pair = 4 * xi * xi;
  const Scalar third = (1 - 4 * xi) * (1 - 4 * xi);
  std::array<Scalar, 3> u{pair, pair, third};
  std::sort(u.begin(), u.end());
  return u;
}

template <typename Scalar>
Scalar m_of_u(const std::array<Scalar, 3>& u) {
  return u[1] + u[2];
}

namespace detail {

template <typename Scalar>
Vector3r<Scalar> unit_from_angles(Scalar theta, Scalar phi) {
  Vector3r<Scalar> v;
  v << std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta);
  return v;
}

// For fixed (b, b') the optimal first-side vectors are the normalized images
// of b +- b' under C, so the objective collapses to
// |C (b + b')| + |C (b - b')| over the remaining two unit vectors.
template <typename Scalar>
Scalar chsh_objective(const Matrix3r<Scalar>& c, const std::array<Scalar, 4>& angles) {
  const Vector3r<Scalar> b = unit_from_angles(angles[0], angles[1]);
  const Vector3r<Scalar> bp = unit_from_angles(angles[2], angles[3]);
  return (c * (b + bp)).norm() + (c * (b - bp)).norm();
}

}  // namespace detail

// Maximum of tr(rho B) over CHSH operators B = a.sigma x (b+b').sigma +
// a'.sigma x (b-b').sigma with unit vectors a, a', b, b'. Coarse 12x24
// (theta x phi) grid per remaining vector, then coordinate descent with a
// halving step. Deterministic: strict improvement only, so the
// lexicographically first grid tuple wins ties.
template <typename Scalar>
Scalar chsh_max_from_correlation(const Matrix3r<Scalar>& c, Scalar tolerance,
                                 int max_passes = 200) {
  if (!(tolerance >= static_cast<Scalar>(tol::chsh_min_tol)))
    throw std::invalid_argument("chsh_max_numeric: tolerance must be >= 1e-8");

  constexpr int kThetaSteps = 12;
  constexpr int kPhiSteps = 24;
  const Scalar pi = std::acos(Scalar(-1));

  Scalar best = -1;
  std::array<Scalar, 4> best_angles{};
  for (int it = 0; it < kThetaSteps; ++it) {
    const Scalar theta1 = pi * (Scalar(it) + Scalar(0.5)) / kThetaSteps;
    for (int ip = 0; ip < kPhiSteps; ++ip) {
      const Scalar phi1 = 2 * pi * Scalar(ip) / kPhiSteps;
      for (int jt = 0; jt < kThetaSteps; ++jt) {
        const Scalar theta2 = pi * (Scalar(jt) + Scalar(0.5)) / kThetaSteps;
        for (int jp = 0; jp < kPhiSteps; ++jp) {
          const Scalar phi2 = 2 * pi * Scalar(jp) / kPhiSteps;
          const std::array<Scalar, 4> angles{theta1, phi1, theta2, phi2};
          const Scalar value = detail::chsh_objective(c, angles);
          if (value > best) {
            best = value;
            best_angles = angles;
          }
        }
      }
    }
  }

  // The objective is smooth in the angles, so a step below sqrt(tol)/4 can
  // no longer move the value by more than ~tol.
  const Scalar stop_step = std::sqrt(tolerance) / 4;
  Scalar step = pi / kThetaSteps;
  int passes = 0;
  while (step > stop_step) {
    if (++passes > max_passes) throw ChshConvergenceError(static_cast<double>(best), passes - 1);
    bool improved = false;
    for (int coordinate = 0; coordinate < 4; ++coordinate) {
      for (const Scalar delta : {step, -step}) {
        std::array<Scalar, 4> candidate = best_angles;
        candidate[coordinate] += delta;
        const Scalar value = detail::chsh_objective(c, candidate);
        if (value > best) {
          best = value;
          best_angles = candidate;
          improved = true;
        }
      }
    }
    if (!improved) step /= 2;
  }
  return best;
}

template <typename Scalar>
Scalar chsh_max_numeric(const TwoQubitState<Scalar>& rho, Scalar tolerance, int max_passes = 200) {
  return chsh_max_from_correlation(correlation_data(rho).c, tolerance, max_passes);
}

// Full report; the numeric CHSH maximum is computed at `chsh_tolerance`.
template <typename Scalar>
BellReport<Scalar> bell_report(const TwoQubitState<Scalar>& rho,
                               Scalar chsh_tolerance = Scalar(1e-6)) {
  BellReport<Scalar> report;
  const auto data = correlation_data(rho);
  report.u = u_eigenvalues(data);
  report.m_value = m_of_u(report.u);
  report.violates = report.m_value > 1 + static_cast<Scalar>(tol::sign);
  report.chsh_max_numeric = chsh_max_from_correlation(data.c, chsh_tolerance);
  return report;
}

}  // namespace bhc
