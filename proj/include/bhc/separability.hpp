// SPDX-License-Identifier: Apache-2.0
//
// Inseparability of the two-clone state, two ways: the closed-form
// determinants W3 / W4 of the partially transposed operator, and the
// partial-transpose eigenvalue criterion (necessary and sufficient for
// two qubits). The eigenvalue sign is treated as ground truth; the
// determinant forms are validated against it.
#pragma once

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "bhc/linalg.hpp"
#include "bhc/machine.hpp"
#include "bhc/tolerances.hpp"

namespace bhc {

template <typename Scalar>
struct SeparabilityReport {
  Scalar w3{};                 // leading 3x3 principal minor of the partial transpose
  Scalar w4{};                 // full determinant of the partial transpose
  Scalar min_pt_eigenvalue{};
  bool entangled{};            // min_pt_eigenvalue < -tol::sign
};

template <typename Scalar>
struct RegionBounds {
  Scalar lower_alpha2{};
  Scalar upper_alpha2{};
  bool upper_defined{};  // false when the radicand A^2 - 8*A*xi^4 is negative
  bool nonempty{};       // upper_defined && lower_alpha2 < upper_alpha2
};

// W3 = (alpha^2 xi eta / 2) (2 xi - beta^2 eta), eta = 1 - 2 xi.
template <typename Scalar>
Scalar w3_closed_form(const MachineParameter<Scalar>& machine, const InputState<Scalar>& input) {
  const Scalar xi = machine.xi();
  const Scalar eta = machine.eta();
  return input.alpha_squared() * xi * eta / 2 * (2 * xi - input.beta_squared() * eta);
}

// W4 = (alpha^2 beta^2 xi eta^2 (6 xi - 1) - 2 xi^4) / 2.
template <typename Scalar>
Scalar w4_closed_form(const MachineParameter<Scalar>& machine, const InputState<Scalar>& input) {
  const Scalar xi = machine.xi();
  const Scalar eta = machine.eta();
  const Scalar xi4 = xi * xi * xi * xi;
  return (input.alpha_squared() * input.beta_squared() * xi * eta * eta * (6 * xi - 1) -
          2 * xi4) / 2;
}

// The same two determinants read off the matrix: W3 is the determinant of
// the leading 3x3 principal minor of the partial transpose, W4 its full
// determinant. Both are real for Hermitian input.
template <typename Scalar>
std::pair<Scalar, Scalar> w3_w4_from_matrix(const TwoQubitState<Scalar>& rho) {
  const Matrix4c<Scalar> pt = partial_transpose_b(rho);
  const Complex<Scalar> w3 = determinant(pt.template topLeftCorner<3, 3>());
  const Complex<Scalar> w4 = determinant(pt);
  if (std::abs(w3.imag()) > static_cast<Scalar>(tol::imag_leak) ||
      std::abs(w4.imag()) > static_cast<Scalar>(tol::imag_leak))
    throw std::invalid_argument("w3_w4_from_matrix: determinants are not real");
  return {w3.real(), w4.real()};
}

// Peres criterion: entangled iff the partial transpose has a negative
// eigenvalue (strictly below -tol::sign).
template <typename Scalar>
SeparabilityReport<Scalar> ppt_entangled(const TwoQubitState<Scalar>& rho) {
  SeparabilityReport<Scalar> report;
  const auto [w3, w4] = w3_w4_from_matrix(rho);
  report.w3 = w3;
  report.w4 = w4;
  report.min_pt_eigenvalue = hermitian_eigenvalues(partial_transpose_b(rho))(0);
  report.entangled = report.min_pt_eigenvalue < -static_cast<Scalar>(tol::sign);
  return report;
}

namespace detail {
template <typename Scalar>
void require_xi_in(Scalar xi, Scalar lo, Scalar hi, const char* who, const char* range) {
  if (!(xi > lo && xi < hi)) {
    std::ostringstream msg;
    msg << who << ": xi=" << xi << " outside the open interval " << range;
    throw std::out_of_range(msg.str());
  }
}
}  // namespace detail

// Upper alpha^2 bound of sub-case (iia): W3 < 0 for 0 < alpha^2 < (1-4xi)/(1-2xi),
// valid on 1/6 < xi < 1/4.
template <typename Scalar>
Scalar case_iia_bound(const MachineParameter<Scalar>& machine) {
  detail::require_xi_in(machine.xi(), MachineParameter<Scalar>::min_xi(), Scalar(1) / Scalar(4),
                        "case_iia_bound", "(1/6, 1/4)");
  return (1 - 4 * machine.xi()) / machine.eta();
}

// Smallest xi for which the sub-case (iib) window can open, (3 - sqrt 5)/4.
template <typename Scalar>
Scalar case_iib_xi_threshold() {
  return (Scalar(3) - std::sqrt(Scalar(5))) / 4;
}

// A = xi (6 xi - 1) (1 - 2 xi)^2.
template <typename Scalar>
Scalar case_iib_coefficient(Scalar xi) {
  const Scalar eta = 1 - 2 * xi;
  return xi * (6 * xi - 1) * eta * eta;
}

// Radicand A^2 - 8 A xi^4 of the (iib) upper bound. Defined for any xi so
// that boundary bisection can probe below the admissible window.
template <typename Scalar>
Scalar case_iib_discriminant(Scalar xi) {
  const Scalar a = case_iib_coefficient(xi);
  const Scalar xi4 = xi * xi * xi * xi;
  return a * a - 8 * a * xi4;
}

// Sub-case (iib) window: (1-4xi)/(1-2xi) < alpha^2 < 1/2 - sqrt(A^2 - 8A xi^4)/(2A),
// stated for (3 - sqrt 5)/4 < xi < 1/4. A negative radicand leaves the upper
// bound undefined (reported, not raised); the window can also close with the
// radicand positive, e.g. it degenerates to a point at xi = 0.2.
template <typename Scalar>
RegionBounds<Scalar> case_iib_bounds(const MachineParameter<Scalar>& machine) {
  const Scalar xi = machine.xi();
  detail::require_xi_in(xi, case_iib_xi_threshold<Scalar>(), Scalar(1) / Scalar(4),
                        "case_iib_bounds", "((3-sqrt(5))/4, 1/4)");
  RegionBounds<Scalar> bounds;
  bounds.lower_alpha2 = (1 - 4 * xi) / machine.eta();
  const Scalar radicand = case_iib_discriminant(xi);
  if (radicand < Scalar(0)) {
    bounds.upper_alpha2 = std::numeric_limits<Scalar>::quiet_NaN();
    bounds.upper_defined = false;
    bounds.nonempty = false;
    return bounds;
  }
  bounds.upper_alpha2 =
      Scalar(1) / 2 - std::sqrt(radicand) / (2 * case_iib_coefficient(xi));
  bounds.upper_defined = true;
  bounds.nonempty = bounds.lower_alpha2 < bounds.upper_alpha2;
  return bounds;
}

}  // namespace bhc
