// SPDX-License-Identifier: Apache-2.0
//
// Every numeric tolerance used by the library, in one place. Tests and the
// acceptance suite reference these by name.
#pragma once

namespace bhc::tol {

// Maximum entrywise |m - m^dagger| for a matrix stored as a density operator.
inline constexpr double hermiticity = 1e-12;

// Maximum |tr(rho) - 1| for a density operator.
inline constexpr double unit_trace = 1e-12;

// Most negative admissible eigenvalue of a nominally PSD matrix.
inline constexpr double psd_floor = -1e-10;

// Hermiticity defect accepted by the eigenvalue routine itself.
inline constexpr double hermitian_input = 1e-10;

// Maximum |norm(psi) - 1| for a pure-state vector.
inline constexpr double normalization = 1e-12;

// A statistic counts as strictly negative (or a violation as strict) only
// beyond this margin; values inside (-sign, sign) are boundary/indeterminate.
inline constexpr double sign = 1e-10;

// Width of the band around zero inside which the determinant test and the
// partial-transpose oracle are allowed to disagree (region boundaries).
inline constexpr double boundary_band = 1e-8;

// Largest imaginary part tolerated when a trace is reported as real.
inline constexpr double imag_leak = 1e-12;

// Margin over the classical limit 2/3 for the "useful channel" verdict.
inline constexpr double usefulness = 1e-12;

// Smallest admissible tolerance for the numerical CHSH maximization.
inline constexpr double chsh_min_tol = 1e-8;

// Smallest admissible tolerance for boundary bisection.
inline constexpr double bisect_min_tol = 1e-12;

}  // namespace bhc::tol
