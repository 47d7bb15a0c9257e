// SPDX-License-Identifier: Apache-2.0
//
// Teleportation through the two-clone state, two ways. The closed form
// F_max = (1 + N(rho)/3)/2 with N = sum of singular values of C bounds any
// trace-preserving strategy; the protocol simulation runs the standard
// Bell-measurement scheme (projective measurement on input + clone a,
// Pauli correction on clone b) with the correction table found by
// exhaustive search, not assumed. Average fidelity uses the six Pauli
// eigenstates, a 2-design, so the average is exact rather than sampled;
// the seeded Monte Carlo estimator cross-checks it on Haar-random inputs.
#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

#include "bhc/bell.hpp"
#include "bhc/linalg.hpp"
#include "bhc/tolerances.hpp"

namespace bhc {

enum class Pauli : int { identity = 0, x = 1, y = 2, z = 3 };

inline const char* to_string(Pauli p) {
  switch (p) {
    case Pauli::identity: return "I";
    case Pauli::x: return "X";
    case Pauli::y: return "Y";
    case Pauli::z: return "Z";
  }
  return "?";
}

template <typename Scalar>
Matrix2c<Scalar> pauli_matrix(Pauli p) {
  return p == Pauli::identity ? identity2<Scalar>() : pauli<Scalar>(static_cast<int>(p));
}

template <typename Scalar>
struct TeleportReport {
  Scalar n_value{};
  Scalar f_max{};
  bool useful{};       // f_max > 2/3 + tol::usefulness
  Scalar f_protocol{}; // best Bell-measurement + Pauli-correction fidelity
  std::array<Pauli, 4> correction_table{};  // per outcome Phi+, Phi-, Psi+, Psi-
};

template <typename Scalar>
struct McEstimate {
  Scalar mean{};
  Scalar std_error{};
  std::size_t samples{};
  std::uint64_t seed{};
};

// N(rho) = sum_i sqrt(u_i).
template <typename Scalar>
Scalar n_of_rho(const TwoQubitState<Scalar>& rho) {
  const auto u = u_eigenvalues(correlation_data(rho));
  return std::sqrt(u[0]) + std::sqrt(u[1]) + std::sqrt(u[2]);
}

// Fidelity fields only; protocol fields are left value-initialized.
template <typename Scalar>
TeleportReport<Scalar> fidelity_max(const TwoQubitState<Scalar>& rho) {
  TeleportReport<Scalar> report;
  report.n_value = n_of_rho(rho);
  report.f_max = (1 + report.n_value / 3) / 2;
  report.useful = report.f_max > Scalar(2) / 3 + static_cast<Scalar>(tol::usefulness);
  return report;
}

namespace detail {

// The joint system is (input, clone a, clone b) with the input as the
// slowest index; row = 4*(pair index of input,clone a) + clone b... the
// pair (input, clone a) occupies the two slow qubits, clone b the fast one,
// so row = 2*I + b with I in 0..3.
template <typename Scalar>
Matrix2c<Scalar> trace_out_measured_pair(const Eigen::Matrix<Complex<Scalar>, 8, 8>& joint) {
  Matrix2c<Scalar> out = Matrix2c<Scalar>::Zero();
  for (int pair = 0; pair < 4; ++pair)
    for (int b = 0; b < 2; ++b)
      for (int bp = 0; bp < 2; ++bp)
        out(b, bp) += joint(2 * pair + b, 2 * pair + bp);
  return out;
}

// Unnormalized post-measurement states of clone b for the four Bell
// outcomes on (input, clone a); their traces are the outcome probabilities.
// `input_op` may be any 2x2 operator (linearity in the input is used to
// assemble the channel`s process images).
template <typename Scalar>
std::array<Matrix2c<Scalar>, 4> branch_states(const Matrix2c<Scalar>& input_op,
                                              const Matrix4c<Scalar>& rho) {
  const Eigen::Matrix<Complex<Scalar>, 8, 8> joint = kron(input_op, rho);
  std::array<Matrix2c<Scalar>, 4> branches;
  for (int k = 0; k < 4; ++k) {
    const Vector4c<Scalar> bell = bell_vector<Scalar>(static_cast<BellState>(k));
    const Eigen::Matrix<Complex<Scalar>, 8, 8> projector =
        kron((bell * bell.adjoint()).eval(), identity2<Scalar>());
    branches[k] = trace_out_measured_pair<Scalar>(projector * joint * projector);
  }
  return branches;
}

}  // namespace detail

template <typename Scalar>
struct ProtocolOutcome {
  Scalar probability{};
  Matrix2c<Scalar> conditional_state;  // normalized; maximally mixed if p = 0
};

// One protocol run for a fixed input |psi>, before correction.
template <typename Scalar>
std::array<ProtocolOutcome<Scalar>, 4> protocol_outcomes(const TwoQubitState<Scalar>& rho,
                                                         const Vector2c<Scalar>& psi) {
  if (std::abs(psi.norm() - Scalar(1)) > static_cast<Scalar>(tol::normalization))
    throw std::invalid_argument("protocol_outcomes: |psi> is not normalized");
  const auto branches =
      detail::branch_states<Scalar>((psi * psi.adjoint()).eval(), rho.matrix());
  std::array<ProtocolOutcome<Scalar>, 4> outcomes;
  for (int k = 0; k < 4; ++k) {
    const Scalar p = branches[k].trace().real();
    outcomes[k].probability = p;
    outcomes[k].conditional_state =
        p > Scalar(0) ? (branches[k] / p).eval() : (identity2<Scalar>() / 2).eval();
  }
  return outcomes;
}

// The six Pauli eigenstates |0>, |1>, |+->_x, |+->_y.
template <typename Scalar>
std::array<Vector2c<Scalar>, 6> pauli_eigenstates() {
  const Scalar s = Scalar(1) / std::sqrt(Scalar(2));
  const Complex<Scalar> i{0, 1};
  std::array<Vector2c<Scalar>, 6> states;
  states[0] << 1, 0;
  states[1] << 0, 1;
  states[2] << s, s;
  states[3] << s, -s;
  states[4] << s, i * s;
  states[5] << s, -i * s;
  return states;
}

// Exact protocol simulation. The input average runs over the six-state
// 2-design; the correction table ranges over all 4^4 Pauli assignments and
// the best one is reported (first found on ties, scanning outcome Phi+ as
// the fastest digit).
template <typename Scalar>
TeleportReport<Scalar> simulate_protocol_exact(const TwoQubitState<Scalar>& rho) {
  TeleportReport<Scalar> report = fidelity_max(rho);

  const auto inputs = pauli_eigenstates<Scalar>();
  // gains[s][k][c]: contribution of outcome k under correction c for input s
  // (probability times conditional fidelity).
  Scalar gains[6][4][4];
  for (int s = 0; s < 6; ++s) {
    const auto branches =
        detail::branch_states<Scalar>((inputs[s] * inputs[s].adjoint()).eval(), rho.matrix());
    for (int k = 0; k < 4; ++k) {
      for (int c = 0; c < 4; ++c) {
        const Matrix2c<Scalar> u = pauli_matrix<Scalar>(static_cast<Pauli>(c));
        const Matrix2c<Scalar> corrected = u * branches[k] * u.adjoint();
        gains[s][k][c] = (inputs[s].adjoint() * corrected * inputs[s]).value().real();
      }
    }
  }

  Scalar best = -1;
  std::array<Pauli, 4> best_table{};
  for (int assignment = 0; assignment < 256; ++assignment) {
    std::array<int, 4> table;
    for (int k = 0; k < 4; ++k) table[k] = (assignment >> (2 * k)) & 3;
    Scalar fidelity = 0;
    for (int s = 0; s < 6; ++s)
      for (int k = 0; k < 4; ++k) fidelity += gains[s][k][table[k]];
    fidelity /= 6;
    if (fidelity > best) {
      best = fidelity;
      for (int k = 0; k < 4; ++k) best_table[k] = static_cast<Pauli>(table[k]);
    }
  }

  report.f_protocol = best;
  report.correction_table = best_table;
  return report;
}

// Protocol with a fixed correction table as a linear map on input operators,
// precomputed on the basis E_ij = |i><j| so each sample costs a few flops.
template <typename Scalar>
class TeleportChannel {
 public:
  TeleportChannel(const TwoQubitState<Scalar>& rho, const std::array<Pauli, 4>& table) {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        Matrix2c<Scalar> basis = Matrix2c<Scalar>::Zero();
        basis(i, j) = Complex<Scalar>(1);
        const auto branches = detail::branch_states<Scalar>(basis, rho.matrix());
        Matrix2c<Scalar> image = Matrix2c<Scalar>::Zero();
        for (int k = 0; k < 4; ++k) {
          const Matrix2c<Scalar> u = pauli_matrix<Scalar>(table[k]);
          image += u * branches[k] * u.adjoint();
        }
        images_[i][j] = image;
      }
  }

  // <psi| Lambda(|psi><psi|) |psi>.
  Scalar fidelity(const Vector2c<Scalar>& psi) const {
    Matrix2c<Scalar> out = Matrix2c<Scalar>::Zero();
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) out += psi(i) * std::conj(psi(j)) * images_[i][j];
    return (psi.adjoint() * out * psi).value().real();
  }

 private:
  std::array<std::array<Matrix2c<Scalar>, 2>, 2> images_;
};

// Monte-Carlo estimate of the protocol fidelity over Haar-random inputs,
// using the best correction table from the exact search. Reproducible for a
// fixed seed; the standard error is the sample one.
template <typename Scalar>
McEstimate<Scalar> simulate_protocol_mc(const TwoQubitState<Scalar>& rho, std::size_t samples,
                                        std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("simulate_protocol_mc: samples must be >= 1");
  const TeleportChannel<Scalar> channel(rho, simulate_protocol_exact(rho).correction_table);

  std::mt19937_64 rng(seed);
  std::normal_distribution<Scalar> gauss(0, 1);

  Scalar sum = 0;
  Scalar sum_sq = 0;
  for (std::size_t n = 0; n < samples; ++n) {
    Vector2c<Scalar> psi;
    do {
      psi << Complex<Scalar>{gauss(rng), gauss(rng)}, Complex<Scalar>{gauss(rng), gauss(rng)};
    } while (psi.norm() == Scalar(0));
    psi /= psi.norm();
    const Scalar f = channel.fidelity(psi);
    sum += f;
    sum_sq += f * f;
  }

  McEstimate<Scalar> estimate;
  estimate.samples = samples;
  estimate.seed = seed;
  estimate.mean = sum / Scalar(samples);
  if (samples > 1) {
    const Scalar variance =
        std::max(Scalar(0), (sum_sq - Scalar(samples) * estimate.mean * estimate.mean) /
                                Scalar(samples - 1));
    estimate.std_error = std::sqrt(variance / Scalar(samples));
  }
  return estimate;
}

}  // namespace bhc
