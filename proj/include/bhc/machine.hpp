// SPDX-License-Identifier: Apache-2.0
//
// Buzek-Hillery copying machine. The machine Hilbert-space vectors never
// appear: the two-clone output is fully determined by the overlap
// xi = <Y_i|Y_i> together with eta = 1 - 2*xi, the choice that makes the
// one-clone distortion independent of the input. The Schwarz inequality
// confines xi to [1/6, 1/2].
#pragma once

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "bhc/linalg.hpp"
#include "bhc/tolerances.hpp"

namespace bhc {

template <typename Scalar>
class MachineParameter {
 public:
  static constexpr Scalar min_xi() { return Scalar(1) / Scalar(6); }
  static constexpr Scalar max_xi() { return Scalar(1) / Scalar(2); }

  explicit MachineParameter(Scalar xi) : xi_(xi) {
    if (!(xi >= min_xi() && xi <= max_xi())) {
      std::ostringstream msg;
      msg << "machine parameter xi=" << xi << " outside the admissible range [1/6, 1/2]";
      throw std::out_of_range(msg.str());
    }
  }

  Scalar xi() const { return xi_; }
  Scalar eta() const { return Scalar(1) - 2 * xi_; }

 private:
  Scalar xi_;
};

template <typename Scalar>
MachineParameter<Scalar> validate_machine(Scalar xi) {
  return MachineParameter<Scalar>(xi);
}

// Input qubit alpha|0> + beta|1> with real nonnegative amplitudes; beta is
// derived as the nonnegative root of 1 - alpha^2.
template <typename Scalar>
class InputState {
 public:
  explicit InputState(Scalar alpha) {
    if (!(alpha >= Scalar(0) && alpha <= Scalar(1)))
      throw std::out_of_range("input amplitude alpha must lie in [0, 1]");
    alpha_ = alpha;
    alpha2_ = alpha * alpha;
    beta_ = std::sqrt(Scalar(1) - alpha2_);
  }

  static InputState from_alpha_squared(Scalar alpha2) {
    if (!(alpha2 >= Scalar(0) && alpha2 <= Scalar(1)))
      throw std::out_of_range("alpha^2 must lie in [0, 1]");
    InputState state(std::sqrt(alpha2));
    state.alpha2_ = alpha2;  // keep the exact user value
    state.beta_ = std::sqrt(Scalar(1) - alpha2);
    return state;
  }

  Scalar alpha() const { return alpha_; }
  Scalar beta() const { return beta_; }
  Scalar alpha_squared() const { return alpha2_; }
  Scalar beta_squared() const { return Scalar(1) - alpha2_; }

  Vector2c<Scalar> ket() const {
    Vector2c<Scalar> chi;
    chi << alpha_, beta_;
    return chi;
  }

 private:
  Scalar alpha_{};
  Scalar alpha2_{};
  Scalar beta_{};
};

// Two-clone reduced density operator. Nonzero elements, with eta = 1 - 2*xi:
//   rho(00,00) = alpha^2 eta         rho(11,11) = beta^2 eta
//   rho(01,01) = rho(10,10) = rho(01,10) = rho(10,01) = xi
//   edges rho(00,01) = rho(00,10) = rho(01,11) = rho(10,11) (+ h.c.)
//        = alpha beta eta / 2
// The singlet component vanishes identically and the matrix is symmetric
// under exchange of the two clones.
template <typename Scalar>
TwoQubitState<Scalar> build_two_clone_state(const MachineParameter<Scalar>& machine,
                                            const InputState<Scalar>& input) {
  const Scalar xi = machine.xi();
  const Scalar eta = machine.eta();
  const Scalar edge = input.alpha() * input.beta() * eta / 2;

  Matrix4c<Scalar> rho = Matrix4c<Scalar>::Zero();
  rho(0, 0) = input.alpha_squared() * eta;
  rho(3, 3) = input.beta_squared() * eta;
  rho(1, 1) = rho(2, 2) = rho(1, 2) = rho(2, 1) = xi;
  rho(0, 1) = rho(0, 2) = rho(1, 0) = rho(2, 0) = edge;
  rho(1, 3) = rho(2, 3) = rho(3, 1) = rho(3, 2) = edge;
  return TwoQubitState<Scalar>(std::move(rho));
}

// <chi| rho_a |chi> for the one-clone reduced state rho_a = tr_b(rho_ab).
// Equals 1 - xi for every input (the distortion is input independent).
template <typename Scalar>
Scalar clone_fidelity(const MachineParameter<Scalar>& machine, const InputState<Scalar>& input) {
  const auto rho_a = partial_trace_b(build_two_clone_state(machine, input));
  return fidelity_with_pure(input.ket(), rho_a);
}

}  // namespace bhc
