// SPDX-License-Identifier: Apache-2.0
//
// Parameter-plane sweeps over (xi, alpha^2), bisection location of the
// analytic thresholds, and the region map that carries the closed-form
// classification next to the oracle one instead of preferring either.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bhc/bell.hpp"
#include "bhc/machine.hpp"
#include "bhc/separability.hpp"
#include "bhc/teleport.hpp"
#include "bhc/tolerances.hpp"

namespace bhc {

template <typename Scalar>
struct SweepRow {
  Scalar xi{};
  Scalar alpha2{};
  Scalar w3{};
  Scalar w4{};
  Scalar min_pt_eig{};
  bool entangled{};
  Scalar m_value{};
  Scalar chsh_max{};  // analytic 2*sqrt(M); the grid optimizer lives in chsh-opt
  bool violates_chsh{};
  Scalar n_value{};
  Scalar f_max{};
  bool useful{};
};

// All per-point quantities, computed through the matrix route (state ->
// partial transpose / correlation matrix -> spectra), not the closed forms.
template <typename Scalar>
SweepRow<Scalar> analyze_point(const MachineParameter<Scalar>& machine,
                               const InputState<Scalar>& input) {
  SweepRow<Scalar> row;
  row.xi = machine.xi();
  row.alpha2 = input.alpha_squared();

  const TwoQubitState<Scalar> state = build_two_clone_state(machine, input);
  const SeparabilityReport<Scalar> sep = ppt_entangled(state);
  row.w3 = sep.w3;
  row.w4 = sep.w4;
  row.min_pt_eig = sep.min_pt_eigenvalue;
  row.entangled = sep.entangled;

  const auto u = u_eigenvalues(correlation_data(state));
  row.m_value = m_of_u(u);
  row.chsh_max = 2 * std::sqrt(row.m_value);
  row.violates_chsh = row.m_value > 1 + static_cast<Scalar>(tol::sign);

  row.n_value = std::sqrt(u[0]) + std::sqrt(u[1]) + std::sqrt(u[2]);
  row.f_max = (1 + row.n_value / 3) / 2;
  row.useful = row.f_max > Scalar(2) / 3 + static_cast<Scalar>(tol::usefulness);
  return row;
}

// Uniform grid including both endpoints.
template <typename Scalar>
std::vector<Scalar> linspace(Scalar lo, Scalar hi, std::size_t points) {
  if (points < 2) throw std::invalid_argument("linspace: need at least 2 points");
  std::vector<Scalar> grid(points);
  for (std::size_t k = 0; k < points; ++k)
    grid[k] = lo + (hi - lo) * Scalar(k) / Scalar(points - 1);
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

// The special xi values of the family: the admissible endpoints, the opening
// of the (iib) window, the teleportation threshold and the CHSH threshold.
template <typename Scalar>
std::vector<Scalar> landmark_xis() {
  return {MachineParameter<Scalar>::min_xi(), case_iib_xi_threshold<Scalar>(),
          Scalar(1) / 4, Scalar(1) / (2 * std::sqrt(Scalar(2))), MachineParameter<Scalar>::max_xi()};
}

// Insert every landmark lying inside [grid.front(), grid.back()]; the result
// is sorted with exact duplicates removed.
template <typename Scalar>
std::vector<Scalar> with_landmarks(std::vector<Scalar> grid) {
  if (grid.empty()) return grid;
  const Scalar lo = *std::min_element(grid.begin(), grid.end());
  const Scalar hi = *std::max_element(grid.begin(), grid.end());
  for (const Scalar landmark : landmark_xis<Scalar>())
    if (landmark >= lo && landmark <= hi) grid.push_back(landmark);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

// One row per grid point, xi-major / alpha2-minor. Invalid grid values are
// rejected up front with every offender listed.
template <typename Scalar>
std::vector<SweepRow<Scalar>> sweep(const std::vector<Scalar>& xi_grid,
                                    const std::vector<Scalar>& alpha2_grid) {
  std::ostringstream offenders;
  for (const Scalar xi : xi_grid)
    if (!(xi >= MachineParameter<Scalar>::min_xi() && xi <= MachineParameter<Scalar>::max_xi()))
      offenders << " xi=" << xi;
  for (const Scalar alpha2 : alpha2_grid)
    if (!(alpha2 >= Scalar(0) && alpha2 <= Scalar(1))) offenders << " alpha2=" << alpha2;
  if (!offenders.str().empty())
    throw std::out_of_range("sweep: values outside the admissible ranges:" + offenders.str());

  std::vector<SweepRow<Scalar>> rows;
  rows.reserve(xi_grid.size() * alpha2_grid.size());
  for (const Scalar xi : xi_grid) {
    const MachineParameter<Scalar> machine(xi);
    for (const Scalar alpha2 : alpha2_grid)
      rows.push_back(analyze_point(machine, InputState<Scalar>::from_alpha_squared(alpha2)));
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Boundary location

enum class BoundaryKind { chsh_violation, teleport_usefulness, case_iib_window };

inline const char* boundary_name(BoundaryKind kind) {
  switch (kind) {
    case BoundaryKind::chsh_violation: return "chsh-violation";
    case BoundaryKind::teleport_usefulness: return "teleport-usefulness";
    case BoundaryKind::case_iib_window: return "case-iib-window";
  }
  return "?";
}

// Analytic crossing points: 1/(2 sqrt 2), 1/4 and (3 - sqrt 5)/4.
template <typename Scalar>
Scalar boundary_target(BoundaryKind kind) {
  switch (kind) {
    case BoundaryKind::chsh_violation: return Scalar(1) / (2 * std::sqrt(Scalar(2)));
    case BoundaryKind::teleport_usefulness: return Scalar(1) / 4;
    case BoundaryKind::case_iib_window: return case_iib_xi_threshold<Scalar>();
  }
  throw std::invalid_argument("boundary_target: unknown kind");
}

// Monotone boolean criteria in xi. The state-based ones are evaluated at
// alpha^2 = 1/2 (both are alpha-independent); the (iib) one asks whether the
// window's radicand is nonnegative, which is the quantity whose sign changes
// at the analytic target (the window also pinches shut at the isolated
// tangency xi = 0.2, which is not a sign change).
template <typename Scalar>
bool boundary_predicate(BoundaryKind kind, Scalar xi) {
  switch (kind) {
    case BoundaryKind::chsh_violation: {
      const auto row = analyze_point(MachineParameter<Scalar>(xi),
                                     InputState<Scalar>::from_alpha_squared(Scalar(0.5)));
      return row.violates_chsh;
    }
    case BoundaryKind::teleport_usefulness: {
      const auto row = analyze_point(MachineParameter<Scalar>(xi),
                                     InputState<Scalar>::from_alpha_squared(Scalar(0.5)));
      return row.useful;
    }
    case BoundaryKind::case_iib_window:
      return case_iib_discriminant(xi) >= Scalar(0);
  }
  throw std::invalid_argument("boundary_predicate: unknown kind");
}

template <typename Scalar>
struct BoundaryResult {
  BoundaryKind kind{};
  Scalar xi_star{};
  Scalar target{};
  Scalar residual{};  // |xi_star - target|
};

class NoSignChangeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Plain bisection: the criteria are boolean, so only sign information exists.
template <typename Scalar>
BoundaryResult<Scalar> locate_boundary(BoundaryKind kind, Scalar lo, Scalar hi, Scalar tolerance) {
  if (!(tolerance >= static_cast<Scalar>(tol::bisect_min_tol)))
    throw std::invalid_argument("locate_boundary: tolerance must be >= 1e-12");
  if (!(lo < hi)) throw std::invalid_argument("locate_boundary: need lo < hi");

  const bool at_lo = boundary_predicate(kind, lo);
  const bool at_hi = boundary_predicate(kind, hi);
  if (at_lo == at_hi)
    throw NoSignChangeError(std::string("locate_boundary: criterion '") + boundary_name(kind) +
                            "' does not change on the given interval");

  while (hi - lo >= tolerance) {
    const Scalar mid = (lo + hi) / 2;
    if (boundary_predicate(kind, mid) == at_lo)
      lo = mid;
    else
      hi = mid;
  }

  BoundaryResult<Scalar> result;
  result.kind = kind;
  result.xi_star = (lo + hi) / 2;
  result.target = boundary_target<Scalar>(kind);
  result.residual = std::abs(result.xi_star - result.target);
  return result;
}

// ---------------------------------------------------------------------------
// Region map

enum class EntanglementClass { separable_or_indeterminate, entangled_no_chsh, entangled_chsh };

inline const char* to_string(EntanglementClass label) {
  switch (label) {
    case EntanglementClass::separable_or_indeterminate: return "separable-or-indeterminate";
    case EntanglementClass::entangled_no_chsh: return "entangled-no-chsh";
    case EntanglementClass::entangled_chsh: return "entangled-chsh-violating";
  }
  return "?";
}

template <typename Scalar>
struct RegionCell {
  Scalar xi{};
  Scalar alpha2{};
  EntanglementClass oracle_class{};
  EntanglementClass formula_class{};
  bool oracle_useful{};
  bool formula_useful{};
  // Some deciding statistic sits within tol::boundary_band of its threshold;
  // note the whole f = 2/3 plateau (xi <= 1/4) is flagged this way.
  bool near_boundary{};
  bool agree{};
};

template <typename Scalar>
struct RegionMap {
  std::vector<RegionCell<Scalar>> cells;
  // Disagreements whose deciding statistics are clear of the band; a
  // disagreement on a knife edge is excused, an agreement always counts.
  std::size_t diff_count{};
  std::size_t boundary_count{};
};

// Classified (xi, alpha^2) grid. Each cell carries the oracle labels (matrix
// route) and the closed-form labels (W3/W4 signs, M = 8 xi^2,
// F = max(2/3, (1+4 xi)/3)) side by side.
template <typename Scalar>
RegionMap<Scalar> region_map(std::size_t resolution, bool include_landmarks = true) {
  if (resolution < 2) throw std::invalid_argument("region_map: resolution must be >= 2");

  std::vector<Scalar> xi_grid =
      linspace(MachineParameter<Scalar>::min_xi(), MachineParameter<Scalar>::max_xi(), resolution);
  if (include_landmarks) xi_grid = with_landmarks(std::move(xi_grid));
  const std::vector<Scalar> alpha2_grid = linspace(Scalar(0), Scalar(1), resolution);

  const Scalar band = static_cast<Scalar>(tol::boundary_band);
  const Scalar sign = static_cast<Scalar>(tol::sign);
  const Scalar two_thirds = Scalar(2) / 3;

  RegionMap<Scalar> map;
  map.cells.reserve(xi_grid.size() * alpha2_grid.size());
  for (const Scalar xi : xi_grid) {
    const MachineParameter<Scalar> machine(xi);
    for (const Scalar alpha2 : alpha2_grid) {
      const InputState<Scalar> input = InputState<Scalar>::from_alpha_squared(alpha2);
      const SweepRow<Scalar> row = analyze_point(machine, input);

      RegionCell<Scalar> cell;
      cell.xi = xi;
      cell.alpha2 = alpha2;

      cell.oracle_class = !row.entangled ? EntanglementClass::separable_or_indeterminate
                          : row.violates_chsh ? EntanglementClass::entangled_chsh
                                              : EntanglementClass::entangled_no_chsh;
      cell.oracle_useful = row.useful;

      const Scalar w3 = w3_closed_form(machine, input);
      const Scalar w4 = w4_closed_form(machine, input);
      const Scalar m_formula = 8 * xi * xi;
      const Scalar f_formula = std::max(two_thirds, (1 + 4 * xi) / 3);
      const bool formula_entangled = w3 < -sign || w4 < -sign;
      cell.formula_class = !formula_entangled ? EntanglementClass::separable_or_indeterminate
                           : m_formula > 1 + sign ? EntanglementClass::entangled_chsh
                                                  : EntanglementClass::entangled_no_chsh;
      cell.formula_useful = f_formula > two_thirds + static_cast<Scalar>(tol::usefulness);

      const Scalar stats[] = {std::min(w3, w4),          row.min_pt_eig,
                              row.m_value - 1,           m_formula - 1,
                              row.f_max - two_thirds,    f_formula - two_thirds};
      cell.near_boundary = false;
      for (const Scalar stat : stats)
        if (std::abs(stat) < band) cell.near_boundary = true;

      cell.agree =
          cell.oracle_class == cell.formula_class && cell.oracle_useful == cell.formula_useful;
      if (cell.near_boundary)
        ++map.boundary_count;
      else if (!cell.agree)
        ++map.diff_count;
      map.cells.push_back(cell);
    }
  }
  return map;
}

}  // namespace bhc
