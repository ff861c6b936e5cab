#pragma once

#include "geophase/core.hpp"

#include <optional>

namespace geophase {

inline constexpr double kSteppedUnitaryTolerance = 1e-9;
inline constexpr int kMinStepsPerPeriod = 8;
inline constexpr int kMinDynamicalPhaseSteps = 100;

enum class EvolutionMethod { exact, stepped };

struct EvolutionResult {
  TwoSpinState final_state;
  Operator4 propagator;
  double elapsed = 0.0;
  EvolutionMethod method = EvolutionMethod::exact;
  int step_count = 0;  // stepped only
};

/// U(t) = V(t) exp(-i H~ t), solving i d/dt psi = H(t) psi for any couplings.
Operator4 exact_propagator(const SpinParams& params, double t);

EvolutionResult evolve_exact(const SpinParams& params, const TwoSpinState& initial, double t);

/// Fixed-step fourth-order Magnus integration of i psi' = H(t) psi sampling
/// H(t) at the start, midpoint and end of every step. Independent of the
/// rotating-frame solution.
///
/// Throws ParameterError when steps < 1 or when fewer than kMinStepsPerPeriod
/// steps fall in the shortest period min(tau, 2 pi / ||H||).
EvolutionResult evolve_stepped(const SpinParams& params, const TwoSpinState& initial, double t,
                               int steps);

/// Shortest characteristic period min(tau, 2 pi / ||H||); infinity for a
/// vanishing, static Hamiltonian.
double shortest_period(const SpinParams& params);

struct AdiabaticCycleResult {
  TwoSpinState final_state;
  /// arg <xi_n(0) | psi(tau)>, in (-pi, pi].
  double total_phase = 0.0;
  /// |<xi_n(0) | psi(tau)>|
  double fidelity = 0.0;
};

/// Starts in the instantaneous eigenstate xi_n(0) and evolves one period.
/// Uses the exact propagator unless `steps` is given.
AdiabaticCycleResult adiabatic_cycle(const SpinParams& params, int n,
                                     std::optional<int> steps = std::nullopt);

/// -integral_0^t <psi(s)|H(s)|psi(s)> ds along the exact trajectory, trapezoidal
/// rule on `steps` intervals (steps >= kMinDynamicalPhaseSteps).
double numeric_dynamical_phase(const SpinParams& params, const TwoSpinState& initial, double t,
                               int steps);

}  // namespace geophase
