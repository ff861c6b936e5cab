#pragma once

// Geometric phases of the equal-coupling model.
//
// Berry phases follow gamma^B = i * loop integral <xi|d xi>, which evaluates
// to 2 pi (|x_n|^2 - |w_n|^2) for a positive rotation sense. The closed form
//   gamma^B_n = 2 pi * 32 G^2 w0 (2E_n - J) / (N_n [(2E_n - J)^2 - 4 w0^2]^2)
// is that population difference expanded; singlet phases are always zero.
// A negative omega1 traverses the loop backwards and flips the sign of every
// geometric phase built from a cycle.

#include "geophase/core.hpp"

namespace geophase {

enum class PhaseConvention { raw, principal };

/// Maps any angle into (-pi, pi].
double principal_value(double phase);

/// Smallest |a - b| modulo 2 pi, in [0, pi].
double phase_distance(double a, double b);

struct PhaseBreakdown {
  double total = 0.0;
  double dynamical = 0.0;
  double geometric = 0.0;
  int label = 0;
  PhaseConvention convention = PhaseConvention::raw;

  /// Same phases wrapped into (-pi, pi]; total is wrapped independently, so the
  /// additive identity only holds modulo 2 pi in this view.
  PhaseBreakdown principal() const;
};

/// Label-n energy: triplet energies for 1..3, -J/2 for the singlet.
double eigen_energy(double omega0, double gamma, double J, int n);

/// Closed-form Berry phase (radians). Does not depend on omega1.
double berry_phase(double omega0, double gamma, double J, int n);

/// Adiabatic one-cycle phases: dynamical = -E_n tau, geometric = Berry phase.
PhaseBreakdown adiabatic_phases(const SpinParams& params, int n);

/// Aharonov-Anandan phase of the cycling state xi~_n: the Berry closed form
/// evaluated at omega0 - omega1.
double aa_phase(const SpinParams& params, int n);

/// total = -E~_n tau, geometric = aa_phase, dynamical = total - geometric.
PhaseBreakdown aa_breakdown(const SpinParams& params, int n);

/// Phase -pi (1 - cos Theta) of the reduced single-spin model, where Theta is
/// the polar angle of the axis (omega_b0 + J sigma_az) z + gamma_b x.
double legacy_single_spin_phase(double omega_b0, double gamma_b, double J, int sigma_az);

}  // namespace geophase
