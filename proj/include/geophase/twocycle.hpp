#pragma once

// Two-cycle sign-reversal protocols.
//
// Adiabatic scheme: cycle 2 negates (omega0, Gamma, J). Each instantaneous
// eigenstate of cycle 1 stays an eigenstate of cycle 2 with the opposite
// energy, so the dynamical phases cancel and only 2 gamma^B_n survives.
//
// Nonadiabatic scheme: cycle 2 additionally negates omega1. The rotating-frame
// Hamiltonian flips sign exactly, so U2 U1 = 1 for any initial state.
//
// Both cycles start their field clock at angle 0 and the switch between them
// is instantaneous.

#include "geophase/core.hpp"
#include "geophase/phases.hpp"

#include <array>
#include <optional>
#include <vector>

namespace geophase {

struct FlipSet {
  bool omega0 = false;
  bool omega1 = false;
  bool gamma = false;
  bool J = false;

  bool operator==(const FlipSet&) const = default;
};

/// Negates the selected fields (both sites for omega0 and gamma).
SpinParams apply_flips(const SpinParams& params, const FlipSet& flips);

enum class TwoCycleScheme { adiabatic, nonadiabatic };

struct CycleSegment {
  SpinParams params;
  double duration = 0.0;
  FlipSet flips;  // relative to segment 1
};

struct CycleProtocol {
  TwoCycleScheme scheme = TwoCycleScheme::adiabatic;
  std::vector<CycleSegment> segments;

  /// Throws ParameterError unless there are exactly two segments with the
  /// flip set of the scheme.
  void validate() const;
};

FlipSet scheme_flips(TwoCycleScheme scheme);

/// Two one-period segments; requires omega1 != 0.
CycleProtocol make_protocol(const SpinParams& params, TwoCycleScheme scheme);

/// Propagator of the whole protocol, U2 U1.
Operator4 protocol_propagator(const CycleProtocol& protocol,
                              std::optional<int> steps_per_cycle = std::nullopt);

struct BerryGate {
  std::array<double, 4> berry_phases{};  // gamma^B_n, n = 1..4
  std::array<Complex, 4> eigen_phases{};  // exp(2 i gamma^B_n); the last is exactly 1
  Matrix4 eigenbasis;                     // columns xi_n at t = 0
  Operator4 computational;                // eigenbasis diag(...) eigenbasis^dagger
};

/// U_B = diag(e^{2i gB_1}, e^{2i gB_2}, e^{2i gB_3}, 1) in the eigenbasis.
BerryGate berry_gate(double omega0, double gamma, double J);

struct AdiabaticTwoCycleResult {
  TwoSpinState final_state;
  TwoSpinState ideal_state;  // U_B |initial>
  double deviation = 0.0;    // ||final - ideal||
  Operator4 propagator;
};

AdiabaticTwoCycleResult run_adiabatic_two_cycle(
    const SpinParams& params, const TwoSpinState& initial,
    std::optional<int> steps_per_cycle = std::nullopt);

struct EigenpathTwoCycle {
  int label = 0;
  double phase = 0.0;     // arg <xi_n(0) | psi(2 tau)>
  double target = 0.0;    // twice the one-cycle geometric phase
  double fidelity = 0.0;  // |<xi_n(0) | psi(2 tau)>|
  double error() const { return phase_distance(phase, target); }
};

/// Adiabatic two-cycle run started in xi_n(0).
EigenpathTwoCycle adiabatic_two_cycle_path(const SpinParams& params, int n,
                                           std::optional<int> steps_per_cycle = std::nullopt);

struct AaTwoCycleResult {
  TwoSpinState final_state;
  double identity_defect = 0.0;  // ||U2 U1 - I||_max
  Operator4 propagator;
};

AaTwoCycleResult run_aa_two_cycle(const SpinParams& params, const TwoSpinState& initial);

/// One-cycle dynamical phase of the cycling state xi~_n; for J != 0 the
/// singlet entry (J/2) tau can never vanish.
double one_cycle_dynamical_residual(const SpinParams& params, int n);

/// ||H'(0) xi_n - E' xi_n|| where H' is the sign-reversed Hamiltonian of the
/// adiabatic scheme and E' = E_{reversed_label(n)}[-J] = -E_n[J].
double handoff_residual(const SpinParams& params, int n);

}  // namespace geophase
