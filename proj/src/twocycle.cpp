#include "geophase/twocycle.hpp"

#include "geophase/evolution.hpp"
#include "geophase/hamiltonian.hpp"
#include "geophase/spectral.hpp"

#include <cmath>

namespace geophase {

SpinParams apply_flips(const SpinParams& params, const FlipSet& flips) {
  SpinParams p = params;
  if (flips.omega0) {
    p.omega_a0 = -p.omega_a0;
    p.omega_b0 = -p.omega_b0;
  }
  if (flips.gamma) {
    p.gamma_a = -p.gamma_a;
    p.gamma_b = -p.gamma_b;
  }
  if (flips.J) p.J = -p.J;
  if (flips.omega1) p.omega1 = -p.omega1;
  return p;
}

FlipSet scheme_flips(TwoCycleScheme scheme) {
  if (scheme == TwoCycleScheme::adiabatic) return FlipSet{true, false, true, true};
  return FlipSet{true, true, true, true};
}

void CycleProtocol::validate() const {
  if (segments.size() != 2) throw ParameterError("a two-cycle protocol has exactly 2 segments");
  if (segments[0].flips != FlipSet{})
    throw ParameterError("segment 1 is the reference and carries no flips");
  if (segments[1].flips != scheme_flips(scheme))
    throw ParameterError("segment 2 flip set does not match the scheme");
  if (segments[1].params != apply_flips(segments[0].params, segments[1].flips))
    throw ParameterError("segment 2 parameters are not the flipped segment 1 parameters");
}

CycleProtocol make_protocol(const SpinParams& params, TwoCycleScheme scheme) {
  params.validate();
  const double tau = params.period();
  const FlipSet flips = scheme_flips(scheme);
  CycleProtocol protocol;
  protocol.scheme = scheme;
  protocol.segments.push_back(CycleSegment{params, tau, FlipSet{}});
  const SpinParams second = apply_flips(params, flips);
  protocol.segments.push_back(CycleSegment{second, second.period(), flips});
  protocol.validate();
  return protocol;
}

Operator4 protocol_propagator(const CycleProtocol& protocol, std::optional<int> steps_per_cycle) {
  protocol.validate();
  Matrix4 u = Matrix4::Identity();
  for (const CycleSegment& seg : protocol.segments) {
    const Operator4 step =
        steps_per_cycle
            ? evolve_stepped(seg.params, TwoSpinState{}, seg.duration, *steps_per_cycle).propagator
            : exact_propagator(seg.params, seg.duration);
    u = step.matrix() * u;
  }
  return Operator4::unitary(u, steps_per_cycle ? kSteppedUnitaryTolerance : kUnitaryTolerance);
}

BerryGate berry_gate(double omega0, double gamma, double J) {
  BerryGate gate;
  const EigenSystem sys = eigensystem_at_angle(omega0, gamma, J, 0.0);
  gate.eigenbasis = sys.basis_matrix();
  Vector4 diag;
  for (int n = 1; n <= 4; ++n) {
    gate.berry_phases[n - 1] = berry_phase(omega0, gamma, J, n);
    gate.eigen_phases[n - 1] = n == 4 ? Complex(1.0) : std::polar(1.0, 2.0 * gate.berry_phases[n - 1]);
    diag(n - 1) = gate.eigen_phases[n - 1];
  }
  gate.computational =
      Operator4::unitary(gate.eigenbasis * diag.asDiagonal() * gate.eigenbasis.adjoint());
  return gate;
}

AdiabaticTwoCycleResult run_adiabatic_two_cycle(const SpinParams& params,
                                                const TwoSpinState& initial,
                                                std::optional<int> steps_per_cycle) {
  params.require_equal_couplings();
  const CycleProtocol protocol = make_protocol(params, TwoCycleScheme::adiabatic);

  AdiabaticTwoCycleResult r;
  r.propagator = protocol_propagator(protocol, steps_per_cycle);
  r.final_state = r.propagator.apply(initial);

  // A negative rotation sense conjugates every Berry phase.
  const Operator4 gate = berry_gate(params.omega0(), params.gamma(), params.J).computational;
  r.ideal_state = (params.omega1 < 0.0 ? gate.adjoint() : gate).apply(initial);
  r.deviation = (r.final_state.amplitudes() - r.ideal_state.amplitudes()).norm();
  return r;
}

EigenpathTwoCycle adiabatic_two_cycle_path(const SpinParams& params, int n,
                                           std::optional<int> steps_per_cycle) {
  params.require_equal_couplings();
  const TwoSpinState start = eigensystem(params, 0.0).state(n);
  const CycleProtocol protocol = make_protocol(params, TwoCycleScheme::adiabatic);
  const TwoSpinState end = protocol_propagator(protocol, steps_per_cycle).apply(start);
  const Complex overlap = start.overlap(end);

  EigenpathTwoCycle path;
  path.label = n;
  path.phase = std::arg(overlap);
  path.target = 2.0 * adiabatic_phases(params, n).geometric;
  path.fidelity = std::abs(overlap);
  return path;
}

AaTwoCycleResult run_aa_two_cycle(const SpinParams& params, const TwoSpinState& initial) {
  params.validate();
  const CycleProtocol protocol = make_protocol(params, TwoCycleScheme::nonadiabatic);
  AaTwoCycleResult r;
  r.propagator = protocol_propagator(protocol);
  r.identity_defect = max_abs(r.propagator.matrix() - Matrix4::Identity());
  r.final_state = r.propagator.apply(initial);
  return r;
}

double one_cycle_dynamical_residual(const SpinParams& params, int n) {
  return aa_breakdown(params, n).dynamical;
}

double handoff_residual(const SpinParams& params, int n) {
  params.require_equal_couplings();
  const SpinParams flipped = apply_flips(params, scheme_flips(TwoCycleScheme::adiabatic));
  const TwoSpinState state = eigensystem(params, 0.0).state(n);
  const double energy = eigen_energy(flipped.omega0(), flipped.gamma(), flipped.J,
                                     reversed_label(n));
  const Vector4 residual =
      h_total(flipped, 0.0).matrix() * state.amplitudes() - energy * state.amplitudes();
  return residual.norm();
}

}  // namespace geophase
