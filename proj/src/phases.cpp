#include "geophase/phases.hpp"

#include "geophase/spectral.hpp"

#include <cmath>

namespace geophase {

namespace {

void check_label(int n) {
  if (n < 1 || n > 4) throw ParameterError("eigen label must be in [1, 4]");
}

double rotation_sense(double omega1) { return omega1 < 0.0 ? -1.0 : 1.0; }

}  // namespace

double principal_value(double phase) {
  if (!std::isfinite(phase)) throw NumericError("non-finite phase");
  double r = std::remainder(phase, kTwoPi);  // [-pi, pi]
  if (r <= -kPi) r += kTwoPi;
  return r;
}

double phase_distance(double a, double b) { return std::abs(std::remainder(a - b, kTwoPi)); }

PhaseBreakdown PhaseBreakdown::principal() const {
  return PhaseBreakdown{principal_value(total), principal_value(dynamical),
                        principal_value(geometric), label, PhaseConvention::principal};
}

double eigen_energy(double omega0, double gamma, double J, int n) {
  check_label(n);
  if (n == 4) return -0.5 * J;
  return triplet_energies(omega0, gamma, J)[n - 1];
}

double berry_phase(double omega0, double gamma, double J, int n) {
  check_label(n);
  for (double v : {omega0, gamma, J})
    if (!std::isfinite(v)) throw ParameterError("berry_phase inputs must be finite");
  if (n == 4) return 0.0;
  // omega0 = 0 is symmetric under |uu> <-> |dd>: the populations are equal.
  if (omega0 == 0.0) return 0.0;

  const double E = triplet_energies(omega0, gamma, J)[n - 1];
  const double scale = spectral_scale(omega0, gamma, J);
  const double plus = 2.0 * omega0 + J - 2.0 * E;
  const double minus = 2.0 * E + 2.0 * omega0 - J;
  if (std::abs(plus) < kDenominatorThreshold * scale ||
      std::abs(minus) < kDenominatorThreshold * scale) {
    const TwoSpinState s = eigensystem_at_angle(omega0, gamma, J, 0.0).state(n);
    return kTwoPi * (std::norm(s.x()) - std::norm(s.w()));
  }

  const double g2 = gamma * gamma;
  const double norm = 2.0 + 4.0 * g2 / (plus * plus) + 4.0 * g2 / (minus * minus);
  const double a = 2.0 * E - J;
  const double d = plus * minus;  // = 4 omega0^2 - (2E - J)^2, without the cancellation
  return kTwoPi * 32.0 * g2 * omega0 * a / (norm * d * d);
}

PhaseBreakdown adiabatic_phases(const SpinParams& params, int n) {
  params.require_equal_couplings();
  const double tau = params.period();
  PhaseBreakdown b;
  b.label = n;
  b.dynamical = -eigen_energy(params.omega0(), params.gamma(), params.J, n) * tau;
  b.geometric =
      rotation_sense(params.omega1) * berry_phase(params.omega0(), params.gamma(), params.J, n);
  b.total = b.dynamical + b.geometric;
  return b;
}

double aa_phase(const SpinParams& params, int n) {
  params.require_equal_couplings();
  return rotation_sense(params.omega1) *
         berry_phase(params.omega0() - params.omega1, params.gamma(), params.J, n);
}

PhaseBreakdown aa_breakdown(const SpinParams& params, int n) {
  params.require_equal_couplings();
  const double tau = params.period();
  PhaseBreakdown b;
  b.label = n;
  const double cycle_phase =
      -eigen_energy(params.omega0() - params.omega1, params.gamma(), params.J, n) * tau;
  b.geometric = aa_phase(params, n);
  b.dynamical = cycle_phase - b.geometric;
  b.total = b.dynamical + b.geometric;
  return b;
}

double legacy_single_spin_phase(double omega_b0, double gamma_b, double J, int sigma_az) {
  if (sigma_az != 1 && sigma_az != -1) throw ParameterError("sigma_az must be +1 or -1");
  const double axial = omega_b0 + J * sigma_az;
  const double length = std::hypot(axial, gamma_b);
  if (!std::isfinite(length)) throw ParameterError("legacy phase inputs must be finite");
  if (length == 0.0) throw ParameterError("field axis of the reduced model is zero");
  return -kPi * (1.0 - axial / length);
}

}  // namespace geophase
