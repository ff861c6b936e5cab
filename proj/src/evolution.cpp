#include "geophase/evolution.hpp"

#include "geophase/hamiltonian.hpp"
#include "geophase/spectral.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <limits>

namespace geophase {

namespace {

// exp(-i H~ t) from one Hermitian eigendecomposition of H~, reused along a trajectory.
class RotatingFrameSolution {
 public:
  explicit RotatingFrameSolution(const SpinParams& params)
      : params_(params), solver_(h_rotating_frame(params).matrix()) {}

  Matrix4 propagator(double t) const {
    Eigen::Matrix<Complex, 4, 1> phases;
    for (int k = 0; k < 4; ++k) phases(k) = std::polar(1.0, -solver_.eigenvalues()(k) * t);
    const Matrix4& q = solver_.eigenvectors();
    return frame_rotation(params_, t).matrix() * q * phases.asDiagonal() * q.adjoint();
  }

 private:
  SpinParams params_;
  Eigen::SelfAdjointEigenSolver<Matrix4> solver_;
};

}  // namespace

Operator4 exact_propagator(const SpinParams& params, double t) {
  params.validate();
  if (!std::isfinite(t)) throw ParameterError("time must be finite");
  return Operator4::unitary(RotatingFrameSolution(params).propagator(t));
}

EvolutionResult evolve_exact(const SpinParams& params, const TwoSpinState& initial, double t) {
  EvolutionResult r;
  r.propagator = exact_propagator(params, t);
  r.final_state = r.propagator.apply(initial);
  r.elapsed = t;
  r.method = EvolutionMethod::exact;
  return r;
}

double shortest_period(const SpinParams& params) {
  params.validate();
  Eigen::SelfAdjointEigenSolver<Matrix4> solver(h_total(params, 0.0).matrix(),
                                                Eigen::EigenvaluesOnly);
  const double norm = solver.eigenvalues().cwiseAbs().maxCoeff();
  double shortest = std::numeric_limits<double>::infinity();
  if (params.omega1 != 0.0) shortest = params.period();
  if (norm > 0.0) shortest = std::min(shortest, kTwoPi / norm);
  return shortest;
}

EvolutionResult evolve_stepped(const SpinParams& params, const TwoSpinState& initial, double t,
                               int steps) {
  params.validate();
  if (!std::isfinite(t)) throw ParameterError("time must be finite");
  if (steps < 1) throw ParameterError("stepped evolution needs at least one step");
  const double shortest = shortest_period(params);
  if (t != 0.0 && std::isfinite(shortest) &&
      steps * shortest / std::abs(t) < kMinStepsPerPeriod)
    throw ParameterError("step budget below 8 per shortest period; accuracy contract unmeetable");

  const Complex minus_i(0.0, -1.0);
  const double h = t / steps;
  Matrix4 u = Matrix4::Identity();
  Matrix4 a_end = minus_i * h_total(params, 0.0).matrix();
  for (int k = 0; k < steps; ++k) {
    const double t0 = k * h;
    const Matrix4 a_start = a_end;
    const Matrix4 a_mid = minus_i * h_total(params, t0 + 0.5 * h).matrix();
    a_end = minus_i * h_total(params, t0 + h).matrix();
    const Matrix4 omega = (h / 6.0) * (a_start + 4.0 * a_mid + a_end) -
                          (h * h / 12.0) * (a_start * a_end - a_end * a_start);
    u = Matrix4(omega.exp()) * u;
  }

  EvolutionResult r;
  r.propagator = Operator4::unitary(u, kSteppedUnitaryTolerance);
  r.final_state = r.propagator.apply(initial);
  r.elapsed = t;
  r.method = EvolutionMethod::stepped;
  r.step_count = steps;
  return r;
}

AdiabaticCycleResult adiabatic_cycle(const SpinParams& params, int n, std::optional<int> steps) {
  params.require_equal_couplings();
  const double tau = params.period();
  const TwoSpinState start = eigensystem(params, 0.0).state(n);
  const EvolutionResult evolved =
      steps ? evolve_stepped(params, start, tau, *steps) : evolve_exact(params, start, tau);
  const Complex overlap = start.overlap(evolved.final_state);
  return AdiabaticCycleResult{evolved.final_state, std::arg(overlap), std::abs(overlap)};
}

double numeric_dynamical_phase(const SpinParams& params, const TwoSpinState& initial, double t,
                               int steps) {
  params.validate();
  if (!std::isfinite(t)) throw ParameterError("time must be finite");
  if (steps < kMinDynamicalPhaseSteps)
    throw ParameterError("dynamical phase integration needs at least 100 steps");

  const RotatingFrameSolution solution(params);
  const double h = t / steps;
  auto energy_at = [&](double s) {
    const Vector4 psi = solution.propagator(s) * initial.amplitudes();
    return psi.dot(h_total(params, s).matrix() * psi).real();
  };

  double sum = 0.5 * (energy_at(0.0) + energy_at(t));
  for (int k = 1; k < steps; ++k) sum += energy_at(k * h);
  const double phase = -h * sum;
  if (!std::isfinite(phase)) throw NumericError("non-finite dynamical phase");
  return phase;
}

}  // namespace geophase
