#include "geophase/hamiltonian.hpp"

#include <cmath>

namespace geophase {

namespace {

const Matrix4& sigma(Site site, Axis axis) {
  static const Matrix4 table[2][3] = {
      {pauli_operator(Site::a, Axis::x).matrix(), pauli_operator(Site::a, Axis::y).matrix(),
       pauli_operator(Site::a, Axis::z).matrix()},
      {pauli_operator(Site::b, Axis::x).matrix(), pauli_operator(Site::b, Axis::y).matrix(),
       pauli_operator(Site::b, Axis::z).matrix()}};
  return table[site == Site::a ? 0 : 1][static_cast<int>(axis)];
}

Matrix4 static_matrix(const SpinParams& p) {
  Matrix4 m = Matrix4::Zero();
  m(kUpUp, kUpUp) = 0.5 * (p.omega_a0 + p.omega_b0 + p.J);
  m(kUpDown, kUpDown) = 0.5 * (p.omega_a0 - p.omega_b0 - p.J);
  m(kDownUp, kDownUp) = 0.5 * (-p.omega_a0 + p.omega_b0 - p.J);
  m(kDownDown, kDownDown) = 0.5 * (-p.omega_a0 - p.omega_b0 + p.J);
  return m;
}

Matrix4 total_matrix(const SpinParams& p, double t) {
  const double c = std::cos(p.omega1 * t);
  const double s = std::sin(p.omega1 * t);
  Matrix4 m = static_matrix(p);
  m += (0.5 * p.gamma_a) * (c * sigma(Site::a, Axis::x) + s * sigma(Site::a, Axis::y));
  m += (0.5 * p.gamma_b) * (c * sigma(Site::b, Axis::x) + s * sigma(Site::b, Axis::y));
  return m;
}

}  // namespace

Operator4 h_static(const SpinParams& params) {
  params.validate();
  return Operator4::hermitian(static_matrix(params));
}

Operator4 h_total(const SpinParams& params, double t) {
  params.validate();
  if (!std::isfinite(t)) throw ParameterError("time must be finite");
  return Operator4::hermitian(total_matrix(params, t));
}

Operator4 h_rotating_frame(const SpinParams& params) {
  params.validate();
  Matrix4 m = total_matrix(params, 0.0);
  m -= (0.5 * params.omega1) * (sigma(Site::a, Axis::z) + sigma(Site::b, Axis::z));
  return Operator4::hermitian(m);
}

Operator4 frame_rotation(const SpinParams& params, double t) {
  params.validate();
  if (!std::isfinite(t)) throw ParameterError("time must be finite");
  const double angle = params.omega1 * t;
  Matrix4 m = Matrix4::Zero();
  m(kUpUp, kUpUp) = std::polar(1.0, -angle);
  m(kUpDown, kUpDown) = 1.0;
  m(kDownUp, kDownUp) = 1.0;
  m(kDownDown, kDownDown) = std::polar(1.0, angle);
  return Operator4::unitary(m);
}

HamiltonianModel::HamiltonianModel(SpinParams params) : params_(params) { params_.validate(); }

}  // namespace geophase
