#include "geophase/core.hpp"

#include <cmath>
#include <sstream>

namespace geophase {

double hermiticity_defect(const Matrix4& m) { return max_abs(m - m.adjoint()); }

double unitarity_defect(const Matrix4& m) {
  return max_abs(m.adjoint() * m - Matrix4::Identity());
}

bool all_finite(const Matrix4& m) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
  return true;
}

bool all_finite(const Vector4& v) {
  for (int i = 0; i < 4; ++i)
    if (!std::isfinite(v(i).real()) || !std::isfinite(v(i).imag())) return false;
  return true;
}

// ---------------------------------------------------------------------------
// TwoSpinState

TwoSpinState::TwoSpinState() : amps_(Vector4::Unit(kUpUp)) {}

TwoSpinState TwoSpinState::normalized(const Vector4& v) {
  if (!all_finite(v)) throw ParameterError("state amplitudes must be finite");
  const double n = v.norm();
  if (n == 0.0) throw ParameterError("cannot normalize the zero vector");
  return TwoSpinState(v / n);
}

TwoSpinState TwoSpinState::from_unit(const Vector4& v) {
  if (!all_finite(v)) throw ParameterError("state amplitudes must be finite");
  if (std::abs(v.squaredNorm() - 1.0) > kNormTolerance)
    throw ParameterError("state is not normalized");
  return TwoSpinState(v);
}

TwoSpinState TwoSpinState::from_amplitudes(Complex x, Complex y, Complex z, Complex w) {
  Vector4 v;
  v << x, y, z, w;
  return normalized(v);
}

TwoSpinState TwoSpinState::basis(int index) {
  if (index < 0 || index > 3) throw ParameterError("basis index must be in [0, 3]");
  return TwoSpinState(Vector4::Unit(index));
}

TwoSpinState TwoSpinState::singlet() {
  const double s = 1.0 / std::sqrt(2.0);
  return from_amplitudes(0.0, s, -s, 0.0);
}

Complex TwoSpinState::overlap(const TwoSpinState& other) const {
  return amps_.dot(other.amps_);  // Eigen's dot conjugates the left operand
}

TwoSpinState TwoSpinState::with_phase(double phase) const {
  return TwoSpinState(amps_ * std::polar(1.0, phase));
}

// ---------------------------------------------------------------------------
// Operator4

Operator4 Operator4::hermitian(const Matrix4& m) {
  if (!all_finite(m)) throw NumericError("operator has non-finite entries");
  if (hermiticity_defect(m) > kHermitianTolerance)
    throw NumericError("operator tagged hermitian fails M == M^dagger");
  return Operator4(m, OperatorKind::hermitian);
}

Operator4 Operator4::unitary(const Matrix4& m, double tolerance) {
  if (!all_finite(m)) throw NumericError("operator has non-finite entries");
  if (unitarity_defect(m) > tolerance)
    throw NumericError("operator tagged unitary fails M^dagger M == I");
  return Operator4(m, OperatorKind::unitary);
}

Operator4 Operator4::general(const Matrix4& m) {
  if (!all_finite(m)) throw NumericError("operator has non-finite entries");
  return Operator4(m, OperatorKind::general);
}

Operator4 Operator4::identity() { return Operator4(Matrix4::Identity(), OperatorKind::unitary); }

Operator4 Operator4::adjoint() const { return Operator4(m_.adjoint(), kind_); }

TwoSpinState Operator4::apply(const TwoSpinState& state) const {
  if (kind_ != OperatorKind::unitary)
    throw ParameterError("only unitary operators map states to states");
  return TwoSpinState::normalized(m_ * state.amplitudes());
}

// ---------------------------------------------------------------------------
// SpinParams

SpinParams SpinParams::equal(double omega0, double gamma, double J, double omega1) {
  return SpinParams{omega0, omega0, gamma, gamma, J, omega1};
}

double SpinParams::period() const {
  if (omega1 == 0.0) throw ParameterError("omega1 must be nonzero to define a cycle");
  return kTwoPi / std::abs(omega1);
}

void SpinParams::validate() const {
  for (double v : {omega_a0, omega_b0, gamma_a, gamma_b, J, omega1})
    if (!std::isfinite(v)) throw ParameterError("spin parameters must be finite");
}

void SpinParams::require_equal_couplings() const {
  validate();
  if (!equal_couplings())
    throw ParameterError("closed forms require omega_a0 == omega_b0 and gamma_a == gamma_b");
}

// ---------------------------------------------------------------------------

Operator4 pauli_operator(Site site, Axis axis) {
  Eigen::Matrix<Complex, 2, 2> s;
  switch (axis) {
    case Axis::x:
      s << 0.0, 1.0, 1.0, 0.0;
      break;
    case Axis::y:
      s << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
      break;
    case Axis::z:
      s << 1.0, 0.0, 0.0, -1.0;
      break;
  }
  const Eigen::Matrix<Complex, 2, 2> id = Eigen::Matrix<Complex, 2, 2>::Identity();
  const auto& left = site == Site::a ? s : id;
  const auto& right = site == Site::a ? id : s;
  Matrix4 m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) m(2 * i + k, 2 * j + l) = left(i, j) * right(k, l);
  return Operator4::hermitian(m);
}

SpinParams field_to_params(double B0, double B1, double kappa_a, double kappa_b, double J,
                           double omega1) {
  SpinParams p{-kappa_a * B0, -kappa_b * B0, -kappa_a * B1, -kappa_b * B1, J, omega1};
  p.validate();
  return p;
}

std::string to_string(const SpinParams& p) {
  std::ostringstream os;
  os.precision(17);
  os << "{omega_a0=" << p.omega_a0 << ", omega_b0=" << p.omega_b0 << ", gamma_a=" << p.gamma_a
     << ", gamma_b=" << p.gamma_b << ", J=" << p.J << ", omega1=" << p.omega1 << "}";
  return os.str();
}

}  // namespace geophase
