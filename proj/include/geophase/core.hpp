#pragma once

// Shared value types for the two-spin problem.
//
// Every matrix and amplitude vector in the library uses the fixed product
// basis order (|up,up>, |up,down>, |down,up>, |down,down>); the first factor
// is spin a, the second spin b.

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace geophase {

using Complex = std::complex<double>;
using Matrix4 = Eigen::Matrix<Complex, 4, 4>;
using Vector4 = Eigen::Matrix<Complex, 4, 1>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kUnitaryTolerance = 1e-12;

/// Raised for inputs outside an operation's domain (bad tags, zero rotation
/// rate where a cycle is needed, unequal couplings for closed forms, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an internal consistency check fails (non-finite values,
/// tag checks, arccos argument drift).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum BasisIndex : int { kUpUp = 0, kUpDown = 1, kDownUp = 2, kDownDown = 3 };

enum class Site { a, b };
enum class Axis { x, y, z };

enum class OperatorKind { hermitian, unitary, general };

/// Largest entry magnitude of any matrix or vector expression.
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.cwiseAbs().maxCoeff();
}

double hermiticity_defect(const Matrix4& m);
double unitarity_defect(const Matrix4& m);
bool all_finite(const Matrix4& m);
bool all_finite(const Vector4& v);

/// Normalized amplitude vector (x, y, z, w).
class TwoSpinState {
 public:
  /// |up,up>.
  TwoSpinState();

  /// Scales `v` to unit norm. Throws ParameterError for zero or non-finite input.
  static TwoSpinState normalized(const Vector4& v);
  /// Accepts `v` only if it is already unit norm within kNormTolerance.
  static TwoSpinState from_unit(const Vector4& v);
  static TwoSpinState from_amplitudes(Complex x, Complex y, Complex z, Complex w);
  static TwoSpinState basis(int index);
  static TwoSpinState singlet();

  const Vector4& amplitudes() const { return amps_; }
  Complex x() const { return amps_(0); }
  Complex y() const { return amps_(1); }
  Complex z() const { return amps_(2); }
  Complex w() const { return amps_(3); }
  Complex operator[](int i) const { return amps_(i); }

  /// <this|other>
  Complex overlap(const TwoSpinState& other) const;
  double fidelity(const TwoSpinState& other) const { return std::abs(overlap(other)); }

  /// Multiplies every amplitude by exp(i*phase).
  TwoSpinState with_phase(double phase) const;

 private:
  explicit TwoSpinState(const Vector4& v) : amps_(v) {}
  Vector4 amps_;
};

/// 4x4 complex matrix carrying a checked kind tag.
class Operator4 {
 public:
  Operator4() : m_(Matrix4::Zero()), kind_(OperatorKind::general) {}

  /// Throws NumericError when ||M - M^dagger||_max exceeds kHermitianTolerance.
  static Operator4 hermitian(const Matrix4& m);
  /// Throws NumericError when ||M^dagger M - I||_max exceeds `tolerance`.
  static Operator4 unitary(const Matrix4& m, double tolerance = kUnitaryTolerance);
  static Operator4 general(const Matrix4& m);
  static Operator4 identity();

  const Matrix4& matrix() const { return m_; }
  OperatorKind kind() const { return kind_; }
  Complex operator()(int row, int col) const { return m_(row, col); }

  Operator4 adjoint() const;

  /// U|psi>, renormalized. Only defined for unitary operators.
  TwoSpinState apply(const TwoSpinState& state) const;

 private:
  Operator4(const Matrix4& m, OperatorKind kind) : m_(m), kind_(kind) {}
  Matrix4 m_;
  OperatorKind kind_;
};

/// Physical parameters of the Hamiltonian, all angular frequencies (hbar = 1).
struct SpinParams {
  double omega_a0 = 0.0;
  double omega_b0 = 0.0;
  double gamma_a = 0.0;
  double gamma_b = 0.0;
  double J = 0.0;
  double omega1 = 0.0;

  /// Both spins coupled identically: omega_a0 = omega_b0, gamma_a = gamma_b.
  static SpinParams equal(double omega0, double gamma, double J, double omega1 = 0.0);

  bool equal_couplings() const { return omega_a0 == omega_b0 && gamma_a == gamma_b; }
  double omega0() const { return omega_a0; }
  double gamma() const { return gamma_a; }

  /// tau = 2 pi / |omega1|. Throws ParameterError when omega1 == 0.
  double period() const;

  /// Throws ParameterError if any field is non-finite.
  void validate() const;
  /// validate() plus the equal-coupling requirement of the closed forms.
  void require_equal_couplings() const;

  bool operator==(const SpinParams&) const = default;
};

/// Pauli matrix on one site, tensored with the identity on the other.
Operator4 pauli_operator(Site site, Axis axis);

/// omega_alpha0 = -kappa_alpha B0 and Gamma_alpha = -kappa_alpha B1.
SpinParams field_to_params(double B0, double B1, double kappa_a, double kappa_b, double J,
                           double omega1);

std::string to_string(const SpinParams& p);

}  // namespace geophase
