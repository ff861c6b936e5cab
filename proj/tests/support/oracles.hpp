#pragma once

// Test-only oracles. Nothing here calls the closed-form code paths it checks.

#include "geophase/core.hpp"

#include <array>
#include <random>

namespace geophase::testing {

class ParamSampler {
 public:
  explicit ParamSampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<>(lo, hi)(rng_); }

  /// omega0, gamma, J uniform in [-3, 3]; omega1 in +-[0.1, 2].
  SpinParams equal_couplings();
  /// All six fields independent.
  SpinParams general();
  TwoSpinState state();

 private:
  std::mt19937_64 rng_;
};

/// Sorted eigenvalues of the 4x4 matrix, by direct Hermitian diagonalization.
std::array<double, 4> direct_eigenvalues(const Matrix4& h);

/// Eigenvector of `h` whose eigenvalue is closest to `energy`.
Vector4 direct_eigenvector(const Matrix4& h, double energy);

/// 2 pi (|x|^2 - |w|^2) of the directly diagonalized eigenvector of H(0).
double berry_from_direct_diagonalization(double omega0, double gamma, double J, double energy);

/// i * integral_0^{2 pi} <xi(theta)| d_theta xi(theta)> d theta, central
/// differences and the trapezoidal rule, states from eigensystem_at_angle.
double berry_line_integral(double omega0, double gamma, double J, int n, int steps = 10000);

/// Max-norm distance between two states after removing the relative global phase.
double distance_up_to_phase(const Vector4& a, const Vector4& b);

}  // namespace geophase::testing
