#pragma once

// Closed-form eigensystem of the equal-coupling Hamiltonian.
//
// Label 4 is always the singlet (|ud> - |du>)/sqrt(2) with energy -J/2. The
// other three come from the depressed cubic v^3 + p v + q = 0 solved in
// trigonometric form, E_n = sqrt(-p/3) cos(Phi + shift_n) + J/6 with shifts
// 0, +2pi/3, -2pi/3 for n = 1, 2, 3. Since Phi lies in [0, pi/3] this makes
// E_1 the largest, E_2 the smallest and E_3 the middle triplet energy.

#include "geophase/core.hpp"

#include <array>

namespace geophase {

inline constexpr double kArccosExcessTolerance = 1e-9;
inline constexpr double kDenominatorThreshold = 1e-8;

struct CubicCoefficients {
  double p = 0.0;
  double q = 0.0;
  double Phi = 0.0;
  /// p == 0: omega0 = gamma = J = 0 and Phi is undefined.
  bool degenerate = false;
};

/// max(|omega0|, |gamma|, |J|, 1); the reference scale for relative thresholds.
double spectral_scale(double omega0, double gamma, double J);

/// p, q and Phi for the equal-coupling triplet block. Throws NumericError if the
/// arccos argument leaves [-1, 1] by more than kArccosExcessTolerance.
CubicCoefficients cubic_coefficients(double omega0, double gamma, double J);

/// (E1, E2, E3). For p == 0 all three are 0.
std::array<double, 3> triplet_energies(double omega0, double gamma, double J);

struct EigenPair {
  int label = 0;  // 1..4
  double energy = 0.0;
  TwoSpinState state;
};

struct EigenSystem {
  std::array<EigenPair, 4> pairs;
  double t = 0.0;
  /// True when one of the closed-form denominators was below threshold and the
  /// triplet states came from numerical diagonalization.
  bool fallback = false;

  /// 1-based label access.
  const EigenPair& operator[](int label) const { return pairs.at(label - 1); }
  double energy(int label) const { return (*this)[label].energy; }
  const TwoSpinState& state(int label) const { return (*this)[label].state; }

  /// Unitary matrix whose n-th column is xi_{n+1}.
  Matrix4 basis_matrix() const;
};

/// Instantaneous eigensystem of H(t). Requires equal couplings.
EigenSystem eigensystem(const SpinParams& params, double t);

/// Eigensystem of the rotating-frame Hamiltonian: same construction with
/// omega0 -> omega0 - omega1 and omega1 t -> 0.
EigenSystem tilde_eigensystem(const SpinParams& params);

/// Eigensystem of the equal-coupling matrix with the given omega0 and gamma,
/// transverse field angle `angle` (= omega1 t).
EigenSystem eigensystem_at_angle(double omega0, double gamma, double J, double angle);

/// Maximal deviations of the sign-reversal relations under
/// (gamma, omega0, J) -> (-gamma, -omega0, -J).
struct SymmetryReport {
  /// max |E_n[-J] - (-E_m[J])| over (n, m) = (1,2), (2,1), (3,3), (4,4).
  double energy_defect = 0.0;
  /// max (1 - |<xi_n[-G,-w0,-J] | xi_m[G,w0,J]>|) over the same pairs.
  double eigenstate_defect = 0.0;
  /// max |gB_n[-w0,-J] - gB_m[w0,J]| using 2 pi (|x|^2 - |w|^2).
  double berry_defect = 0.0;

  double max_defect() const;
};

SymmetryReport symmetry_check(const SpinParams& params);

/// Partner label under the full sign reversal: 1 <-> 2, 3 and 4 fixed.
int reversed_label(int label);

}  // namespace geophase
