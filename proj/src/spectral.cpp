#include "geophase/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace geophase {

namespace {

using Matrix3 = Eigen::Matrix<Complex, 3, 3>;
using Vector3 = Eigen::Matrix<Complex, 3, 1>;

constexpr double kClusterGap = 1e-9;     // relative, for degenerate triplet levels
constexpr double kPhaseAnchor = 1e-6;    // smallest amplitude trusted to fix a phase
constexpr double kPolishWindow = 1e-9;   // relative, largest Newton correction accepted

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// Triplet block in the basis (|uu>, (|ud> + |du>)/sqrt(2), |dd>).
Matrix3 triplet_block(double omega0, double gamma, double J, double angle) {
  const Complex down = gamma * kInvSqrt2 * std::polar(1.0, -angle);
  Matrix3 m = Matrix3::Zero();
  m(0, 0) = omega0 + 0.5 * J;
  m(1, 1) = -0.5 * J;
  m(2, 2) = -omega0 + 0.5 * J;
  m(0, 1) = down;
  m(1, 0) = std::conj(down);
  m(2, 1) = std::conj(down);
  m(1, 2) = down;
  return m;
}

Vector4 embed(const Vector3& v) {
  Vector4 out;
  out << v(0), v(1) * kInvSqrt2, v(1) * kInvSqrt2, v(2);
  return out;
}

// y real positive when available, otherwise the first sizeable amplitude.
Vector4 fix_phase(const Vector4& v) {
  int anchor = 1;
  if (std::abs(v(1)) < kPhaseAnchor) {
    for (int i : {0, 3, 2}) {
      if (std::abs(v(i)) >= kPhaseAnchor) {
        anchor = i;
        break;
      }
    }
  }
  const Complex a = v(anchor);
  if (std::abs(a) == 0.0) return v;
  return v * (std::abs(a) / a);
}

// d(block)/d(gamma): the direction in which gamma leaves zero.
Matrix3 transverse_direction(double angle) {
  return triplet_block(0.0, 1.0, 0.0, angle) - triplet_block(0.0, 0.0, 0.0, angle);
}

// Orders the columns of `basis` (an orthonormal basis of one degenerate level)
// by the limit reached as the perturbation `w` is switched on: first-order
// shifts decide, second-order shifts break remaining ties.
Eigen::Matrix<Complex, 3, Eigen::Dynamic> resolve_cluster(
    const Eigen::Matrix<Complex, 3, Eigen::Dynamic>& basis, const Matrix3& w,
    const Eigen::Vector3d& levels, const Matrix3& vectors, double level, double tol) {
  using Block = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
  const Block first = basis.adjoint() * w * basis;
  Eigen::SelfAdjointEigenSolver<Block> first_solver(first);
  Eigen::Matrix<Complex, 3, Eigen::Dynamic> ordered = basis * first_solver.eigenvectors();
  const Eigen::VectorXd shifts = first_solver.eigenvalues();

  // Second-order coupling through the levels outside the cluster.
  Matrix3 second = Matrix3::Zero();
  for (int j = 0; j < 3; ++j) {
    if (std::abs(levels(j) - level) <= tol) continue;
    const Eigen::Matrix<Complex, 3, 1> wj = w * vectors.col(j);
    second += wj * wj.adjoint() / (level - levels(j));
  }

  const int k = static_cast<int>(ordered.cols());
  for (int begin = 0; begin < k;) {
    int end = begin + 1;
    while (end < k && shifts(end) - shifts(begin) <= tol) ++end;
    if (end - begin > 1) {
      const auto group = ordered.middleCols(begin, end - begin).eval();
      Eigen::SelfAdjointEigenSolver<Block> second_solver(group.adjoint() * second * group);
      ordered.middleCols(begin, end - begin) = group * second_solver.eigenvectors();
    }
    begin = end;
  }
  return ordered;
}

// Eigenvectors of the triplet block, columns ordered by label (1, 2, 3), i.e.
// (largest, smallest, middle). Degenerate levels are resolved by the limit
// reached as the transverse coupling grows from zero.
Matrix3 numeric_triplet_states(double omega0, double gamma, double J, double angle) {
  const double scale = spectral_scale(omega0, gamma, J);
  const double tol = kClusterGap * scale;
  Eigen::SelfAdjointEigenSolver<Matrix3> solver(triplet_block(omega0, gamma, J, angle));
  const Eigen::Vector3d ev = solver.eigenvalues();  // ascending
  Matrix3 vecs = solver.eigenvectors();
  const Matrix3 w = (gamma < 0.0 ? -1.0 : 1.0) * transverse_direction(angle);

  for (int begin = 0; begin < 3;) {
    int end = begin + 1;
    while (end < 3 && ev(end) - ev(begin) <= tol) ++end;
    if (end - begin > 1) {
      const auto basis = solver.eigenvectors().middleCols(begin, end - begin).eval();
      vecs.middleCols(begin, end - begin) =
          resolve_cluster(basis, w, ev, solver.eigenvectors(), ev(begin), tol);
    }
    begin = end;
  }

  Matrix3 by_label;
  by_label.col(0) = vecs.col(2);
  by_label.col(1) = vecs.col(0);
  by_label.col(2) = vecs.col(1);
  return by_label;
}

// Newton refinement of a triplet root on the characteristic polynomial, in
// extended precision. The trigonometric roots carry an absolute error of a few
// ulps of the scale, which the closed-form phases amplify when omega0 is small.
double polish_root(double omega0, double gamma, double J, double energy, double scale) {
  using Ext = long double;
  // Written in omega0^2 and gamma^2 so the result is even in both.
  const Ext w2 = Ext(omega0) * Ext(omega0);
  const Ext g = Ext(gamma) * Ext(gamma) / 2;
  const Ext half_j = Ext(J) / 2;
  Ext e = energy;
  for (int it = 0; it < 3; ++it) {
    const Ext u = half_j - e;
    const Ext v = -half_j - e;
    const Ext f = (u * u - w2) * v - 2 * g * u;
    const Ext df = -2 * u * v - (u * u - w2) + 2 * g;
    if (df == 0) break;
    const Ext step = f / df;
    if (!(std::abs(step) <= kPolishWindow * scale)) return energy;
    e -= step;
  }
  return static_cast<double>(e);
}

}  // namespace

double spectral_scale(double omega0, double gamma, double J) {
  return std::max({std::abs(omega0), std::abs(gamma), std::abs(J), 1.0});
}

CubicCoefficients cubic_coefficients(double omega0, double gamma, double J) {
  CubicCoefficients c;
  const double w2 = omega0 * omega0;
  const double g2 = gamma * gamma;
  c.p = -(4.0 * J * J / 3.0 + 4.0 * w2 + 4.0 * g2);
  c.q = 16.0 / 27.0 * J * J * J + (8.0 * g2 - 16.0 * w2) * J / 3.0;
  if (c.p == 0.0) {
    c.degenerate = true;
    return c;
  }
  const double third = -c.p / 3.0;
  double arg = -c.q / (2.0 * std::sqrt(third * third * third));
  if (!std::isfinite(arg)) throw NumericError("non-finite arccos argument in cubic solve");
  if (std::abs(arg) > 1.0 + kArccosExcessTolerance)
    throw NumericError("arccos argument outside [-1, 1] beyond drift tolerance");
  arg = std::clamp(arg, -1.0, 1.0);
  c.Phi = std::acos(arg) / 3.0;
  return c;
}

std::array<double, 3> triplet_energies(double omega0, double gamma, double J) {
  const CubicCoefficients c = cubic_coefficients(omega0, gamma, J);
  if (c.degenerate) return {0.0, 0.0, 0.0};
  // The spectrum is odd under J -> -J with labels 1 and 2 swapped; evaluating
  // only J > 0 keeps that reflection exact in floating point.
  if (J == 0.0) {
    const double h = std::hypot(omega0, gamma);
    return {h, -h, 0.0};
  }
  if (J < 0.0) {
    const auto e = triplet_energies(omega0, gamma, -J);
    return {-e[1], -e[0], -e[2]};
  }
  const double r = std::sqrt(-c.p / 3.0);
  const double shift = J / 6.0;
  constexpr double third_turn = kTwoPi / 3.0;
  const std::array<double, 3> raw{r * std::cos(c.Phi) + shift,
                                 r * std::cos(c.Phi + third_turn) + shift,
                                 r * std::cos(c.Phi - third_turn) + shift};
  // Clustered roots are left alone: Newton is ill-conditioned there.
  const double scale = spectral_scale(omega0, gamma, J);
  const double gap = std::min({raw[0] - raw[2], raw[2] - raw[1]});
  if (!(gap > kClusterGap * scale)) return raw;
  std::array<double, 3> e;
  for (int n = 0; n < 3; ++n) e[n] = polish_root(omega0, gamma, J, raw[n], scale);
  if (!(e[0] >= e[2] && e[2] >= e[1])) return raw;
  return e;
}

Matrix4 EigenSystem::basis_matrix() const {
  Matrix4 q;
  for (int n = 0; n < 4; ++n) q.col(n) = pairs[n].state.amplitudes();
  return q;
}

EigenSystem eigensystem_at_angle(double omega0, double gamma, double J, double angle) {
  for (double v : {omega0, gamma, J, angle})
    if (!std::isfinite(v)) throw ParameterError("eigensystem inputs must be finite");

  const auto energies = triplet_energies(omega0, gamma, J);
  const double scale = spectral_scale(omega0, gamma, J);

  EigenSystem sys;
  sys.pairs[3] = EigenPair{4, -0.5 * J, TwoSpinState::singlet()};

  bool degenerate = false;
  std::array<double, 3> plus{}, minus{};
  for (int n = 0; n < 3; ++n) {
    plus[n] = 2.0 * omega0 + J - 2.0 * energies[n];
    minus[n] = 2.0 * energies[n] + 2.0 * omega0 - J;
    if (std::abs(plus[n]) < kDenominatorThreshold * scale ||
        std::abs(minus[n]) < kDenominatorThreshold * scale)
      degenerate = true;
  }

  if (!degenerate) {
    const Complex down_phase = std::polar(1.0, -angle);
    const Complex up_phase = std::polar(1.0, angle);
    for (int n = 0; n < 3; ++n) {
      Vector4 v;
      v << -2.0 * gamma * down_phase / plus[n], 1.0, 1.0, 2.0 * gamma * up_phase / minus[n];
      sys.pairs[n] = EigenPair{n + 1, energies[n], TwoSpinState::normalized(v)};
    }
    return sys;
  }

  sys.fallback = true;
  const Matrix3 states = numeric_triplet_states(omega0, gamma, J, angle);
  for (int n = 0; n < 3; ++n) {
    sys.pairs[n] =
        EigenPair{n + 1, energies[n], TwoSpinState::normalized(fix_phase(embed(states.col(n))))};
  }
  return sys;
}

EigenSystem eigensystem(const SpinParams& params, double t) {
  params.require_equal_couplings();
  if (!std::isfinite(t)) throw ParameterError("time must be finite");
  EigenSystem sys =
      eigensystem_at_angle(params.omega0(), params.gamma(), params.J, params.omega1 * t);
  sys.t = t;
  return sys;
}

EigenSystem tilde_eigensystem(const SpinParams& params) {
  params.require_equal_couplings();
  return eigensystem_at_angle(params.omega0() - params.omega1, params.gamma(), params.J, 0.0);
}

int reversed_label(int label) {
  switch (label) {
    case 1:
      return 2;
    case 2:
      return 1;
    case 3:
    case 4:
      return label;
    default:
      throw ParameterError("eigen label must be in [1, 4]");
  }
}

double SymmetryReport::max_defect() const {
  return std::max({energy_defect, eigenstate_defect, berry_defect});
}

SymmetryReport symmetry_check(const SpinParams& params) {
  params.require_equal_couplings();
  const double w0 = params.omega0();
  const double g = params.gamma();
  const double J = params.J;

  const EigenSystem forward = eigensystem_at_angle(w0, g, J, 0.0);
  const EigenSystem reversed = eigensystem_at_angle(-w0, -g, -J, 0.0);

  auto berry = [](const TwoSpinState& s) {
    return kTwoPi * (std::norm(s.x()) - std::norm(s.w()));
  };

  SymmetryReport report;
  for (int n = 1; n <= 4; ++n) {
    const int m = reversed_label(n);
    report.energy_defect =
        std::max(report.energy_defect, std::abs(reversed.energy(n) + forward.energy(m)));
    report.eigenstate_defect = std::max(
        report.eigenstate_defect, 1.0 - reversed.state(n).fidelity(forward.state(m)));
    report.berry_defect = std::max(report.berry_defect,
                                   std::abs(berry(reversed.state(n)) - berry(forward.state(m))));
  }
  return report;
}

}  // namespace geophase
