#include "doctest.h"

#include "geophase/hamiltonian.hpp"
#include "geophase/spectral.hpp"
#include "support/oracles.hpp"

#include <algorithm>
#include <cmath>

using namespace geophase;
using geophase::testing::distance_up_to_phase;

namespace {

// Frozen from direct diagonalization of H(0) at (omega0, Gamma, J) = (1, 1, 1).
constexpr double kE1 = 1.746979603717467;
constexpr double kE2 = -1.3019377358048376;
constexpr double kE3 = 0.05495813208737174;

void check_invariants(const EigenSystem& sys, const Matrix4& h) {
  for (int n = 1; n <= 4; ++n) {
    const Vector4 v = sys.state(n).amplitudes();
    CHECK((h * v - sys.energy(n) * v).norm() <= 1e-10);
  }
  const Matrix4 q = sys.basis_matrix();
  CHECK(max_abs(q.adjoint() * q - Matrix4::Identity()) <= 1e-10);
}

}  // namespace

TEST_CASE("cubic coefficients") {
  const CubicCoefficients c = cubic_coefficients(1, 1, 1);
  CHECK(c.p == doctest::Approx(-28.0 / 3.0).epsilon(1e-15));
  CHECK(c.q == doctest::Approx(-56.0 / 27.0).epsilon(1e-15));
  CHECK(c.Phi == doctest::Approx(0.46022).epsilon(1e-5));
  CHECK_FALSE(c.degenerate);
  CHECK(cubic_coefficients(0, 0, 0).degenerate);
  // arccos argument hits exactly -1 here; the clamp must accept it.
  CHECK(cubic_coefficients(0, 0, 1).Phi == doctest::Approx(kPi / 3));
}

TEST_CASE("triplet energies: known values") {
  SUBCASE("decoupled spins") {
    const auto e = triplet_energies(1, 1, 0);
    CHECK(std::abs(e[0] - std::sqrt(2.0)) <= 1e-12);
    CHECK(std::abs(e[1] + std::sqrt(2.0)) <= 1e-12);
    CHECK(std::abs(e[2]) <= 1e-12);
  }
  SUBCASE("generic point") {
    const auto e = triplet_energies(1, 1, 1);
    CHECK(std::abs(e[0] - kE1) <= 1e-12);
    CHECK(std::abs(e[1] - kE2) <= 1e-12);
    CHECK(std::abs(e[2] - kE3) <= 1e-12);
  }
  SUBCASE("pure Ising coupling") {
    const auto e = triplet_energies(0, 0, 1);
    CHECK(std::abs(e[0] - 0.5) <= 1e-12);
    CHECK(std::abs(e[1] + 0.5) <= 1e-12);
    CHECK(std::abs(e[2] - 0.5) <= 1e-12);
  }
  SUBCASE("all parameters zero") {
    const auto e = triplet_energies(0, 0, 0);
    CHECK(e == std::array<double, 3>{0.0, 0.0, 0.0});
  }
}

TEST_CASE("triplet energies match direct diagonalization, cubic residual, parity") {
  testing::ParamSampler sampler(21);
  for (int i = 0; i < 1000; ++i) {
    const SpinParams p = sampler.equal_couplings();
    const double w0 = p.omega0(), g = p.gamma(), J = p.J;
    const auto e = triplet_energies(w0, g, J);
    std::array<double, 4> closed{e[0], e[1], e[2], -0.5 * J};
    std::sort(closed.begin(), closed.end());
    const auto direct = testing::direct_eigenvalues(h_total(p, 0.0).matrix());
    const double scale = spectral_scale(w0, g, J);
    for (int k = 0; k < 4; ++k) CHECK(std::abs(closed[k] - direct[k]) <= 1e-10 * scale);

    CHECK(e[0] >= e[2]);
    CHECK(e[2] >= e[1]);
    CHECK(std::abs(e[0] + e[1] + e[2] - 0.5 * J) <= 1e-10 * scale);
    for (double En : e) {
      const double s = 2 * En;
      const double r = s * s * s - J * s * s - (J * J + 4 * w0 * w0 + 4 * g * g) * s +
                       (J * J * J - 4 * w0 * w0 * J + 4 * g * g * J);
      CHECK(std::abs(r) <= 1e-8 * scale * scale * scale);
    }
    CHECK(triplet_energies(-w0, g, J) == e);
    CHECK(triplet_energies(w0, -g, J) == e);
  }
}

TEST_CASE("eigensystem: decoupled example and singlet") {
  const EigenSystem sys = eigensystem(SpinParams::equal(1, 1, 0, 0.1), 0.0);
  CHECK_FALSE(sys.fallback);
  const Vector4 v = sys.state(1).amplitudes();
  const double expected[] = {0.8535533905932737, 0.3535533905932738, 0.3535533905932738,
                             0.1464466094067262};
  for (int i = 0; i < 4; ++i) CHECK(std::abs(v(i) - expected[i]) <= 1e-12);

  const double s = 1.0 / std::sqrt(2.0);
  for (double t : {0.0, 3.0, 17.5}) {
    const EigenSystem at = eigensystem(SpinParams::equal(0.4, -1.2, 2.2, 0.3), t);
    CHECK(at[4].label == 4);
    CHECK(at.energy(4) == -1.1);
    CHECK(max_abs(at.state(4).amplitudes() - Eigen::Vector4cd(0, s, -s, 0)) <= 1e-15);
  }
}

TEST_CASE("eigensystem invariants over random draws") {
  testing::ParamSampler sampler(22);
  for (int i = 0; i < 300; ++i) {
    const SpinParams p = sampler.equal_couplings();
    const double t = sampler.uniform(0, 30);
    const EigenSystem sys = eigensystem(p, t);
    check_invariants(sys, h_total(p, t).matrix());
    CHECK(sys.energy(4) == -0.5 * p.J);
    for (int n = 1; n <= 3; ++n) {
      CHECK(sys.state(n).y().imag() == 0.0);
      CHECK(sys.state(n).y().real() > 0.0);
      CHECK(sys.state(n).y() == sys.state(n).z());
    }

    // Time covariance: xi(t) = V(t) xi(0) up to a global phase.
    const EigenSystem start = eigensystem(p, 0.0);
    const Matrix4 v = frame_rotation(p, t).matrix();
    for (int n = 1; n <= 4; ++n)
      CHECK(distance_up_to_phase(v * start.state(n).amplitudes(), sys.state(n).amplitudes()) <=
            1e-10);
  }
}

TEST_CASE("eigensystem fallback without transverse field") {
  const SpinParams p = SpinParams::equal(1, 0, 1, 0.2);
  const EigenSystem sys = eigensystem(p, 0.7);
  CHECK(sys.fallback);
  check_invariants(sys, h_total(p, 0.7).matrix());
  CHECK(sys.energy(1) == doctest::Approx(1.5));
  CHECK(distance_up_to_phase(sys.state(1).amplitudes(), Vector4::Unit(kUpUp)) <= 1e-12);

  // Levels 2 and 3 are degenerate with each other at Gamma = 0; labels follow
  // the states reached as Gamma -> 0+.
  const EigenSystem nearby = eigensystem(SpinParams::equal(1, 1e-3, 1, 0.2), 0.7);
  CHECK_FALSE(nearby.fallback);
  for (int n = 1; n <= 4; ++n)
    CHECK(distance_up_to_phase(sys.state(n).amplitudes(), nearby.state(n).amplitudes()) <= 5e-3);
  const Complex r = std::polar(1.0 / std::sqrt(2.0), 0.14);
  Vector4 up, down;
  up << 0, 0.5, 0.5, r;
  down << 0, 0.5, 0.5, -r;
  CHECK(distance_up_to_phase(sys.state(3).amplitudes(), up) <= 1e-12);
  CHECK(distance_up_to_phase(sys.state(2).amplitudes(), down) <= 1e-12);

  // Tiny gamma trips the fallback but must still land on the same states.
  const EigenSystem tiny = eigensystem(SpinParams::equal(1, 1e-6, 1, 0.2), 0.7);
  CHECK(tiny.fallback);
  for (int n = 1; n <= 4; ++n)
    CHECK(distance_up_to_phase(sys.state(n).amplitudes(), tiny.state(n).amplitudes()) <= 1e-5);
}

TEST_CASE("eigensystem fallback with vanishing static field") {
  // omega0 = 0 puts E = J/2 in the spectrum for any Gamma and both denominators vanish.
  const SpinParams p = SpinParams::equal(0, 0.8, 1.3, 0.5);
  const EigenSystem sys = eigensystem(p, 1.1);
  CHECK(sys.fallback);
  check_invariants(sys, h_total(p, 1.1).matrix());
  CHECK(sys.energy(1) == doctest::Approx(std::hypot(0.65, 0.8)));

  const EigenSystem all_zero = eigensystem(SpinParams::equal(0, 0, 0, 1.0), 0.0);
  check_invariants(all_zero, Matrix4::Zero());
}

TEST_CASE("tilde eigensystem") {
  SUBCASE("substitution rule") {
    const SpinParams p = SpinParams::equal(1.1, 1, 1, 0.1);
    const EigenSystem sys = tilde_eigensystem(p);
    CHECK(std::abs(sys.energy(1) - kE1) <= 1e-12);
    CHECK(std::abs(sys.energy(2) - kE2) <= 1e-12);
    CHECK(std::abs(sys.energy(3) - kE3) <= 1e-12);
    CHECK(sys.energy(4) == -0.5);
    check_invariants(sys, h_rotating_frame(p).matrix());
  }
  SUBCASE("zero rotation reduces to the t = 0 eigensystem") {
    const SpinParams p = SpinParams::equal(0.7, -0.4, 1.9, 0.0);
    const EigenSystem a = tilde_eigensystem(p);
    const EigenSystem b = eigensystem(p, 0.0);
    for (int n = 1; n <= 4; ++n) {
      CHECK(a.energy(n) == b.energy(n));
      CHECK(max_abs(a.basis_matrix() - b.basis_matrix()) == 0.0);
    }
  }
  SUBCASE("resonance without coupling") {
    const SpinParams p = SpinParams::equal(0.6, 1, 0, 0.6);
    const EigenSystem sys = tilde_eigensystem(p);
    CHECK(sys.energy(1) == doctest::Approx(1.0));
    CHECK(sys.energy(2) == doctest::Approx(-1.0));
    CHECK(std::abs(sys.energy(3)) <= 1e-15);
    check_invariants(sys, h_rotating_frame(p).matrix());
  }
  SUBCASE("random draws") {
    testing::ParamSampler sampler(23);
    for (int i = 0; i < 200; ++i) {
      const SpinParams p = sampler.equal_couplings();
      check_invariants(tilde_eigensystem(p), h_rotating_frame(p).matrix());
    }
  }
}

TEST_CASE("sign-reversal symmetry relations") {
  SUBCASE("generic point") {
    const SymmetryReport r = symmetry_check(SpinParams::equal(1, 1, 1));
    CHECK(r.max_defect() <= 1e-10);
    CHECK(std::abs(triplet_energies(1, 1, -1)[0] - 1.3019377358048376) <= 1e-12);
    const EigenSystem fwd = eigensystem_at_angle(1, 1, 1, 0);
    const EigenSystem rev = eigensystem_at_angle(-1, -1, -1, 0);
    CHECK(std::abs(std::abs(fwd.state(1).overlap(rev.state(2))) - 1.0) <= 1e-12);
  }
  SUBCASE("odd spectrum at J = 0") {
    const auto e = triplet_energies(0.8, 1.7, 0.0);
    CHECK(std::abs(e[0] + e[1]) <= 1e-12);
    CHECK(std::abs(e[2]) <= 1e-12);
  }
  SUBCASE("random draws") {
    testing::ParamSampler sampler(24);
    for (int i = 0; i < 300; ++i)
      CHECK(symmetry_check(sampler.equal_couplings()).max_defect() <= 1e-10);
  }
  CHECK(reversed_label(1) == 2);
  CHECK(reversed_label(2) == 1);
  CHECK(reversed_label(3) == 3);
  CHECK(reversed_label(4) == 4);
  CHECK_THROWS_AS(reversed_label(0), ParameterError);
}

TEST_CASE("closed forms reject unequal couplings") {
  SpinParams p = SpinParams::equal(1, 1, 1, 0.1);
  p.omega_b0 = 1.5;
  CHECK_THROWS_AS(eigensystem(p, 0.0), ParameterError);
  CHECK_THROWS_AS(tilde_eigensystem(p), ParameterError);
  CHECK_THROWS_AS(symmetry_check(p), ParameterError);
}

TEST_CASE("eigensystem fallback resolves second-order degeneracy") {
  // omega0 = Gamma = 0: |uu> and |dd> are degenerate and couple only through T0.
  const SpinParams p = SpinParams::equal(0, 0, 1, 0.3);
  const EigenSystem sys = eigensystem(p, 0.9);
  CHECK(sys.fallback);
  check_invariants(sys, h_total(p, 0.9).matrix());
  const EigenSystem nearby = eigensystem(SpinParams::equal(0, 1e-3, 1, 0.3), 0.9);
  for (int n = 1; n <= 4; ++n)
    CHECK(distance_up_to_phase(sys.state(n).amplitudes(), nearby.state(n).amplitudes()) <= 5e-3);
}
