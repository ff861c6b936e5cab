#include "doctest.h"

#include "geophase/hamiltonian.hpp"
#include "support/oracles.hpp"

#include <cmath>

using namespace geophase;

namespace {
Matrix4 diag(double a, double b, double c, double d) {
  return Eigen::Vector4cd(a, b, c, d).asDiagonal().toDenseMatrix();
}
}  // namespace

TEST_CASE("h_static diagonal") {
  CHECK(max_abs(h_static(SpinParams::equal(1, 0, 1)).matrix() - diag(1.5, -0.5, -0.5, -0.5)) ==
        0.0);
  CHECK(max_abs(h_static(SpinParams::equal(0, 0, 2)).matrix() - diag(1, -1, -1, 1)) == 0.0);
  CHECK(max_abs(h_static(SpinParams{}).matrix()) == 0.0);

  const SpinParams p{0.7, -0.2, 0.0, 0.0, 0.4, 0.0};
  CHECK(max_abs(h_static(p).matrix() - diag(0.5 * (0.7 - 0.2 + 0.4), 0.5 * (0.7 + 0.2 - 0.4),
                                            0.5 * (-0.7 - 0.2 - 0.4), 0.5 * (-0.7 + 0.2 + 0.4))) <=
        1e-16);
}

TEST_CASE("h_total matrix elements") {
  SUBCASE("t = 0 couplings are real Gamma/2 on single flips") {
    const Matrix4 h = h_total(SpinParams::equal(0.3, 0.8, -0.4, 0.2), 0.0).matrix();
    const int flips[][2] = {{kUpUp, kUpDown}, {kUpUp, kDownUp}, {kUpDown, kDownDown},
                            {kDownUp, kDownDown}};
    for (auto [r, c] : flips) {
      CHECK(h(r, c) == Complex(0.4, 0.0));
      CHECK(h(c, r) == Complex(0.4, 0.0));
    }
    CHECK(h(kUpUp, kDownDown) == Complex(0.0));
    CHECK(h(kUpDown, kDownUp) == Complex(0.0));
  }
  SUBCASE("no transverse field reduces to h_static") {
    const SpinParams p{0.9, 1.3, 0.0, 0.0, -0.6, 0.7};
    CHECK(max_abs(h_total(p, 2.345).matrix() - h_static(p).matrix()) == 0.0);
  }
  SUBCASE("quarter period element") {
    const SpinParams p = SpinParams::equal(1, 1, 1, 0.1);
    const Complex e = h_total(p, p.period() / 4).matrix()(kUpUp, kUpDown);
    CHECK(std::abs(e - Complex(0.0, -0.5)) <= 1e-15);
  }
}

TEST_CASE("h_rotating_frame") {
  SUBCASE("resonance without coupling is the pure transverse field") {
    const SpinParams p = SpinParams::equal(0.8, 1.0, 0.0, 0.8);
    const Matrix4 expected = 0.5 * (pauli_operator(Site::a, Axis::x).matrix() +
                                    pauli_operator(Site::b, Axis::x).matrix());
    CHECK(max_abs(h_rotating_frame(p).matrix() - expected) == 0.0);
  }
  SUBCASE("no transverse field") {
    const double w0 = 1.3, w1 = 0.4, J = 0.7;
    const Matrix4 h = h_rotating_frame(SpinParams::equal(w0, 0.0, J, w1)).matrix();
    const double d = w0 - w1;
    CHECK(max_abs(h - diag(0.5 * (2 * d + J), -J / 2, -J / 2, 0.5 * (-2 * d + J))) <= 1e-15);
  }
  SUBCASE("equals H(0) with omega0 replaced by the detuning") {
    const Matrix4 h = h_rotating_frame(SpinParams::equal(1.1, 1, 1, 0.1)).matrix();
    const Matrix4 ref = h_total(SpinParams::equal(1.0, 1, 1, 0.1), 0.0).matrix();
    CHECK(max_abs(h - ref) <= 1e-15);
  }
}

TEST_CASE("frame_rotation") {
  const SpinParams p = SpinParams::equal(1, 1, 1, 0.3);
  const double tau = p.period();
  CHECK(max_abs(frame_rotation(p, 0.0).matrix() - Matrix4::Identity()) == 0.0);
  CHECK(max_abs(frame_rotation(p, tau).matrix() - Matrix4::Identity()) <= 1e-15);
  CHECK(max_abs(frame_rotation(p, tau / 2).matrix() - diag(-1, 1, 1, -1)) <= 1e-15);
  CHECK(frame_rotation(p, 1.7).kind() == OperatorKind::unitary);
}

TEST_CASE("frame identity, periodicity and hermiticity over random parameters") {
  testing::ParamSampler sampler(11);
  for (int i = 0; i < 500; ++i) {
    const SpinParams p = sampler.general();
    const double t = sampler.uniform(-20, 20);
    const Matrix4 h = h_total(p, t).matrix();
    const Matrix4 v = frame_rotation(p, t).matrix();
    CHECK(max_abs(h - v * h_total(p, 0.0).matrix() * v.adjoint()) <= 1e-12);
    CHECK(max_abs(h_total(p, t + p.period()).matrix() - h) <= 1e-12);
    CHECK(hermiticity_defect(h) == 0.0);
  }
}

TEST_CASE("singlet is an eigenvector of H(t) with energy -J/2 for equal couplings") {
  testing::ParamSampler sampler(12);
  const Vector4 s = TwoSpinState::singlet().amplitudes();
  for (int i = 0; i < 200; ++i) {
    const SpinParams p = sampler.equal_couplings();
    const Matrix4 h = h_total(p, sampler.uniform(0, 50)).matrix();
    CHECK((h * s + 0.5 * p.J * s).norm() <= 1e-14);
  }
}

TEST_CASE("HamiltonianModel delegates") {
  const HamiltonianModel model(SpinParams::equal(1, 2, 3, 0.5));
  CHECK(model.period() == doctest::Approx(4 * kPi));
  CHECK(max_abs(model.at(0.4).matrix() - h_total(model.params(), 0.4).matrix()) == 0.0);
  CHECK(max_abs(model.rotating_frame().matrix() - h_rotating_frame(model.params()).matrix()) ==
        0.0);
  CHECK_THROWS_AS(HamiltonianModel(SpinParams{std::nan(""), 0, 0, 0, 0, 0}), ParameterError);
  CHECK_THROWS_AS(h_total(SpinParams{}, std::nan("")), ParameterError);
}
