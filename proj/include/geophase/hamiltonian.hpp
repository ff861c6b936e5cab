#pragma once

#include "geophase/core.hpp"

namespace geophase {

/// H0 = (omega_a0 sz_a + omega_b0 sz_b + J sz_a sz_b) / 2. Diagonal.
Operator4 h_static(const SpinParams& params);

/// Full lab-frame H(t): H0 plus (Gamma_alpha/2)(sx_alpha cos w1 t + sy_alpha sin w1 t)
/// on each site. Unequal couplings are allowed.
Operator4 h_total(const SpinParams& params, double t);

/// Time-independent rotating-frame Hamiltonian H(0) - (omega1/2)(sz_a + sz_b).
Operator4 h_rotating_frame(const SpinParams& params);

/// V(t) = exp(-i omega1 t (sz_a + sz_b) / 2) = diag(e^{-i w1 t}, 1, 1, e^{i w1 t}).
Operator4 frame_rotation(const SpinParams& params, double t);

/// Convenience wrapper binding a parameter set.
class HamiltonianModel {
 public:
  explicit HamiltonianModel(SpinParams params);

  const SpinParams& params() const { return params_; }
  Operator4 at(double t) const { return h_total(params_, t); }
  Operator4 rotating_frame() const { return h_rotating_frame(params_); }
  Operator4 frame(double t) const { return frame_rotation(params_, t); }
  double period() const { return params_.period(); }

 private:
  SpinParams params_;
};

}  // namespace geophase
