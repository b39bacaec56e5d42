// Copyright 2026 The cuspflow Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CUSPFLOW_BLEND_HPP_
#define CUSPFLOW_BLEND_HPP_

#include <array>
#include <cmath>
#include <stdexcept>

namespace cuspflow {

// Septic smoothstep: 0 -> 1 over [0,1] with vanishing first three
// derivatives at both ends (C^3 junctions).
inline double smoothstep(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double x2 = x * x;
  return x2 * x2 * (35.0 + x * (-84.0 + x * (70.0 - 20.0 * x)));
}

// Conformal potential of the model cusp in core-plane coordinates:
// the metric (r log(1/r))^{-2} |dx|^2 equals e^{2 psi} |dx|^2 with
// psi(lam) = -lam - log(-lam), lam = log r < 0.  Derivatives are in lam.
inline double cusp_potential(double lam) { return -lam - std::log(-lam); }
inline double cusp_potential_d1(double lam) { return -1.0 - 1.0 / lam; }
inline double cusp_potential_d2(double lam) { return 1.0 / (lam * lam); }
inline double cusp_potential_d3(double lam) { return -2.0 / (lam * lam * lam); }

// Degree-7 two-point Hermite polynomial in lam = log r joining the exact
// cusp potential (value + three derivatives at lam_in) to a constant plateau
// (value K0, zero derivatives at lam_out).  Keeps the background factor C^3,
// hence the background curvature C^1, which the quadrature needs to hit the
// Gauss-Bonnet budget at bench resolutions.
class HermiteBlend {
 public:
  HermiteBlend() = default;

  // lam_in < lam_out < 0 (inner edge is closer to the puncture).
  HermiteBlend(double lam_in, double lam_out, double plateau)
      : lam_in_(lam_in), lam_out_(lam_out), plateau_(plateau) {
    if (!(lam_in < lam_out) || !(lam_out < 0.0))
      throw std::invalid_argument("HermiteBlend: need lam_in < lam_out < 0");
    solve_coeffs();
  }

  double lam_in() const { return lam_in_; }
  double lam_out() const { return lam_out_; }
  double plateau() const { return plateau_; }

  // d-th derivative of the blended potential at lam (d = 0..3).
  double eval(double lam, int d = 0) const {
    if (lam <= lam_in_) {
      switch (d) {
        case 0: return cusp_potential(lam);
        case 1: return cusp_potential_d1(lam);
        case 2: return cusp_potential_d2(lam);
        default: return cusp_potential_d3(lam);
      }
    }
    if (lam >= lam_out_) return d == 0 ? plateau_ : 0.0;
    return poly_eval(lam, d);
  }

 private:
  void solve_coeffs() {
    // Coefficients in powers of t = lam - lam_in.  The inner-edge data fixes
    // c_0..c_3 directly; the plateau conditions at t = T give a 4x4 system
    // for c_4..c_7.
    const double T = lam_out_ - lam_in_;
    coeff_[0] = cusp_potential(lam_in_);
    coeff_[1] = cusp_potential_d1(lam_in_);
    coeff_[2] = cusp_potential_d2(lam_in_) / 2.0;
    coeff_[3] = cusp_potential_d3(lam_in_) / 6.0;

    double A[4][5];
    const double target[4] = {plateau_, 0.0, 0.0, 0.0};
    for (int d = 0; d < 4; ++d) {
      for (int k = 4; k <= 7; ++k) {
        double f = 1.0;
        for (int m = 0; m < d; ++m) f *= static_cast<double>(k - m);
        A[d][k - 4] = f * std::pow(T, k - d);
      }
      double low = 0.0;  // contribution of c_0..c_3 to the d-th derivative
      for (int k = d; k <= 3; ++k) {
        double f = 1.0;
        for (int m = 0; m < d; ++m) f *= static_cast<double>(k - m);
        low += coeff_[static_cast<size_t>(k)] * f * std::pow(T, k - d);
      }
      A[d][4] = target[d] - low;
    }
    // Gaussian elimination with partial pivoting.
    for (int c = 0; c < 4; ++c) {
      int piv = c;
      for (int r = c + 1; r < 4; ++r)
        if (std::abs(A[r][c]) > std::abs(A[piv][c])) piv = r;
      for (int k = 0; k < 5; ++k) std::swap(A[c][k], A[piv][k]);
      if (A[c][c] == 0.0) throw std::runtime_error("HermiteBlend: singular");
      for (int r = 0; r < 4; ++r) {
        if (r == c) continue;
        const double m = A[r][c] / A[c][c];
        for (int k = c; k < 5; ++k) A[r][k] -= m * A[c][k];
      }
    }
    for (int c = 0; c < 4; ++c) coeff_[static_cast<size_t>(c + 4)] = A[c][4] / A[c][c];
  }

  double poly_eval(double lam, int d) const {
    // Horner on the derivative polynomial, coefficients in (lam - lam_in).
    const double t = lam - lam_in_;
    double v = 0.0;
    for (int k = 7; k >= d; --k) {
      double f = 1.0;
      for (int m = 0; m < d; ++m) f *= static_cast<double>(k - m);
      v = v * t + coeff_[static_cast<size_t>(k)] * f;
    }
    return v;
  }

  double lam_in_ = -1.0;
  double lam_out_ = -0.5;
  double plateau_ = 0.0;
  std::array<double, 8> coeff_{};  // ascending powers of (lam - lam_in)
};

}  // namespace cuspflow

#endif  // CUSPFLOW_BLEND_HPP_
