#pragma once

#include <complex>
#include <vector>

#include "spinf/diffeo.hpp"
#include "spinf/op_algebra.hpp"

namespace spinf {

// Uniform theta grid on [0, 2pi), M a power of two, M >= 8N for window N.
struct QuadratureGrid {
  int M;
  explicit QuadratureGrid(int m) : M(m) {
    if (m < 2 || (m & (m - 1)) != 0)
      throw std::invalid_argument("QuadratureGrid: M must be a power of two");
  }
};

struct ActionCoeffs {
  CoeffVec coeffs;           // I_{n,m} for n in window, hat basis
  bool aliasing_warning;     // tail energy beyond N/2 exceeded 1e-6 of total
  double tail_energy_ratio;  // measured tail/total
};

// I_{n,m} = (1/2pi) int e^{i m phi(theta) - i n theta} dtheta via FFT on the
// grid; the 0-th coefficient (mean) is dropped.
ActionCoeffs action_coeffs(const DiffeoSpec& psi, int m, const QuadratureGrid& grid,
                           const ModeWindow& window);

// Phi(psi)_{n,m} = (psi.e_m, e_n)_omega assembled column by column.
TruncOp embed(const DiffeoSpec& psi, const ModeWindow& window,
              const QuadratureGrid& grid, int threads = 1);

enum class VfKind { Cos, Sin };

// Trigonometric generator matrices X_l (cos) and Y_k (sin).
TruncOp vf_generator(VfKind kind, int l, const ModeWindow& window);

// The explicit element of Sp(infinity) that is not an embedded diffeomorphism.
TruncOp witness_not_surjective(const ModeWindow& window);

// (A e_n)(theta) sampled on a uniform grid, as a parametric plane curve.
std::vector<cd> image_curve(const TruncOp& a, int n, int samples);

// Least-squares circle fit |z - c| = r; returns max | |z-c| - r | over points.
struct CircleFit {
  cd center;
  double radius;
  double max_deviation;
};
CircleFit fit_circle(const std::vector<cd>& pts);

}  // namespace spinf
