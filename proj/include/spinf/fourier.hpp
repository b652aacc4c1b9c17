#pragma once

#include <complex>
#include <iosfwd>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "spinf/window.hpp"

namespace spinf {

using cd = std::complex<double>;

enum class Basis { Hat, Tilde };

// Fourier coefficient vector over a mode window, tagged with the basis
// convention: hat holds coefficients of e^{in theta}, tilde of the
// orthonormal H^{1/2} basis.
struct CoeffVec {
  ModeWindow window;
  Eigen::VectorXcd values;
  Basis basis = Basis::Hat;

  CoeffVec(ModeWindow w, Basis b)
      : window(w), values(Eigen::VectorXcd::Zero(w.size())), basis(b) {}

  cd& at(int m) { return values(window.slot(m)); }
  cd at(int m) const { return values(window.slot(m)); }

  static CoeffVec delta(ModeWindow w, int m, Basis b, cd value = 1.0) {
    CoeffVec u(w, b);
    u.at(m) = value;
    return u;
  }
};

// tilde(n) = sqrt(n) hat(n) for n>0, i sqrt|n| hat(n) for n<0
CoeffVec to_tilde(const CoeffVec& u);
CoeffVec to_hat(const CoeffVec& u);

// J: multiplies coefficient n by i sgn(n); same multiplier in either basis.
CoeffVec hilbert(const CoeffVec& u);

// omega(u,v) = (1/2pi) int u v' dtheta, computed spectrally.
cd omega_form(const CoeffVec& u, const CoeffVec& v);

// H^{1/2} norm squared: sum |n| |hat(n)|^2.
double h_half_norm_sq(const CoeffVec& u);

// (k, sup_{|n| >= N/2} |n|^k |hat(n)|) for k = 1..kmax.
std::vector<std::pair<int, double>> smoothness_profile(const CoeffVec& u, int kmax);

// CSV dump, header "n,re,im", rows in serialization (slot) order.
void write_csv(const CoeffVec& u, std::ostream& os);

}  // namespace spinf
