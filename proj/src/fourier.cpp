#include "spinf/fourier.hpp"

#include <cmath>
#include <ostream>

namespace spinf {

namespace {
// factor t_n with tilde(n) = t_n * hat(n)
cd tilde_factor(int n) {
  return n > 0 ? cd(std::sqrt(double(n)), 0.0) : cd(0.0, std::sqrt(double(-n)));
}
}  // namespace

CoeffVec to_tilde(const CoeffVec& u) {
  if (u.basis != Basis::Hat)
    throw std::invalid_argument("to_tilde: input must be in the hat basis");
  CoeffVec out(u.window, Basis::Tilde);
  for (int m : u.window.indices()) out.at(m) = tilde_factor(m) * u.at(m);
  return out;
}

CoeffVec to_hat(const CoeffVec& u) {
  if (u.basis != Basis::Tilde)
    throw std::invalid_argument("to_hat: input must be in the tilde basis");
  CoeffVec out(u.window, Basis::Hat);
  for (int m : u.window.indices()) out.at(m) = u.at(m) / tilde_factor(m);
  return out;
}

CoeffVec hilbert(const CoeffVec& u) {
  CoeffVec out = u;
  for (int m : u.window.indices()) out.at(m) *= cd(0.0, double(sgn(m)));
  return out;
}

cd omega_form(const CoeffVec& u, const CoeffVec& v) {
  if (u.window != v.window)
    throw std::invalid_argument("omega_form: window mismatch");
  const CoeffVec uh = u.basis == Basis::Hat ? u : to_hat(u);
  const CoeffVec vh = v.basis == Basis::Hat ? v : to_hat(v);
  cd acc = 0.0;
  for (int n : u.window.indices())
    acc += cd(0.0, double(n)) * uh.at(-n) * vh.at(n);
  return acc;
}

double h_half_norm_sq(const CoeffVec& u) {
  double acc = 0.0;
  if (u.basis == Basis::Tilde) {
    for (int n : u.window.indices()) acc += std::norm(u.at(n));
  } else {
    for (int n : u.window.indices()) acc += std::abs(double(n)) * std::norm(u.at(n));
  }
  return acc;
}

std::vector<std::pair<int, double>> smoothness_profile(const CoeffVec& u, int kmax) {
  if (kmax < 1) throw std::invalid_argument("smoothness_profile: kmax must be >= 1");
  const CoeffVec uh = u.basis == Basis::Hat ? u : to_hat(u);
  const double edge = uh.window.N() / 2.0;
  std::vector<std::pair<int, double>> out;
  out.reserve(kmax);
  for (int k = 1; k <= kmax; ++k) {
    double sup = 0.0;
    for (int n : uh.window.indices()) {
      const double an = std::abs(double(n));
      if (an < edge) continue;
      sup = std::max(sup, std::pow(an, k) * std::abs(uh.at(n)));
    }
    out.emplace_back(k, sup);
  }
  return out;
}

void write_csv(const CoeffVec& u, std::ostream& os) {
  os << "n,re,im\n";
  char buf[96];
  for (int s = 0; s < u.window.size(); ++s) {
    const int n = u.window.index_at(s);
    std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g\n", n, u.values(s).real(),
                  u.values(s).imag());
    os << buf;
  }
}

}  // namespace spinf
