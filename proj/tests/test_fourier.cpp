#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numbers>
#include <random>

#include "spinf/fourier.hpp"

using namespace spinf;

namespace {
CoeffVec random_vec(const ModeWindow& w, std::mt19937& rng, Basis b = Basis::Hat) {
  std::normal_distribution<double> g;
  CoeffVec u(w, b);
  for (int m : w.indices()) u.at(m) = cd(g(rng), g(rng));
  return u;
}

cd omega_trapezoid(const CoeffVec& u, const CoeffVec& v, int grid) {
  cd acc = 0.0;
  for (int j = 0; j < grid; ++j) {
    const double th = 2.0 * std::numbers::pi * j / grid;
    cd uu = 0.0, vp = 0.0;
    for (int n : u.window.indices()) {
      uu += u.at(n) * std::polar(1.0, n * th);
      vp += v.at(n) * cd(0.0, double(n)) * std::polar(1.0, n * th);
    }
    acc += uu * vp;
  }
  return acc / double(grid);
}
}  // namespace

TEST_CASE("window slot bijection") {
  ModeWindow w(4);
  CHECK(w.slot(-4) == 0);
  CHECK(w.slot(-1) == 3);
  CHECK(w.slot(1) == 4);
  CHECK(w.slot(4) == 7);
  for (int s = 0; s < w.size(); ++s) CHECK(w.slot(w.index_at(s)) == s);
  CHECK_THROWS(w.slot(0));
  CHECK_THROWS(w.slot(5));
}

TEST_CASE("basis rescaling on delta vectors") {
  ModeWindow w(8);
  auto u = CoeffVec::delta(w, 4, Basis::Hat);
  CHECK(to_tilde(u).at(4) == cd(2.0, 0.0));
  auto v = CoeffVec::delta(w, -4, Basis::Hat);
  CHECK(to_tilde(v).at(-4) == cd(0.0, 2.0));

  CHECK_THROWS(to_tilde(to_tilde(u)));  // wrong basis tag

  std::mt19937 rng(1);
  for (int rep = 0; rep < 50; ++rep) {
    const CoeffVec r = random_vec(w, rng);
    const CoeffVec back = to_hat(to_tilde(r));
    CHECK((back.values - r.values).cwiseAbs().maxCoeff() < 1e-15);
  }

  CoeffVec z(w, Basis::Hat);
  CHECK(to_tilde(z).values.norm() == 0.0);
}

TEST_CASE("hilbert transform is the sign multiplier with J^2 = -id") {
  ModeWindow w(6);
  auto u = CoeffVec::delta(w, 3, Basis::Hat);
  CHECK(hilbert(u).at(3) == cd(0.0, 1.0));
  auto v = CoeffVec::delta(w, -2, Basis::Hat);
  CHECK(hilbert(v).at(-2) == cd(0.0, -1.0));

  std::mt19937 rng(2);
  for (int rep = 0; rep < 20; ++rep) {
    const CoeffVec r = random_vec(w, rng);
    const CoeffVec jj = hilbert(hilbert(r));
    CHECK((jj.values + r.values).cwiseAbs().maxCoeff() == 0.0);  // exact sign flip
  }
}

TEST_CASE("omega form on the tilde basis pairs") {
  ModeWindow w(5);
  for (int m : w.indices())
    for (int n : w.indices()) {
      const auto em = CoeffVec::delta(w, m, Basis::Tilde);
      const auto en = CoeffVec::delta(w, n, Basis::Tilde);
      const cd expect = (m == -n) ? cd(-double(sgn(m)), 0.0) : cd(0.0, 0.0);
      CHECK(std::abs(omega_form(em, en) - expect) < 1e-14);
    }
}

TEST_CASE("omega antisymmetry and the quadrature oracle") {
  ModeWindow w(8);
  std::mt19937 rng(3);
  for (int rep = 0; rep < 100; ++rep) {
    const CoeffVec u = random_vec(w, rng);
    const CoeffVec v = random_vec(w, rng);
    const cd s = omega_form(u, v);
    CHECK(std::abs(s + omega_form(v, u)) < 1e-12 * (1.0 + std::abs(s)));
    CHECK(std::abs(omega_form(u, u)) < 1e-13);
  }
  // u = e_1 + e_{-1}, v = e_1 - e_{-1} against the trapezoid oracle
  CoeffVec u(w, Basis::Hat), v(w, Basis::Hat);
  u.at(1) = 1.0; u.at(-1) = 1.0;
  v.at(1) = 1.0; v.at(-1) = -1.0;
  const cd oracle = omega_trapezoid(u, v, 1024);
  CHECK(std::abs(omega_form(u, v) - oracle) < 1e-12);
  CHECK(std::abs(oracle - cd(0.0, 2.0)) < 1e-12);  // frozen from the oracle

  std::mt19937 rng2(4);
  for (int rep = 0; rep < 10; ++rep) {
    const CoeffVec a = random_vec(w, rng2);
    const CoeffVec b = random_vec(w, rng2);
    const cd s = omega_form(a, b);
    CHECK(std::abs(s - omega_trapezoid(a, b, 8 * w.N())) <
          1e-8 * std::max(1.0, std::abs(s)));
  }
}

TEST_CASE("H^{1/2} norm") {
  ModeWindow w(8);
  CHECK(h_half_norm_sq(CoeffVec::delta(w, 5, Basis::Tilde)) == 1.0);
  CHECK(h_half_norm_sq(CoeffVec::delta(w, 5, Basis::Hat)) == 5.0);
  CHECK(h_half_norm_sq(CoeffVec(w, Basis::Hat)) == 0.0);
  for (int n : w.indices())
    CHECK(h_half_norm_sq(CoeffVec::delta(w, n, Basis::Tilde)) == 1.0);
}

TEST_CASE("smoothness profile") {
  ModeWindow w(16);
  CoeffVec u(w, Basis::Hat);
  for (int n : w.indices()) u.at(n) = std::exp(-std::abs(double(n)));
  const auto prof = smoothness_profile(u, 3);
  for (const auto& [k, sup] : prof) {
    const double edge = std::pow(8.0, k) * std::exp(-8.0);  // attained at |n| = N/2
    CHECK(sup == doctest::Approx(edge).epsilon(1e-12));
  }
  // single low mode has empty tail support
  const auto zero_prof = smoothness_profile(CoeffVec::delta(w, 3, Basis::Tilde), 4);
  for (const auto& [k, sup] : zero_prof) CHECK(sup == 0.0);
  // J only changes phases
  std::mt19937 rng(5);
  const CoeffVec r = random_vec(w, rng);
  const auto p1 = smoothness_profile(r, 3);
  const auto p2 = smoothness_profile(hilbert(r), 3);
  for (size_t i = 0; i < p1.size(); ++i)
    CHECK(p1[i].second == doctest::Approx(p2[i].second).epsilon(1e-14));
}

TEST_CASE("csv dump format") {
  ModeWindow w(2);
  CoeffVec u(w, Basis::Hat);
  u.at(-2) = cd(0.5, -0.25);
  std::ostringstream os;
  write_csv(u, os);
  CHECK(os.str().rfind("n,re,im\n-2,0.5,-0.25\n", 0) == 0);
}
