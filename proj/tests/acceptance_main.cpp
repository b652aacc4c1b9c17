// Acceptance suite: runs the project's eight acceptance criteria at their
// pinned tolerances and prints one pass/fail line per criterion. Criteria 1,
// 2 and the middle clause of 6 measure known discrepancies (see the notes
// they print); they are asserted as written and report honest failures.

#include <cmath>
#include <cstdio>
#include <cstring>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "spinf/brownian.hpp"
#include "spinf/diff_embed.hpp"
#include "spinf/ricci.hpp"

using namespace spinf;

namespace {

const double kHalf = 1.0 / std::sqrt(2.0);
int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion,
              detail.c_str());
  if (!pass) ++g_failures;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::vector<int> window_indices(int N) {
  std::vector<int> idx;
  for (int i = -N; i <= N; ++i)
    if (i != 0) idx.push_back(i);
  return idx;
}

// ---- criterion 1: corollary reproduction at lambda = 1/sqrt2 ----
void criterion1() {
  int bad = 0, total = 0;
  double worst = 0.0;
  std::string worst_at;
  for (int N : {8, 12, 16}) {
    const LambdaSeq lam = LambdaSeq::uniform(N, kHalf);
    for (const BasisLabel& l : canonical_labels(5)) {
      const double brute = ricci_truncated(l, lam, N);
      const double closed = ricci_closed_form(l, lam, N);
      const double diff = std::abs(brute - closed);
      ++total;
      if (diff > 1e-9) {
        ++bad;
        if (diff > worst) {
          worst = diff;
          worst_at = kind_name(l.kind) + "(" + std::to_string(l.a) + "," +
                     std::to_string(l.b) + ") N=" + std::to_string(N) +
                     " brute=" + fmt(brute) + " closed=" + fmt(closed);
        }
      }
    }
  }
  std::string detail = "corollary reproduction, labels<=5, N in {8,12,16}: " +
                       std::to_string(total - bad) + "/" + std::to_string(total) +
                       " labels within 1e-9";
  if (bad) {
    detail += "; worst " + worst_at +
              ". Note: the connection lemma itself verifies exactly against the "
              "Koszul formula (criterion 3); the composed brute-force curvature "
              "of the stated metric provably differs from the closed forms "
              "(e.g. +(N+1)/2 vs -(3/8)N-1/8 for muRe directions).";
  }
  report(1, bad == 0, detail);
}

// ---- criterion 2: general-lambda theorem cross-check ----
void criterion2() {
  std::mt19937 rng(20240809);
  std::uniform_real_distribution<double> u(0.5, 2.0);
  const int N = 10;
  int bad = 0, total = 0;
  double worst = 0.0;
  for (int seq = 0; seq < 5; ++seq) {
    std::vector<double> vals;
    for (int i = 0; i < N; ++i) vals.push_back(u(rng));
    const LambdaSeq lam(N, vals);
    for (const BasisLabel& l : canonical_labels(4)) {
      const double brute = ricci_truncated(l, lam, N);
      const double closed = ricci_closed_form(l, lam, N);
      const double rel = std::abs(brute - closed) / std::max(1.0, std::abs(closed));
      ++total;
      if (rel > 1e-8) {
        ++bad;
        worst = std::max(worst, rel);
      }
    }
  }
  std::string detail = "general-lambda theorem cross-check, 5 sequences, N=10: " +
                       std::to_string(total - bad) + "/" + std::to_string(total) +
                       " within 1e-8 relative";
  if (bad) detail += "; worst relative deviation " + fmt(worst) +
                     " (same verified discrepancy as criterion 1)";
  report(2, bad == 0, detail);
}

// ---- criterion 3: connection lemma, torsion, compatibility ----
void criterion3() {
  const int N = 4;
  const LambdaSeq lam = LambdaSeq::power(N, 0.9);
  const auto idx = window_indices(N);
  double dev = 0.0;
  for (int a : idx)
    for (int b : idx)
      for (Part pa : {Part::Re, Part::Im})
        for (int c : idx)
          for (int d : idx)
            for (Part pc : {Part::Re, Part::Im}) {
              const XiCombo x{{XiKey{a, b, pa}, 1.0}};
              const XiCombo y{{XiKey{c, d, pc}, 1.0}};
              dev = std::max(dev, combo_norm(combo_add(
                                      nabla(x, y, lam),
                                      nabla_oracle(x, y, lam, idx), -1.0)));
            }

  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick(0, int(idx.size()) - 1);
  std::normal_distribution<double> g;
  double tors = 0.0, compat = 0.0;
  for (int rep = 0; rep < 500; ++rep) {
    auto rnd = [&] {
      XiCombo c;
      for (int t = 0; t < 3; ++t)
        c[XiKey{idx[size_t(pick(rng))], idx[size_t(pick(rng))],
                pick(rng) % 2 ? Part::Re : Part::Im}] += g(rng);
      return c;
    };
    const XiCombo x = rnd(), y = rnd(), z = rnd();
    const double scale = std::max(1.0, combo_norm(x) * combo_norm(y) * combo_norm(z));
    const XiCombo t = combo_add(combo_add(nabla(x, y, lam), nabla(y, x, lam), -1.0),
                                bracket_combo(x, y, lam), -1.0);
    tors = std::max(tors, combo_norm(t) / scale);
    const double c1 = combo_dot(nabla(x, y, lam), z) + combo_dot(y, nabla(x, z, lam));
    compat = std::max(compat, std::abs(c1) / scale);
  }
  const bool pass = dev <= 1e-12 && tors <= 1e-12 && compat <= 1e-12;
  report(3, pass,
         "connection lemma vs Koszul oracle (exhaustive, indices<=4): max " +
             fmt(dev) + "; torsion " + fmt(tors) + "; compatibility " + fmt(compat) +
             " (tol 1e-12)");
}

// ---- criterion 4: Lemma Sum_xi ----
void criterion4() {
  const ModeWindow w(8);
  const double r1 = sum_xi_residual(CovSpec::zero(), w);
  const double r2 = sum_xi_residual(CovSpec::uniform(1.0, 4), w);
  const double r3 = sum_xi_residual(CovSpec::power(2.0), w);
  const bool pass = r1 <= 1e-12 && r2 <= 1e-12 && r3 <= 1e-12;
  report(4, pass,
         "Sum_xi residual at N=8: zero=" + fmt(r1) + ", uniform(1,4)=" + fmt(r2) +
             ", power(2)=" + fmt(r3) + " (tol 1e-12)");
}

// ---- criterion 5: group-membership SDE ----
void criterion5() {
  SimConfig cfg;
  cfg.N = 8;
  cfg.T = 1.0;
  cfg.paths = 64;
  cfg.seed = 4;
  cfg.Q = CovSpec::power(2.0);
  cfg.record_every = 1 << 20;  // terminal only
  cfg.threads = 4;

  auto mean_terminal = [&](double dt) {
    SimConfig c = cfg;
    c.dt = dt;
    double acc = 0.0;
    for (const auto& rec : simulate(c)) acc += rec.residuals.back();
    return acc / double(c.paths);
  };
  const double m_coarse = mean_terminal(2e-3);
  const double m_fine = mean_terminal(1e-3);
  const double ratio = m_coarse / m_fine;
  const bool finite = std::isfinite(m_coarse) && std::isfinite(m_fine);

  SimConfig zero = cfg;
  zero.dt = 1e-3;
  zero.T = 0.1;
  zero.Q = CovSpec::zero();
  double zr = 0.0;
  for (const auto& rec : simulate(zero))
    for (double r : rec.residuals) zr = std::max(zr, r);

  const bool pass = finite && ratio >= 1.2 && ratio <= 1.7 && zr == 0.0;
  report(5, pass,
         "SDE drift-off: mean terminal residual " + fmt(m_coarse) + " (dt=2e-3) vs " +
             fmt(m_fine) + " (dt=1e-3), ratio " + fmt(ratio) +
             " in [1.2,1.7]; zero-covariance residual " + fmt(zr));
}

// ---- criterion 6: embedding fidelity ----
void criterion6() {
  const DiffeoSpec psi = DiffeoSpec::sine(2, 0.2);
  const ModeWindow w16(16);
  const TruncOp phi = embed(psi, w16, QuadratureGrid(256), 4);
  const double real_r = is_real_residual(phi);
  const double omega_r = preserves_omega_residual(phi, 8);

  const DiffeoSpec f1 = DiffeoSpec::sine(1, 0.3);
  const DiffeoSpec f12 = DiffeoSpec::compose({f1, psi});
  auto defect = [&](int N) {
    const ModeWindow w(N);
    const QuadratureGrid grid(8 * N >= 256 ? 8 * N : 256);
    const TruncOp lhs = embed(f12, w, grid, 4);
    const TruncOp rhs = embed(f1, w, grid, 4) * embed(psi, w, grid, 4);
    return inf_norm(lhs - rhs, N / 2);
  };
  const double d16 = defect(16), d32 = defect(32);

  const bool c_real = real_r <= 1e-10;
  const bool c_omega = omega_r <= 1e-6;
  const bool c_hom = d32 < d16;
  std::string detail = "sine(2,0.2) N=16 grid 256: is_real " + fmt(real_r) +
                       " (tol 1e-10); omega residual on half-window " + fmt(omega_r) +
                       " (tol 1e-6); homomorphism defect " + fmt(d16) + " -> " +
                       fmt(d32) + " when N doubles";
  if (!c_omega) {
    const ModeWindow w32(32);
    const double omega32 =
        preserves_omega_residual(embed(psi, w32, QuadratureGrid(256), 4), 8);
    detail += ". Note: the omega defect equals the outside-window column energy "
              "(window truncation, scales like eps^2 and falls with N: same "
              "quantity at N=32 is " + fmt(omega32) + "); 1e-6 is unattainable "
              "at N=16 for this diffeomorphism.";
  }
  report(6, c_real && c_omega && c_hom, detail);
}

// ---- criterion 7: the non-surjectivity witness ----
void criterion7() {
  const ModeWindow w(16);
  const TruncOp wit = witness_not_surjective(w);
  const double grp = sp_group_residual(wit);

  double ell = 0.0;
  const double rx = std::sqrt(2.0) - 1.0, ry = std::sqrt(2.0) + 1.0;
  for (const cd& z : image_curve(wit, 1, 1001))
    ell = std::max(ell, std::abs((z.real() / rx) * (z.real() / rx) +
                                 (z.imag() / ry) * (z.imag() / ry) - 1.0));

  double circ = 0.0;
  const QuadratureGrid grid(256);
  for (const DiffeoSpec& psi :
       {DiffeoSpec::rotation(0.7), DiffeoSpec::rotation(-1.3),
        DiffeoSpec::sine(1, 0.1), DiffeoSpec::sine(1, 0.05)}) {
    const auto pts = image_curve(embed(psi, w, grid, 4), 1, 511);
    const CircleFit fit = fit_circle(pts);
    circ = std::max(circ, std::max(fit.max_deviation, std::abs(fit.radius - 1.0)));
  }
  const bool pass = grp <= 1e-12 && ell <= 1e-12 && circ <= 1e-12;
  report(7, pass,
         "witness group residual " + fmt(grp) + "; ellipse deviation " + fmt(ell) +
             "; embedded-diffeo circle deviation " + fmt(circ) + " (tol 1e-12)");
}

// ---- criterion 8: the coefficient bounds of the embedding lemma ----
void criterion8() {
  const DiffeoSpec psi = DiffeoSpec::sine(1, 0.3);
  const ModeWindow w32(32);
  const QuadratureGrid g32(256);
  double smin = 1e300, smax = 0.0;
  for (int m = 8; m <= 16; ++m) {
    const auto ac = action_coeffs(psi, m, g32, w32);
    double s = 0.0;
    for (int n : w32.indices()) s += std::abs(double(n)) * std::norm(ac.coeffs.at(n));
    s /= double(m);
    smin = std::min(smin, s);
    smax = std::max(smax, s);
  }
  const double ratio = smax / smin;

  auto off_corner = [&](int N) {
    const ModeWindow w(N);
    const QuadratureGrid grid(8 * N);
    double acc = 0.0;
    for (int m = -8; m <= -1; ++m) {
      const auto ac = action_coeffs(psi, m, grid, w);
      for (int n = 1; n <= 8; ++n) acc += double(n) * std::norm(ac.coeffs.at(n));
    }
    return acc;
  };
  const double s32 = off_corner(32), s64 = off_corner(64);
  const double change = std::abs(s64 - s32) / s32;

  const bool pass = ratio <= 3.0 && change < 0.01;
  report(8, pass,
         "sine(1,0.3): sum_n |n||I_nm|^2 / |m| over m=8..16 has max/min " +
             fmt(ratio) + " (tol 3); off-corner sum " + fmt(s32) + " -> " + fmt(s64) +
             " between N=32 and N=64 (" + fmt(100 * change) + "% change, tol 1%)");
}

}  // namespace

int main(int argc, char** argv) {
  const std::string which = argc > 1 ? argv[1] : "all";
  auto want = [&](int k) { return which == "all" || which == std::to_string(k); };
  if (want(1)) criterion1();
  if (want(2)) criterion2();
  if (want(3)) criterion3();
  if (want(4)) criterion4();
  if (want(5)) criterion5();
  if (want(6)) criterion6();
  if (want(7)) criterion7();
  if (want(8)) criterion8();
  return g_failures == 0 ? 0 : 1;
}
