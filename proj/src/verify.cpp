#include "spinf/verify.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <random>

#include "spinf/brownian.hpp"
#include "spinf/diff_embed.hpp"
#include "spinf/ricci.hpp"

namespace spinf {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

CoeffVec random_coeffs(const ModeWindow& w, Basis b, std::mt19937& rng) {
  std::normal_distribution<double> g;
  CoeffVec u(w, b);
  for (int m : w.indices()) u.at(m) = cd(g(rng), g(rng));
  return u;
}

// trapezoid quadrature of (1/2pi) int u v' dtheta for band-limited samples
cd omega_quadrature(const CoeffVec& u, const CoeffVec& v, int grid) {
  cd acc = 0.0;
  for (int j = 0; j < grid; ++j) {
    const double th = kTwoPi * j / grid;
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

std::vector<CheckResult> run_verify(int N, unsigned seed) {
  std::vector<CheckResult> out;
  std::mt19937 rng(seed);
  const ModeWindow w(N);
  auto push = [&](const std::string& name, double residual, double tol) {
    out.push_back({name, residual, tol, residual <= tol});
  };

  // fourier_core
  {
    double r = 0.0;
    for (int rep = 0; rep < 20; ++rep) {
      const CoeffVec u = random_coeffs(w, Basis::Hat, rng);
      const CoeffVec back = to_hat(to_tilde(u));
      r = std::max(r, (back.values - u.values).cwiseAbs().maxCoeff());
      const CoeffVec jj = hilbert(hilbert(u));
      r = std::max(r, (jj.values + u.values).cwiseAbs().maxCoeff());
    }
    push("fourier.roundtrip_and_J2", r, 1e-12);

    double anti = 0.0;
    for (int rep = 0; rep < 100; ++rep) {
      const CoeffVec u = random_coeffs(w, Basis::Hat, rng);
      const CoeffVec v = random_coeffs(w, Basis::Hat, rng);
      anti = std::max(anti, std::abs(omega_form(u, v) + omega_form(v, u)));
    }
    push("fourier.omega_antisymmetry", anti, 1e-12 * N * 10);

    double quad = 0.0;
    for (int rep = 0; rep < 5; ++rep) {
      const CoeffVec u = random_coeffs(w, Basis::Hat, rng);
      const CoeffVec v = random_coeffs(w, Basis::Hat, rng);
      const cd s = omega_form(u, v);
      const cd q = omega_quadrature(u, v, 8 * N);
      quad = std::max(quad, std::abs(s - q) / std::max(1.0, std::abs(s)));
    }
    push("fourier.omega_vs_quadrature", quad, 1e-8);

    double e = 0.0;
    for (int n : w.indices()) {
      const CoeffVec en = CoeffVec::delta(w, n, Basis::Tilde);
      e = std::max(e, std::abs(h_half_norm_sq(en) - 1.0));
    }
    push("fourier.tilde_norms", e, 0.0);
  }

  // op_algebra
  {
    double r = 0.0;
    for (int rep = 0; rep < 10; ++rep) {
      TruncOp A(w), B(w);
      std::normal_distribution<double> g;
      for (int m : w.indices())
        for (int n : w.indices()) {
          A.at(m, n) = cd(g(rng), g(rng));
          B.at(m, n) = cd(g(rng), g(rng));
        }
      const double scale = inf_norm(A) * inf_norm(B) * 2 * N;
      r = std::max(r, inf_norm(sharp(A * B) - sharp(B) * sharp(A)) / scale);
      r = std::max(r, inf_norm(transpose(A * B) - transpose(B) * transpose(A)) / scale);
      r = std::max(r, inf_norm(dagger(A * B) - dagger(B) * dagger(A)) / scale);
      r = std::max(r, inf_norm(conj_op(A * B) - conj_op(A) * conj_op(B)) / scale);
    }
    push("op_algebra.product_identities", r, 1e-12);

    // sharp against the definitional omega-oracle on basis pairs
    TruncOp A(w);
    std::normal_distribution<double> g;
    for (int m : w.indices())
      for (int n : w.indices()) A.at(m, n) = cd(g(rng), g(rng));
    const TruncOp As = sharp(A);
    double shr = 0.0;
    for (int m : w.indices())
      for (int n : w.indices()) {
        // omega(A e_m, e_n) = omega(e_m, A# e_n)
        CoeffVec em = CoeffVec::delta(w, m, Basis::Tilde);
        CoeffVec en = CoeffVec::delta(w, n, Basis::Tilde);
        const cd lhs = omega_form(apply(A, em), en);
        const cd rhs = omega_form(em, apply(As, en));
        shr = std::max(shr, std::abs(lhs - rhs));
      }
    push("op_algebra.sharp_definitional_oracle", shr, 1e-10);

    const TruncOp wit = witness_not_surjective(w);
    push("op_algebra.witness_in_group", sp_group_residual(wit), 1e-12);
    push("op_algebra.witness_norm2", std::abs(norm2(wit) - 1.0), 1e-13);
  }

  // diff_embed
  {
    int M = 1;
    while (M < 8 * N) M <<= 1;
    const QuadratureGrid grid(std::max(M, 256));
    const TruncOp rot = embed(DiffeoSpec::rotation(0.7), w, grid);
    double r = 0.0;
    for (int m : w.indices())
      r = std::max(r, std::abs(rot.at(m, m) - std::polar(1.0, -0.7 * m)));
    push("diff_embed.rotation_diagonal", r, 1e-12);

    const TruncOp idm = embed(DiffeoSpec::identity(), w, grid);
    push("diff_embed.identity",
         inf_norm(idm - TruncOp::identity(w)), 1e-12);

    // X_0 equals the rotation-family derivative at 0
    const double h = 1e-6;
    const TruncOp dplus = embed(DiffeoSpec::rotation(h), w, grid);
    const TruncOp dminus = embed(DiffeoSpec::rotation(-h), w, grid);
    TruncOp fd(w);
    fd.entries = (dplus.entries - dminus.entries) / (2 * h);
    push("diff_embed.X0_rotation_derivative",
         inf_norm(fd - vf_generator(VfKind::Cos, 0, w)), 1e-6);

    const auto pts = image_curve(witness_not_surjective(w), 1, 257);
    double ell = 0.0;
    const double rx = std::sqrt(2.0) - 1.0, ry = std::sqrt(2.0) + 1.0;
    for (const cd& z : pts)
      ell = std::max(ell, std::abs((z.real() / rx) * (z.real() / rx) +
                                   (z.imag() / ry) * (z.imag() / ry) - 1.0));
    push("diff_embed.witness_ellipse", ell, 1e-12);
  }

  // sp_algebra
  {
    const LambdaSeq lam = LambdaSeq::uniform(N, 1.0 / std::sqrt(2.0));
    double r = 0.0, br = 0.0;
    const auto labels = canonical_labels(std::min(N, 5));
    for (const auto& l : labels)
      r = std::max(r, sp_check_residual(basis_element(l, lam, w)));
    push("sp_algebra.basis_sp_check", r, 1e-14);
    for (size_t i = 0; i < labels.size(); i += 7)
      for (size_t j = 0; j < labels.size(); j += 5) {
        const SpElem x = unit_basis_element(labels[i], lam, w);
        const SpElem y = unit_basis_element(labels[j], lam, w);
        br = std::max(br, sp_check_residual(bracket(x, y)));
      }
    push("sp_algebra.bracket_closure", br, 1e-12);

    double proj = 0.0;
    std::normal_distribution<double> g;
    TruncOp M(w);
    for (int m : w.indices())
      for (int n : w.indices()) M.at(m, n) = cd(g(rng), g(rng));
    const SpElem P = project_sp(M);
    const SpElem PP = project_sp(P.dense());
    for (const auto& [key, v] : P.entries)
      proj = std::max(proj, std::abs(v - PP.at(key.first, key.second)));
    const TruncOp resid = M - P.dense();
    for (const auto& l : canonical_labels(std::min(N, 4)))
      proj = std::max(proj, std::abs(inner_lambda(
                                resid, unit_basis_element(l, lam, w).dense(), lam)));
    push("sp_algebra.projection_orthogonal_idempotent", proj, 1e-12);

    push("sp_algebra.sum_xi_zero", sum_xi_residual(CovSpec::zero(), w), 1e-12);
    push("sp_algebra.sum_xi_uniform",
         sum_xi_residual(CovSpec::uniform(1.0, std::min(N, 4)), w), 1e-12);
    push("sp_algebra.sum_xi_power", sum_xi_residual(CovSpec::power(2.0), w), 1e-12);
  }

  // brownian_sim
  {
    const CovSpec q = CovSpec::power(2.0);
    const IncrementBasis basis(q, w);
    RngStream stream(7, 0);
    double r = 0.0;
    for (int rep = 0; rep < 10; ++rep)
      r = std::max(r, sp_check_residual(sample_increment(basis, 1e-3, stream)));
    push("brownian.increment_sp_check", r, 1e-13);

    SimConfig cfg;
    cfg.N = N;
    cfg.dt = 1e-2;
    cfg.T = 5e-2;
    cfg.paths = 2;
    cfg.seed = 42;
    cfg.Q = CovSpec::zero();
    const auto recs = simulate(cfg);
    double zr = 0.0;
    for (const auto& rec : recs)
      for (double v : rec.residuals) zr = std::max(zr, v);
    push("brownian.zero_Q_stationary", zr, 0.0);

    cfg.Q = q;
    const auto r1 = simulate(cfg);
    const auto r2 = simulate(cfg);
    double det = 0.0;
    for (size_t i = 0; i < r1.size(); ++i)
      det = std::max(det, (r1[i].terminal - r2[i].terminal).cwiseAbs().maxCoeff());
    push("brownian.determinism", det, 0.0);
  }

  // ricci_engine
  {
    const int n4 = std::min(N, 4);
    const LambdaSeq lam = LambdaSeq::power(n4, 0.8);
    double dev = 0.0, tors = 0.0;
    std::vector<int> idx;
    for (int i = -n4; i <= n4; ++i)
      if (i != 0) idx.push_back(i);
    std::uniform_int_distribution<int> pick(0, int(idx.size()) - 1);
    for (int rep = 0; rep < 60; ++rep) {
      const XiCombo x{{XiKey{idx[size_t(pick(rng))], idx[size_t(pick(rng))],
                             rep % 2 ? Part::Re : Part::Im}, 1.0}};
      const XiCombo y{{XiKey{idx[size_t(pick(rng))], idx[size_t(pick(rng))],
                             rep % 3 ? Part::Re : Part::Im}, 1.0}};
      const XiCombo n1 = nabla(x, y, lam);
      const XiCombo n2 = nabla_oracle(x, y, lam, idx);
      dev = std::max(dev, combo_norm(combo_add(n1, n2, -1.0)));
      const XiCombo t = combo_add(combo_add(n1, nabla(y, x, lam), -1.0),
                                  bracket_combo(x, y, lam), -1.0);
      tors = std::max(tors, combo_norm(t));
    }
    push("ricci.nabla_vs_oracle", dev, 1e-12);
    push("ricci.torsion_free", tors, 1e-12);

    const LambdaSeq half = LambdaSeq::uniform(8, 1.0 / std::sqrt(2.0));
    const double closed = ricci_closed_form({LabelKind::MuRe, 2, 1}, half, 8);
    push("ricci.corollary_muRe_closed_form",
         std::abs(closed - (-(3.0 / 8.0) * 8 - 1.0 / 8.0)), 1e-12);
  }

  return out;
}

bool report_verify(const std::vector<CheckResult>& results, std::ostream& os) {
  bool all = true;
  for (const auto& r : results) {
    os << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << "  residual=" << r.residual
       << " tol=" << r.tolerance << "\n";
    all = all && r.pass;
  }
  return all;
}

}  // namespace spinf
