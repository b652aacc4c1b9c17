#include "spinf/diff_embed.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>
#include <thread>

namespace spinf {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::mutex fftw_plan_mutex;

// forward DFT, c[n] = (1/M) sum_j g_j exp(-2 pi i j n / M)
std::vector<cd> dft_forward(const std::vector<cd>& g) {
  const int M = int(g.size());
  std::vector<cd> out(M);
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(fftw_plan_mutex);
    plan = fftw_plan_dft_1d(
        M, reinterpret_cast<fftw_complex*>(const_cast<cd*>(g.data())),
        reinterpret_cast<fftw_complex*>(out.data()), FFTW_FORWARD, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(fftw_plan_mutex);
    fftw_destroy_plan(plan);
  }
  for (cd& v : out) v /= double(M);
  return out;
}

cd gamma_factor(int m) {
  // psi.e~_m = gamma_m sum_n I_{n,m} e^_n
  return m > 0 ? cd(1.0 / std::sqrt(double(m)), 0.0)
               : cd(0.0, -1.0 / std::sqrt(double(-m)));
}

cd s_table(int m, int n) {
  if (m > 0 && n > 0) return cd(0.0, -1.0);
  if (m < 0 && n < 0) return cd(0.0, 1.0);
  return cd(1.0, 0.0);
}

}  // namespace

ActionCoeffs action_coeffs(const DiffeoSpec& psi, int m, const QuadratureGrid& grid,
                           const ModeWindow& window) {
  window.check_index(m);
  const int M = grid.M;
  const int N = window.N();
  if (M < 8 * N)
    throw std::invalid_argument("action_coeffs: grid must satisfy M >= 8N");
  std::vector<cd> g(M);
  for (int j = 0; j < M; ++j) {
    const double theta = kTwoPi * j / M;
    const double phi = psi.invert(theta);
    g[j] = std::polar(1.0, m * phi);
  }
  const std::vector<cd> c = dft_forward(g);

  double total = 0.0, tail = 0.0;
  for (int n = -M / 2; n < M / 2; ++n) {
    const double e = std::norm(c[(n % M + M) % M]);
    total += e;
    if (std::abs(n) > N / 2.0) tail += e;
  }
  const double ratio = total > 0.0 ? tail / total : 0.0;

  CoeffVec out(window, Basis::Hat);
  for (int n : window.indices()) out.at(n) = c[(n % M + M) % M];
  return ActionCoeffs{out, ratio > 1e-6, ratio};
}

TruncOp embed(const DiffeoSpec& psi, const ModeWindow& window,
              const QuadratureGrid& grid, int threads) {
  TruncOp phi(window);
  const std::vector<int> cols = window.indices();
  auto fill = [&](size_t lo, size_t hi) {
    for (size_t i = lo; i < hi; ++i) {
      const int m = cols[i];
      ActionCoeffs ac = action_coeffs(psi, m, grid, window);
      CoeffVec col = ac.coeffs;
      const cd gm = gamma_factor(m);
      for (int n : window.indices()) col.at(n) *= gm;
      const CoeffVec tl = to_tilde(col);
      for (int n : window.indices()) phi.at(n, m) = tl.at(n);
    }
  };
  if (threads <= 1) {
    fill(0, cols.size());
  } else {
    std::vector<std::thread> pool;
    const size_t chunk = (cols.size() + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const size_t lo = std::min(cols.size(), t * chunk);
      const size_t hi = std::min(cols.size(), lo + chunk);
      if (lo < hi) pool.emplace_back(fill, lo, hi);
    }
    for (auto& th : pool) th.join();
  }
  return phi;
}

TruncOp vf_generator(VfKind kind, int l, const ModeWindow& window) {
  if (l < 0) throw std::invalid_argument("vf_generator: order must be >= 0");
  if (kind == VfKind::Sin && l < 1)
    throw std::invalid_argument("vf_generator: sin generator requires l >= 1");
  TruncOp out(window);
  for (int m : window.indices())
    for (int n : window.indices()) {
      const double d1 = (m - n == l) ? 1.0 : 0.0;
      const double d2 = (n - m == l) ? 1.0 : 0.0;
      if (d1 == 0.0 && d2 == 0.0) continue;
      const double base = 0.5 * std::sqrt(double(std::abs(m)) * std::abs(n));
      if (kind == VfKind::Cos)
        out.at(m, n) = s_table(m, n) * base * (d1 + d2);
      else
        out.at(m, n) = s_table(m, n) * cd(0.0, -1.0) * base * (d1 - d2);
    }
  return out;
}

TruncOp witness_not_surjective(const ModeWindow& window) {
  TruncOp a = TruncOp::identity(window);
  a.at(1, 1) = std::sqrt(2.0);
  a.at(-1, -1) = std::sqrt(2.0);
  a.at(1, -1) = cd(0.0, 1.0);
  a.at(-1, 1) = cd(0.0, -1.0);
  return a;
}

std::vector<cd> image_curve(const TruncOp& a, int n, int samples) {
  a.window.check_index(n);
  std::vector<cd> out(samples);
  for (int j = 0; j < samples; ++j) {
    const double theta = kTwoPi * j / samples;
    cd z = 0.0;
    for (int m : a.window.indices()) {
      // tilde basis function e~_m(theta)
      const cd em = m > 0 ? std::polar(1.0 / std::sqrt(double(m)), m * theta)
                          : cd(0.0, -1.0) * std::polar(1.0 / std::sqrt(double(-m)),
                                                       m * theta);
      z += a.at(m, n) * em;
    }
    out[j] = z;
  }
  return out;
}

CircleFit fit_circle(const std::vector<cd>& pts) {
  // Kasa algebraic fit: minimize sum (|z|^2 - 2 cx x - 2 cy y - t)^2
  double sxx = 0, sxy = 0, syy = 0, sx = 0, sy = 0, s1 = double(pts.size());
  double sxz = 0, syz = 0, sz = 0;
  for (const cd& p : pts) {
    const double x = p.real(), y = p.imag(), z = x * x + y * y;
    sxx += x * x; sxy += x * y; syy += y * y;
    sx += x; sy += y;
    sxz += x * z; syz += y * z; sz += z;
  }
  Eigen::Matrix3d A;
  A << 2 * sxx, 2 * sxy, sx,
       2 * sxy, 2 * syy, sy,
       2 * sx,  2 * sy,  s1;
  Eigen::Vector3d b(sxz, syz, sz);
  const Eigen::Vector3d sol = A.fullPivLu().solve(b);
  const cd c(sol(0), sol(1));
  const double r2 = sol(2) + std::norm(c);
  const double r = r2 > 0.0 ? std::sqrt(r2) : 0.0;
  double dev = 0.0;
  for (const cd& p : pts) dev = std::max(dev, std::abs(std::abs(p - c) - r));
  return CircleFit{c, r, dev};
}

}  // namespace spinf
