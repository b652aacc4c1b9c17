#include "spinf/brownian.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <thread>

namespace spinf {

namespace {
std::uint64_t splitmix_next(std::uint64_t& s) {
  s += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Eigen::MatrixXcd sharp_dense(const Eigen::MatrixXcd& a, const ModeWindow& w) {
  Eigen::MatrixXcd out(a.rows(), a.cols());
  for (int m : w.indices())
    for (int n : w.indices())
      out(w.slot(m), w.slot(n)) =
          double(sgn(m) * sgn(n)) * a(w.slot(-n), w.slot(-m));
  return out;
}
}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t path_index) {
  // hash(seed, path): run the seed through two rounds keyed by the path index
  std::uint64_t s = seed ^ (0x9E3779B97F4A7C15ULL * (path_index + 1));
  splitmix_next(s);
  splitmix_next(s);
  state_ = s;
}

std::uint64_t RngStream::next_u64() { return splitmix_next(state_); }

double RngStream::next_unit() {
  return (double(next_u64() >> 11) + 1.0) * 0x1.0p-53;
}

double RngStream::next_normal() {
  if (spare_) {
    const double v = *spare_;
    spare_.reset();
    return v;
  }
  const double u1 = next_unit();
  const double u2 = next_unit();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double phi = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(phi);
  return r * std::cos(phi);
}

IncrementBasis::IncrementBasis(const CovSpec& q, const ModeWindow& w) : window(w) {
  const LambdaSeq lam = LambdaSeq::uniform(w.N(), 1.0 / std::sqrt(2.0));
  for (const BasisLabel& l : canonical_labels(w.N())) {
    const double v = q.value(l);
    if (v == 0.0) continue;
    elements.push_back(unit_basis_element(l, lam, w));
    variances.push_back(v);
  }
}

SpElem sample_increment(const IncrementBasis& basis, double dt, RngStream& rng) {
  if (!(dt > 0.0)) throw std::invalid_argument("sample_increment: dt must be > 0");
  SpElem dw(basis.window);
  for (size_t i = 0; i < basis.elements.size(); ++i) {
    const double g = rng.next_normal();
    const double c = std::sqrt(basis.variances[i] * dt) * g;
    for (const auto& [key, v] : basis.elements[i].entries)
      dw.add(key.first, key.second, c * v);
  }
  return dw;
}

Eigen::MatrixXcd em_step(const Eigen::MatrixXcd& y, const SpElem& dw,
                         const std::vector<double>& d, double dt) {
  const auto n = y.rows();
  Eigen::MatrixXcd ipy = y;
  for (Eigen::Index i = 0; i < n; ++i) ipy(i, i) += 1.0;
  Eigen::MatrixXcd out = y;
  // (I+Y) dW, exploiting dW sparsity column-wise
  const ModeWindow& w = dw.window;
  for (const auto& [key, v] : dw.entries)
    out.col(w.slot(key.second)) += ipy.col(w.slot(key.first)) * v;
  // (1/2)(I+Y) D dt with D diagonal
  for (Eigen::Index j = 0; j < n; ++j)
    out.col(j) += 0.5 * dt * d[size_t(j)] * ipy.col(j);
  return out;
}

double group_residual(const Eigen::MatrixXcd& y, const ModeWindow& window) {
  const auto n = y.rows();
  Eigen::MatrixXcd a = y;
  for (Eigen::Index i = 0; i < n; ++i) a(i, i) += 1.0;
  Eigen::MatrixXcd b = sharp_dense(y, window);
  for (Eigen::Index i = 0; i < n; ++i) b(i, i) += 1.0;
  Eigen::MatrixXcd g = a * b;
  for (Eigen::Index i = 0; i < n; ++i) g(i, i) -= 1.0;
  return g.norm();
}

std::vector<PathRecord> simulate(const SimConfig& config) {
  if (config.N < 2) throw std::invalid_argument("simulate: N must be >= 2");
  if (!(config.dt > 0.0) || !(config.dt <= config.T))
    throw std::invalid_argument("simulate: need 0 < dt <= T");
  if (config.paths < 1) throw std::invalid_argument("simulate: paths must be >= 1");
  const ModeWindow window(config.N);
  const IncrementBasis basis(config.Q, window);
  const std::vector<double> d = drift_matrix(config.Q, window);
  // Lemma Sum_xi is exactly what cancels the Ito correction; guard it.
  if (sum_xi_residual(config.Q, window) > 1e-12)
    throw std::runtime_error("simulate: drift/covariance pairing inconsistent");

  const int steps = int(std::llround(config.T / config.dt));
  const int stride = std::max(1, config.record_every);
  const int dim = window.size();

  std::vector<PathRecord> records(size_t(config.paths));
  auto run_path = [&](int p) {
    PathRecord rec;
    rec.path = p;
    RngStream rng(config.seed, std::uint64_t(p));
    Eigen::MatrixXcd y = Eigen::MatrixXcd::Zero(dim, dim);
    for (int s = 1; s <= steps; ++s) {
      const SpElem dw = sample_increment(basis, config.dt, rng);
      y = em_step(y, dw, d, config.dt);
      if (!y.allFinite()) {
        rec.flagged = true;
        break;
      }
      if (config.project) {
        // one Newton step toward (Y+I)(Y#+I) = I
        const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim, dim);
        const Eigen::MatrixXcd a = y + id;
        const Eigen::MatrixXcd e = a * (sharp_dense(y, window) + id) - id;
        y = (a - 0.5 * e * a) - id;
      }
      if (s % stride == 0 || s == steps) {
        rec.times.push_back(s * config.dt);
        rec.residuals.push_back(group_residual(y, window));
        TruncOp t(window);
        t.entries = y;
        rec.norm2s.push_back(norm2(t));
      }
    }
    rec.terminal = y;
    records[size_t(p)] = std::move(rec);
  };

  if (config.threads <= 1) {
    for (int p = 0; p < config.paths; ++p) run_path(p);
  } else {
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int t = 0; t < config.threads; ++t)
      pool.emplace_back([&] {
        for (int p = next.fetch_add(1); p < config.paths; p = next.fetch_add(1))
          run_path(p);
      });
    for (auto& th : pool) th.join();
  }
  return records;
}

}  // namespace spinf
