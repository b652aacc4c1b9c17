#pragma once

#include <cstdint>
#include <optional>

#include "spinf/sp_algebra.hpp"

namespace spinf {

// SplitMix64 stream; per-path streams are derived by hashing (seed, path).
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t path_index);
  std::uint64_t next_u64();
  double next_unit();    // (0,1]
  double next_normal();  // standard normal, Box-Muller

 private:
  std::uint64_t state_;
  std::optional<double> spare_;
};

struct SimConfig {
  int N = 8;
  double dt = 1e-3;
  double T = 1.0;
  int paths = 1;
  std::uint64_t seed = 0;
  CovSpec Q = CovSpec::zero();
  int record_every = 1;
  bool project = false;  // optional renormalization step, off by default
  int threads = 1;
};

struct PathRecord {
  int path = 0;
  std::vector<double> times;
  std::vector<double> residuals;
  std::vector<double> norm2s;
  Eigen::MatrixXcd terminal;  // group-displacement state Y (not in sp)
  bool flagged = false;       // overflow/NaN detected; path aborted
};

// Prebuilt canonical unit basis with covariance weights, shared across paths.
struct IncrementBasis {
  ModeWindow window;
  std::vector<SpElem> elements;   // unit-normalized, canonical label order
  std::vector<double> variances;  // Q(label)

  IncrementBasis(const CovSpec& q, const ModeWindow& w);
};

// dW = sum_labels sqrt(Q dt) g_label xi_label; satisfies the sp symmetries exactly.
SpElem sample_increment(const IncrementBasis& basis, double dt, RngStream& rng);

// Euler-Maruyama step on the Ito form: Y' = Y + (I+Y) dW + (1/2)(I+Y) D dt.
Eigen::MatrixXcd em_step(const Eigen::MatrixXcd& y, const SpElem& dw,
                         const std::vector<double>& d, double dt);

// || (Y+I)(Y#+I) - I ||_F
double group_residual(const Eigen::MatrixXcd& y, const ModeWindow& window);

std::vector<PathRecord> simulate(const SimConfig& config);

}  // namespace spinf
