#include "spinf/op_algebra.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace spinf {

namespace {
void check_same(const TruncOp& a, const TruncOp& b) {
  if (a.window != b.window) throw std::invalid_argument("TruncOp: window mismatch");
}
}  // namespace

TruncOp operator*(const TruncOp& a, const TruncOp& b) {
  check_same(a, b);
  TruncOp out(a.window);
  out.entries = a.entries * b.entries;
  return out;
}

TruncOp operator+(const TruncOp& a, const TruncOp& b) {
  check_same(a, b);
  TruncOp out(a.window);
  out.entries = a.entries + b.entries;
  return out;
}

TruncOp operator-(const TruncOp& a, const TruncOp& b) {
  check_same(a, b);
  TruncOp out(a.window);
  out.entries = a.entries - b.entries;
  return out;
}

TruncOp conj_op(const TruncOp& a) {
  TruncOp out(a.window);
  for (int m : a.window.indices())
    for (int n : a.window.indices()) out.at(m, n) = std::conj(a.at(-m, -n));
  return out;
}

TruncOp dagger(const TruncOp& a) {
  TruncOp out(a.window);
  out.entries = a.entries.adjoint();
  return out;
}

TruncOp transpose(const TruncOp& a) {
  TruncOp out(a.window);
  for (int m : a.window.indices())
    for (int n : a.window.indices()) out.at(m, n) = a.at(-n, -m);
  return out;
}

TruncOp sharp(const TruncOp& a) {
  TruncOp out(a.window);
  for (int m : a.window.indices())
    for (int n : a.window.indices())
      out.at(m, n) = double(sgn(m) * sgn(n)) * a.at(-n, -m);
  return out;
}

Eigen::MatrixXcd block(const TruncOp& a, Quadrant q) {
  const int N = a.window.N();
  Eigen::MatrixXcd out(N, N);
  const bool row_pos = (q == Quadrant::a || q == Quadrant::b);
  const bool col_pos = (q == Quadrant::a || q == Quadrant::c);
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j)
      out(i - 1, j - 1) = a.at(row_pos ? i : -i, col_pos ? j : -j);
  return out;
}

double norm2(const TruncOp& a) { return block(a, Quadrant::b).norm(); }

CoeffVec apply(const TruncOp& a, const CoeffVec& u) {
  if (u.basis != Basis::Tilde)
    throw std::invalid_argument("apply: coefficient vector must be in the tilde basis");
  if (u.window != a.window) throw std::invalid_argument("apply: window mismatch");
  CoeffVec out(u.window, Basis::Tilde);
  out.values = a.entries * u.values;
  return out;
}

double is_real_residual(const TruncOp& a) {
  double r = 0.0;
  for (int m : a.window.indices())
    for (int n : a.window.indices())
      r = std::max(r, std::abs(a.at(m, n) - std::conj(a.at(-m, -n))));
  return r;
}

double preserves_omega_residual(const TruncOp& a, int index_bound) {
  // Condition (II): sum_k sgn(mk) A_{k,m} conj(A_{k,n}) = delta_{mn}
  const int bound = index_bound > 0 ? index_bound : a.window.N();
  double r = 0.0;
  for (int m : a.window.indices()) {
    if (std::abs(m) > bound) continue;
    for (int n : a.window.indices()) {
      if (std::abs(n) > bound) continue;
      cd s = 0.0;
      for (int k : a.window.indices())
        s += double(sgn(m) * sgn(k)) * a.at(k, m) * std::conj(a.at(k, n));
      if (m == n) s -= 1.0;
      r = std::max(r, std::abs(s));
    }
  }
  return r;
}

double invertible_symplectic_residual(const TruncOp& a) {
  double r = 0.0;
  for (int m : a.window.indices())
    for (int n : a.window.indices()) {
      cd s = 0.0;
      for (int k : a.window.indices())
        s += double(sgn(m) * sgn(k)) * a.at(m, k) * std::conj(a.at(n, k));
      if (m == n) s -= 1.0;
      r = std::max(r, std::abs(s));
    }
  return r;
}

double inf_norm(const TruncOp& a, int index_bound) {
  const int bound = index_bound > 0 ? index_bound : a.window.N();
  double r = 0.0;
  for (int m : a.window.indices()) {
    if (std::abs(m) > bound) continue;
    for (int n : a.window.indices()) {
      if (std::abs(n) > bound) continue;
      r = std::max(r, std::abs(a.at(m, n)));
    }
  }
  return r;
}

double sp_group_residual(const TruncOp& a) {
  const TruncOp sh = sharp(a);
  const TruncOp id = TruncOp::identity(a.window);
  const double r1 = inf_norm(sh * a - id);
  const double r2 = inf_norm(a * sh - id);
  return std::max({is_real_residual(a), r1, r2});
}

bool is_real(const TruncOp& a, double tol) { return is_real_residual(a) <= tol; }
bool preserves_omega(const TruncOp& a, double tol) {
  return preserves_omega_residual(a) <= tol;
}
bool invertible_symplectic(const TruncOp& a, double tol) {
  return invertible_symplectic_residual(a) <= tol;
}
bool in_sp_group(const TruncOp& a, double tol) { return sp_group_residual(a) <= tol; }

double op_norm_estimate(const TruncOp& a, int iters, double rel_tol) {
  const Eigen::MatrixXcd m = a.entries.adjoint() * a.entries;
  Eigen::VectorXcd v = Eigen::VectorXcd::Ones(m.rows());
  v.normalize();
  double prev = 0.0;
  for (int i = 0; i < iters; ++i) {
    v = m * v;
    const double lam = v.norm();
    if (lam == 0.0) return 0.0;
    v /= lam;
    if (i > 0 && std::abs(lam - prev) <= rel_tol * lam) return std::sqrt(lam);
    prev = lam;
  }
  return std::sqrt(prev);
}

void write_csv(const TruncOp& a, std::ostream& os) {
  os << "m,n,re,im\n";
  char buf[128];
  for (int sm = 0; sm < a.window.size(); ++sm)
    for (int sn = 0; sn < a.window.size(); ++sn) {
      std::snprintf(buf, sizeof buf, "%d,%d,%.17g,%.17g\n", a.window.index_at(sm),
                    a.window.index_at(sn), a.entries(sm, sn).real(),
                    a.entries(sm, sn).imag());
      os << buf;
    }
}

TruncOp read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("read_csv: empty input");
  struct Row {
    int m, n;
    double re, im;
  };
  std::vector<Row> rows;
  int maxidx = 0;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    Row r{};
    char* end = nullptr;
    r.m = int(std::strtol(line.c_str(), &end, 10));
    r.n = int(std::strtol(end + 1, &end, 10));
    r.re = std::strtod(end + 1, &end);
    r.im = std::strtod(end + 1, &end);
    rows.push_back(r);
    maxidx = std::max({maxidx, std::abs(r.m), std::abs(r.n)});
  }
  TruncOp out{ModeWindow(maxidx)};
  for (const Row& r : rows) out.at(r.m, r.n) = cd(r.re, r.im);
  return out;
}

}  // namespace spinf
