#pragma once

#include <iosfwd>

#include <Eigen/Dense>

#include "spinf/fourier.hpp"
#include "spinf/window.hpp"

namespace spinf {

// Dense truncated operator in the tilde basis: entry(m,n) = (A e_n, e_m)_omega
// with m,n running over the window.
struct TruncOp {
  ModeWindow window;
  Eigen::MatrixXcd entries;

  explicit TruncOp(ModeWindow w)
      : window(w), entries(Eigen::MatrixXcd::Zero(w.size(), w.size())) {}

  cd& at(int m, int n) { return entries(window.slot(m), window.slot(n)); }
  cd at(int m, int n) const { return entries(window.slot(m), window.slot(n)); }

  static TruncOp identity(ModeWindow w) {
    TruncOp a(w);
    a.entries.setIdentity();
    return a;
  }
};

TruncOp operator*(const TruncOp& a, const TruncOp& b);
TruncOp operator+(const TruncOp& a, const TruncOp& b);
TruncOp operator-(const TruncOp& a, const TruncOp& b);

// Unary operations: (conj A)_{m,n} = conj(A_{-m,-n}); (A^dag)_{m,n} = conj(A_{n,m});
// (A^T)_{m,n} = A_{-n,-m}; (A^#)_{m,n} = sgn(mn) A_{-n,-m}.
TruncOp conj_op(const TruncOp& a);
TruncOp dagger(const TruncOp& a);
TruncOp transpose(const TruncOp& a);
TruncOp sharp(const TruncOp& a);

enum class Quadrant { a, b, c, d };

// Block compression: a = (m>0,n>0), b = (m>0,n<0), c = (m<0,n>0), d = (m<0,n<0);
// rows/cols of the returned N x N block are ordered by ascending |index|.
Eigen::MatrixXcd block(const TruncOp& a, Quadrant q);

// Hilbert-Schmidt norm of the b block.
double norm2(const TruncOp& a);

// Apply to a tilde-basis coefficient vector.
CoeffVec apply(const TruncOp& a, const CoeffVec& u);

// Symplectic-group membership predicates (finite-window checks). The default
// tolerance suits algebraically exact inputs; embedded diffeomorphisms carry
// truncation error and need a caller-chosen tolerance.
bool is_real(const TruncOp& a, double tol = 1e-10);
bool preserves_omega(const TruncOp& a, double tol = 1e-10);
bool invertible_symplectic(const TruncOp& a, double tol = 1e-10);
bool in_sp_group(const TruncOp& a, double tol = 1e-10);

// Residuals backing the predicates.
double is_real_residual(const TruncOp& a);
double preserves_omega_residual(const TruncOp& a, int index_bound = 0);
double invertible_symplectic_residual(const TruncOp& a);
double sp_group_residual(const TruncOp& a);

// Largest entry magnitude of A restricted to |m|,|n| <= bound (0 = full window).
double inf_norm(const TruncOp& a, int index_bound = 0);

// Operator-norm estimate by power iteration on A^dag A (diagnostics).
double op_norm_estimate(const TruncOp& a, int iters = 100, double rel_tol = 1e-6);

// CSV round-trip, header "m,n,re,im", 17 significant digits.
void write_csv(const TruncOp& a, std::ostream& os);
TruncOp read_csv(std::istream& is);

}  // namespace spinf
