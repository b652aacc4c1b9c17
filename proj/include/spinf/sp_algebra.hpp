#pragma once

#include <cstdlib>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "spinf/op_algebra.hpp"

namespace spinf {

// Metric parameters lambda_i > 0 with lambda_{-i} = lambda_i.
class LambdaSeq {
 public:
  LambdaSeq(int N, std::vector<double> values);
  static LambdaSeq uniform(int N, double value);
  static LambdaSeq power(int N, double p);  // lambda_i = i^{-p/2}

  int N() const { return int(values_.size()); }
  double at(int i) const { return values_[size_t(std::abs(i)) - 1]; }

 private:
  std::vector<double> values_;
};

enum class LabelKind { MuRe, MuIm, NuRe, NuIm };

std::string kind_name(LabelKind k);
LabelKind kind_from_name(const std::string& s);

// Canonical basis label; mu kinds have b > 0, nu kinds have b < 0.
// Constraints: muRe a > b > 0; muIm a >= b > 0; nuRe/nuIm a >= -b > 0.
struct BasisLabel {
  LabelKind kind;
  int a, b;

  bool operator<(const BasisLabel& o) const {
    if (kind != o.kind) return kind < o.kind;
    if (a != o.a) return a < o.a;
    return b < o.b;
  }
  bool operator==(const BasisLabel& o) const {
    return kind == o.kind && a == o.a && b == o.b;
  }
};

void validate_label(const BasisLabel& l);

// Sparse sp(infinity) element: A = conj-reflected and A + A# = 0.
struct SpElem {
  ModeWindow window;
  std::map<std::pair<int, int>, cd> entries;

  explicit SpElem(ModeWindow w) : window(w) {}

  void add(int m, int n, cd v);
  cd at(int m, int n) const;
  TruncOp dense() const;
};

SpElem operator+(const SpElem& x, const SpElem& y);
SpElem operator*(double s, const SpElem& x);

// max violation of the two SpElem invariants
double sp_check_residual(const SpElem& x);
bool sp_check(const SpElem& x, double tol);

// The literal four-term matrix of the label (diagonal-type labels come out
// with metric norm sqrt(2); see unit_basis_element).
SpElem basis_element(const BasisLabel& label, const LambdaSeq& lambda,
                     const ModeWindow& window);

// basis_element normalized to unit inner_lambda norm; the canonical
// enumeration below is orthonormal.
SpElem unit_basis_element(const BasisLabel& label, const LambdaSeq& lambda,
                          const ModeWindow& window);

// Deterministic canonical label enumeration with indices <= N.
std::vector<BasisLabel> canonical_labels(int N);

// Orthogonal projection of a dense matrix onto the sp subspace
// (idempotent; orthogonal w.r.t. inner_lambda at any lambda).
SpElem project_sp(const TruncOp& m);

// Matrix commutator xy - yx (sparse).
SpElem bracket(const SpElem& x, const SpElem& y);

// Real inner product in which {xi_ab, i xi_ab} is orthonormal:
// sum [Re x Re y + Im x Im y] / (4 lambda_m^2 lambda_n^2).
double inner_lambda(const SpElem& x, const SpElem& y, const LambdaSeq& lambda);
double inner_lambda(const TruncOp& x, const TruncOp& y, const LambdaSeq& lambda);

// Covariance on canonical labels.
class CovSpec {
 public:
  enum class Preset { Zero, Uniform, Power, Explicit };

  static CovSpec zero();
  static CovSpec uniform(double q, int K);  // supported on max(|a|,|b|) <= K
  static CovSpec power(double p);           // Q = (|a| |b|)^{-p}
  static CovSpec explicit_weights(std::map<BasisLabel, double> w);

  double value(const BasisLabel& l) const;
  Preset preset() const { return preset_; }
  double param_q() const { return q_; }
  int param_K() const { return K_; }
  double param_p() const { return p_; }

  std::string to_json() const;
  static CovSpec from_json(const std::string& text);
  static CovSpec parse(const std::string& text);  // "zero" | "uniform:q,K" | "power:p" | "file:path"

 private:
  Preset preset_ = Preset::Zero;
  double q_ = 0.0, p_ = 0.0;
  int K_ = 0;
  std::map<BasisLabel, double> weights_;
};

// Diagonal drift matrix D (one value per window index, D_{-m} = D_m):
// D_m = -(1/4) sgn(m) sum_k sgn(k) [Q^Re_mk + Q^Im_mk], where Q^kind_mk is the
// weight of the canonical label of that kind containing (m,k); at k = m both
// kinds read the muIm(m,m) weight, and at k = -m the nu weights count twice.
// This is the reading under which Lemma Sum_xi is exact (see sum_xi_residual).
std::vector<double> drift_matrix(const CovSpec& q, const ModeWindow& window);

// max-entry deviation of sum_labels Q(l) xi xi^# from -D over the window.
double sum_xi_residual(const CovSpec& q, const ModeWindow& window);

}  // namespace spinf
