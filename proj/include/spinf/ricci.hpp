#pragma once

#include <map>
#include <vector>

#include "spinf/sp_algebra.hpp"

namespace spinf {

enum class Part { Re, Im };  // Re denotes xi_ab, Im denotes i xi_ab

struct XiKey {
  int a, b;
  Part part;
  bool operator<(const XiKey& o) const {
    if (a != o.a) return a < o.a;
    if (b != o.b) return b < o.b;
    return part < o.part;
  }
  bool operator==(const XiKey& o) const {
    return a == o.a && b == o.b && part == o.part;
  }
};

// Sparse real-coefficient combination of the basis tensors xi_ab and i xi_ab.
using XiCombo = std::map<XiKey, double>;

XiCombo combo_add(const XiCombo& x, const XiCombo& y, double s = 1.0);
XiCombo combo_scale(const XiCombo& x, double s);
double combo_dot(const XiCombo& x, const XiCombo& y);
double combo_norm(const XiCombo& x);

// Levi-Civita connection via the closed six-term basis formulas, extended
// bilinearly. No index escapes the inputs' index set.
XiCombo nabla(const XiCombo& x, const XiCombo& y, const LambdaSeq& lambda);

// Independent reconstruction of nabla from the Koszul formula
// <nabla_x y, z> = (1/2)(<[x,y],z> - <[y,z],x> + <[z,x],y>), pairing against
// every xi_cd / i xi_cd with c,d in index_set.
XiCombo nabla_oracle(const XiCombo& x, const XiCombo& y, const LambdaSeq& lambda,
                     const std::vector<int>& index_set);

// Lie bracket as matrix commutator, re-decomposed into a XiCombo.
XiCombo bracket_combo(const XiCombo& x, const XiCombo& y, const LambdaSeq& lambda);

// R_{xy} z = nabla_{[x,y]} z - nabla_x nabla_y z + nabla_y nabla_x z
XiCombo riemann(const XiCombo& x, const XiCombo& y, const XiCombo& z,
                const LambdaSeq& lambda);

// K(x,y) = <R_{xy}(x), y>
double sectional(const XiCombo& x, const XiCombo& y, const LambdaSeq& lambda);

// Unit-normalized XiCombo of a canonical basis label.
XiCombo label_combo(const BasisLabel& label, bool unit = true);

// Truncated Ricci curvature: brute-force sum of sectional curvatures over the
// four N-bounded label families.
double ricci_truncated(const BasisLabel& label, const LambdaSeq& lambda, int N);

// The closed-form expressions of the curvature theorem.
double ricci_closed_form(const BasisLabel& label, const LambdaSeq& lambda, int N);

struct CurvatureReport {
  BasisLabel label;
  int N;
  double brute;
  double closed_form;
  double abs_diff;
};

std::vector<CurvatureReport> curvature_report(const std::vector<BasisLabel>& labels,
                                              const LambdaSeq& lambda, int N,
                                              int threads = 1);

}  // namespace spinf
