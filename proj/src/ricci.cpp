#include "spinf/ricci.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <thread>

namespace spinf {

XiCombo combo_add(const XiCombo& x, const XiCombo& y, double s) {
  XiCombo out = x;
  for (const auto& [k, v] : y) {
    const double nv = (out[k] += s * v);
    if (nv == 0.0) out.erase(k);
  }
  return out;
}

XiCombo combo_scale(const XiCombo& x, double s) {
  XiCombo out;
  if (s == 0.0) return out;
  for (const auto& [k, v] : x) out[k] = s * v;
  return out;
}

double combo_dot(const XiCombo& x, const XiCombo& y) {
  const XiCombo& small = x.size() <= y.size() ? x : y;
  const XiCombo& big = x.size() <= y.size() ? y : x;
  double acc = 0.0;
  for (const auto& [k, v] : small) {
    auto it = big.find(k);
    if (it != big.end()) acc += v * it->second;
  }
  return acc;
}

double combo_norm(const XiCombo& x) { return std::sqrt(combo_dot(x, x)); }

namespace {

struct Term {
  int cond;           // 0: b==c, 1: d==a, 2: c==a, 3: d==b
  char lam;           // which lambda^2: 'a','b','c','d'
  char out0, out1;    // output key indices
};

// shared six-term shape; per-type signs below
constexpr Term kTerms[6] = {
    {0, 'c', 'a', 'd'}, {1, 'a', 'c', 'b'}, {2, 'd', 'd', 'b'},
    {3, 'c', 'a', 'c'}, {3, 'a', 'c', 'a'}, {2, 'b', 'b', 'd'},
};

constexpr int kSignRR[6] = {+1, -1, -1, +1, +1, -1};
constexpr int kSignII[6] = {-1, +1, -1, +1, +1, -1};
constexpr int kSignRI[6] = {+1, -1, +1, -1, +1, -1};
constexpr int kSignIR[6] = {+1, -1, -1, +1, -1, +1};

void nabla_basis_accum(int a, int b, Part pa, int c, int d, Part pc, double coeff,
                       const LambdaSeq& lambda, XiCombo& out) {
  const int* sign;
  Part op;
  if (pa == Part::Re && pc == Part::Re) { sign = kSignRR; op = Part::Re; }
  else if (pa == Part::Im && pc == Part::Im) { sign = kSignII; op = Part::Re; }
  else if (pa == Part::Re && pc == Part::Im) { sign = kSignRI; op = Part::Im; }
  else { sign = kSignIR; op = Part::Im; }

  const bool conds[4] = {b == c, d == a, c == a, d == b};
  const int env[4] = {a, b, c, d};
  auto idx_of = [&](char ch) { return env[ch - 'a']; };
  for (int t = 0; t < 6; ++t) {
    if (!conds[kTerms[t].cond]) continue;
    const double l = lambda.at(idx_of(kTerms[t].lam));
    const XiKey key{idx_of(kTerms[t].out0), idx_of(kTerms[t].out1), op};
    const double v = coeff * sign[t] * l * l;
    if (v == 0.0) continue;
    auto it = out.find(key);
    if (it == out.end()) out[key] = v;
    else if ((it->second += v) == 0.0) out.erase(it);
  }
}

}  // namespace

XiCombo nabla(const XiCombo& x, const XiCombo& y, const LambdaSeq& lambda) {
  XiCombo out;
  for (const auto& [kx, vx] : x)
    for (const auto& [ky, vy] : y)
      nabla_basis_accum(kx.a, kx.b, kx.part, ky.a, ky.b, ky.part, vx * vy, lambda, out);
  return out;
}

XiCombo bracket_combo(const XiCombo& x, const XiCombo& y, const LambdaSeq& lambda) {
  // commutator of the underlying matrices; xi_ab = 2 l_a l_b e_ab
  std::map<std::pair<int, int>, cd> mx, my;
  auto to_mat = [&](const XiCombo& c, std::map<std::pair<int, int>, cd>& m) {
    for (const auto& [k, v] : c) {
      const cd f = (k.part == Part::Re ? cd(1, 0) : cd(0, 1)) * 2.0 * lambda.at(k.a) *
                   lambda.at(k.b) * v;
      m[{k.a, k.b}] += f;
    }
  };
  to_mat(x, mx);
  to_mat(y, my);
  std::map<std::pair<int, int>, cd> comm;
  for (const auto& [ka, va] : mx)
    for (const auto& [kb, vb] : my) {
      if (ka.second == kb.first) comm[{ka.first, kb.second}] += va * vb;
      if (kb.second == ka.first) comm[{kb.first, ka.second}] -= vb * va;
    }
  XiCombo out;
  for (const auto& [k, v] : comm) {
    const double den = 2.0 * lambda.at(k.first) * lambda.at(k.second);
    if (v.real() != 0.0) out[{k.first, k.second, Part::Re}] = v.real() / den;
    if (v.imag() != 0.0) out[{k.first, k.second, Part::Im}] = v.imag() / den;
  }
  return out;
}

XiCombo nabla_oracle(const XiCombo& x, const XiCombo& y, const LambdaSeq& lambda,
                     const std::vector<int>& index_set) {
  std::set<int> have(index_set.begin(), index_set.end());
  for (const XiCombo* c : {&x, &y})
    for (const auto& [k, v] : *c) {
      (void)v;
      for (int i : {k.a, k.b, -k.a, -k.b})
        if (!have.count(i))
          throw std::invalid_argument("nabla_oracle: index_set too small");
    }
  const XiCombo bxy = bracket_combo(x, y, lambda);
  XiCombo out;
  for (int c : index_set)
    for (int d : index_set)
      for (Part p : {Part::Re, Part::Im}) {
        XiCombo z{{XiKey{c, d, p}, 1.0}};
        const double v =
            0.5 * (combo_dot(bxy, z) - combo_dot(bracket_combo(y, z, lambda), x) +
                   combo_dot(bracket_combo(z, x, lambda), y));
        if (v != 0.0) out[{c, d, p}] = v;
      }
  return out;
}

XiCombo riemann(const XiCombo& x, const XiCombo& y, const XiCombo& z,
                const LambdaSeq& lambda) {
  const XiCombo bxy = bracket_combo(x, y, lambda);
  XiCombo r = nabla(bxy, z, lambda);
  r = combo_add(r, nabla(x, nabla(y, z, lambda), lambda), -1.0);
  r = combo_add(r, nabla(y, nabla(x, z, lambda), lambda), +1.0);
  return r;
}

double sectional(const XiCombo& x, const XiCombo& y, const LambdaSeq& lambda) {
  return combo_dot(riemann(x, y, x, lambda), y);
}

XiCombo label_combo(const BasisLabel& label, bool unit) {
  validate_label(label);
  const int a = label.a, b = label.b;
  XiCombo c;
  auto add = [&](int p, int q, Part part, double v) {
    const XiKey k{p, q, part};
    if ((c[k] += v) == 0.0) c.erase(k);
  };
  switch (label.kind) {
    case LabelKind::MuRe:
      add(a, b, Part::Re, 0.5); add(b, a, Part::Re, -0.5);
      add(-a, -b, Part::Re, 0.5); add(-b, -a, Part::Re, -0.5);
      break;
    case LabelKind::MuIm:
      add(a, b, Part::Im, 0.5); add(b, a, Part::Im, 0.5);
      add(-a, -b, Part::Im, -0.5); add(-b, -a, Part::Im, -0.5);
      break;
    case LabelKind::NuRe:
      add(a, b, Part::Re, 0.5); add(-b, -a, Part::Re, 0.5);
      add(-a, -b, Part::Re, 0.5); add(b, a, Part::Re, 0.5);
      break;
    case LabelKind::NuIm:
      add(a, b, Part::Im, 0.5); add(-b, -a, Part::Im, 0.5);
      add(-a, -b, Part::Im, -0.5); add(b, a, Part::Im, -0.5);
      break;
  }
  if (unit && !c.empty()) c = combo_scale(c, 1.0 / combo_norm(c));
  return c;
}

double ricci_truncated(const BasisLabel& label, const LambdaSeq& lambda, int N) {
  if (std::abs(label.a) > N || std::abs(label.b) > N)
    throw std::invalid_argument("ricci_truncated: label indices exceed N");
  const XiCombo x = label_combo(label, true);
  double acc = 0.0;
  // deterministic reduction: canonical label order
  for (const BasisLabel& l : canonical_labels(N)) {
    const XiCombo y = label_combo(l, true);
    acc += sectional(x, y, lambda);
  }
  return acc;
}

namespace {
double s2(const LambdaSeq& lam, int lo, int hi) {
  double acc = 0.0;
  for (int i = lo; i <= hi; ++i) acc += lam.at(i) * lam.at(i);
  return acc;
}
double s4(const LambdaSeq& lam, int lo, int hi) {
  double acc = 0.0;
  for (int i = lo; i <= hi; ++i) acc += std::pow(lam.at(i), 4);
  return acc;
}
}  // namespace

double ricci_closed_form(const BasisLabel& label, const LambdaSeq& lambda, int N) {
  const int A = std::abs(label.a), B = std::abs(label.b);
  if (A > N || B > N)
    throw std::invalid_argument("ricci_closed_form: label indices exceed N");
  const double la = lambda.at(A), lb = lambda.at(B);
  const double la2 = la * la, lb2 = lb * lb, la4 = la2 * la2, lb4 = lb2 * lb2;

  if (label.kind == LabelKind::MuIm && A == B) return 0.0;
  if (label.kind == LabelKind::NuIm && A == B) return 0.0;
  if (label.kind == LabelKind::NuRe && A == B)
    return (1.0 / 16.0) * (-192.0 * la4 - 32.0 * s4(lambda, 1, A - 1) -
                           192.0 * N * la4 - 32.0 * s4(lambda, A + 1, N));
  if (label.kind == LabelKind::MuRe)
    return (1.0 / 16.0) *
           (-24.0 * la4 - 24.0 * lb4 + 48.0 * la2 * lb2 -
            12.0 * la2 * s2(lambda, 1, A - 1) + 8.0 * la2 * s2(lambda, 1, B - 1) +
            8.0 * lb2 * s2(lambda, 1, A - 1) - 12.0 * lb2 * s2(lambda, 1, B - 1) +
            8.0 * s4(lambda, 1, A - 1) + 8.0 * s4(lambda, 1, B - 1) -
            16.0 * N * la4 - 16.0 * N * lb4 - 12.0 * la2 * s2(lambda, A + 1, N) +
            8.0 * la2 * s2(lambda, B + 1, N) + 8.0 * lb2 * s2(lambda, A + 1, N) -
            12.0 * lb2 * s2(lambda, B + 1, N) + 8.0 * s4(lambda, A + 1, N) +
            8.0 * s4(lambda, B + 1, N));
  // muIm (a>b), nuRe (a>-b), nuIm (a>-b) share the shape; only the cross term differs
  const double cross = label.kind == LabelKind::NuRe ? -48.0 : -32.0;
  return (1.0 / 16.0) *
         (-40.0 * la4 - 40.0 * lb4 + cross * la2 * lb2 -
          12.0 * la2 * s2(lambda, 1, A - 1) - 8.0 * la2 * s2(lambda, 1, B - 1) -
          8.0 * lb2 * s2(lambda, 1, A - 1) - 12.0 * lb2 * s2(lambda, 1, B - 1) +
          8.0 * s4(lambda, 1, A - 1) + 8.0 * s4(lambda, 1, B - 1) -
          16.0 * N * la4 - 16.0 * N * lb4 - 12.0 * la2 * s2(lambda, A + 1, N) -
          8.0 * la2 * s2(lambda, B + 1, N) - 8.0 * lb2 * s2(lambda, A + 1, N) -
          12.0 * lb2 * s2(lambda, B + 1, N) + 8.0 * s4(lambda, A + 1, N) +
          8.0 * s4(lambda, B + 1, N));
}

std::vector<CurvatureReport> curvature_report(const std::vector<BasisLabel>& labels,
                                              const LambdaSeq& lambda, int N,
                                              int threads) {
  std::vector<CurvatureReport> out(labels.size());
  auto work = [&](size_t lo, size_t hi) {
    for (size_t i = lo; i < hi; ++i) {
      const double brute = ricci_truncated(labels[i], lambda, N);
      const double closed = ricci_closed_form(labels[i], lambda, N);
      out[i] = CurvatureReport{labels[i], N, brute, closed, std::abs(brute - closed)};
    }
  };
  if (threads <= 1 || labels.size() < 2) {
    work(0, labels.size());
  } else {
    std::vector<std::thread> pool;
    const size_t chunk = (labels.size() + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const size_t lo = std::min(labels.size(), size_t(t) * chunk);
      const size_t hi = std::min(labels.size(), lo + chunk);
      if (lo < hi) pool.emplace_back(work, lo, hi);
    }
    for (auto& th : pool) th.join();
  }
  return out;
}

}  // namespace spinf
