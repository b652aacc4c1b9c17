#include "spinf/sp_algebra.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace spinf {

LambdaSeq::LambdaSeq(int N, std::vector<double> values) : values_(std::move(values)) {
  if (int(values_.size()) != N)
    throw std::invalid_argument("LambdaSeq: need exactly N values");
  for (double v : values_)
    if (!(v > 0.0)) throw std::invalid_argument("LambdaSeq: values must be positive");
}

LambdaSeq LambdaSeq::uniform(int N, double value) {
  return LambdaSeq(N, std::vector<double>(size_t(N), value));
}

LambdaSeq LambdaSeq::power(int N, double p) {
  std::vector<double> v(static_cast<size_t>(N), 0.0);
  for (int i = 1; i <= N; ++i) v[size_t(i) - 1] = std::pow(double(i), -p / 2.0);
  return LambdaSeq(N, std::move(v));
}

std::string kind_name(LabelKind k) {
  switch (k) {
    case LabelKind::MuRe: return "mu_re";
    case LabelKind::MuIm: return "mu_im";
    case LabelKind::NuRe: return "nu_re";
    case LabelKind::NuIm: return "nu_im";
  }
  return "?";
}

LabelKind kind_from_name(const std::string& s) {
  if (s == "mu_re") return LabelKind::MuRe;
  if (s == "mu_im") return LabelKind::MuIm;
  if (s == "nu_re") return LabelKind::NuRe;
  if (s == "nu_im") return LabelKind::NuIm;
  throw std::invalid_argument("unknown basis label kind: " + s);
}

void validate_label(const BasisLabel& l) {
  switch (l.kind) {
    case LabelKind::MuRe:
      if (!(l.a > l.b && l.b > 0)) throw std::invalid_argument("muRe needs a > b > 0");
      return;
    case LabelKind::MuIm:
      if (!(l.a >= l.b && l.b > 0)) throw std::invalid_argument("muIm needs a >= b > 0");
      return;
    case LabelKind::NuRe:
    case LabelKind::NuIm:
      if (!(l.b < 0 && l.a >= -l.b)) throw std::invalid_argument("nu needs a >= -b > 0");
      return;
  }
}

void SpElem::add(int m, int n, cd v) {
  window.check_index(m);
  window.check_index(n);
  auto key = std::make_pair(m, n);
  auto it = entries.find(key);
  if (it == entries.end()) {
    if (v != cd(0.0, 0.0)) entries.emplace(key, v);
  } else {
    it->second += v;
    if (it->second == cd(0.0, 0.0)) entries.erase(it);
  }
}

cd SpElem::at(int m, int n) const {
  auto it = entries.find({m, n});
  return it == entries.end() ? cd(0.0, 0.0) : it->second;
}

TruncOp SpElem::dense() const {
  TruncOp out(window);
  for (const auto& [key, v] : entries) out.at(key.first, key.second) = v;
  return out;
}

SpElem operator+(const SpElem& x, const SpElem& y) {
  if (x.window != y.window) throw std::invalid_argument("SpElem: window mismatch");
  SpElem out = x;
  for (const auto& [key, v] : y.entries) out.add(key.first, key.second, v);
  return out;
}

SpElem operator*(double s, const SpElem& x) {
  SpElem out(x.window);
  if (s == 0.0) return out;
  for (const auto& [key, v] : x.entries) out.entries[key] = s * v;
  return out;
}

double sp_check_residual(const SpElem& x) {
  double r = 0.0;
  for (const auto& [key, v] : x.entries) {
    const int m = key.first, n = key.second;
    r = std::max(r, std::abs(v - std::conj(x.at(-m, -n))));
    r = std::max(r, std::abs(v + double(sgn(m) * sgn(n)) * x.at(-n, -m)));
  }
  return r;
}

bool sp_check(const SpElem& x, double tol) { return sp_check_residual(x) <= tol; }

SpElem basis_element(const BasisLabel& label, const LambdaSeq& lambda,
                     const ModeWindow& window) {
  validate_label(label);
  const int a = label.a, b = label.b;
  if (!window.contains(a) || !window.contains(b))
    throw std::invalid_argument("basis_element: label outside window");
  const double c = lambda.at(a) * lambda.at(b);
  SpElem x(window);
  switch (label.kind) {
    case LabelKind::MuRe:
      x.add(a, b, c); x.add(b, a, -c); x.add(-a, -b, c); x.add(-b, -a, -c);
      break;
    case LabelKind::MuIm:
      x.add(a, b, cd(0, c)); x.add(b, a, cd(0, c));
      x.add(-a, -b, cd(0, -c)); x.add(-b, -a, cd(0, -c));
      break;
    case LabelKind::NuRe:
      x.add(a, b, c); x.add(-b, -a, c); x.add(-a, -b, c); x.add(b, a, c);
      break;
    case LabelKind::NuIm:
      x.add(a, b, cd(0, c)); x.add(-b, -a, cd(0, c));
      x.add(-a, -b, cd(0, -c)); x.add(b, a, cd(0, -c));
      break;
  }
  return x;
}

SpElem unit_basis_element(const BasisLabel& label, const LambdaSeq& lambda,
                          const ModeWindow& window) {
  SpElem x = basis_element(label, lambda, window);
  const double n = std::sqrt(inner_lambda(x, x, lambda));
  return (1.0 / n) * x;
}

std::vector<BasisLabel> canonical_labels(int N) {
  std::vector<BasisLabel> out;
  for (int a = 1; a <= N; ++a) {
    for (int b = 1; b < a; ++b) out.push_back({LabelKind::MuRe, a, b});
    for (int b = 1; b <= a; ++b) out.push_back({LabelKind::MuIm, a, b});
    for (int b = 1; b <= a; ++b) out.push_back({LabelKind::NuRe, a, -b});
    for (int b = 1; b <= a; ++b) out.push_back({LabelKind::NuIm, a, -b});
  }
  return out;
}

SpElem project_sp(const TruncOp& m) {
  // average over the commuting orthogonal involutions A -> conj-reflect(A)
  // and A -> -A#
  SpElem out(m.window);
  for (int p : m.window.indices())
    for (int q : m.window.indices()) {
      const cd v = 0.25 * (m.at(p, q) + std::conj(m.at(-p, -q)) -
                           double(sgn(p) * sgn(q)) *
                               (m.at(-q, -p) + std::conj(m.at(q, p))));
      if (v != cd(0.0, 0.0)) out.entries[{p, q}] = v;
    }
  return out;
}

SpElem bracket(const SpElem& x, const SpElem& y) {
  if (x.window != y.window) throw std::invalid_argument("bracket: window mismatch");
  SpElem out(x.window);
  for (const auto& [kx, vx] : x.entries)
    for (const auto& [ky, vy] : y.entries) {
      if (kx.second == ky.first) out.add(kx.first, ky.second, vx * vy);
      if (ky.second == kx.first) out.add(ky.first, kx.second, -vy * vx);
    }
  return out;
}

double inner_lambda(const SpElem& x, const SpElem& y, const LambdaSeq& lambda) {
  double acc = 0.0;
  for (const auto& [key, vx] : x.entries) {
    const cd vy = y.at(key.first, key.second);
    if (vy == cd(0.0, 0.0)) continue;
    const double la = lambda.at(key.first), lb = lambda.at(key.second);
    acc += (vx.real() * vy.real() + vx.imag() * vy.imag()) / (4.0 * la * la * lb * lb);
  }
  return acc;
}

double inner_lambda(const TruncOp& x, const TruncOp& y, const LambdaSeq& lambda) {
  if (x.window != y.window) throw std::invalid_argument("inner_lambda: window mismatch");
  double acc = 0.0;
  for (int m : x.window.indices())
    for (int n : x.window.indices()) {
      const cd vx = x.at(m, n), vy = y.at(m, n);
      const double la = lambda.at(m), lb = lambda.at(n);
      acc += (vx.real() * vy.real() + vx.imag() * vy.imag()) / (4.0 * la * la * lb * lb);
    }
  return acc;
}

// ---- CovSpec ----

CovSpec CovSpec::zero() { return CovSpec{}; }

CovSpec CovSpec::uniform(double q, int K) {
  CovSpec c;
  c.preset_ = Preset::Uniform;
  c.q_ = q;
  c.K_ = K;
  return c;
}

CovSpec CovSpec::power(double p) {
  if (!(p > 1.0)) throw std::invalid_argument("CovSpec::power: requires p > 1");
  CovSpec c;
  c.preset_ = Preset::Power;
  c.p_ = p;
  return c;
}

CovSpec CovSpec::explicit_weights(std::map<BasisLabel, double> w) {
  for (const auto& [l, v] : w) {
    validate_label(l);
    if (v < 0.0) throw std::invalid_argument("CovSpec: weights must be >= 0");
  }
  CovSpec c;
  c.preset_ = Preset::Explicit;
  c.weights_ = std::move(w);
  return c;
}

double CovSpec::value(const BasisLabel& l) const {
  switch (preset_) {
    case Preset::Zero:
      return 0.0;
    case Preset::Uniform:
      return std::max(std::abs(l.a), std::abs(l.b)) <= K_ ? q_ : 0.0;
    case Preset::Power:
      return std::pow(double(std::abs(l.a)) * std::abs(l.b), -p_);
    case Preset::Explicit: {
      auto it = weights_.find(l);
      return it == weights_.end() ? 0.0 : it->second;
    }
  }
  return 0.0;
}

std::string CovSpec::to_json() const {
  nlohmann::json j;
  switch (preset_) {
    case Preset::Zero:
      j["preset"] = "zero";
      break;
    case Preset::Uniform:
      j["preset"] = "uniform";
      j["q"] = q_;
      j["K"] = K_;
      break;
    case Preset::Power:
      j["preset"] = "power";
      j["p"] = p_;
      break;
    case Preset::Explicit: {
      j["preset"] = "explicit";
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& [l, v] : weights_)
        rows.push_back({{"kind", kind_name(l.kind)}, {"a", l.a}, {"b", l.b}, {"value", v}});
      j["rows"] = rows;
      break;
    }
  }
  return j.dump();
}

CovSpec CovSpec::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  const std::string preset = j.at("preset").get<std::string>();
  if (preset == "zero") return zero();
  if (preset == "uniform") return uniform(j.at("q").get<double>(), j.at("K").get<int>());
  if (preset == "power") return power(j.at("p").get<double>());
  if (preset == "explicit") {
    std::map<BasisLabel, double> w;
    for (const auto& row : j.at("rows")) {
      BasisLabel l{kind_from_name(row.at("kind").get<std::string>()),
                   row.at("a").get<int>(), row.at("b").get<int>()};
      w[l] = row.at("value").get<double>();
    }
    return explicit_weights(std::move(w));
  }
  throw std::invalid_argument("CovSpec: unknown preset " + preset);
}

CovSpec CovSpec::parse(const std::string& text) {
  if (text == "zero") return zero();
  if (text.rfind("uniform:", 0) == 0) {
    const std::string rest = text.substr(8);
    const auto comma = rest.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("CovSpec: uniform needs q,K");
    return uniform(std::stod(rest.substr(0, comma)), std::stoi(rest.substr(comma + 1)));
  }
  if (text.rfind("power:", 0) == 0) return power(std::stod(text.substr(6)));
  if (text.rfind("file:", 0) == 0) {
    std::ifstream f(text.substr(5));
    if (!f) throw std::runtime_error("CovSpec: cannot open " + text.substr(5));
    std::stringstream ss;
    ss << f.rdbuf();
    return from_json(ss.str());
  }
  throw std::invalid_argument("CovSpec: cannot parse '" + text + "'");
}

namespace {
// weight of the canonical label of the given kind containing position (m,k),
// with the diagonal conventions that make Lemma Sum_xi exact
double q_re_at(const CovSpec& q, int m, int k) {
  const int am = std::abs(m), ak = std::abs(k);
  const int hi = std::max(am, ak), lo = std::min(am, ak);
  if ((m > 0) == (k > 0)) {
    if (am == ak) return q.value({LabelKind::MuIm, hi, hi});
    return q.value({LabelKind::MuRe, hi, lo});
  }
  if (am == ak) return 2.0 * q.value({LabelKind::NuRe, hi, -lo});
  return q.value({LabelKind::NuRe, hi, -lo});
}

double q_im_at(const CovSpec& q, int m, int k) {
  const int am = std::abs(m), ak = std::abs(k);
  const int hi = std::max(am, ak), lo = std::min(am, ak);
  if ((m > 0) == (k > 0)) return q.value({LabelKind::MuIm, hi, lo});
  if (am == ak) return 2.0 * q.value({LabelKind::NuIm, hi, -lo});
  return q.value({LabelKind::NuIm, hi, -lo});
}
}  // namespace

std::vector<double> drift_matrix(const CovSpec& q, const ModeWindow& window) {
  std::vector<double> d(size_t(window.size()), 0.0);
  for (int m : window.indices()) {
    double s = 0.0;
    for (int k : window.indices())
      s += double(sgn(k)) * (q_re_at(q, m, k) + q_im_at(q, m, k));
    d[size_t(window.slot(m))] = -0.25 * double(sgn(m)) * s;
  }
  return d;
}

double sum_xi_residual(const CovSpec& q, const ModeWindow& window) {
  const int N = window.N();
  const LambdaSeq lam = LambdaSeq::uniform(N, 1.0 / std::sqrt(2.0));
  TruncOp acc(window);
  for (const BasisLabel& l : canonical_labels(N)) {
    const double w = q.value(l);
    if (w == 0.0) continue;
    const TruncOp xi = unit_basis_element(l, lam, window).dense();
    acc.entries += w * (xi.entries * sharp(xi).entries);
  }
  const std::vector<double> d = drift_matrix(q, window);
  double r = 0.0;
  for (int m : window.indices())
    for (int n : window.indices()) {
      cd expect = 0.0;
      if (m == n) expect = -d[size_t(window.slot(m))];
      r = std::max(r, std::abs(acc.at(m, n) - expect));
    }
  return r;
}

}  // namespace spinf
