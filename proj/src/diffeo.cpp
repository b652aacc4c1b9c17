#include "spinf/diffeo.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace spinf {

struct DiffeoSpec::Node {
  enum class Kind { Rotation, Sine, Compose } kind;
  double alpha = 0.0;
  int k = 0;
  double eps = 0.0;
  std::vector<DiffeoSpec> parts;
};

DiffeoSpec DiffeoSpec::rotation(double alpha) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Rotation;
  n->alpha = alpha;
  DiffeoSpec d;
  d.node_ = n;
  return d;
}

DiffeoSpec DiffeoSpec::sine(int k, double eps) {
  if (k < 1) throw std::invalid_argument("DiffeoSpec::sine: k must be >= 1");
  if (std::abs(eps * k) >= 1.0)
    throw std::invalid_argument("DiffeoSpec::sine: |eps*k| must be < 1");
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Sine;
  n->k = k;
  n->eps = eps;
  DiffeoSpec d;
  d.node_ = n;
  return d;
}

DiffeoSpec DiffeoSpec::compose(std::vector<DiffeoSpec> parts) {
  if (parts.empty()) throw std::invalid_argument("DiffeoSpec::compose: empty list");
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Compose;
  n->parts = std::move(parts);
  DiffeoSpec d;
  d.node_ = n;
  return d;
}

double DiffeoSpec::eval(double theta) const {
  switch (node_->kind) {
    case Node::Kind::Rotation:
      return theta + node_->alpha;
    case Node::Kind::Sine:
      return theta + node_->eps * std::sin(node_->k * theta);
    case Node::Kind::Compose: {
      double t = theta;
      for (auto it = node_->parts.rbegin(); it != node_->parts.rend(); ++it)
        t = it->eval(t);
      return t;
    }
  }
  return theta;
}

double DiffeoSpec::deriv(double theta) const {
  switch (node_->kind) {
    case Node::Kind::Rotation:
      return 1.0;
    case Node::Kind::Sine:
      return 1.0 + node_->eps * node_->k * std::cos(node_->k * theta);
    case Node::Kind::Compose: {
      double t = theta, d = 1.0;
      for (auto it = node_->parts.rbegin(); it != node_->parts.rend(); ++it) {
        d *= it->deriv(t);
        t = it->eval(t);
      }
      return d;
    }
  }
  return 1.0;
}

double DiffeoSpec::deviation_bound() const {
  switch (node_->kind) {
    case Node::Kind::Rotation:
      return std::abs(node_->alpha);
    case Node::Kind::Sine:
      return std::abs(node_->eps);
    case Node::Kind::Compose: {
      double b = 0.0;
      for (const auto& p : node_->parts) b += p.deviation_bound();
      return b;
    }
  }
  return 0.0;
}

double DiffeoSpec::invert(double theta) const {
  if (node_->kind == Node::Kind::Rotation) return theta - node_->alpha;
  if (node_->kind == Node::Kind::Compose) {
    double t = theta;
    for (const auto& p : node_->parts) t = p.invert(t);
    return t;
  }
  const double tol = 1e-14;
  double x = theta;
  for (int it = 0; it < 100; ++it) {
    const double f = eval(x) - theta;
    if (std::abs(f) <= tol) return x;
    x -= f / deriv(x);
  }
  if (std::abs(eval(x) - theta) <= 1e-13) return x;
  // bisection fallback on a bracket guaranteed by the deviation bound
  double lo = theta - deviation_bound() - 1.0;
  double hi = theta + deviation_bound() + 1.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (eval(mid) - theta > 0.0)
      hi = mid;
    else
      lo = mid;
  }
  x = 0.5 * (lo + hi);
  if (std::abs(eval(x) - theta) > 1e-12)
    throw std::runtime_error("DiffeoSpec::invert: iteration failure");
  return x;
}

std::string DiffeoSpec::describe() const {
  std::ostringstream os;
  switch (node_->kind) {
    case Node::Kind::Rotation:
      os << "rotation(" << node_->alpha << ")";
      break;
    case Node::Kind::Sine:
      os << "sine(" << node_->k << "," << node_->eps << ")";
      break;
    case Node::Kind::Compose: {
      os << "compose(";
      for (size_t i = 0; i < node_->parts.size(); ++i)
        os << (i ? "," : "") << node_->parts[i].describe();
      os << ")";
      break;
    }
  }
  return os.str();
}

}  // namespace spinf
