#pragma once

#include <memory>
#include <string>
#include <vector>

namespace spinf {

// Closed family of orientation-preserving circle diffeomorphisms:
// rotation(alpha), sine(k, eps) with psi(theta) = theta + eps sin(k theta),
// and finite compositions. Closed families keep analytic derivatives
// available for Newton inversion.
class DiffeoSpec {
 public:
  static DiffeoSpec rotation(double alpha);
  static DiffeoSpec sine(int k, double eps);  // requires |eps k| < 1
  static DiffeoSpec compose(std::vector<DiffeoSpec> parts);  // parts[0] o parts[1] o ...
  static DiffeoSpec identity() { return rotation(0.0); }

  double eval(double theta) const;   // psi(theta)
  double deriv(double theta) const;  // psi'(theta) > 0

  // phi(theta) = psi^{-1}(theta), |psi(phi) - theta| <= 1e-13; Newton with
  // bisection fallback.
  double invert(double theta) const;

  double deviation_bound() const;  // sup |psi(theta) - theta|
  std::string describe() const;

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

}  // namespace spinf
