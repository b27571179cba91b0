#ifndef PIPFRAME_DETAIL_SUBGRADIENT_HPP
#define PIPFRAME_DETAIL_SUBGRADIENT_HPP

#include <Eigen/Dense>
#include <functional>

namespace pipframe::detail {

// Minimizes a convex, possibly nonsmooth function of a complex vector.
// Subgradients use the real-inner-product convention: the directional
// derivative along delta is Re(g^H delta) with g the returned subgradient.
//
// The method is normalized subgradient descent restarted from the best
// point with geometrically shrinking initial steps. On the piecewise
// smooth objectives appearing here (sums of norms) this reaches ~1e-6
// relative accuracy well inside the default budget.
struct SubgradientOptions {
  int outer = 40;
  int inner = 250;
  double step0 = 1.0;        // scaled by max(1, |x0|) internally
  double outer_shrink = 0.7;
  double inner_shrink = 0.985;
  double converged_rel = 1e-5;  // improvement in the last outer round
};

struct SubgradientResult {
  Eigen::VectorXcd x;
  double value = 0.0;
  bool converged = false;
};

inline SubgradientResult minimize_subgradient(
    const std::function<double(const Eigen::VectorXcd&)>& f,
    const std::function<Eigen::VectorXcd(const Eigen::VectorXcd&)>& subgrad,
    const Eigen::VectorXcd& x0, const SubgradientOptions& opt = {}) {
  SubgradientResult best;
  best.x = x0;
  best.value = f(x0);

  const double scale = std::max(1.0, x0.norm());
  double step0 = opt.step0 * scale;
  double last_round_value = best.value;

  for (int round = 0; round < opt.outer; ++round) {
    Eigen::VectorXcd x = best.x;
    double step = step0;
    for (int it = 0; it < opt.inner; ++it) {
      Eigen::VectorXcd g = subgrad(x);
      const double gn = g.norm();
      if (gn < 1e-15) {
        best.converged = true;
        return best;
      }
      x -= (step / gn) * g;
      step *= opt.inner_shrink;
      const double fx = f(x);
      if (fx < best.value) {
        best.value = fx;
        best.x = x;
      }
    }
    step0 *= opt.outer_shrink;
    if (round >= opt.outer / 2) {
      const double denom = std::max(std::abs(last_round_value), 1e-14);
      if ((last_round_value - best.value) / denom < opt.converged_rel) {
        best.converged = true;
        return best;
      }
      last_round_value = best.value;
    }
  }
  // budget exhausted while still making progress
  best.converged = false;
  return best;
}

}  // namespace pipframe::detail

#endif
