#include "holosig/quadrature.hpp"

#include <cmath>

#include "holosig/errors.hpp"

namespace holosig {

GaussLegendreRule gauss_legendre(int points) {
  if (points < 1) throw domain_error("quadrature needs at least one node");
  const auto k = static_cast<std::size_t>(points);
  GaussLegendreRule rule;
  rule.nodes.resize(k);
  rule.weights.resize(k);
  const double pi = std::acos(-1.0);
  for (std::size_t i = 0; i < (k + 1) / 2; ++i) {
    // Newton iteration on P_k from the Chebyshev initial guess
    double x = std::cos(pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(points) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= points; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = points * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    // map from [-1,1] to [0,1]; nodes come out symmetric
    rule.nodes[i] = 0.5 * (1.0 - x);
    rule.nodes[k - 1 - i] = 0.5 * (1.0 + x);
    rule.weights[i] = 0.5 * w;
    rule.weights[k - 1 - i] = 0.5 * w;
  }
  if (points % 2 == 1) {
    rule.nodes[k / 2] = 0.5;
    // weight already set by the loop above
  }
  return rule;
}

} // namespace holosig
