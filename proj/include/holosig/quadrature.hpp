#ifndef HOLOSIG_QUADRATURE_HPP
#define HOLOSIG_QUADRATURE_HPP

#include <vector>

namespace holosig {

// Gauss-Legendre rule mapped to [0,1]; exact for polynomials of degree
// up to 2*points - 1
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendreRule gauss_legendre(int points);

} // namespace holosig

#endif
