#ifndef HOLOSIG_PATH_HPP
#define HOLOSIG_PATH_HPP

#include <cstddef>
#include <vector>

#include "holosig/errors.hpp"

namespace holosig {

// Piecewise-linear path in R^n given by its vertex list; consecutive points
// define the segments. A single point is the constant path.
struct PlPath {
  int dimension = 0;
  std::vector<std::vector<double>> points;

  void validate() const;
  std::size_t segment_count() const {
    return points.empty() ? 0 : points.size() - 1;
  }
  // endpoint displacement of segment i
  std::vector<double> segment_displacement(std::size_t i) const;
};

PlPath constant_path(std::vector<double> point);

// drops zero-length segments; idempotent, endpoints preserved
PlPath minimal_form(const PlPath& a);

// requires a to end exactly where b starts
PlPath path_concat(const PlPath& a, const PlPath& b);

PlPath path_inverse(const PlPath& a);

// cancels adjacent segment pairs that retrace each other exactly (or within
// eps when eps > 0); repeated until no such pair remains
PlPath geometric_retrace_reduce(const PlPath& a, double eps = 0.0);

// total variation in the 1-norm, sum_i sum_k |delta_i[k]|
double path_length_l1(const PlPath& a);

} // namespace holosig

#endif
