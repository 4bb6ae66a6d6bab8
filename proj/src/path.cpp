#include "holosig/path.hpp"

#include <cmath>

namespace holosig {

namespace {

bool points_close(const std::vector<double>& a, const std::vector<double>& b,
                  double eps) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (std::fabs(a[k] - b[k]) > eps) return false;
  return true;
}

} // namespace

void PlPath::validate() const {
  if (dimension < 1) throw shape_error("path dimension must be at least 1");
  if (points.empty()) throw domain_error("path needs at least one point");
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != dimension)
      throw shape_error("point width differs from path dimension");
    for (double c : p)
      if (!std::isfinite(c))
        throw domain_error("path coordinates must be finite");
  }
}

std::vector<double> PlPath::segment_displacement(std::size_t i) const {
  std::vector<double> d(static_cast<std::size_t>(dimension));
  for (int k = 0; k < dimension; ++k) {
    const auto ku = static_cast<std::size_t>(k);
    d[ku] = points[i + 1][ku] - points[i][ku];
  }
  return d;
}

PlPath constant_path(std::vector<double> point) {
  PlPath p;
  p.dimension = static_cast<int>(point.size());
  p.points.push_back(std::move(point));
  p.validate();
  return p;
}

PlPath minimal_form(const PlPath& a) {
  a.validate();
  PlPath out;
  out.dimension = a.dimension;
  out.points.push_back(a.points.front());
  for (std::size_t i = 1; i < a.points.size(); ++i)
    if (a.points[i] != out.points.back()) out.points.push_back(a.points[i]);
  return out;
}

PlPath path_concat(const PlPath& a, const PlPath& b) {
  a.validate();
  b.validate();
  if (a.dimension != b.dimension)
    throw shape_error("path dimensions differ");
  if (a.points.back() != b.points.front())
    throw composition_error("first path does not end where the second starts");
  PlPath out;
  out.dimension = a.dimension;
  out.points = a.points;
  out.points.insert(out.points.end(), b.points.begin() + 1, b.points.end());
  return minimal_form(out);
}

PlPath path_inverse(const PlPath& a) {
  a.validate();
  PlPath out;
  out.dimension = a.dimension;
  out.points.assign(a.points.rbegin(), a.points.rend());
  return out;
}

PlPath geometric_retrace_reduce(const PlPath& a, double eps) {
  PlPath mf = minimal_form(a);
  PlPath out;
  out.dimension = mf.dimension;
  out.points.push_back(mf.points.front());
  for (std::size_t i = 1; i < mf.points.size(); ++i) {
    const auto& q = mf.points[i];
    if (out.points.size() >= 2 &&
        points_close(out.points[out.points.size() - 2], q, eps)) {
      // the new segment retraces the previous one
      out.points.pop_back();
    } else if (points_close(out.points.back(), q, eps)) {
      continue;
    } else {
      out.points.push_back(q);
    }
  }
  return out;
}

double path_length_l1(const PlPath& a) {
  a.validate();
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < a.points.size(); ++i)
    for (int k = 0; k < a.dimension; ++k) {
      const auto ku = static_cast<std::size_t>(k);
      total += std::fabs(a.points[i + 1][ku] - a.points[i][ku]);
    }
  return total;
}

} // namespace holosig
