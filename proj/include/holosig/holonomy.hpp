#ifndef HOLOSIG_HOLONOMY_HPP
#define HOLOSIG_HOLONOMY_HPP

#include <optional>
#include <vector>

#include "holosig/path.hpp"
#include "holosig/signature.hpp"
#include "holosig/tensor_series.hpp"

namespace holosig {

struct TruncatedHolonomy {
  TensorSeries value;
  int steps = 0;
  // xi=1 distance to the doubled-step solution
  double error_estimate = 0.0;
  // log2 ratio of successive refinement differences; absent when the
  // differences sit at roundoff
  std::optional<double> order_estimate;
};

// solves the horizontal-lift equation u' = u * (sum_i g_i'(t) X_i), u(0) = 1
// in the truncated algebra with a classical fourth-order one-step method,
// using `steps` steps on each segment; converges to path_signature
TruncatedHolonomy holonomy_truncated(const PlPath& path, int m, int steps,
                                     std::size_t cap = TensorSeries::default_cap);

// d x d matrix of one-forms, each entry a sum of monomial one-forms
struct MatrixConnection {
  int size = 0;      // d
  int dimension = 0; // n
  std::vector<std::vector<std::vector<MonomialOneForm>>> entries;

  void validate() const;
};

// connection sum_k M_k dx_k with constant coefficient matrices, one d x d
// row-major matrix per coordinate direction
MatrixConnection constant_connection(
    int d, int dimension, const std::vector<std::vector<double>>& matrices);

struct MatrixHolonomy {
  std::vector<double> value; // d x d, row-major
  int size = 0;
  int steps = 0;
  double error_estimate = 0.0;
  std::optional<double> order_estimate;
};

// solves u' = -u * A(g'(t)), u(0) = I with the same integrator; the limit
// is the alternating time-ordered series of the connection
MatrixHolonomy holonomy_matrix(const MatrixConnection& connection,
                               const PlPath& path, int steps);

// terms q = 1..order of the expansion I + sum_q (-1)^q int_{t_1<...<t_q}
// A(t_1)...A(t_q); every entry is an iterated integral of entry products
// summed over the internal indices
std::vector<std::vector<double>> picard_terms(
    const MatrixConnection& connection, const PlPath& path, int order);

struct XiNormRow {
  double xi = 0.0;
  double total = 0.0;
  // xi^p sum_{|w|=p} |c_w| per level
  std::vector<double> level_mass;
  // (xi L)^p / p! when the path length L is known
  std::vector<double> factorial_bound;
};

// truncated xi-norms with per-level partial sums; pass the 1-norm length of
// the underlying path to add the factorial-decay certificate
std::vector<XiNormRow> fr_xi_report(const TensorSeries& s,
                                    const std::vector<double>& xis,
                                    std::optional<double> path_length = {});

} // namespace holosig

#endif
