#ifndef HOLOSIG_SIGNATURE_HPP
#define HOLOSIG_SIGNATURE_HPP

#include <vector>

#include "holosig/path.hpp"
#include "holosig/tensor_series.hpp"

namespace holosig {

// exp of sum_i delta_i X_i, computed level by level; exact for a line
// segment, level p is (sum delta_i X_i)^p / p!
TensorSeries segment_signature(const std::vector<double>& displacement, int m,
                               std::size_t cap = TensorSeries::default_cap);

// ordered product of the segment signatures of the minimal form; invariant
// under subdivision and reparametrization by construction
TensorSeries path_signature(const PlPath& path, int m,
                            std::size_t cap = TensorSeries::default_cap);

// c * x_1^{e_1} ... x_n^{e_n} dx_direction
struct MonomialOneForm {
  std::vector<int> exponents;
  double factor = 1.0;
  int direction = 1; // 1-based

  void validate(int dimension) const;
};

// time-ordered integral int_{t_1<...<t_q} w_1(g'(t_1)) ... w_q(g'(t_q)).
// Inner levels carry exact per-segment polynomial antiderivatives; the top
// level integrates with a Gauss-Legendre rule sized from the polynomial
// degree, so values are exact up to roundoff.
double iterated_integral(const PlPath& path,
                         const std::vector<MonomialOneForm>& forms);

// same, with each slot a sum of monomial one-forms
double iterated_integral(
    const PlPath& path,
    const std::vector<std::vector<MonomialOneForm>>& slots);

struct IndexSequence {
  std::vector<int> sequence;
  long long multiplicity = 1;
};

// position expansion of (int f_1..f_i)(int f_{i+1}..f_p) as a sum of
// time-ordered integrals: all interleavings of 1..i with i+1..p
std::vector<IndexSequence> product_expand(int p, int i);

struct WeightedWord {
  Word word;
  double coefficient = 0.0;
};

// finite linear combination of elementary integrals, identified by words
using ElementaryCombination = std::vector<WeightedWord>;

// sort by length then lexicographically, merge duplicates, drop zeros
ElementaryCombination normalized(ElementaryCombination c);

ElementaryCombination shuffle_combination(const ElementaryCombination& a,
                                          const ElementaryCombination& b);

// sum_w c_w <signature, w>
double evaluate_combination(const ElementaryCombination& c,
                            const TensorSeries& signature);

int max_word_length(const ElementaryCombination& c);

// rewrites int g_1 dx_{j_1} ... g_q dx_{j_q} with monomial g_i as a
// combination of elementary integrals, valid for every path starting at
// the given basepoint
ElementaryCombination reduce_polynomial_integral(
    const std::vector<MonomialOneForm>& forms,
    const std::vector<double>& basepoint);

// xi-norm of the coefficient difference; zero iff the truncated series agree
double signature_distance(const TensorSeries& a, const TensorSeries& b,
                          double xi);

} // namespace holosig

#endif
