#ifndef HOLOSIG_TENSOR_SERIES_HPP
#define HOLOSIG_TENSOR_SERIES_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "holosig/errors.hpp"
#include "holosig/word.hpp"

namespace holosig {

// Element of the tensor algebra over X_1..X_n truncated at degree m, stored
// densely: one coefficient array per level p = 0..m of size n^p, indexed by
// word_index. Level 0 holds the constant term.
class TensorSeries {
public:
  // total coefficient budget sum_p n^p enforced at construction
  static constexpr std::size_t default_cap = 100000000;

  TensorSeries(int alphabet, int depth, std::size_t cap = default_cap);

  static TensorSeries constant(int alphabet, int depth, double value,
                               std::size_t cap = default_cap);
  static TensorSeries unit(int alphabet, int depth,
                           std::size_t cap = default_cap);
  // the series X_letter
  static TensorSeries generator(int alphabet, int depth, int letter,
                                std::size_t cap = default_cap);
  // zero series with the same shape as s, skipping the cap re-check
  static TensorSeries like(const TensorSeries& s);

  int alphabet() const { return alphabet_; }
  int depth() const { return depth_; }
  std::size_t total_coefficients() const;

  std::vector<double>& level(int p) { return levels_[static_cast<std::size_t>(p)]; }
  const std::vector<double>& level(int p) const { return levels_[static_cast<std::size_t>(p)]; }

  // coefficient of w; words longer than the truncation depth are an error
  double coefficient(const Word& w) const;
  double& coefficient(const Word& w);

  bool same_shape(const TensorSeries& other) const {
    return alphabet_ == other.alphabet_ && depth_ == other.depth_;
  }

  TensorSeries& operator+=(const TensorSeries& other);
  TensorSeries& operator-=(const TensorSeries& other);
  TensorSeries& operator*=(double scalar);

private:
  int alphabet_;
  int depth_;
  std::vector<std::vector<double>> levels_;
};

bool operator==(const TensorSeries& a, const TensorSeries& b);

// s*a + t*b
TensorSeries linear_combination(const TensorSeries& a, const TensorSeries& b,
                                double s, double t);

TensorSeries operator+(const TensorSeries& a, const TensorSeries& b);
TensorSeries operator-(const TensorSeries& a, const TensorSeries& b);
TensorSeries operator*(double scalar, const TensorSeries& a);

// concatenation product, all words of length > m dropped
TensorSeries product(const TensorSeries& a, const TensorSeries& b);
inline TensorSeries operator*(const TensorSeries& a, const TensorSeries& b) {
  return product(a, b);
}

// sum_{k<=m} a^k / k!; requires zero constant term
TensorSeries exp(const TensorSeries& a);

// inverse of exp on series with constant term one
TensorSeries log(const TensorSeries& a);

// sum_p xi^p sum_{|w|=p} |coefficient(w)|
double xi_norm(const TensorSeries& a, double xi);

// formal integer combination of words, sorted lexicographically
using WordCombination = std::vector<std::pair<Word, long long>>;

// all order-preserving interleavings of u and v with multiplicities;
// total multiplicity is binomial(|u|+|v|, |u|)
WordCombination shuffle_words(const Word& u, const Word& v);

// bilinear extension of shuffle_words, truncated at the common depth
TensorSeries shuffle(const TensorSeries& a, const TensorSeries& b);

} // namespace holosig

#endif
