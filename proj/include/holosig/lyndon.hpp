#ifndef HOLOSIG_LYNDON_HPP
#define HOLOSIG_LYNDON_HPP

#include <utility>
#include <vector>

#include "holosig/tensor_series.hpp"
#include "holosig/word.hpp"

namespace holosig {

// strictly smaller than all of its proper rotations
bool is_lyndon(const Word& w);

// all Lyndon words of length <= m over {1..n}, ordered by length then
// lexicographically; per-level counts follow Witt's formula
std::vector<Word> lyndon_words(int n, int m);

// w = uv with v the longest proper Lyndon suffix; requires |w| >= 2
std::pair<Word, Word> lyndon_standard_factorization(const Word& w);

// standard bracketing of a Lyndon word expanded in the tensor algebra;
// supported on level |w| with leading coefficient 1 on w itself
TensorSeries lyndon_bracket(const Word& w, int alphabet, int depth);

struct LyndonBasis {
  int alphabet = 0;
  int depth = 0;
  std::vector<std::pair<Word, TensorSeries>> entries;

  LyndonBasis(int alphabet, int depth);
};

struct LogSignature {
  int alphabet = 0;
  int depth = 0;
  // one coordinate per Lyndon word, in basis order
  std::vector<std::pair<Word, double>> coordinates;
  // xi=1 norm of log s minus the basis reconstruction; nonzero residual
  // flags a series whose log is not a Lie element at this depth
  double residual = 0.0;
};

LogSignature log_signature_coords(const TensorSeries& s);
LogSignature log_signature_coords(const TensorSeries& s,
                                  const LyndonBasis& basis);

struct ShuffleCheck {
  bool group_like = false;
  double max_violation = 0.0;
  // first violating pair when not group-like
  Word witness_u, witness_v;
};

// tests <s,u><s,v> = <s, u shuffle v> for all nonempty pairs with
// |u| + |v| <= depth
ShuffleCheck is_group_like(const TensorSeries& s, double tol = 1e-9);

} // namespace holosig

#endif
