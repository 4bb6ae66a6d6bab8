#include "holosig/lyndon.hpp"

#include <algorithm>
#include <cmath>

#include "holosig/errors.hpp"

namespace holosig {

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  const std::size_t p = w.size();
  for (std::size_t r = 1; r < p; ++r) {
    // rotation starting at r must be strictly greater
    bool greater = false, less = false;
    for (std::size_t i = 0; i < p && !greater && !less; ++i) {
      const int a = w[(r + i) % p];
      const int b = w[i];
      if (a > b) greater = true;
      if (a < b) less = true;
    }
    if (!greater) return false;
  }
  return true;
}

std::vector<Word> lyndon_words(int n, int m) {
  if (n < 1) throw domain_error("alphabet size must be at least 1");
  if (m < 1) throw domain_error("depth must be at least 1");
  // Duval's generation, lexicographic; regrouped by length afterwards
  std::vector<Word> out;
  Word w{1};
  while (!w.empty()) {
    out.push_back(w);
    const std::size_t len = w.size();
    while (w.size() < static_cast<std::size_t>(m))
      w.push_back(w[w.size() % len]);
    while (!w.empty() && w.back() == n) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  std::stable_sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
    return a.size() < b.size();
  });
  return out;
}

std::pair<Word, Word> lyndon_standard_factorization(const Word& w) {
  if (w.size() < 2) throw domain_error("factorization needs length >= 2");
  // the right factor is the lexicographically smallest proper suffix
  std::size_t best = 1;
  for (std::size_t r = 2; r < w.size(); ++r) {
    if (std::lexicographical_compare(w.begin() + static_cast<std::ptrdiff_t>(r),
                                     w.end(),
                                     w.begin() + static_cast<std::ptrdiff_t>(best),
                                     w.end()))
      best = r;
  }
  Word u(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(best));
  Word v(w.begin() + static_cast<std::ptrdiff_t>(best), w.end());
  return {u, v};
}

TensorSeries lyndon_bracket(const Word& w, int alphabet, int depth) {
  if (!is_lyndon(w)) throw domain_error("word is not Lyndon");
  if (static_cast<int>(w.size()) > depth)
    throw domain_error("word longer than requested depth");
  for (int letter : w)
    if (letter > alphabet) throw domain_error("letter outside alphabet");
  if (w.size() == 1)
    return TensorSeries::generator(alphabet, depth, w[0]);
  auto [u, v] = lyndon_standard_factorization(w);
  TensorSeries bu = lyndon_bracket(u, alphabet, depth);
  TensorSeries bv = lyndon_bracket(v, alphabet, depth);
  return product(bu, bv) - product(bv, bu);
}

LyndonBasis::LyndonBasis(int alphabet, int depth)
    : alphabet(alphabet), depth(depth) {
  for (const Word& w : lyndon_words(alphabet, depth))
    entries.emplace_back(w, lyndon_bracket(w, alphabet, depth));
}

LogSignature log_signature_coords(const TensorSeries& s) {
  return log_signature_coords(s, LyndonBasis(s.alphabet(), s.depth()));
}

LogSignature log_signature_coords(const TensorSeries& s,
                                  const LyndonBasis& basis) {
  if (basis.alphabet != s.alphabet() || basis.depth != s.depth())
    throw shape_error("basis shape differs from series");
  if (s.level(0)[0] != 1.0)
    throw domain_error("log-signature needs constant term one");
  TensorSeries residual = log(s);
  LogSignature out;
  out.alphabet = s.alphabet();
  out.depth = s.depth();
  out.coordinates.reserve(basis.entries.size());
  // the bracket of a Lyndon word is w plus lexicographically larger words of
  // the same length, so sweeping the basis in order is back-substitution
  for (const auto& [w, bracket] : basis.entries) {
    const double lambda = residual.coefficient(w);
    out.coordinates.emplace_back(w, lambda);
    if (lambda != 0.0) {
      const int p = static_cast<int>(w.size());
      const auto& src = bracket.level(p);
      auto& dst = residual.level(p);
      for (std::size_t k = 0; k < dst.size(); ++k) dst[k] -= lambda * src[k];
    }
  }
  out.residual = xi_norm(residual, 1.0);
  return out;
}

ShuffleCheck is_group_like(const TensorSeries& s, double tol) {
  ShuffleCheck out;
  if (s.level(0)[0] != 1.0) {
    out.group_like = false;
    out.max_violation = std::fabs(s.level(0)[0] - 1.0);
    return out;
  }
  const int n = s.alphabet();
  const int m = s.depth();
  out.group_like = true;
  for (int p = 1; p < m; ++p) {
    for (std::size_t iu = 0; iu < level_size(n, p); ++iu) {
      const Word u = word_from_index(iu, p, n);
      const double cu = s.level(p)[iu];
      for (int q = 1; p + q <= m; ++q) {
        for (std::size_t iv = 0; iv < level_size(n, q); ++iv) {
          const Word v = word_from_index(iv, q, n);
          double rhs = 0.0;
          for (const auto& [w, mult] : shuffle_words(u, v))
            rhs += static_cast<double>(mult) * s.coefficient(w);
          const double viol = std::fabs(cu * s.level(q)[iv] - rhs);
          if (viol > out.max_violation) out.max_violation = viol;
          if (viol > tol && out.group_like) {
            out.group_like = false;
            out.witness_u = u;
            out.witness_v = v;
          }
        }
      }
    }
  }
  return out;
}

} // namespace holosig
