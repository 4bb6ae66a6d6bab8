#include "holosig/tensor_series.hpp"

#include <cmath>
#include <map>

#include "holosig/kernels.hpp"

namespace holosig {

TensorSeries::TensorSeries(int alphabet, int depth, std::size_t cap)
    : alphabet_(alphabet), depth_(depth) {
  if (alphabet < 1) throw domain_error("alphabet size must be at least 1");
  if (depth < 0) throw domain_error("depth must be nonnegative");
  std::size_t total = 0;
  std::size_t size = 1;
  levels_.reserve(static_cast<std::size_t>(depth) + 1);
  for (int p = 0; p <= depth; ++p) {
    total += size;
    if (total > cap)
      throw cap_error("series would hold " + std::to_string(total) +
                      "+ coefficients, cap is " + std::to_string(cap));
    levels_.emplace_back(size, 0.0);
    if (p < depth) size *= static_cast<std::size_t>(alphabet);
  }
}

TensorSeries TensorSeries::constant(int alphabet, int depth, double value,
                                    std::size_t cap) {
  TensorSeries s(alphabet, depth, cap);
  s.levels_[0][0] = value;
  return s;
}

TensorSeries TensorSeries::unit(int alphabet, int depth, std::size_t cap) {
  return constant(alphabet, depth, 1.0, cap);
}

TensorSeries TensorSeries::generator(int alphabet, int depth, int letter,
                                     std::size_t cap) {
  if (letter < 1 || letter > alphabet)
    throw domain_error("generator letter out of range");
  if (depth < 1) throw domain_error("generator needs depth at least 1");
  TensorSeries s(alphabet, depth, cap);
  s.levels_[1][static_cast<std::size_t>(letter - 1)] = 1.0;
  return s;
}

TensorSeries TensorSeries::like(const TensorSeries& s) {
  TensorSeries out(s.alphabet_, 0);
  out.depth_ = s.depth_;
  out.levels_.resize(s.levels_.size());
  for (std::size_t p = 0; p < s.levels_.size(); ++p)
    out.levels_[p].assign(s.levels_[p].size(), 0.0);
  return out;
}

std::size_t TensorSeries::total_coefficients() const {
  std::size_t total = 0;
  for (const auto& l : levels_) total += l.size();
  return total;
}

double TensorSeries::coefficient(const Word& w) const {
  if (static_cast<int>(w.size()) > depth_)
    throw domain_error("word length exceeds truncation depth");
  return levels_[w.size()][word_index(w, alphabet_)];
}

double& TensorSeries::coefficient(const Word& w) {
  if (static_cast<int>(w.size()) > depth_)
    throw domain_error("word length exceeds truncation depth");
  return levels_[w.size()][word_index(w, alphabet_)];
}

TensorSeries& TensorSeries::operator+=(const TensorSeries& other) {
  if (!same_shape(other)) throw shape_error("series shapes differ");
  for (int p = 0; p <= depth_; ++p) {
    auto& dst = levels_[static_cast<std::size_t>(p)];
    const auto& src = other.levels_[static_cast<std::size_t>(p)];
    for (std::size_t k = 0; k < dst.size(); ++k) dst[k] += src[k];
  }
  return *this;
}

TensorSeries& TensorSeries::operator-=(const TensorSeries& other) {
  if (!same_shape(other)) throw shape_error("series shapes differ");
  for (int p = 0; p <= depth_; ++p) {
    auto& dst = levels_[static_cast<std::size_t>(p)];
    const auto& src = other.levels_[static_cast<std::size_t>(p)];
    for (std::size_t k = 0; k < dst.size(); ++k) dst[k] -= src[k];
  }
  return *this;
}

TensorSeries& TensorSeries::operator*=(double scalar) {
  for (auto& l : levels_)
    for (double& c : l) c *= scalar;
  return *this;
}

bool operator==(const TensorSeries& a, const TensorSeries& b) {
  if (!a.same_shape(b)) return false;
  for (int p = 0; p <= a.depth(); ++p)
    if (a.level(p) != b.level(p)) return false;
  return true;
}

TensorSeries linear_combination(const TensorSeries& a, const TensorSeries& b,
                                double s, double t) {
  if (!a.same_shape(b)) throw shape_error("series shapes differ");
  TensorSeries out = TensorSeries::like(a);
  for (int p = 0; p <= a.depth(); ++p) {
    const auto& la = a.level(p);
    const auto& lb = b.level(p);
    auto& lo = out.level(p);
    for (std::size_t k = 0; k < lo.size(); ++k) lo[k] = s * la[k] + t * lb[k];
  }
  return out;
}

TensorSeries operator+(const TensorSeries& a, const TensorSeries& b) {
  return linear_combination(a, b, 1.0, 1.0);
}

TensorSeries operator-(const TensorSeries& a, const TensorSeries& b) {
  return linear_combination(a, b, 1.0, -1.0);
}

TensorSeries operator*(double scalar, const TensorSeries& a) {
  TensorSeries out = a;
  out *= scalar;
  return out;
}

TensorSeries product(const TensorSeries& a, const TensorSeries& b) {
  if (!a.same_shape(b)) throw shape_error("series shapes differ");
  TensorSeries out = TensorSeries::like(a);
  kernels::product_into(out, a, b);
  return out;
}

TensorSeries exp(const TensorSeries& a) {
  if (a.level(0)[0] != 0.0)
    throw domain_error("exp needs a zero constant term");
  TensorSeries result = TensorSeries::like(a);
  result.level(0)[0] = 1.0;
  TensorSeries term = result;
  // a is nilpotent at truncation, the series stops at m
  for (int k = 1; k <= a.depth(); ++k) {
    term = product(term, a);
    term *= 1.0 / k;
    result += term;
  }
  return result;
}

TensorSeries log(const TensorSeries& a) {
  if (a.level(0)[0] != 1.0)
    throw domain_error("log needs constant term one");
  TensorSeries y = a;
  y.level(0)[0] = 0.0;
  TensorSeries acc = y;
  TensorSeries power = y;
  for (int k = 2; k <= a.depth(); ++k) {
    power = product(power, y);
    acc += ((k % 2 == 1) ? 1.0 / k : -1.0 / k) * power;
  }
  return acc;
}

double xi_norm(const TensorSeries& a, double xi) {
  if (!(xi > 0.0)) throw domain_error("xi must be positive");
  double total = 0.0;
  double weight = 1.0;
  for (int p = 0; p <= a.depth(); ++p) {
    double mass = 0.0;
    for (double c : a.level(p)) mass += std::fabs(c);
    total += weight * mass;
    weight *= xi;
  }
  return total;
}

namespace {

void shuffle_rec(const Word& u, std::size_t i, const Word& v, std::size_t j,
                 Word& prefix, std::map<Word, long long>& acc) {
  if (i == u.size() && j == v.size()) {
    ++acc[prefix];
    return;
  }
  if (i < u.size()) {
    prefix.push_back(u[i]);
    shuffle_rec(u, i + 1, v, j, prefix, acc);
    prefix.pop_back();
  }
  if (j < v.size()) {
    prefix.push_back(v[j]);
    shuffle_rec(u, i, v, j + 1, prefix, acc);
    prefix.pop_back();
  }
}

} // namespace

WordCombination shuffle_words(const Word& u, const Word& v) {
  std::map<Word, long long> acc;
  Word prefix;
  prefix.reserve(u.size() + v.size());
  shuffle_rec(u, 0, v, 0, prefix, acc);
  return WordCombination(acc.begin(), acc.end());
}

TensorSeries shuffle(const TensorSeries& a, const TensorSeries& b) {
  if (!a.same_shape(b)) throw shape_error("series shapes differ");
  TensorSeries out = TensorSeries::like(a);
  kernels::shuffle_into(out, a, b);
  return out;
}

} // namespace holosig
