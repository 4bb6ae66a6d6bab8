#include "holosig/signature.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "holosig/kernels.hpp"
#include "holosig/quadrature.hpp"

namespace holosig {

TensorSeries segment_signature(const std::vector<double>& displacement, int m,
                               std::size_t cap) {
  const int n = static_cast<int>(displacement.size());
  TensorSeries s(n, m, cap);
  s.level(0)[0] = 1.0;
  if (m >= 1) s.level(1) = displacement;
  for (int p = 2; p <= m; ++p) {
    const auto& prev = s.level(p - 1);
    auto& cur = s.level(p);
    const double inv = 1.0 / p;
    std::size_t i = 0;
    for (double c : prev)
      for (double d : displacement) cur[i++] = c * d * inv;
  }
  return s;
}

TensorSeries path_signature(const PlPath& path, int m, std::size_t cap) {
  const PlPath mf = minimal_form(path);
  TensorSeries acc = TensorSeries::unit(mf.dimension, m, cap);
  TensorSeries seg = TensorSeries::like(acc);
  for (std::size_t i = 0; i < mf.segment_count(); ++i) {
    seg = segment_signature(mf.segment_displacement(i), m, cap);
    kernels::concat_into(acc, seg);
  }
  return acc;
}

void MonomialOneForm::validate(int dimension) const {
  if (static_cast<int>(exponents.size()) != dimension)
    throw shape_error("one-form exponent count differs from dimension");
  for (int e : exponents)
    if (e < 0) throw domain_error("one-form exponents must be nonnegative");
  if (direction < 1 || direction > dimension)
    throw domain_error("one-form direction out of range");
}

namespace {

// univariate polynomial with ascending coefficients
struct Poly {
  std::vector<double> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }

  double eval(double x) const {
    double acc = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
  }
};

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  if (a.c.empty() || b.c.empty()) return out;
  out.c.assign(a.c.size() + b.c.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) out.c[i + j] += a.c[i] * b.c[j];
  return out;
}

void poly_add_scaled(Poly& a, const Poly& b, double s) {
  if (a.c.size() < b.c.size()) a.c.resize(b.c.size(), 0.0);
  for (std::size_t i = 0; i < b.c.size(); ++i) a.c[i] += s * b.c[i];
}

// antiderivative vanishing at 0, plus a constant term
Poly poly_antiderivative(const Poly& a, double constant) {
  Poly out;
  out.c.assign(a.c.size() + 1, 0.0);
  out.c[0] = constant;
  for (std::size_t i = 0; i < a.c.size(); ++i)
    out.c[i + 1] = a.c[i] / static_cast<double>(i + 1);
  return out;
}

// pullback of one slot along the segment from `start` with displacement
// `delta`, as a polynomial in the local parameter
Poly slot_on_segment(const std::vector<MonomialOneForm>& slot,
                     const std::vector<double>& start,
                     const std::vector<double>& delta) {
  Poly total;
  for (const auto& form : slot) {
    const double dir = delta[static_cast<std::size_t>(form.direction - 1)];
    if (dir == 0.0 || form.factor == 0.0) continue;
    Poly g{{form.factor * dir}};
    for (std::size_t i = 0; i < form.exponents.size(); ++i) {
      const Poly coord{{start[i], delta[i]}};
      for (int e = 0; e < form.exponents[i]; ++e) g = poly_mul(g, coord);
    }
    poly_add_scaled(total, g, 1.0);
  }
  if (total.c.empty()) total.c.push_back(0.0);
  return total;
}

} // namespace

double iterated_integral(
    const PlPath& path,
    const std::vector<std::vector<MonomialOneForm>>& slots) {
  path.validate();
  for (const auto& slot : slots)
    for (const auto& form : slot) form.validate(path.dimension);
  const std::size_t q = slots.size();
  if (q == 0) return 1.0;
  const PlPath mf = minimal_form(path);

  // running values of the inner integrals at the current vertex
  std::vector<double> value(q + 1, 0.0);
  value[0] = 1.0;
  std::vector<Poly> state(q);
  for (std::size_t i = 0; i < mf.segment_count(); ++i) {
    const auto& start = mf.points[i];
    const auto delta = mf.segment_displacement(i);
    Poly prev{{1.0}};
    for (std::size_t k = 0; k + 1 < q; ++k) {
      const Poly g = slot_on_segment(slots[k], start, delta);
      state[k] = poly_antiderivative(poly_mul(prev, g), value[k + 1]);
      prev = state[k];
    }
    const Poly g = slot_on_segment(slots[q - 1], start, delta);
    const Poly top = poly_mul(prev, g);
    const GaussLegendreRule rule = gauss_legendre(top.degree() / 2 + 1);
    double inc = 0.0;
    for (std::size_t j = 0; j < rule.nodes.size(); ++j)
      inc += rule.weights[j] * top.eval(rule.nodes[j]);
    value[q] += inc;
    for (std::size_t k = 0; k + 1 < q; ++k) value[k + 1] = state[k].eval(1.0);
  }
  return value[q];
}

double iterated_integral(const PlPath& path,
                         const std::vector<MonomialOneForm>& forms) {
  std::vector<std::vector<MonomialOneForm>> slots;
  slots.reserve(forms.size());
  for (const auto& f : forms) slots.push_back({f});
  return iterated_integral(path, slots);
}

namespace {

void interleave_rec(const std::vector<int>& a, std::size_t i,
                    const std::vector<int>& b, std::size_t j,
                    std::vector<int>& prefix,
                    std::map<std::vector<int>, long long>& acc) {
  if (i == a.size() && j == b.size()) {
    ++acc[prefix];
    return;
  }
  if (i < a.size()) {
    prefix.push_back(a[i]);
    interleave_rec(a, i + 1, b, j, prefix, acc);
    prefix.pop_back();
  }
  if (j < b.size()) {
    prefix.push_back(b[j]);
    interleave_rec(a, i, b, j + 1, prefix, acc);
    prefix.pop_back();
  }
}

} // namespace

std::vector<IndexSequence> product_expand(int p, int i) {
  if (p < 0 || i < 0 || i > p)
    throw domain_error("product_expand needs 0 <= i <= p");
  std::vector<int> left, right;
  for (int k = 1; k <= i; ++k) left.push_back(k);
  for (int k = i + 1; k <= p; ++k) right.push_back(k);
  std::map<std::vector<int>, long long> acc;
  std::vector<int> prefix;
  interleave_rec(left, 0, right, 0, prefix, acc);
  std::vector<IndexSequence> out;
  out.reserve(acc.size());
  for (auto& [seq, mult] : acc) out.push_back({seq, mult});
  return out;
}

ElementaryCombination normalized(ElementaryCombination c) {
  std::sort(c.begin(), c.end(), [](const WeightedWord& a, const WeightedWord& b) {
    return graded_lex_less(a.word, b.word);
  });
  ElementaryCombination out;
  for (const auto& t : c) {
    if (!out.empty() && out.back().word == t.word)
      out.back().coefficient += t.coefficient;
    else
      out.push_back(t);
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const WeightedWord& t) {
                             return t.coefficient == 0.0;
                           }),
            out.end());
  return out;
}

ElementaryCombination shuffle_combination(const ElementaryCombination& a,
                                          const ElementaryCombination& b) {
  ElementaryCombination out;
  for (const auto& ta : a)
    for (const auto& tb : b) {
      const double c = ta.coefficient * tb.coefficient;
      if (c == 0.0) continue;
      for (const auto& [w, mult] : shuffle_words(ta.word, tb.word))
        out.push_back({w, c * static_cast<double>(mult)});
    }
  return normalized(std::move(out));
}

double evaluate_combination(const ElementaryCombination& c,
                            const TensorSeries& signature) {
  double acc = 0.0;
  for (const auto& t : c) acc += t.coefficient * signature.coefficient(t.word);
  return acc;
}

int max_word_length(const ElementaryCombination& c) {
  std::size_t len = 0;
  for (const auto& t : c) len = std::max(len, t.word.size());
  return static_cast<int>(len);
}

ElementaryCombination reduce_polynomial_integral(
    const std::vector<MonomialOneForm>& forms,
    const std::vector<double>& basepoint) {
  const int n = static_cast<int>(basepoint.size());
  if (n < 1) throw shape_error("basepoint must be nonempty");
  for (const auto& f : forms) f.validate(n);

  // invariant: acc represents the inner integral over the path restricted
  // to [0,t], as a combination of elementary integrals over the same prefix
  ElementaryCombination acc{{Word{}, 1.0}};
  for (const auto& form : forms) {
    // the monomial coefficient along the prefix: each coordinate equals the
    // elementary integral of dx_i plus its basepoint value
    ElementaryCombination g{{Word{}, form.factor}};
    for (int i = 1; i <= n; ++i) {
      const ElementaryCombination coord{
          {Word{}, basepoint[static_cast<std::size_t>(i - 1)]},
          {Word{i}, 1.0}};
      for (int e = 0; e < form.exponents[static_cast<std::size_t>(i - 1)]; ++e)
        g = shuffle_combination(g, coord);
    }
    ElementaryCombination integrand = shuffle_combination(acc, g);
    // integrating against dx_j appends the letter j to every word
    for (auto& t : integrand) t.word.push_back(form.direction);
    acc = std::move(integrand);
  }
  return normalized(std::move(acc));
}

double signature_distance(const TensorSeries& a, const TensorSeries& b,
                          double xi) {
  if (!a.same_shape(b)) throw shape_error("series shapes differ");
  return xi_norm(a - b, xi);
}

} // namespace holosig
