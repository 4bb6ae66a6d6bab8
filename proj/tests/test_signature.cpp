#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "holosig/lyndon.hpp"
#include "holosig/quadrature.hpp"
#include "holosig/signature.hpp"
#include "oracles.hpp"

using namespace holosig;

namespace {

PlPath make(std::vector<std::vector<double>> pts) {
  PlPath p;
  p.dimension = static_cast<int>(pts.front().size());
  p.points = std::move(pts);
  return p;
}

const PlPath square = make({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 0}});

} // namespace

TEST_CASE("segment signatures") {
  const auto s = segment_signature({1, 0}, 2);
  CHECK(s.coefficient({}) == 1.0);
  CHECK(s.coefficient({1}) == 1.0);
  CHECK(s.coefficient({1, 1}) == 0.5);
  CHECK(s.coefficient({2}) == 0.0);

  CHECK(segment_signature({0, 0, 0}, 3) == TensorSeries::unit(3, 3));

  const auto diag = segment_signature({1, 1}, 2);
  for (std::size_t k = 0; k < 4; ++k) CHECK(diag.level(2)[k] == 0.5);
}

TEST_CASE("path signature of the L-path") {
  const auto s = path_signature(make({{0, 0}, {1, 0}, {1, 1}}), 2);
  CHECK(s.coefficient({1}) == 1.0);
  CHECK(s.coefficient({2}) == 1.0);
  CHECK(s.coefficient({1, 1}) == 0.5);
  CHECK(s.coefficient({1, 2}) == 1.0);
  CHECK(s.coefficient({2, 1}) == 0.0);
  CHECK(s.coefficient({2, 2}) == 0.5);
}

TEST_CASE("unit square loop at depth two") {
  const auto s = path_signature(square, 2);
  CHECK(s.coefficient({1}) == 0.0);
  CHECK(s.coefficient({2}) == 0.0);
  CHECK(s.coefficient({1, 1}) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(s.coefficient({1, 2}) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(s.coefficient({2, 1}) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(s.coefficient({2, 2}) == doctest::Approx(0.0).epsilon(1e-15));

  // the level-2 coefficients equal the direct per-segment integrals, and
  // c12 - c21 is twice the enclosed (Green) area
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      CHECK(s.coefficient({i, j}) ==
            doctest::Approx(oracle::level2_direct(square, i, j)).epsilon(1e-14));
  CHECK(s.coefficient({1, 2}) - s.coefficient({2, 1}) ==
        doctest::Approx(2.0).epsilon(1e-14));

  // log of the loop signature is the level-2 area element
  const auto l = log(s);
  CHECK(l.coefficient({1, 2}) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(l.coefficient({2, 1}) == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(l.coefficient({1, 1}) == doctest::Approx(0.0).epsilon(1e-14));

  // and its only Lyndon coordinate is on the word 12
  const auto ls = log_signature_coords(s);
  CHECK(ls.residual < 1e-10);
  for (const auto& [w, v] : ls.coordinates) {
    if (w == Word{1, 2})
      CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
    else
      CHECK(v == doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("a path against its reverse cancels") {
  std::mt19937 rng(3);
  for (int rep = 0; rep < 5; ++rep) {
    const auto g = oracle::random_path(rng, 2, 4);
    const auto loop = path_concat(g, path_inverse(g));
    const auto s = path_signature(loop, 4);
    CHECK(xi_norm(s - TensorSeries::unit(2, 4), 1.0) < 1e-10);
  }
}

TEST_CASE("Chen multiplicativity") {
  std::mt19937 rng(5);
  for (int rep = 0; rep < 20; ++rep) {
    const auto a = oracle::random_path(rng, 3, 4);
    auto b = oracle::random_path(rng, 3, 4);
    // translate b to start where a ends
    const auto target = a.points.back();
    const auto start = b.points.front();
    for (auto& pt : b.points)
      for (std::size_t k = 0; k < pt.size(); ++k) pt[k] += target[k] - start[k];
    b.points.front() = target;
    const auto lhs = path_signature(path_concat(a, b), 5);
    const auto rhs = path_signature(a, 5) * path_signature(b, 5);
    CHECK(xi_norm(lhs - rhs, 1.0) < 1e-12);
  }
}

TEST_CASE("subdivision invariance") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(0.1, 0.9);
  for (int rep = 0; rep < 10; ++rep) {
    const auto g = oracle::random_path(rng, 2, 4);
    const auto s = path_signature(g, 5);
    // split a random segment at an interior point
    std::uniform_int_distribution<std::size_t> pick(0, g.segment_count() - 1);
    const std::size_t i = pick(rng);
    const double t = u(rng);
    PlPath split = g;
    std::vector<double> mid(split.points[i]);
    for (std::size_t k = 0; k < mid.size(); ++k)
      mid[k] += t * (split.points[i + 1][k] - split.points[i][k]);
    split.points.insert(split.points.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                        mid);
    CHECK(xi_norm(path_signature(split, 5) - s, 1.0) < 1e-12);
  }
}

TEST_CASE("signatures are group-like") {
  std::mt19937 rng(11);
  for (int rep = 0; rep < 5; ++rep) {
    const auto s = path_signature(oracle::random_path(rng, 2, 5), 4);
    const auto check = is_group_like(s, 1e-9);
    CHECK(check.group_like);

    // the shuffle identity spelled out on a few explicit pairs
    for (const auto& [u, v] : std::vector<std::pair<Word, Word>>{
             {{1}, {2}}, {{1}, {1, 2}}, {{2, 1}, {1}}, {{1, 2}, {2, 1}}}) {
      double rhs = 0.0;
      for (const auto& [w, mult] : shuffle_words(u, v))
        rhs += static_cast<double>(mult) * s.coefficient(w);
      CHECK(s.coefficient(u) * s.coefficient(v) ==
            doctest::Approx(rhs).epsilon(1e-10));
    }
  }
}

TEST_CASE("geometric retrace reduction preserves the signature") {
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int rep = 0; rep < 10; ++rep) {
    auto g = oracle::random_path(rng, 2, 4);
    // splice a there-and-back excursion at a random vertex
    std::uniform_int_distribution<std::size_t> pick(0, g.points.size() - 1);
    const std::size_t at = pick(rng);
    auto out = g.points[at];
    for (auto& c : out) c += u(rng);
    g.points.insert(g.points.begin() + static_cast<std::ptrdiff_t>(at),
                    {g.points[at], out});
    const auto reduced = geometric_retrace_reduce(g);
    CHECK(reduced.points.size() < g.points.size());
    CHECK(xi_norm(path_signature(g, 4) - path_signature(reduced, 4), 1.0) <
          1e-10);
  }
}

TEST_CASE("iterated integrals of monomial one-forms") {
  const auto dx = [](int n, int j) {
    MonomialOneForm f;
    f.exponents.assign(static_cast<std::size_t>(n), 0);
    f.direction = j;
    return f;
  };

  CHECK(iterated_integral(make({{0, 0}, {1, 0}}), {dx(2, 1), dx(2, 1)}) ==
        doctest::Approx(0.5).epsilon(1e-15));
  CHECK(iterated_integral(square, {dx(2, 1), dx(2, 2)}) ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK(iterated_integral(make({{0}, {1}}), {dx(1, 1), dx(1, 1), dx(1, 1)}) ==
        doctest::Approx(1.0 / 6.0).epsilon(1e-14));

  // elementary integrals are the signature coefficients
  std::mt19937 rng(17);
  const auto g = oracle::random_path(rng, 2, 3);
  const auto s = path_signature(g, 3);
  for (const Word& w : {Word{1}, Word{1, 2}, Word{2, 1, 1}}) {
    std::vector<MonomialOneForm> forms;
    for (int letter : w) forms.push_back(dx(2, letter));
    CHECK(iterated_integral(g, forms) ==
          doctest::Approx(s.coefficient(w)).epsilon(1e-12));
  }

  CHECK_THROWS_AS(iterated_integral(g, {dx(3, 1)}), shape_error);
}

TEST_CASE("quadrature rules are exact through degree 2k-1") {
  for (int k = 1; k <= 8; ++k) {
    const auto rule = gauss_legendre(k);
    for (int j = 0; j <= 2 * k - 1; ++j) {
      double acc = 0.0;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        double pw = 1.0;
        for (int e = 0; e < j; ++e) pw *= rule.nodes[i];
        acc += rule.weights[i] * pw;
      }
      CHECK(acc == doctest::Approx(1.0 / (j + 1)).epsilon(1e-13));
    }
  }
  CHECK_THROWS_AS(gauss_legendre(0), domain_error);
}

TEST_CASE("polynomial integrands match the ODE oracle") {
  std::mt19937 rng(19);
  std::uniform_int_distribution<int> expo(0, 2), dir(1, 2), qd(1, 3);
  std::uniform_real_distribution<double> fac(-2.0, 2.0);
  for (int rep = 0; rep < 10; ++rep) {
    const auto g = oracle::random_path(rng, 2, 3);
    std::vector<MonomialOneForm> forms;
    const int q = qd(rng);
    for (int k = 0; k < q; ++k) {
      MonomialOneForm f;
      f.exponents = {expo(rng), expo(rng)};
      f.factor = fac(rng);
      f.direction = dir(rng);
      forms.push_back(f);
    }
    const double got = iterated_integral(g, forms);
    const double want = oracle::iterated_integral_rk(g, forms, 600);
    CHECK(got == doctest::Approx(want).epsilon(1e-8));
  }
}

TEST_CASE("product expansion over positions") {
  const auto e21 = product_expand(2, 1);
  REQUIRE(e21.size() == 2);
  CHECK(e21[0].sequence == std::vector<int>{1, 2});
  CHECK(e21[0].multiplicity == 1);
  CHECK(e21[1].sequence == std::vector<int>{2, 1});
  CHECK(e21[1].multiplicity == 1);

  const auto e22 = product_expand(2, 2);
  REQUIRE(e22.size() == 1);
  CHECK(e22[0].sequence == std::vector<int>{1, 2});

  // position expansion is the shuffle of the position words
  const auto expanded = product_expand(3, 1);
  const auto shuffled = shuffle_words({1}, {2, 3});
  REQUIRE(expanded.size() == shuffled.size());
  for (std::size_t i = 0; i < expanded.size(); ++i) {
    CHECK(Word(expanded[i].sequence.begin(), expanded[i].sequence.end()) ==
          shuffled[i].first);
    CHECK(expanded[i].multiplicity == shuffled[i].second);
  }

  // numeric form of the p=2 case: (int dt)(int dt) = 2 int dt dt
  MonomialOneForm dt;
  dt.exponents = {0};
  dt.direction = 1;
  const auto seg = make({{0}, {1}});
  const double once = iterated_integral(seg, {dt});
  const double twice = iterated_integral(seg, {dt, dt});
  CHECK(once * once == doctest::Approx(2.0 * twice).epsilon(1e-15));

  CHECK_THROWS_AS(product_expand(2, 3), domain_error);
}

TEST_CASE("reduction of polynomial integrals to elementary ones") {
  MonomialOneForm x1dx2;
  x1dx2.exponents = {1, 0};
  x1dx2.direction = 2;

  const auto at_zero = reduce_polynomial_integral({x1dx2}, {0.0, 0.0});
  REQUIRE(at_zero.size() == 1);
  CHECK(at_zero[0].word == Word{1, 2});
  CHECK(at_zero[0].coefficient == 1.0);

  const auto offset = reduce_polynomial_integral({x1dx2}, {0.7, 0.0});
  REQUIRE(offset.size() == 2);
  CHECK(offset[0].word == Word{2});
  CHECK(offset[0].coefficient == doctest::Approx(0.7).epsilon(1e-15));
  CHECK(offset[1].word == Word{1, 2});
  CHECK(offset[1].coefficient == 1.0);

  MonomialOneForm dx1, dx2;
  dx1.exponents = {0, 0};
  dx1.direction = 1;
  dx2.exponents = {0, 0};
  dx2.direction = 2;
  const auto elem = reduce_polynomial_integral({dx1, dx2}, {0.0, 0.0});
  REQUIRE(elem.size() == 1);
  CHECK(elem[0].word == Word{1, 2});
  CHECK(elem[0].coefficient == 1.0);

  const auto empty = reduce_polynomial_integral({}, {0.0, 0.0});
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].word == Word{});
}

TEST_CASE("reduction agrees with quadrature on random paths") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> expo(0, 2), dir(1, 2), qd(1, 3);
  std::uniform_real_distribution<double> fac(-1.5, 1.5), base(-1.0, 1.0);
  for (int rep = 0; rep < 10; ++rep) {
    const std::vector<double> basepoint{base(rng), base(rng)};
    std::vector<MonomialOneForm> forms;
    const int q = qd(rng);
    for (int k = 0; k < q; ++k) {
      MonomialOneForm f;
      f.exponents = {expo(rng), expo(rng)};
      f.factor = fac(rng);
      f.direction = dir(rng);
      forms.push_back(f);
    }
    const auto combo = reduce_polynomial_integral(forms, basepoint);
    for (int trial = 0; trial < 5; ++trial) {
      auto g = oracle::random_path(rng, 2, 4);
      // reductions are tied to the basepoint, so anchor the path there
      const auto start = g.points.front();
      for (auto& pt : g.points)
        for (std::size_t k = 0; k < pt.size(); ++k)
          pt[k] += basepoint[k] - start[k];
      const auto s = path_signature(g, std::max(1, max_word_length(combo)));
      CHECK(evaluate_combination(combo, s) ==
            doctest::Approx(iterated_integral(g, forms)).epsilon(1e-9));
    }
  }
}

TEST_CASE("signature distance") {
  const auto s = path_signature(square, 2);
  CHECK(signature_distance(s, s, 2.0) == 0.0);

  const auto one = TensorSeries::unit(2, 1);
  const auto x1 = one + TensorSeries::generator(2, 1, 1);
  CHECK(signature_distance(one, x1, 2.0) == 2.0);

  const auto c = path_signature(constant_path({0, 0}), 2);
  CHECK(signature_distance(s, c, 1.0) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK_THROWS_AS(signature_distance(s, TensorSeries(3, 2), 1.0), shape_error);
}
