#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>
#include <random>

#include "holosig/edge_word.hpp"
#include "holosig/path.hpp"

using namespace holosig;

namespace {

PlPath make(std::vector<std::vector<double>> pts) {
  PlPath p;
  p.dimension = static_cast<int>(pts.front().size());
  p.points = std::move(pts);
  return p;
}

// reduces by cancelling one random adjacent pair at a time; confluence says
// this must agree with the deterministic stack reducer
EdgeWord reduce_random_order(EdgeWord w, std::mt19937& rng) {
  while (true) {
    std::vector<std::size_t> cancellable;
    for (std::size_t i = 0; i + 1 < w.word.size(); ++i)
      if (w.word[i].edge == w.word[i + 1].edge &&
          w.word[i].inverse != w.word[i + 1].inverse)
        cancellable.push_back(i);
    if (cancellable.empty()) return w;
    std::uniform_int_distribution<std::size_t> pick(0, cancellable.size() - 1);
    const std::size_t at = cancellable[pick(rng)];
    w.word.erase(w.word.begin() + static_cast<std::ptrdiff_t>(at),
                 w.word.begin() + static_cast<std::ptrdiff_t>(at) + 2);
  }
}

EdgeWord random_word(std::mt19937& rng, int alphabet, int length) {
  EdgeWord w;
  for (int i = 0; i < alphabet; ++i)
    w.alphabet.push_back(std::string(1, static_cast<char>('a' + i)));
  std::uniform_int_distribution<int> edge(0, alphabet - 1), flip(0, 1);
  for (int i = 0; i < length; ++i)
    w.word.push_back({edge(rng), flip(rng) == 1});
  return w;
}

} // namespace

TEST_CASE("minimal form") {
  const auto a = minimal_form(make({{0, 0}, {0, 0}, {1, 0}}));
  CHECK(a.points == std::vector<std::vector<double>>{{0, 0}, {1, 0}});

  const auto c = minimal_form(make({{0, 0}}));
  CHECK(c.points == std::vector<std::vector<double>>{{0, 0}});

  const auto b = minimal_form(make({{0, 0}, {1, 0}, {1, 0}, {1, 1}}));
  CHECK(b.points == std::vector<std::vector<double>>{{0, 0}, {1, 0}, {1, 1}});
  CHECK(minimal_form(b).points == b.points);
}

TEST_CASE("non-finite coordinates are rejected") {
  PlPath p = make({{0, 0}, {1, 0}});
  p.points[1][0] = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(p.validate(), domain_error);
  p.points[1][0] = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(minimal_form(p), domain_error);
}

TEST_CASE("concatenation and inverse") {
  const auto ab = path_concat(make({{0, 0}, {1, 0}}), make({{1, 0}, {1, 1}}));
  CHECK(ab.points == std::vector<std::vector<double>>{{0, 0}, {1, 0}, {1, 1}});

  const auto a = make({{0, 0}, {1, 0}});
  CHECK(path_concat(a, constant_path({1, 0})).points == a.points);

  CHECK_THROWS_AS(path_concat(a, make({{0, 1}, {1, 1}})), composition_error);
  CHECK_THROWS_AS(path_concat(a, make({{0, 0, 0}, {1, 1, 1}})), shape_error);

  CHECK(path_inverse(a).points ==
        std::vector<std::vector<double>>{{1, 0}, {0, 0}});
  CHECK(path_inverse(constant_path({2, 3})).points ==
        std::vector<std::vector<double>>{{2, 3}});
  CHECK(path_inverse(path_inverse(ab)).points == ab.points);
}

TEST_CASE("concatenation is associative after minimal form") {
  const auto a = make({{0, 0}, {1, 0}});
  const auto b = make({{1, 0}, {1, 1}, {2, 1}});
  const auto c = make({{2, 1}, {0, 0}});
  CHECK(path_concat(path_concat(a, b), c).points ==
        path_concat(a, path_concat(b, c)).points);
}

TEST_CASE("edge word parsing and reduction") {
  const auto w1 = retrace_reduce(parse_edge_word("a b b' a'"));
  CHECK(w1.word.empty());
  CHECK(is_tree_like(parse_edge_word("a b b' a'")));

  const auto w2 = parse_edge_word("a b a'");
  CHECK(format_edge_word(retrace_reduce(w2)) == "a b a'");

  CHECK(format_edge_word(retrace_reduce(parse_edge_word("a a' a"))) == "a");

  // commutator in a wedge of two loops
  CHECK_FALSE(is_tree_like(parse_edge_word("a b a' b'")));
  CHECK(is_tree_like(parse_edge_word("")));

  CHECK_THROWS_AS(parse_edge_word("a ' b"), parse_error);
  CHECK_THROWS_AS(parse_edge_word("a b''"), parse_error);
}

TEST_CASE("closedness against incidence data") {
  EdgeWord w = parse_edge_word("a b b' a'");
  // a: 0 -> 1, b: 1 -> 2
  w.incidence = {{0, 1}, {1, 2}};
  CHECK(is_tree_like(w));

  EdgeWord open = parse_edge_word("a b");
  open.incidence = {{0, 1}, {1, 2}};
  CHECK_THROWS_AS(is_tree_like(open), domain_error);

  EdgeWord broken = parse_edge_word("a a");
  broken.incidence = {{0, 1}};
  CHECK_THROWS_AS(is_tree_like(broken), domain_error);
}

TEST_CASE("closed walks in a simplicial tree are tree-like") {
  std::mt19937 rng(17);
  for (int rep = 0; rep < 50; ++rep) {
    // random tree on 8 vertices: parent[v] < v, edge v: parent -> v
    const int vertices = 8;
    EdgeWord w;
    std::vector<int> parent(vertices, 0);
    for (int v = 1; v < vertices; ++v) {
      std::uniform_int_distribution<int> pick(0, v - 1);
      parent[static_cast<std::size_t>(v)] = pick(rng);
      w.alphabet.push_back("e" + std::to_string(v));
      w.incidence.push_back({parent[static_cast<std::size_t>(v)], v});
    }
    // random walk from the root that retreats back to it
    std::vector<int> stack{0};
    std::uniform_int_distribution<int> coin(0, 2);
    for (int moves = 0; moves < 30; ++moves) {
      const int at = stack.back();
      std::vector<int> children;
      for (int v = 1; v < vertices; ++v)
        if (parent[static_cast<std::size_t>(v)] == at) children.push_back(v);
      if (!children.empty() && (stack.size() == 1 || coin(rng) != 0)) {
        std::uniform_int_distribution<int> pick(0, static_cast<int>(children.size()) - 1);
        const int v = children[static_cast<std::size_t>(pick(rng))];
        w.word.push_back({v - 1, false});
        stack.push_back(v);
      } else if (stack.size() > 1) {
        w.word.push_back({at - 1, true});
        stack.pop_back();
      }
    }
    while (stack.size() > 1) {
      w.word.push_back({stack.back() - 1, true});
      stack.pop_back();
    }
    CHECK(is_tree_like(w));
  }
}

TEST_CASE("reduction is confluent and respects group laws") {
  std::mt19937 rng(29);
  for (int rep = 0; rep < 100; ++rep) {
    const auto w = random_word(rng, 4, 50);
    const auto reduced = retrace_reduce(w);
    CHECK(retrace_reduce(reduced).word == reduced.word);
    for (int tries = 0; tries < 3; ++tries)
      CHECK(reduce_random_order(w, rng).word == reduced.word);

    // w w^-1 reduces to the empty word
    EdgeWord inv = w;
    inv.word.clear();
    for (auto it = w.word.rbegin(); it != w.word.rend(); ++it)
      inv.word.push_back({it->edge, !it->inverse});
    EdgeWord both = w;
    both.word.insert(both.word.end(), inv.word.begin(), inv.word.end());
    CHECK(retrace_reduce(both).word.empty());
  }
}

TEST_CASE("geometric retrace reduction") {
  const auto r1 = geometric_retrace_reduce(make({{0, 0}, {1, 0}, {0, 0}}));
  CHECK(r1.points == std::vector<std::vector<double>>{{0, 0}});

  const auto keep = make({{0, 0}, {1, 0}, {1, 1}});
  CHECK(geometric_retrace_reduce(keep).points == keep.points);

  const auto nested =
      geometric_retrace_reduce(make({{0, 0}, {1, 0}, {2, 0}, {1, 0}, {0, 0}}));
  CHECK(nested.points == std::vector<std::vector<double>>{{0, 0}});

  // epsilon mode tolerates slightly off backtracks
  const auto eps = geometric_retrace_reduce(
      make({{0, 0}, {1, 0}, {1e-12, 1e-12}}), 1e-9);
  CHECK(eps.points.size() == 1);
}
