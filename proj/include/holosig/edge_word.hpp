#ifndef HOLOSIG_EDGE_WORD_HPP
#define HOLOSIG_EDGE_WORD_HPP

#include <string>
#include <utility>
#include <vector>

namespace holosig {

// Word over a finite alphabet of oriented edges and their formal inverses.
// When incidence data is present the edges live in a graph on integer
// vertices; without it every edge is a loop at a single vertex, so every
// word is closed.
struct EdgeWord {
  struct Letter {
    int edge = 0;
    bool inverse = false;
    bool operator==(const Letter&) const = default;
  };

  std::vector<std::string> alphabet;
  // (tail, head) per edge; empty means the one-vertex model
  std::vector<std::pair<int, int>> incidence;
  std::vector<Letter> word;
};

// text format: whitespace-separated labels, inverse marked by a trailing
// apostrophe, e.g. "a b b' a'"
EdgeWord parse_edge_word(const std::string& text);
std::string format_edge_word(const EdgeWord& w);

// cancels adjacent x x^-1 pairs until none remain; the result does not
// depend on the cancellation order
EdgeWord retrace_reduce(const EdgeWord& w);

// true iff the closed word reduces to the empty word; requires w to be a
// closed path when incidence data is present
bool is_tree_like(const EdgeWord& w);

} // namespace holosig

#endif
