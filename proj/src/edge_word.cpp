#include "holosig/edge_word.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "holosig/errors.hpp"

namespace holosig {

EdgeWord parse_edge_word(const std::string& text) {
  EdgeWord out;
  std::map<std::string, int> index;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    bool inverse = false;
    if (token.back() == '\'') {
      inverse = true;
      token.pop_back();
    }
    if (token.empty())
      throw parse_error("stray apostrophe in edge word");
    for (char c : token)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
        throw parse_error("bad edge token '" + token + "'");
    auto [it, inserted] = index.try_emplace(token, static_cast<int>(out.alphabet.size()));
    if (inserted) out.alphabet.push_back(token);
    out.word.push_back({it->second, inverse});
  }
  return out;
}

std::string format_edge_word(const EdgeWord& w) {
  std::string out;
  for (const auto& l : w.word) {
    if (!out.empty()) out += ' ';
    out += w.alphabet[static_cast<std::size_t>(l.edge)];
    if (l.inverse) out += '\'';
  }
  return out;
}

EdgeWord retrace_reduce(const EdgeWord& w) {
  EdgeWord out;
  out.alphabet = w.alphabet;
  out.incidence = w.incidence;
  for (const auto& l : w.word) {
    if (!out.word.empty() && out.word.back().edge == l.edge &&
        out.word.back().inverse != l.inverse) {
      out.word.pop_back();
    } else {
      out.word.push_back(l);
    }
  }
  return out;
}

bool is_tree_like(const EdgeWord& w) {
  if (!w.incidence.empty()) {
    if (w.incidence.size() != w.alphabet.size())
      throw shape_error("incidence size differs from alphabet");
    if (!w.word.empty()) {
      const auto ends = [&](const EdgeWord::Letter& l) {
        const auto& [tail, head] = w.incidence[static_cast<std::size_t>(l.edge)];
        return l.inverse ? std::pair{head, tail} : std::pair{tail, head};
      };
      const int start = ends(w.word.front()).first;
      int at = start;
      for (const auto& l : w.word) {
        const auto [from, to] = ends(l);
        if (from != at)
          throw domain_error("edge word is not a path in the graph");
        at = to;
      }
      if (at != start) throw domain_error("edge word is not closed");
    }
  }
  return retrace_reduce(w).word.empty();
}

} // namespace holosig
