#include "holosig/word.hpp"

#include <limits>

#include "holosig/errors.hpp"

namespace holosig {

std::size_t level_size(int n, int p) {
  if (n < 1) throw domain_error("alphabet size must be at least 1");
  if (p < 0) throw domain_error("level must be nonnegative");
  std::size_t size = 1;
  const std::size_t limit = std::numeric_limits<std::size_t>::max();
  for (int i = 0; i < p; ++i) {
    if (size > limit / static_cast<std::size_t>(n))
      throw cap_error("level size overflows");
    size *= static_cast<std::size_t>(n);
  }
  return size;
}

std::size_t word_index(const Word& w, int n) {
  if (n < 1) throw domain_error("alphabet size must be at least 1");
  std::size_t index = 0;
  for (int letter : w) {
    if (letter < 1 || letter > n)
      throw domain_error("letter " + std::to_string(letter) +
                         " outside alphabet 1.." + std::to_string(n));
    index = index * static_cast<std::size_t>(n) +
            static_cast<std::size_t>(letter - 1);
  }
  return index;
}

Word word_from_index(std::size_t index, int p, int n) {
  if (index >= level_size(n, p)) throw domain_error("word index out of range");
  Word w(static_cast<std::size_t>(p));
  for (int i = p - 1; i >= 0; --i) {
    w[static_cast<std::size_t>(i)] =
        static_cast<int>(index % static_cast<std::size_t>(n)) + 1;
    index /= static_cast<std::size_t>(n);
  }
  return w;
}

std::string word_to_string(const Word& w) {
  bool wide = false;
  for (int letter : w)
    if (letter > 9) wide = true;
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (wide && i > 0) out += '.';
    out += std::to_string(w[i]);
  }
  return out;
}

Word word_from_string(const std::string& s) {
  Word w;
  if (s.empty()) return w;
  if (s.find('.') != std::string::npos) {
    std::size_t pos = 0;
    while (pos <= s.size()) {
      std::size_t dot = s.find('.', pos);
      if (dot == std::string::npos) dot = s.size();
      const std::string tok = s.substr(pos, dot - pos);
      if (tok.empty()) throw parse_error("empty letter in word '" + s + "'");
      for (char c : tok)
        if (c < '0' || c > '9') throw parse_error("bad word '" + s + "'");
      w.push_back(std::stoi(tok));
      pos = dot + 1;
    }
  } else {
    for (char c : s) {
      if (c < '1' || c > '9') throw parse_error("bad word '" + s + "'");
      w.push_back(c - '0');
    }
  }
  for (int letter : w)
    if (letter < 1) throw parse_error("bad word '" + s + "'");
  return w;
}

bool graded_lex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

} // namespace holosig
