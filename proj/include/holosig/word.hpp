#ifndef HOLOSIG_WORD_HPP
#define HOLOSIG_WORD_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace holosig {

// A word is a finite sequence of letters from {1..n}. The empty word is the
// unique word of length zero. Words of equal length compare lexicographically
// through std::vector's operator<.
using Word = std::vector<int>;

// n^p, with an overflow check.
std::size_t level_size(int n, int p);

// Lexicographic rank of w among all words of the same length, i.e. the
// base-n positional code of (letters - 1). The empty word maps to 0.
std::size_t word_index(const Word& w, int n);

// Inverse of word_index for words of length p.
Word word_from_index(std::size_t index, int p, int n);

// Letters concatenated as digits ("112"); dot-separated once any letter
// needs more than one digit ("10.2.1"). Empty word prints as "".
std::string word_to_string(const Word& w);
Word word_from_string(const std::string& s);

// length-then-lexicographic order, the order used for bases and witnesses
bool graded_lex_less(const Word& a, const Word& b);

} // namespace holosig

#endif
