#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cubedist/word.hpp"

namespace cubedist {

// Positive word of length m^2 over letters[0..m-1] in which every two-letter
// subword occurs at most once:
//   (x1 x1 x2 x1 x3 ... x1 xm)(x2 x2 x3 ... x2 xm) ... (x_{m-1} x_{m-1} xm) xm
Word sigma(const std::vector<GenId>& letters);
// Same over generator ids 0..m-1.
Word sigma(int m);

// A repeated two-letter subword: 1-based start positions of both occurrences.
// For a block list, positions are (block, offset) pairs flattened as block*len+offset+1.
struct Repeat {
  std::size_t first = 0;
  std::size_t second = 0;
};

// Throws NotPositive on negative letters.
std::optional<Repeat> check_no_repeat(const Word& w);
// Repetition check across a whole list of words (pairs never straddle two words).
// Positions count letters through the concatenation of the list.
std::optional<Repeat> check_no_repeat(const std::vector<Word>& words);

// First `count` disjoint consecutive blocks of length `len`; TooShort if they do not fit.
std::vector<Word> carve(const Word& w, std::size_t count, std::size_t len);

}  // namespace cubedist
