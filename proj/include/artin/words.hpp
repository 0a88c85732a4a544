#ifndef ARTIN_WORDS_HPP
#define ARTIN_WORDS_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace artin {

class PresentationGraph;

// One signed generator occurrence. `gen` indexes into the ambient graph's
// vertex list; `sign` is +1 or -1.
struct Letter {
  int gen = 0;
  int sign = +1;

  friend bool operator==(const Letter&, const Letter&) = default;
};

// A group element spelled as a sequence of signed generators. The empty
// word is the identity.
using Word = std::vector<Letter>;

inline Letter inverse(Letter l) { return Letter{l.gen, -l.sign}; }

// Total order used for all canonical enumerations: generator index first,
// positive before negative.
inline int letter_rank(Letter l) { return 2 * l.gen + (l.sign < 0 ? 1 : 0); }

Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);

// Removes adjacent cancelling pairs until none remain.
Word free_reduce(Word w);

// Splits w (after free reduction) as conjugator * core * conjugator^-1
// with core cyclically reduced.
struct CyclicReduction {
  Word core;
  Word conjugator;
};
CyclicReduction cyclic_reduce(const Word& w);

// Alternating product x y x y ... with k letters, starting with x.
Word pi_word(int x, int y, int k);

// Sorted list of distinct generator indices occurring in w.
std::vector<int> support(const Word& w);

// shortlex comparison under letter_rank
bool shortlex_less(const Word& a, const Word& b);

// Compact injective encoding, usable as a hash map key. Requires fewer
// than 127 generators.
std::string pack(const Word& w);
Word unpack(const std::string& s);

// Word text syntax: whitespace-separated tokens `name` or `name^-1`;
// the empty string denotes the identity.
Word parse_word(const PresentationGraph& g, const std::string& text);
std::string format_word(const PresentationGraph& g, const Word& w);

// Search budget for the three-valued word-problem engine. `padding`
// bounds how far intermediate words may exceed the longer input;
// `nodes` bounds the number of words visited.
struct Budget {
  int padding = 4;
  long long nodes = 1'000'000;
};

// Freely reduced words over `generators` signed letters in shortlex order:
// empty word first, then length 1, 2, ...
class ReducedWordStream {
 public:
  explicit ReducedWordStream(int generators) : n_(generators) {}
  // never exhausts for generators >= 1
  std::optional<Word> next();

 private:
  bool reduced_at(size_t i) const;
  void fill_min(size_t from);
  void advance();

  int n_;
  bool emitted_empty_ = false;
  std::vector<int> ranks_;
};

}  // namespace artin

#endif
