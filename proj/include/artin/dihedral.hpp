#ifndef ARTIN_DIHEDRAL_HPP
#define ARTIN_DIHEDRAL_HPP

#include <string>
#include <utility>
#include <vector>

#include "artin/words.hpp"

namespace artin {

class PresentationGraph;

// Canonical Garside form Delta^p x1...xr in the dihedral Artin group
// <a,b | Pi(a,b;m) = Pi(b,a;m)>, with Delta = Pi(a,b;m) and left-greedy
// proper simple factors. Two edge words are equal iff their forms match.
//
// Simples are alternating positive words, stored as (first atom, length)
// with atoms 0/1 and 1 <= length <= m-1.
struct DihedralForm {
  int m = 0;
  long long delta_power = 0;
  std::vector<std::pair<int, int>> factors;

  friend bool operator==(const DihedralForm&, const DihedralForm&) = default;

  // injective serialization, usable as a dedup key
  std::string key() const;
};

// letters over atoms {0,1} with signs
using AtomWord = std::vector<std::pair<int, int>>;

DihedralForm dihedral_normal_form(int m, const AtomWord& word);

// Spells the form back as an atom word: Delta^p followed by the factors
// (negative p spelled with inverse Delta blocks).
AtomWord dihedral_form_word(const DihedralForm& f);

// Graph-level wrapper for a word supported on the edge {s,t} (atoms in
// edge-index order u < v). Throws GraphError("ForeignGenerator") when the
// word leaves the edge.
DihedralForm dihedral_normal_form(const PresentationGraph& g, int edge_index,
                                  const Word& w);

Word dihedral_canonical_word(const PresentationGraph& g, int edge_index,
                             const DihedralForm& f);

}  // namespace artin

#endif
