#ifndef ARTIN_ABELIAN_HPP
#define ARTIN_ABELIAN_HPP

#include <vector>

#include "artin/graph.hpp"
#include "artin/words.hpp"

namespace artin {

// H1 of an Artin group: Z^V modulo s = t for every odd-labelled edge, so a
// free abelian group on the components of the odd-edge subgraph. Basis
// components are ordered by their smallest vertex.
struct AbelianStructure {
  std::vector<int> component_of_gen;  // per generator
  int rank = 0;
};

AbelianStructure abelian_structure(const PresentationGraph& g);

std::vector<long long> abelianize(const AbelianStructure& ab, const Word& w);
std::vector<long long> abelianize(const PresentationGraph& g, const Word& w);

// Integer linear solvability of M x = d (M given row-major, size rows x
// cols), via Smith reduction. Exact over Z.
bool integer_system_solvable(std::vector<std::vector<long long>> M,
                             std::vector<long long> d);

}  // namespace artin

#endif
