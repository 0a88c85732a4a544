#ifndef ARTIN_AUTOMORPHISM_HPP
#define ARTIN_AUTOMORPHISM_HPP

#include <string>
#include <vector>

#include "artin/graph.hpp"
#include "artin/words.hpp"

namespace artin {

// Normalized triple (inner word g, labelled-graph permutation pi,
// inversion bit): acts by s |-> g pi(s)^{(-1)^inv} g^-1.
struct Automorphism {
  Word inner;
  std::vector<int> perm;
  int inv = 0;
};

// Class in Out: diagram part only. For the eligible graphs these exhaust
// Out, so enumeration never searches inner twists.
struct OuterClass {
  std::vector<int> perm;
  int inv = 0;

  friend bool operator==(const OuterClass&, const OuterClass&) = default;
};

std::vector<int> identity_perm(int n);
Automorphism identity_automorphism(const PresentationGraph& g);
Automorphism global_inversion(const PresentationGraph& g);
Automorphism conjugation_by(const PresentationGraph& g, const Word& w);
Automorphism to_automorphism(const PresentationGraph& g, const OuterClass& c);

// Validates that perm preserves adjacency and labels; throws
// GraphError("NotAnAutomorphism") otherwise.
void check_graph_automorphism(const PresentationGraph& g,
                              const std::vector<int>& perm);

// Letterwise image, freely reduced.
Word apply(const PresentationGraph& g, const Automorphism& a, const Word& w);

Automorphism compose(const PresentationGraph& g, const Automorphism& a,
                     const Automorphism& b);
Automorphism invert(const PresentationGraph& g, const Automorphism& a);

// All (perm, inv) pairs, perm over graph_automorphisms(g), inversion bit
// inner loop; 2 * |Aut(graph)| entries, (id, 0) first.
std::vector<OuterClass> outer_representatives(const PresentationGraph& g);

// Smallest k >= 1 with (perm, inv)^k = (id, 0).
long long outer_order(const OuterClass& c);

// Text form: `inner=<word>; perm=<a->b,b->c,...>; inv=<0|1>`, every part
// optional, unlisted vertices fixed.
Automorphism parse_automorphism(const PresentationGraph& g,
                                const std::string& text);
std::string format_automorphism(const PresentationGraph& g,
                                const Automorphism& a);

}  // namespace artin

#endif
