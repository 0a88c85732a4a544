#ifndef ARTIN_COXETER_HPP
#define ARTIN_COXETER_HPP

#include "artin/graph.hpp"
#include "artin/words.hpp"

namespace artin {

// Decides whether the image of w in the Coxeter quotient W is trivial, by
// exhaustive closure under braid moves Pi(s,t;m) <-> Pi(t,s;m) and
// deletions ss -> (empty). Length never grows, so the closure is finite
// and the answer exact.
bool coxeter_trivial(const PresentationGraph& g, const Word& w);

// Same procedure with a node cap; returns no value when the cap is hit.
// The uncapped entry point above never gives up.
std::optional<bool> coxeter_trivial_capped(const PresentationGraph& g,
                                           const Word& w, long long max_nodes);

}  // namespace artin

#endif
