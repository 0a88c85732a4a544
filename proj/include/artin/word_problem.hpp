#ifndef ARTIN_WORD_PROBLEM_HPP
#define ARTIN_WORD_PROBLEM_HPP

#include <optional>
#include <string>
#include <vector>

#include "artin/abelian.hpp"
#include "artin/dihedral.hpp"
#include "artin/graph.hpp"
#include "artin/words.hpp"

namespace artin {

enum class CertaintyKind { Equal, NotEqual, Unknown };

// One rewrite: splice `inserted` for `removed` at `pos`, then freely
// reduce. For relator steps removed * inserted^-1 is literally a cyclic
// rotation of the edge relator or its inverse; free steps have edge = -1
// and empty inserted (the removed pair cancels).
struct RewriteStep {
  size_t pos = 0;
  Word removed;
  Word inserted;
  int edge = -1;
};

struct BudgetReport {
  long long nodes_used = 0;
  int padding = 0;
  int max_len = 0;
  std::string note;
};

// Three-valued verdict. Equal and NotEqual are certified: Equal carries a
// rewrite trace from u to v (or a normal-form certificate when
// trace_is_rewrite is false), NotEqual names the separating quotient.
struct Certainty {
  CertaintyKind kind = CertaintyKind::Unknown;
  std::string engine;
  std::vector<RewriteStep> trace;
  bool trace_is_rewrite = true;
  std::string certificate;
  BudgetReport report;
};

// Label-preserving collapse of the generators onto a single edge (or a
// free pair), giving an exactly decidable quotient used for NotEqual
// certificates.
struct FoldQuotient {
  std::vector<int> atom_of_gen;  // 0/1 per generator
  int target_label = 0;          // 0 when the target pair is free
  std::string name;
};

// Precomputed per-graph data for the word-problem engine. All methods are
// const and safe to share across threads.
class WordProblemContext {
 public:
  explicit WordProblemContext(PresentationGraph g);

  const PresentationGraph& graph() const { return graph_; }
  const AbelianStructure& abelian() const { return abelian_; }
  const std::vector<FoldQuotient>& folds() const { return folds_; }

  // Strategy: free-reduction syntactic equality; exact engines on words
  // supported by at most two generators; abelianization, fold and Coxeter
  // quotient certificates; then bounded bidirectional relator search.
  Certainty equal_words(const Word& u, const Word& v, const Budget& budget,
                        bool want_trace = true) const;

  bool is_single_edge() const { return single_edge_; }

  // Injective invariant of the group element: equal words always get equal
  // keys. On edge graphs (and free/cyclic ones) the key is complete, i.e.
  // distinct elements get distinct keys.
  std::string invariant_key(const Word& w) const;
  bool invariant_key_complete() const;

  // all cyclic rotations of every edge relator and its inverse
  struct RelatorRotation {
    Word word;
    int edge;
  };
  const std::vector<RelatorRotation>& relator_rotations() const {
    return rotations_;
  }

 private:
  PresentationGraph graph_;
  AbelianStructure abelian_;
  std::vector<FoldQuotient> folds_;
  std::vector<RelatorRotation> rotations_;
  bool single_edge_ = false;

  std::optional<Certainty> exact_small_support(const Word& u, const Word& v,
                                               const Budget& budget,
                                               bool want_trace) const;
  std::optional<Certainty> quotient_certificates(const Word& u, const Word& v,
                                                 const Budget& budget) const;
  Certainty bounded_search(const Word& u, const Word& v,
                           const Budget& budget) const;
};

// Relator word Pi(s,t;m) Pi(t,s;m)^-1 for an edge, spelled from the lower
// endpoint.
Word edge_relator(const PresentationGraph& g, int edge_index);

// Free-function form of the engine.
Certainty equal_words(const PresentationGraph& g, const Word& u, const Word& v,
                      const Budget& budget = {});

// Replays an Equal trace: returns true when the steps transform
// free_reduce(u) into free_reduce(v) and every relator step is genuine.
bool verify_trace(const PresentationGraph& g, const Word& u, const Word& v,
                  const std::vector<RewriteStep>& trace);

}  // namespace artin

#endif
