#ifndef ARTIN_TWISTED_HPP
#define ARTIN_TWISTED_HPP

#include <optional>
#include <string>
#include <vector>

#include "artin/automorphism.hpp"
#include "artin/word_problem.hpp"

namespace artin {

enum class VerdictKind { Yes, No, Unknown };

// Outcome of a twisted-conjugacy query. Yes carries a witness z with
// u = phi(z) v z^-1; No names the quotient certifying unsolvability;
// Unknown reports the spent budget.
struct Verdict {
  VerdictKind kind = VerdictKind::Unknown;
  Word witness;
  std::string certificate;
  BudgetReport report;
  int rep_index = -1;  // orbit queries: which representative matched
};

// Rewrites u = phi(z) v z^-1 with phi = (g, pi, eps) into the equivalent
// g^-1 u = psi(z) (g^-1 v) z^-1 with diagram-only psi; same witnesses.
struct StrippedQuery {
  OuterClass psi;
  Word u, v;
};
StrippedQuery strip_inner(const PresentationGraph& g, const Automorphism& phi,
                          const Word& u, const Word& v);

// Presentation of A rtimes <psi>: Artin relations, x s x^-1 = psi(s), and
// optionally x^k = 1 with k the order of psi. Words use indices into
// `generators` (the graph's generators plus the fresh symbol last).
struct ExtensionPresentation {
  std::vector<std::string> generators;
  std::vector<std::pair<Word, Word>> relations;

  std::string format() const;
};
ExtensionPresentation build_extension(const PresentationGraph& g,
                                      const OuterClass& psi, bool finite_order);

// Abelianized Reidemeister obstruction: ab(u) - ab(v) must lie in the
// image of (psi_ab - id). Returns a certificate name when it does not.
std::optional<std::string> twisted_ab_certificate(const WordProblemContext& ctx,
                                                  const OuterClass& psi,
                                                  const Word& u, const Word& v);

Certainty verify_witness(const WordProblemContext& ctx, const Automorphism& phi,
                         const Word& u, const Word& v, const Word& z,
                         const Budget& budget = {});

// The anytime decision procedure: strip the inner part, try the abelian
// certificate, then search witnesses in canonical order. Throws
// GraphError("IneligibleGraph") when the graph is covered by neither route
// and assume_out_generated is unset.
Verdict tcp(const WordProblemContext& ctx, const Automorphism& phi,
            const Word& u, const Word& v, const Budget& budget = {},
            bool assume_out_generated = false);

// Orbit decidability over a finite set of outer representatives: is
// apply(psi, u) conjugate to v for some psi in reps?
Verdict orbit_decide(const WordProblemContext& ctx, const Word& u,
                     const Word& v, const std::vector<OuterClass>& reps,
                     const Budget& budget = {},
                     bool assume_out_generated = false);

}  // namespace artin

#endif
