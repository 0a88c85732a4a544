#include "artin/twisted.hpp"

#include <algorithm>
#include <set>

namespace artin {

StrippedQuery strip_inner(const PresentationGraph& g, const Automorphism& phi,
                          const Word& u, const Word& v) {
  StrippedQuery q;
  q.psi = {phi.perm, phi.inv};
  Word ginv = inverse(phi.inner);
  q.u = free_reduce(concat(ginv, u));
  q.v = free_reduce(concat(ginv, v));
  (void)g;
  return q;
}

std::string ExtensionPresentation::format() const {
  auto spell = [&](const Word& w) {
    if (w.empty()) return std::string("1");
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
      if (i) s += ' ';
      s += generators[w[i].gen];
      if (w[i].sign < 0) s += "^-1";
    }
    return s;
  };
  std::string out = "< ";
  for (size_t i = 0; i < generators.size(); ++i) {
    if (i) out += ", ";
    out += generators[i];
  }
  out += " | ";
  for (size_t i = 0; i < relations.size(); ++i) {
    if (i) out += ", ";
    out += spell(relations[i].first) + " = " + spell(relations[i].second);
  }
  out += " >";
  return out;
}

ExtensionPresentation build_extension(const PresentationGraph& g,
                                      const OuterClass& psi, bool finite_order) {
  ExtensionPresentation p;
  p.generators = g.vertex_names();
  std::string fresh = "x";
  for (int k = 0; true; ++k) {
    bool clash = false;
    for (const auto& n : p.generators)
      if (n == fresh) clash = true;
    if (!clash) break;
    fresh = "x" + std::to_string(k);
  }
  p.generators.push_back(fresh);
  const int x = g.vertex_count();
  for (const auto& e : g.edges())
    p.relations.emplace_back(pi_word(e.u, e.v, e.m), pi_word(e.v, e.u, e.m));
  if (finite_order) {
    long long k = outer_order(psi);
    Word xs(static_cast<size_t>(k), Letter{x, +1});
    p.relations.emplace_back(xs, Word{});
  }
  int sign = psi.inv ? -1 : +1;
  for (int s = 0; s < g.vertex_count(); ++s) {
    Word lhs{{x, +1}, {s, +1}, {x, -1}};
    Word rhs{{psi.perm[s], sign}};
    p.relations.emplace_back(std::move(lhs), std::move(rhs));
  }
  return p;
}

namespace {

// column c of (psi_ab - id) over the odd-component basis
std::vector<std::vector<long long>> twisted_ab_matrix(
    const WordProblemContext& ctx, const OuterClass& psi) {
  const AbelianStructure& ab = ctx.abelian();
  const int rank = ab.rank;
  // image component of each component under the vertex permutation
  std::vector<int> image(rank, -1);
  for (int v = 0; v < ctx.graph().vertex_count(); ++v)
    image[ab.component_of_gen[v]] = ab.component_of_gen[psi.perm[v]];
  long long sign = psi.inv ? -1 : +1;
  std::vector<std::vector<long long>> M(rank,
                                        std::vector<long long>(rank, 0));
  for (int c = 0; c < rank; ++c) {
    M[image[c]][c] += sign;
    M[c][c] -= 1;
  }
  return M;
}

}  // namespace

std::optional<std::string> twisted_ab_certificate(const WordProblemContext& ctx,
                                                  const OuterClass& psi,
                                                  const Word& u, const Word& v) {
  std::vector<long long> au = abelianize(ctx.abelian(), u);
  std::vector<long long> av = abelianize(ctx.abelian(), v);
  std::vector<long long> d(au.size());
  for (size_t i = 0; i < au.size(); ++i) d[i] = au[i] - av[i];
  if (integer_system_solvable(twisted_ab_matrix(ctx, psi), d))
    return std::nullopt;
  return "abelianization";
}

Certainty verify_witness(const WordProblemContext& ctx, const Automorphism& phi,
                         const Word& u, const Word& v, const Word& z,
                         const Budget& budget) {
  Word rhs = free_reduce(
      concat(apply(ctx.graph(), phi, z), concat(v, inverse(z))));
  return ctx.equal_words(u, rhs, budget);
}

namespace {

// Definite cheap equality: syntactic or exact two-generator parabolic.
// nullopt means "not decided here".
std::optional<bool> quick_equal(const WordProblemContext& ctx, const Word& a,
                                const Word& b) {
  if (a == b) return true;
  std::vector<int> sup = support(concat(a, b));
  if (sup.size() > 2) return std::nullopt;
  if (sup.size() == 2 && ctx.graph().adjacent(sup[0], sup[1])) {
    int ei = -1;
    for (int i = 0; i < ctx.graph().edge_count(); ++i)
      if (ctx.graph().edges()[i].u == sup[0] && ctx.graph().edges()[i].v == sup[1])
        ei = i;
    return dihedral_normal_form(ctx.graph(), ei, a) ==
           dihedral_normal_form(ctx.graph(), ei, b);
  }
  return false;  // free parabolic: reduced words are canonical
}

// Candidate witnesses: the identity first, then cyclic subwords of u and
// v, freely reduced, deduplicated, shortlex order.
std::vector<Word> harvest_seeds(const Word& u, const Word& v) {
  std::set<std::string> seen;
  std::vector<Word> seeds;
  seeds.push_back({});
  seen.insert("");
  for (const Word* w : {&u, &v}) {
    const size_t n = w->size();
    if (n == 0) continue;
    Word doubled = concat(*w, *w);
    for (size_t start = 0; start < n; ++start) {
      for (size_t len = 1; len <= n; ++len) {
        Word sub =
            free_reduce(Word(doubled.begin() + start,
                             doubled.begin() + start + len));
        if (seen.insert(pack(sub)).second) seeds.push_back(std::move(sub));
      }
    }
  }
  std::sort(seeds.begin() + 1, seeds.end(), shortlex_less);
  return seeds;
}

}  // namespace

Verdict tcp(const WordProblemContext& ctx, const Automorphism& phi,
            const Word& u, const Word& v, const Budget& budget,
            bool assume_out_generated) {
  EligibilityReport rep = eligibility(ctx.graph(), assume_out_generated);
  if (rep.route == EligibilityRoute::Ineligible)
    throw GraphError("IneligibleGraph",
                     "graph is covered by neither route; pass "
                     "assume-out-generated to proceed anyway");

  StrippedQuery q = strip_inner(ctx.graph(), phi, u, v);
  if (auto cert = twisted_ab_certificate(ctx, q.psi, q.u, q.v)) {
    Verdict no;
    no.kind = VerdictKind::No;
    no.certificate = *cert;
    return no;
  }

  const Automorphism psi = to_automorphism(ctx.graph(), q.psi);
  const AbelianStructure& ab = ctx.abelian();
  std::vector<long long> target = abelianize(ab, q.u);
  {
    std::vector<long long> av = abelianize(ab, q.v);
    for (size_t i = 0; i < target.size(); ++i) target[i] -= av[i];
  }
  // component image of psi_ab, for the candidate filter
  std::vector<int> comp_image(ab.rank, -1);
  for (int gidx = 0; gidx < ctx.graph().vertex_count(); ++gidx)
    comp_image[ab.component_of_gen[gidx]] =
        ab.component_of_gen[q.psi.perm[gidx]];
  const long long ab_sign = q.psi.inv ? -1 : +1;
  auto ab_filter = [&](const Word& z) {
    std::vector<long long> az = abelianize(ab, z);
    std::vector<long long> img(az.size(), 0);
    for (size_t c = 0; c < az.size(); ++c) img[comp_image[c]] += ab_sign * az[c];
    for (size_t c = 0; c < az.size(); ++c)
      if (img[c] - az[c] != target[c]) return false;
    return true;
  };

  // the witness z solves u' = psi(z) v' z^-1; check candidates with the
  // cheap definite engines, canonical order: harvested seeds first, then
  // the shortlex stream. Candidates whose full invariant key matches get a
  // small bounded-search check, charged against the same node budget.
  long long nodes = 0;
  int max_len_seen = 0;
  const std::string target_key = ctx.invariant_key(q.u);
  Budget mini;
  mini.nodes = 400;
  mini.padding = 3;
  auto try_candidate = [&](const Word& z) -> bool {
    max_len_seen = std::max(max_len_seen, static_cast<int>(z.size()));
    if (!ab_filter(z)) return false;
    Word rhs = free_reduce(
        concat(apply(ctx.graph(), psi, z), concat(q.v, inverse(z))));
    auto eq = quick_equal(ctx, q.u, rhs);
    if (eq.has_value()) return *eq;
    if (ctx.invariant_key(rhs) != target_key) return false;
    nodes += mini.nodes;
    return ctx.equal_words(q.u, rhs, mini, false).kind == CertaintyKind::Equal;
  };

  std::set<std::string> tried;
  for (const Word& z : harvest_seeds(q.u, q.v)) {
    if (++nodes > budget.nodes) break;
    tried.insert(pack(z));
    if (try_candidate(z)) {
      Verdict yes;
      yes.kind = VerdictKind::Yes;
      yes.witness = z;
      return yes;
    }
  }
  ReducedWordStream stream(ctx.graph().vertex_count());
  while (nodes <= budget.nodes) {
    auto z = stream.next();
    if (!z) break;
    if (tried.count(pack(*z))) continue;
    if (++nodes > budget.nodes) break;
    if (try_candidate(*z)) {
      Verdict yes;
      yes.kind = VerdictKind::Yes;
      yes.witness = *z;
      return yes;
    }
  }

  Verdict unknown;
  unknown.kind = VerdictKind::Unknown;
  unknown.report = {nodes, budget.padding, max_len_seen,
                    "witness candidates exhausted budget"};
  return unknown;
}

Verdict orbit_decide(const WordProblemContext& ctx, const Word& u,
                     const Word& v, const std::vector<OuterClass>& reps,
                     const Budget& budget, bool assume_out_generated) {
  if (reps.empty())
    throw GraphError("EmptyRepresentatives", "orbit_decide needs representatives");
  bool any_unknown = false;
  BudgetReport last_report;
  for (size_t i = 0; i < reps.size(); ++i) {
    Word image = apply(ctx.graph(), to_automorphism(ctx.graph(), reps[i]), u);
    Verdict verdict = tcp(ctx, identity_automorphism(ctx.graph()), image, v,
                          budget, assume_out_generated);
    if (verdict.kind == VerdictKind::Yes) {
      verdict.rep_index = static_cast<int>(i);
      return verdict;
    }
    if (verdict.kind == VerdictKind::Unknown) {
      any_unknown = true;
      last_report = verdict.report;
    }
  }
  Verdict out;
  if (any_unknown) {
    out.kind = VerdictKind::Unknown;
    out.report = last_report;
    out.report.note = "some representatives unresolved";
  } else {
    out.kind = VerdictKind::No;
    out.certificate = "abelianization (every representative)";
  }
  return out;
}

}  // namespace artin
