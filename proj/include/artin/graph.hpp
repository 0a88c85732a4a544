#ifndef ARTIN_GRAPH_HPP
#define ARTIN_GRAPH_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace artin {

struct GraphError : std::runtime_error {
  std::string code;
  GraphError(std::string code_, const std::string& what_)
      : std::runtime_error(what_), code(std::move(code_)) {}
};

// Finite simplicial graph with edge labels m_st >= 2. Vertex order is the
// file order and fixes every canonical ordering downstream.
class PresentationGraph {
 public:
  PresentationGraph() = default;
  PresentationGraph(std::vector<std::string> vertices,
                    std::vector<std::array<int, 3>> edges);  // {u, v, m}

  int vertex_count() const { return static_cast<int>(names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::string& name(int v) const { return names_.at(v); }
  int index_of(const std::string& name) const;  // throws UnknownVertex

  // Edges as (u, v, m) with u < v, sorted by (u, v).
  struct Edge {
    int u, v, m;
  };
  const std::vector<Edge>& edges() const { return edges_; }

  bool adjacent(int u, int v) const;
  // 0 when not adjacent.
  int label(int u, int v) const;
  std::vector<int> neighbors(int v) const;
  int degree(int v) const;

  bool connected() const;
  // Connectivity of the induced subgraph on `keep` (empty set counts as
  // connected).
  bool connected_subset(const std::vector<int>& keep) const;

 private:
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> label_matrix_;
};

// Graph file: JSON object {"vertices":[names...],"edges":[[u,v,m],...]}.
PresentationGraph parse_graph(const std::string& json_text);
std::string graph_to_json(const PresentationGraph& g);

struct TypeFlags {
  bool large = false;
  bool xl = false;
  bool xxxl = false;
  bool free_of_infinity = false;
  bool even_edge = false;
};
TypeFlags type_class(const PresentationGraph& g);

// Both analyses require a connected graph and throw
// GraphError("DisconnectedInput") otherwise.
std::vector<int> cut_vertices(const PresentationGraph& g);
std::vector<std::pair<int, int>> separating_edges(const PresentationGraph& g);
bool is_twistless(const PresentationGraph& g);

// Pair of full (induced) subgraphs covering the graph. `twistless` is the
// intersection test: not empty, not a single vertex, not a single edge.
struct Decomposition {
  std::vector<int> part1;  // sorted vertex indices
  std::vector<int> part2;
  std::vector<int> intersection;
  bool twistless = false;
};

// All unordered pairs of proper full subgraphs covering g whose
// intersection passes the twistless test, in lexicographic order on
// (part1, part2).
std::vector<Decomposition> twistless_decompositions(const PresentationGraph& g);

// Central vertex + twistless, with at least two rim vertices.
bool is_twistless_star(const PresentationGraph& g);

struct HierarchyNode {
  std::vector<int> vertices;  // within the root graph
  bool leaf = false;
  // for internal nodes: the decomposition taken, children at [i], [i+1]
  std::optional<Decomposition> split;
  int child1 = -1;
  int child2 = -1;
};

struct HierarchyTree {
  std::vector<HierarchyNode> nodes;  // node 0 is the root
};

// Depth-first search over twistless decompositions, first decomposition in
// canonical order, memoizing failures up to labelled isomorphism. Returns
// a tree whose leaves are all twistless stars, or nullopt.
std::optional<HierarchyTree> find_twistless_hierarchy(
    const PresentationGraph& g, int max_vertices = 12);

// Label-preserving vertex permutations, identity first, then lexicographic
// on the image tuple.
std::vector<std::vector<int>> graph_automorphisms(const PresentationGraph& g);

enum class EligibilityRoute { XXXLRoute, HierarchyRoute, Assumed, Ineligible };

struct EligibilityReport {
  EligibilityRoute route = EligibilityRoute::Ineligible;
  std::vector<std::string> checklist;  // satisfied hypotheses of the route
  std::optional<HierarchyTree> hierarchy;
  std::vector<std::string> failures;  // violated hypotheses, both routes
};

const char* route_name(EligibilityRoute r);

EligibilityReport eligibility(const PresentationGraph& g,
                              bool assume_out_generated);

// Extracts the induced subgraph on `keep` (sorted), preserving labels.
PresentationGraph induced_subgraph(const PresentationGraph& g,
                                   const std::vector<int>& keep);

}  // namespace artin

#endif
