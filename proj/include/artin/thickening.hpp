#ifndef ARTIN_THICKENING_HPP
#define ARTIN_THICKENING_HPP

#include <array>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "artin/automorphism.hpp"
#include "artin/word_problem.hpp"

namespace artin {

// Abstract subdivided 2m-gon: boundary vertices 0..2m-1 in relator order
// (0 is the base corner, m the far corner), interior path 2m..3m-3. Each
// interior vertex sits on the crossing of two boundary-to-boundary
// diagonals, giving the all-triangle subdivision.
struct DiskComplex {
  int m = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::array<int, 3>> triangles;
  // per boundary edge k (joining positions k and k+1 mod 2m), the interior
  // vertex spanning a triangle with it
  std::vector<int> apex;

  int vertex_count() const { return 3 * m - 2; }
  int boundary_count() const { return 2 * m; }
  int interior_count() const { return m - 2; }
};

// requires m >= 3 (large type)
DiskComplex subdivide_precell(int m);

struct PatchVertex {
  enum class Tag { Group, Interior };
  Tag tag = Tag::Group;
  Word rep;          // group: canonical (shortlex-least geodesic) word
  int precell = -1;  // interior
  int index = -1;    // interior: 0-based position on the midline path
};

struct Precell {
  int base = 0;        // group vertex id of the base corner
  int graph_edge = 0;  // index into graph().edges()
  std::vector<int> boundary;  // 2m vertex ids in relator order
  std::vector<int> interior;  // m-2 vertex ids
  std::vector<std::array<int, 3>> triangles;
};

// Finite fragment of the thickened Cayley complex: the Cayley ball of the
// given radius, every precell whose boundary lies inside, zigzags between
// precells sharing more than one edge, and the flag completion.
struct Patch {
  PresentationGraph graph;
  int radius = 0;
  int flag_dim_cap = 5;

  std::vector<PatchVertex> vertices;  // group vertices first
  int group_vertex_count = 0;
  std::set<std::pair<int, int>> edges;
  std::set<std::vector<int>> simplices;  // flag cliques, 3..cap+1 vertices
  std::vector<Precell> precells;
  std::vector<std::pair<int, int>> zigzags;
  std::vector<bool> link_complete;  // full link known to lie in the patch
  std::vector<std::string> log;
  bool flagged = false;

  // build-time data (empty on imported patches)
  std::vector<std::vector<int>> cayley_next;  // [elem][letter_rank]
  std::unordered_map<std::string, int> word_to_elem;
  std::map<std::pair<int, int>, int> precell_by_base_edge;

  std::vector<int> neighbors(int v) const;
  bool has_edge(int a, int b) const;
};

// Enumerates the ball, deduplicating via the word-problem engine; every
// comparison must be definite, otherwise GraphError("PatchUnresolved").
Patch build_cayley_patch(const WordProblemContext& ctx, int radius,
                         const Budget& budget = {});

// Adds the Figure-2 zigzag edges between interior vertices of precells
// sharing more than one boundary edge. Idempotent.
Patch insert_zigzags(Patch p);

// Fills in all cliques of the 1-skeleton up to the dimension cap.
// Idempotent.
Patch flag_complete(Patch p);

struct LinkReport {
  int vertex = 0;
  bool flag_ok = true;
  std::vector<std::vector<int>> bad_cycles;  // induced 4/5-cycles found
  bool pass = true;
};

// Local systolicity check: for every vertex whose full link lies in the
// patch, the link is flag and has no induced cycle of length 4 or 5.
std::vector<LinkReport> check_links_6_large(const Patch& p);

struct InducedMapReport {
  std::vector<int> vertex_map;  // -1 where the image leaves the patch
  int outside_count = 0;
  std::vector<std::pair<int, int>> edge_violations;
  std::vector<std::vector<int>> simplex_violations;

  bool ok() const {
    return edge_violations.empty() && simplex_violations.empty();
  }
};

// The simplicial map induced by a diagram automorphism: group vertices map
// through the word image, precell interiors to the image precell
// (orientation reversed under inversion).
InducedMapReport induced_automorphism(const Patch& p, const OuterClass& psi);

std::string patch_to_json(const Patch& p);
Patch patch_from_json(const std::string& text);

}  // namespace artin

#endif
