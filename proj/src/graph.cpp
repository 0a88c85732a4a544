#include "artin/graph.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

#include <nlohmann/json.hpp>

namespace artin {

namespace {

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-'))
      return false;
  }
  return true;
}

}  // namespace

PresentationGraph::PresentationGraph(std::vector<std::string> vertices,
                                     std::vector<std::array<int, 3>> edges) {
  names_ = std::move(vertices);
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!valid_name(n))
      throw GraphError("BadVertexName", "bad vertex name: '" + n + "'");
    if (!seen.insert(n).second)
      throw GraphError("DuplicateVertex", "duplicate vertex: " + n);
  }
  const int n = vertex_count();
  label_matrix_.assign(n, std::vector<int>(n, 0));
  for (const auto& e : edges) {
    int u = e[0], v = e[1], m = e[2];
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw GraphError("UnknownVertex", "edge endpoint out of range");
    if (u == v)
      throw GraphError("Loop", "loop at vertex " + names_[u]);
    if (m < 2)
      throw GraphError("LabelTooSmall",
                       "label " + std::to_string(m) + " on edge " + names_[u] +
                           "-" + names_[v] + " (must be >= 2)");
    if (u > v) std::swap(u, v);
    if (label_matrix_[u][v] != 0)
      throw GraphError("MultiEdge",
                       "repeated edge " + names_[u] + "-" + names_[v]);
    label_matrix_[u][v] = label_matrix_[v][u] = m;
    edges_.push_back({u, v, m});
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
}

int PresentationGraph::index_of(const std::string& name) const {
  for (int i = 0; i < vertex_count(); ++i)
    if (names_[i] == name) return i;
  throw GraphError("UnknownVertex", "unknown generator: " + name);
}

bool PresentationGraph::adjacent(int u, int v) const {
  return u != v && label_matrix_[u][v] != 0;
}

int PresentationGraph::label(int u, int v) const {
  return u == v ? 0 : label_matrix_[u][v];
}

std::vector<int> PresentationGraph::neighbors(int v) const {
  std::vector<int> out;
  for (int u = 0; u < vertex_count(); ++u)
    if (adjacent(v, u)) out.push_back(u);
  return out;
}

int PresentationGraph::degree(int v) const {
  return static_cast<int>(neighbors(v).size());
}

bool PresentationGraph::connected() const {
  std::vector<int> all(vertex_count());
  std::iota(all.begin(), all.end(), 0);
  return connected_subset(all);
}

bool PresentationGraph::connected_subset(const std::vector<int>& keep) const {
  if (keep.empty()) return true;
  std::set<int> in(keep.begin(), keep.end());
  std::vector<int> stack{keep.front()};
  std::set<int> seen{keep.front()};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : keep) {
      if (!seen.count(u) && adjacent(v, u)) {
        seen.insert(u);
        stack.push_back(u);
      }
    }
  }
  return seen.size() == in.size();
}

PresentationGraph parse_graph(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw GraphError("BadFormat", std::string("graph file: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw GraphError("BadFormat",
                     "graph file must be {\"vertices\":[...],\"edges\":[...]}");
  std::vector<std::string> vertices;
  for (const auto& v : j["vertices"]) {
    if (!v.is_string())
      throw GraphError("BadFormat", "vertex names must be strings");
    vertices.push_back(v.get<std::string>());
  }
  std::map<std::string, int> index;
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i)
    index.emplace(vertices[i], i);
  std::vector<std::array<int, 3>> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_string() ||
        !e[1].is_string() || !e[2].is_number_integer())
      throw GraphError("BadFormat", "edges must be [u, v, m] triples");
    auto iu = index.find(e[0].get<std::string>());
    auto iv = index.find(e[1].get<std::string>());
    if (iu == index.end())
      throw GraphError("UnknownVertex",
                       "unknown vertex in edge: " + e[0].get<std::string>());
    if (iv == index.end())
      throw GraphError("UnknownVertex",
                       "unknown vertex in edge: " + e[1].get<std::string>());
    edges.push_back({iu->second, iv->second, e[2].get<int>()});
  }
  return PresentationGraph(std::move(vertices), std::move(edges));
}

std::string graph_to_json(const PresentationGraph& g) {
  nlohmann::ordered_json j;
  j["vertices"] = g.vertex_names();
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : g.edges())
    j["edges"].push_back({g.name(e.u), g.name(e.v), e.m});
  return j.dump();
}

TypeFlags type_class(const PresentationGraph& g) {
  TypeFlags f;
  int min_label = 0;
  for (const auto& e : g.edges())
    min_label = min_label == 0 ? e.m : std::min(min_label, e.m);
  // no edges: the label conditions hold vacuously
  f.large = g.edge_count() == 0 || min_label >= 3;
  f.xl = g.edge_count() == 0 || min_label >= 4;
  f.xxxl = g.edge_count() == 0 || min_label >= 6;
  const int n = g.vertex_count();
  f.free_of_infinity = g.edge_count() == n * (n - 1) / 2;
  f.even_edge =
      n == 2 && g.edge_count() == 1 && g.edges()[0].m % 2 == 0;
  return f;
}

namespace {

void require_connected(const PresentationGraph& g) {
  if (!g.connected())
    throw GraphError("DisconnectedInput", "graph must be connected");
}

int component_count(const PresentationGraph& g, const std::vector<int>& keep) {
  std::set<int> rest(keep.begin(), keep.end());
  int components = 0;
  while (!rest.empty()) {
    ++components;
    std::vector<int> stack{*rest.begin()};
    rest.erase(rest.begin());
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (auto it = rest.begin(); it != rest.end();) {
        if (g.adjacent(v, *it)) {
          stack.push_back(*it);
          it = rest.erase(it);
        } else {
          ++it;
        }
      }
    }
  }
  return components;
}

}  // namespace

std::vector<int> cut_vertices(const PresentationGraph& g) {
  require_connected(g);
  std::vector<int> cuts;
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> rest;
    for (int u = 0; u < g.vertex_count(); ++u)
      if (u != v) rest.push_back(u);
    if (!rest.empty() && component_count(g, rest) >= 2) cuts.push_back(v);
  }
  return cuts;
}

std::vector<std::pair<int, int>> separating_edges(const PresentationGraph& g) {
  require_connected(g);
  // An edge {a,b} is separating exactly when two proper full connected
  // subgraphs cover the graph and meet in that closed edge, which happens
  // iff deleting both endpoints leaves at least two components (each side
  // rejoins through the edge itself).
  std::vector<std::pair<int, int>> out;
  for (const auto& e : g.edges()) {
    std::vector<int> rest;
    for (int u = 0; u < g.vertex_count(); ++u)
      if (u != e.u && u != e.v) rest.push_back(u);
    if (component_count(g, rest) >= 2) out.emplace_back(e.u, e.v);
  }
  return out;
}

bool is_twistless(const PresentationGraph& g) {
  return cut_vertices(g).empty() && separating_edges(g).empty();
}

namespace {

bool intersection_is_twistless(const PresentationGraph& g,
                               const std::vector<int>& inter) {
  // not the empty set, a vertex, or an edge
  if (inter.empty() || inter.size() == 1) return false;
  if (inter.size() == 2 && g.adjacent(inter[0], inter[1])) return false;
  return true;
}

}  // namespace

std::vector<Decomposition> twistless_decompositions(
    const PresentationGraph& g) {
  const int n = g.vertex_count();
  std::vector<Decomposition> out;
  if (n == 0) return out;
  // assignment per vertex: 0 = part1 only, 1 = part2 only, 2 = both
  std::vector<int> assign(n, 0);
  std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
  while (true) {
    std::vector<int> p1, p2, inter;
    for (int v = 0; v < n; ++v) {
      if (assign[v] != 1) p1.push_back(v);
      if (assign[v] != 0) p2.push_back(v);
      if (assign[v] == 2) inter.push_back(v);
    }
    bool proper = p1.size() < static_cast<size_t>(n) &&
                  p2.size() < static_cast<size_t>(n);
    if (proper && intersection_is_twistless(g, inter)) {
      bool covered = true;
      for (const auto& e : g.edges()) {
        bool in1 = assign[e.u] != 1 && assign[e.v] != 1;
        bool in2 = assign[e.u] != 0 && assign[e.v] != 0;
        if (!in1 && !in2) {
          covered = false;
          break;
        }
      }
      if (covered) {
        if (p2 < p1) std::swap(p1, p2);
        if (seen.emplace(p1, p2).second) {
          Decomposition d;
          d.part1 = p1;
          d.part2 = p2;
          d.intersection = inter;
          d.twistless = true;
          out.push_back(std::move(d));
        }
      }
    }
    // next assignment
    int i = 0;
    while (i < n && assign[i] == 2) assign[i++] = 0;
    if (i == n) break;
    ++assign[i];
  }
  std::sort(out.begin(), out.end(),
            [](const Decomposition& a, const Decomposition& b) {
              return std::pair(a.part1, a.part2) < std::pair(b.part1, b.part2);
            });
  return out;
}

bool is_twistless_star(const PresentationGraph& g) {
  const int n = g.vertex_count();
  if (n < 3) return false;  // need a hub and at least two rim vertices
  bool has_hub = false;
  for (int v = 0; v < n && !has_hub; ++v)
    if (g.degree(v) == n - 1) has_hub = true;
  if (!has_hub) return false;
  return is_twistless(g);
}

PresentationGraph induced_subgraph(const PresentationGraph& g,
                                   const std::vector<int>& keep) {
  std::vector<std::string> names;
  std::map<int, int> remap;
  for (int v : keep) {
    remap[v] = static_cast<int>(names.size());
    names.push_back(g.name(v));
  }
  std::vector<std::array<int, 3>> edges;
  for (const auto& e : g.edges())
    if (remap.count(e.u) && remap.count(e.v))
      edges.push_back({remap[e.u], remap[e.v], e.m});
  return PresentationGraph(std::move(names), std::move(edges));
}

namespace {

// Canonical key of a labelled graph up to isomorphism, used to memoize
// failed hierarchy subproblems. Backtracks over permutations compatible
// with the (degree, incident-label-multiset) partition; bails out to an
// invariant-only key when the symmetry class is too large.
std::string canonical_key(const PresentationGraph& g) {
  const int n = g.vertex_count();
  std::vector<std::string> inv(n);
  for (int v = 0; v < n; ++v) {
    std::vector<int> labels;
    for (int u : g.neighbors(v)) labels.push_back(g.label(v, u));
    std::sort(labels.begin(), labels.end());
    std::string s = std::to_string(labels.size()) + ":";
    for (int l : labels) s += std::to_string(l) + ",";
    inv[v] = s;
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return inv[a] < inv[b]; });
  // positions grouped by invariant class
  long long perms = 1;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && inv[order[j]] == inv[order[i]]) ++j;
    for (int k = 2; k <= j - i; ++k) perms *= k;
    if (perms > 50'000) break;
    i = j;
  }
  auto matrix_key = [&](const std::vector<int>& perm) {
    std::string s;
    for (int i = 0; i < n; ++i) {
      s += inv[perm[i]];
      s += '|';
      for (int j = i + 1; j < n; ++j)
        s += static_cast<char>('0' + g.label(perm[i], perm[j]) % 64);
    }
    return s;
  };
  if (perms > 50'000) {
    // invariant-only key: sound but coarser (isomorphic graphs may get
    // distinct keys, never the other way around)
    return "~" + matrix_key(order);
  }
  // group positions into invariant classes and take the least matrix key
  // over class-respecting permutations
  std::vector<std::vector<int>> classes;
  for (int i = 0; i < n;) {
    int j = i;
    std::vector<int> cls;
    while (j < n && inv[order[j]] == inv[order[i]]) cls.push_back(order[j++]);
    classes.push_back(std::move(cls));
    i = j;
  }
  std::string best;
  std::vector<int> perm;
  auto recurse = [&](auto&& self, size_t ci) -> void {
    if (ci == classes.size()) {
      std::string key = matrix_key(perm);
      if (best.empty() || key < best) best = key;
      return;
    }
    std::vector<int> cls = classes[ci];
    std::sort(cls.begin(), cls.end());
    do {
      size_t mark = perm.size();
      perm.insert(perm.end(), cls.begin(), cls.end());
      self(self, ci + 1);
      perm.resize(mark);
    } while (std::next_permutation(cls.begin(), cls.end()));
  };
  recurse(recurse, 0);
  return best;
}

struct HierarchySearch {
  const PresentationGraph& root;
  std::set<std::string> failed;

  // Builds nodes into `tree`, returns index of the subtree root or -1.
  int solve(HierarchyTree& tree, const std::vector<int>& vertices) {
    PresentationGraph sub = induced_subgraph(root, vertices);
    if (sub.connected() && is_twistless_star(sub)) {
      HierarchyNode node;
      node.vertices = vertices;
      node.leaf = true;
      tree.nodes.push_back(std::move(node));
      return static_cast<int>(tree.nodes.size()) - 1;
    }
    std::string key = canonical_key(sub);
    if (failed.count(key)) return -1;
    for (const Decomposition& d : twistless_decompositions(sub)) {
      // map part indices back into root vertex ids
      auto lift = [&](const std::vector<int>& part) {
        std::vector<int> out;
        for (int v : part) out.push_back(vertices[v]);
        return out;
      };
      size_t mark = tree.nodes.size();
      int c1 = solve(tree, lift(d.part1));
      if (c1 < 0) {
        tree.nodes.resize(mark);
        continue;
      }
      int c2 = solve(tree, lift(d.part2));
      if (c2 < 0) {
        tree.nodes.resize(mark);
        continue;
      }
      HierarchyNode node;
      node.vertices = vertices;
      Decomposition lifted = d;
      lifted.part1 = lift(d.part1);
      lifted.part2 = lift(d.part2);
      lifted.intersection = lift(d.intersection);
      node.split = std::move(lifted);
      node.child1 = c1;
      node.child2 = c2;
      tree.nodes.push_back(std::move(node));
      return static_cast<int>(tree.nodes.size()) - 1;
    }
    failed.insert(key);
    return -1;
  }
};

}  // namespace

std::optional<HierarchyTree> find_twistless_hierarchy(
    const PresentationGraph& g, int max_vertices) {
  if (g.vertex_count() > max_vertices)
    throw GraphError("GraphTooLarge",
                     "hierarchy search capped at " +
                         std::to_string(max_vertices) + " vertices");
  std::vector<int> all(g.vertex_count());
  std::iota(all.begin(), all.end(), 0);
  HierarchySearch search{g, {}};
  HierarchyTree tree;
  int root = search.solve(tree, all);
  if (root < 0) return std::nullopt;
  // move the subtree root to index 0 for a stable external layout
  if (root != 0) std::swap(tree.nodes[0], tree.nodes[root]);
  for (auto& n : tree.nodes) {
    if (n.child1 == 0) n.child1 = root;
    else if (n.child1 == root) n.child1 = 0;
    if (n.child2 == 0) n.child2 = root;
    else if (n.child2 == root) n.child2 = 0;
  }
  return tree;
}

std::vector<std::vector<int>> graph_automorphisms(const PresentationGraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> autos;
  std::vector<std::string> inv(n);
  for (int v = 0; v < n; ++v) {
    std::vector<int> labels;
    for (int u : g.neighbors(v)) labels.push_back(g.label(v, u));
    std::sort(labels.begin(), labels.end());
    std::string s = std::to_string(labels.size()) + ":";
    for (int l : labels) s += std::to_string(l) + ",";
    inv[v] = s;
  }
  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false);
  // backtracking in lexicographic image order; identity comes out first
  auto consistent = [&](int v, int w) {
    if (inv[v] != inv[w]) return false;
    for (int u = 0; u < v; ++u)
      if (g.label(v, u) != g.label(w, image[u])) return false;
    return true;
  };
  int v = 0;
  int next = 0;
  while (true) {
    if (v == n) {
      autos.push_back(image);
      // backtrack
      --v;
      if (v < 0) break;
      next = image[v] + 1;
      used[image[v]] = false;
      image[v] = -1;
      continue;
    }
    int w = next;
    while (w < n && (used[w] || !consistent(v, w))) ++w;
    if (w == n) {
      --v;
      if (v < 0) break;
      next = image[v] + 1;
      used[image[v]] = false;
      image[v] = -1;
    } else {
      image[v] = w;
      used[w] = true;
      ++v;
      next = 0;
    }
  }
  return autos;
}

const char* route_name(EligibilityRoute r) {
  switch (r) {
    case EligibilityRoute::XXXLRoute: return "XXXL-route";
    case EligibilityRoute::HierarchyRoute: return "hierarchy-route";
    case EligibilityRoute::Assumed: return "assumed";
    case EligibilityRoute::Ineligible: return "ineligible";
  }
  return "?";
}

EligibilityReport eligibility(const PresentationGraph& g,
                              bool assume_out_generated) {
  EligibilityReport report;
  TypeFlags flags = type_class(g);
  bool connected = g.connected();

  std::vector<std::string> fail_xxxl;
  if (!flags.xxxl) fail_xxxl.push_back("not XXXL (some label < 6)");
  if (!connected) fail_xxxl.push_back("disconnected");
  std::vector<int> cuts;
  std::vector<std::pair<int, int>> seps;
  if (connected) {
    cuts = cut_vertices(g);
    seps = separating_edges(g);
    for (int v : cuts) fail_xxxl.push_back("cut vertex " + g.name(v));
    for (auto [u, v] : seps)
      fail_xxxl.push_back("separating edge " + g.name(u) + "-" + g.name(v));
  }
  if (flags.even_edge) fail_xxxl.push_back("even edge");

  if (fail_xxxl.empty()) {
    report.route = EligibilityRoute::XXXLRoute;
    report.checklist = {"XXXL", "connected", "twistless", "not an even edge"};
    return report;
  }

  std::vector<std::string> fail_hier;
  if (!flags.large) fail_hier.push_back("not large-type (some label < 3)");
  if (!connected) fail_hier.push_back("disconnected");
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 1)
      fail_hier.push_back("valence-1 vertex " + g.name(v));
  if (fail_hier.empty()) {
    std::optional<HierarchyTree> tree;
    try {
      tree = find_twistless_hierarchy(g);
    } catch (const GraphError&) {
      fail_hier.push_back("hierarchy search skipped: graph exceeds size cap");
    }
    if (fail_hier.empty()) {
      if (tree) {
        report.route = EligibilityRoute::HierarchyRoute;
        report.checklist = {"large-type", "connected", "no valence-1 vertex",
                            "twistless hierarchy terminating in twistless stars"};
        report.hierarchy = std::move(tree);
        return report;
      }
      fail_hier.push_back("no twistless hierarchy terminating in twistless stars");
    }
  }

  if (assume_out_generated) {
    report.route = EligibilityRoute::Assumed;
    report.checklist = {"assumed: Out generated by graph automorphisms and inversion"};
    return report;
  }

  report.route = EligibilityRoute::Ineligible;
  for (auto& f : fail_xxxl) report.failures.push_back("XXXL route: " + f);
  for (auto& f : fail_hier) report.failures.push_back("hierarchy route: " + f);
  return report;
}

}  // namespace artin
