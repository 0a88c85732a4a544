#include "artin/automorphism.hpp"

#include <numeric>
#include <sstream>

namespace artin {

std::vector<int> identity_perm(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Automorphism identity_automorphism(const PresentationGraph& g) {
  return {{}, identity_perm(g.vertex_count()), 0};
}

Automorphism global_inversion(const PresentationGraph& g) {
  return {{}, identity_perm(g.vertex_count()), 1};
}

Automorphism conjugation_by(const PresentationGraph& g, const Word& w) {
  return {free_reduce(w), identity_perm(g.vertex_count()), 0};
}

Automorphism to_automorphism(const PresentationGraph& g, const OuterClass& c) {
  (void)g;
  return {{}, c.perm, c.inv};
}

void check_graph_automorphism(const PresentationGraph& g,
                              const std::vector<int>& perm) {
  const int n = g.vertex_count();
  if (static_cast<int>(perm.size()) != n)
    throw GraphError("NotAnAutomorphism", "permutation size mismatch");
  std::vector<bool> hit(n, false);
  for (int v : perm) {
    if (v < 0 || v >= n || hit[v])
      throw GraphError("NotAnAutomorphism", "not a permutation");
    hit[v] = true;
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.label(u, v) != g.label(perm[u], perm[v]))
        throw GraphError("NotAnAutomorphism",
                         "labels not preserved at " + g.name(u) + "," + g.name(v));
}

Word apply(const PresentationGraph& g, const Automorphism& a, const Word& w) {
  (void)g;
  int sign_flip = a.inv ? -1 : +1;
  Word out = a.inner;
  for (const Letter& l : w)
    out.push_back({a.perm[l.gen], l.sign * sign_flip});
  out = concat(out, inverse(a.inner));
  return free_reduce(out);
}

Automorphism compose(const PresentationGraph& g, const Automorphism& a,
                     const Automorphism& b) {
  if (a.perm.size() != b.perm.size())
    throw GraphError("GraphMismatch", "automorphisms over different graphs");
  Automorphism c;
  // (a o b)(s) = a(g_b) g_a . pi_a(pi_b(s))^{±} . (a(g_b) g_a)^-1
  c.inner = free_reduce(concat(apply(g, a, b.inner), a.inner));
  c.perm.resize(a.perm.size());
  for (size_t i = 0; i < a.perm.size(); ++i) c.perm[i] = a.perm[b.perm[i]];
  c.inv = a.inv ^ b.inv;
  return c;
}

Automorphism invert(const PresentationGraph& g, const Automorphism& a) {
  (void)g;
  Automorphism r;
  const int n = static_cast<int>(a.perm.size());
  r.perm.assign(n, 0);
  for (int i = 0; i < n; ++i) r.perm[a.perm[i]] = i;
  r.inv = a.inv;
  // solve a(h) = g^-1: h = (pi^-1, inv)(g^-1) letterwise
  int sign_flip = a.inv ? -1 : +1;
  Word h;
  for (const Letter& l : inverse(a.inner))
    h.push_back({r.perm[l.gen], l.sign * sign_flip});
  r.inner = free_reduce(h);
  return r;
}

std::vector<OuterClass> outer_representatives(const PresentationGraph& g) {
  std::vector<OuterClass> out;
  for (const auto& perm : graph_automorphisms(g)) {
    out.push_back({perm, 0});
    out.push_back({perm, 1});
  }
  return out;
}

long long outer_order(const OuterClass& c) {
  const int n = static_cast<int>(c.perm.size());
  std::vector<bool> seen(n, false);
  long long order = 1;
  for (int v = 0; v < n; ++v) {
    if (seen[v]) continue;
    long long len = 0;
    int at = v;
    while (!seen[at]) {
      seen[at] = true;
      at = c.perm[at];
      ++len;
    }
    order = std::lcm(order, len);
  }
  if (c.inv) order = std::lcm(order, 2ll);
  return order;
}

Automorphism parse_automorphism(const PresentationGraph& g,
                                const std::string& text) {
  Automorphism a = identity_automorphism(g);
  std::stringstream ss(text);
  std::string part;
  auto trim = [](std::string s) {
    size_t b = s.find_first_not_of(" \t");
    size_t e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  while (std::getline(ss, part, ';')) {
    part = trim(part);
    if (part.empty()) continue;
    size_t eq = part.find('=');
    if (eq == std::string::npos)
      throw GraphError("BadAutomorphism", "expected key=value in: " + part);
    std::string key = trim(part.substr(0, eq));
    std::string value = trim(part.substr(eq + 1));
    if (key == "inner") {
      a.inner = free_reduce(parse_word(g, value));
    } else if (key == "inv") {
      if (value != "0" && value != "1")
        throw GraphError("BadAutomorphism", "inv must be 0 or 1");
      a.inv = value == "1" ? 1 : 0;
    } else if (key == "perm") {
      std::stringstream ps(value);
      std::string pair;
      while (std::getline(ps, pair, ',')) {
        pair = trim(pair);
        if (pair.empty()) continue;
        size_t arrow = pair.find("->");
        if (arrow == std::string::npos)
          throw GraphError("BadAutomorphism", "expected a->b in perm: " + pair);
        int from = g.index_of(trim(pair.substr(0, arrow)));
        int to = g.index_of(trim(pair.substr(arrow + 2)));
        a.perm[from] = to;
      }
      check_graph_automorphism(g, a.perm);
    } else {
      throw GraphError("BadAutomorphism", "unknown key: " + key);
    }
  }
  return a;
}

std::string format_automorphism(const PresentationGraph& g,
                                const Automorphism& a) {
  std::string out = "inner=" + format_word(g, a.inner) + "; perm=";
  bool first = true;
  for (int i = 0; i < g.vertex_count(); ++i) {
    if (a.perm[i] == i) continue;
    if (!first) out += ",";
    out += g.name(i) + "->" + g.name(a.perm[i]);
    first = false;
  }
  out += "; inv=" + std::to_string(a.inv);
  return out;
}

}  // namespace artin
