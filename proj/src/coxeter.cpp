#include "artin/coxeter.hpp"

#include <deque>
#include <limits>
#include <unordered_set>

namespace artin {

namespace {

std::string pack_positive(const std::vector<int>& w) {
  std::string s;
  s.reserve(w.size());
  for (int g : w) s.push_back(static_cast<char>(g + 1));
  return s;
}

}  // namespace

std::optional<bool> coxeter_trivial_capped(const PresentationGraph& g,
                                           const Word& w, long long max_nodes) {
  // in W every generator is an involution, so signs drop
  std::vector<int> start;
  start.reserve(w.size());
  for (const Letter& l : w) start.push_back(l.gen);

  std::unordered_set<std::string> seen;
  std::deque<std::vector<int>> queue;
  auto push = [&](std::vector<int> v) {
    if (seen.insert(pack_positive(v)).second) queue.push_back(std::move(v));
  };
  push(std::move(start));
  long long visited = 0;
  while (!queue.empty()) {
    if (++visited > max_nodes) return std::nullopt;
    std::vector<int> cur = std::move(queue.front());
    queue.pop_front();
    if (cur.empty()) return true;
    // deletions ss -> empty
    for (size_t i = 0; i + 1 < cur.size(); ++i) {
      if (cur[i] == cur[i + 1]) {
        std::vector<int> next;
        next.reserve(cur.size() - 2);
        next.insert(next.end(), cur.begin(), cur.begin() + i);
        next.insert(next.end(), cur.begin() + i + 2, cur.end());
        push(std::move(next));
      }
    }
    // braid moves
    for (const auto& e : g.edges()) {
      const int m = e.m;
      if (static_cast<size_t>(m) > cur.size()) continue;
      for (size_t i = 0; i + m <= cur.size(); ++i) {
        int a = cur[i];
        int b = (a == e.u) ? e.v : (a == e.v ? e.u : -1);
        if (b < 0) continue;
        bool match = true;
        for (int k = 0; k < m; ++k)
          if (cur[i + k] != (k % 2 == 0 ? a : b)) {
            match = false;
            break;
          }
        if (!match) continue;
        std::vector<int> next = cur;
        for (int k = 0; k < m; ++k) next[i + k] = (k % 2 == 0 ? b : a);
        push(std::move(next));
      }
    }
  }
  return false;
}

bool coxeter_trivial(const PresentationGraph& g, const Word& w) {
  return *coxeter_trivial_capped(g, w, std::numeric_limits<long long>::max());
}

}  // namespace artin
