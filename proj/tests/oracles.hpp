// Test-only oracles, independent of the library's engines.

#ifndef ARTIN_TEST_ORACLES_HPP
#define ARTIN_TEST_ORACLES_HPP

#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "artin/graph.hpp"
#include "artin/words.hpp"

namespace oracles {

using artin::Letter;
using artin::PresentationGraph;
using artin::Word;

// --- Exact model of the dihedral Artin group A(m) = <s,t | Pi(s,t;m) =
// Pi(t,s;m)> as an amalgamated product with central amalgam:
//   m odd:  <x> *_{x^2 = y^m} <y>, x = Pi(s,t;m), y = st,
//           s = y^-k x, t = x^-1 y^{k+1}  (m = 2k+1)
//   m even: <x> *_{x^k = z} (<z> x <a>), x = st, a = s, z central,
//           s = a, t = a^-1 x             (m = 2k)
// Elements get the standard alternating normal form with coset
// representatives, plus a central exponent. This route never touches the
// library's Garside machinery.
class DihedralModel {
 public:
  explicit DihedralModel(int m) : m_(m), k_(m / 2), odd_(m % 2 == 1) {}

  // normal form of a word over atoms (0 = s, 1 = t) with signs
  std::string normal_form(const std::vector<std::pair<int, int>>& word) const {
    State st;
    for (auto [atom, sign] : word) {
      if (odd_) {
        // s = y^-k x, t = x^-1 y^{k+1}
        if (atom == 0 && sign > 0) {
          push(st, FactorB, -k_);
          push(st, FactorA, 1);
        } else if (atom == 0) {
          push(st, FactorA, -1);
          push(st, FactorB, k_);
        } else if (sign > 0) {
          push(st, FactorA, -1);
          push(st, FactorB, k_ + 1);
        } else {
          push(st, FactorB, -(k_ + 1));
          push(st, FactorA, 1);
        }
      } else {
        // s = a, t = a^-1 x
        if (atom == 0) {
          push(st, FactorB, sign);
        } else if (sign > 0) {
          push(st, FactorB, -1);
          push(st, FactorA, 1);
        } else {
          push(st, FactorA, -1);
          push(st, FactorB, 1);
        }
      }
    }
    normalize(st);
    std::string out = "h" + std::to_string(st.h);
    for (auto [f, e] : st.syllables)
      out += (f == FactorA ? "|x" : "|b") + std::to_string(e);
    return out;
  }

  std::string normal_form_graph_word(const PresentationGraph& g,
                                     const Word& w) const {
    (void)g;  // atoms follow the graph's two-vertex order
    std::vector<std::pair<int, int>> atoms;
    for (const Letter& l : w) atoms.emplace_back(l.gen == 0 ? 0 : 1, l.sign);
    return normal_form(atoms);
  }

 private:
  enum Factor { FactorA, FactorB };  // A = <x>; B = <y> resp. <a> part
  struct State {
    long long h = 0;  // central exponent: x^2 = y^m (odd), z = x^k (even)
    std::vector<std::pair<Factor, long long>> syllables;
  };

  void push(State& st, Factor f, long long e) const {
    if (e == 0) return;
    if (!st.syllables.empty() && st.syllables.back().first == f) {
      st.syllables.back().second += e;
      if (st.syllables.back().second == 0) {
        st.syllables.pop_back();
        // neighbours of the removed syllable now touch; merge lazily by
        // re-pushing nothing (normalize() runs a full fixpoint later)
        merge_tail(st);
      }
      return;
    }
    st.syllables.emplace_back(f, e);
  }

  void merge_tail(State& st) const {
    while (st.syllables.size() >= 2) {
      auto& a = st.syllables[st.syllables.size() - 2];
      auto& b = st.syllables.back();
      if (a.first != b.first) return;
      a.second += b.second;
      st.syllables.pop_back();
      if (a.second == 0) {
        st.syllables.erase(st.syllables.end() - 1);
      } else {
        return;
      }
    }
  }

  // extract central parts and cascade merges until every syllable is a
  // nontrivial coset representative
  void normalize(State& st) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t i = 0; i < st.syllables.size(); ++i) {
        auto [f, e] = st.syllables[i];
        long long unit = 0;  // exponent that falls into the amalgam
        if (f == FactorA)
          unit = odd_ ? 2 : k_;
        else
          unit = odd_ ? m_ : 0;  // even-m B syllables are a-powers, no unit
        if (unit > 0 && (e < 0 || e >= unit)) {
          long long q = e >= 0 ? e / unit : -((-e + unit - 1) / unit);
          long long r = e - q * unit;
          st.h += q;
          st.syllables[i].second = r;
          changed = true;
        }
        if (st.syllables[i].second == 0) {
          st.syllables.erase(st.syllables.begin() + i);
          if (i > 0 && i < st.syllables.size() &&
              st.syllables[i - 1].first == st.syllables[i].first) {
            st.syllables[i - 1].second += st.syllables[i].second;
            st.syllables.erase(st.syllables.begin() + i);
          }
          changed = true;
          break;
        }
      }
    }
  }

  int m_, k_;
  bool odd_;
};

// Cayley-ball BFS over the dihedral group using the amalgam normal form as
// the element identifier. Returns the number of elements within `radius`
// and a word -> element map for every reduced word up to the radius.
struct DihedralBall {
  int elements = 0;
  std::unordered_map<std::string, int> word_to_elem;  // packed word -> id
};

inline DihedralBall dihedral_ball_bfs(const PresentationGraph& g, int radius) {
  DihedralModel model(g.edges().at(0).m);
  DihedralBall ball;
  std::unordered_map<std::string, int> nf_to_elem;
  std::deque<Word> queue{Word{}};
  nf_to_elem.emplace(model.normal_form_graph_word(g, {}), 0);
  ball.word_to_elem.emplace(artin::pack(Word{}), 0);
  ball.elements = 1;
  // BFS layer by layer over reduced words; identification via the model
  artin::ReducedWordStream stream(2);
  while (auto w = stream.next()) {
    if (static_cast<int>(w->size()) > radius) break;
    if (w->empty()) continue;
    std::string nf = model.normal_form_graph_word(g, *w);
    auto [it, fresh] = nf_to_elem.emplace(nf, ball.elements);
    if (fresh) ++ball.elements;
    ball.word_to_elem.emplace(artin::pack(*w), it->second);
  }
  return ball;
}

// --- Finite dihedral group of order 2m as a multiplication-table model
// for the Coxeter quotient of an edge.
class FiniteDihedral {
 public:
  explicit FiniteDihedral(int m) : m_(m) {}
  // element = (rotation, flip); s, t are the two reflections
  std::pair<int, int> image(const Word& w) const {
    std::pair<int, int> acc{0, 0};
    for (const Letter& l : w) acc = mul(acc, l.gen == 0 ? s() : t());
    return acc;
  }
  bool trivial(const Word& w) const { return image(w) == std::pair(0, 0); }

 private:
  std::pair<int, int> s() const { return {0, 1}; }
  std::pair<int, int> t() const { return {1, 1}; }  // s * rotation
  std::pair<int, int> mul(std::pair<int, int> a, std::pair<int, int> b) const {
    // (r1, f1)(r2, f2): reflections conjugate rotations to inverses
    int r = f1_adjust(a, b);
    int f = (a.second + b.second) % 2;
    return {((r % m_) + m_) % m_, f};
  }
  int f1_adjust(std::pair<int, int> a, std::pair<int, int> b) const {
    return a.second ? a.first - b.first : a.first + b.first;
  }
  int m_;
};

// --- Smith-normal-form style solvability over Z, written independently of
// the library's reduction (plain recursive gcd elimination).
inline bool snf_solvable(std::vector<std::vector<long long>> M,
                         std::vector<long long> d) {
  const int rows = static_cast<int>(M.size());
  const int cols = rows ? static_cast<int>(M[0].size()) : 0;
  if (rows == 0) return true;
  // eliminate one pivot at a time
  for (int r = 0, c = 0; r < rows && c < cols;) {
    int pr = -1, pc = -1;
    long long best = 0;
    for (int i = r; i < rows; ++i)
      for (int j = c; j < cols; ++j)
        if (M[i][j] != 0 && (best == 0 || std::abs(M[i][j]) < best)) {
          best = std::abs(M[i][j]);
          pr = i;
          pc = j;
        }
    if (pr < 0) break;
    std::swap(M[r], M[pr]);
    std::swap(d[r], d[pr]);
    for (auto& row : M) std::swap(row[c], row[pc]);
    bool clean = true;
    for (int i = 0; i < rows; ++i) {
      if (i == r || M[i][c] == 0) continue;
      long long q = M[i][c] / M[r][c];
      for (int j = 0; j < cols; ++j) M[i][j] -= q * M[r][j];
      d[i] -= q * d[r];
      if (M[i][c] != 0) clean = false;
    }
    for (int j = 0; j < cols; ++j) {
      if (j == c || M[r][j] == 0) continue;
      long long q = M[r][j] / M[r][c];
      for (int i = 0; i < rows; ++i) M[i][j] -= q * M[i][c];
      if (M[r][j] != 0) clean = false;
    }
    if (clean) {
      ++r;
      ++c;
    }
  }
  for (int i = 0; i < rows; ++i) {
    bool zero_row = true;
    long long diag = 0;
    for (int j = 0; j < cols; ++j)
      if (M[i][j] != 0) {
        zero_row = false;
        diag = M[i][j];
      }
    if (zero_row) {
      if (d[i] != 0) return false;
    } else if (d[i] % diag != 0) {
      return false;
    }
  }
  return true;
}

}  // namespace oracles

#endif
