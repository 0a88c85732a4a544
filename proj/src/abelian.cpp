#include "artin/abelian.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace artin {

AbelianStructure abelian_structure(const PresentationGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& e : g.edges())
    if (e.m % 2 == 1) parent[find(e.u)] = find(e.v);
  AbelianStructure ab;
  ab.component_of_gen.assign(n, -1);
  // components numbered by smallest member, in vertex order
  for (int v = 0; v < n; ++v) {
    int root = find(v);
    if (ab.component_of_gen[root] == -1) ab.component_of_gen[root] = ab.rank++;
    ab.component_of_gen[v] = ab.component_of_gen[root];
  }
  return ab;
}

std::vector<long long> abelianize(const AbelianStructure& ab, const Word& w) {
  std::vector<long long> v(ab.rank, 0);
  for (const Letter& l : w) v[ab.component_of_gen[l.gen]] += l.sign;
  return v;
}

std::vector<long long> abelianize(const PresentationGraph& g, const Word& w) {
  return abelianize(abelian_structure(g), w);
}

bool integer_system_solvable(std::vector<std::vector<long long>> M,
                             std::vector<long long> d) {
  const int rows = static_cast<int>(M.size());
  const int cols = rows ? static_cast<int>(M[0].size()) : 0;
  // Reduce (M | d) so that column operations act on M only (they replace x
  // by an equivalent unknown) while row operations track d.
  int r = 0, c = 0;
  while (r < rows && c < cols) {
    // find a nonzero pivot in the remaining block
    int pr = -1, pc = -1;
    for (int i = r; i < rows && pr < 0; ++i)
      for (int j = c; j < cols; ++j)
        if (M[i][j] != 0) {
          pr = i;
          pc = j;
          break;
        }
    if (pr < 0) break;
    std::swap(M[r], M[pr]);
    std::swap(d[r], d[pr]);
    for (auto& row : M) std::swap(row[c], row[pc]);
    // clear the pivot column and row by gcd reduction
    bool again = true;
    while (again) {
      again = false;
      for (int i = r + 1; i < rows; ++i) {
        if (M[i][c] == 0) continue;
        if (std::abs(M[i][c]) < std::abs(M[r][c])) {
          std::swap(M[i], M[r]);
          std::swap(d[i], d[r]);
        }
        long long q = M[i][c] / M[r][c];
        for (int j = c; j < cols; ++j) M[i][j] -= q * M[r][j];
        d[i] -= q * d[r];
        if (M[i][c] != 0) again = true;
      }
      for (int j = c + 1; j < cols; ++j) {
        if (M[r][j] == 0) continue;
        long long q = M[r][j] / M[r][c];
        for (int i = r; i < rows; ++i) M[i][j] -= q * M[i][c];
        if (M[r][j] != 0) {
          // remainder left: swap columns and reduce again
          for (auto& row : M) std::swap(row[c], row[j]);
          again = true;
        }
      }
    }
    ++r;
    ++c;
  }
  // now M is diagonal on the first r pivots (rows below r are zero)
  for (int i = 0; i < r; ++i)
    if (d[i] % M[i][i] != 0) return false;
  for (int i = r; i < rows; ++i)
    if (d[i] != 0) return false;
  return true;
}

}  // namespace artin
