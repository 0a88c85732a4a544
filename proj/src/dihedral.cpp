#include "artin/dihedral.hpp"

#include <cstdlib>
#include <stdexcept>

#include "artin/graph.hpp"

namespace artin {

namespace {

inline int other(int atom) { return atom ^ 1; }

// letter at position i (0-based) of the alternating word starting with `a`
inline int alt_letter(int a, int i) { return i % 2 == 0 ? a : other(a); }

struct GarsideState {
  int m;
  long long p = 0;
  std::vector<std::pair<int, int>> factors;  // (start atom, len), 1..m-1

  // tau(x) = Delta^-1 x Delta: swaps atoms when m is odd
  void tau_prefix(size_t count) {
    if (m % 2 == 0) return;
    for (size_t i = 0; i < count; ++i) factors[i].first = other(factors[i].first);
  }

  void normalize() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].second == 0) {
          factors.erase(factors.begin() + i);
          changed = true;
          break;
        }
        if (factors[i].second >= m) {
          // split off Delta and carry it to the front
          auto [a, k] = factors[i];
          factors[i] = {alt_letter(a, m), k - m};
          tau_prefix(i);
          ++p;
          changed = true;
          break;
        }
        if (i + 1 < factors.size()) {
          auto [a, k] = factors[i];
          auto [b, l] = factors[i + 1];
          if (l > 0 && alt_letter(a, k) == b) {
            // junction alternates: merge into one alternating run
            factors[i] = {a, k + l};
            factors.erase(factors.begin() + i + 1);
            changed = true;
            break;
          }
        }
      }
    }
  }

  void mul_atom(int atom, int sign) {
    if (sign > 0) {
      factors.emplace_back(atom, 1);
    } else {
      // g^-1 = Delta^-1 * (Delta g^-1), and x Delta^-1 = Delta^-1 tau(x)
      --p;
      tau_prefix(factors.size());
      int c0 = (m % 2 == 1) ? atom : other(atom);
      factors.emplace_back(c0, m - 1);
    }
    normalize();
  }
};

}  // namespace

DihedralForm dihedral_normal_form(int m, const AtomWord& word) {
  if (m < 2) throw std::invalid_argument("dihedral: label must be >= 2");
  GarsideState st{m, 0, {}};
  for (auto [atom, sign] : word) {
    if (atom != 0 && atom != 1)
      throw std::invalid_argument("dihedral: atoms must be 0 or 1");
    st.mul_atom(atom, sign);
  }
  DihedralForm f;
  f.m = m;
  f.delta_power = st.p;
  f.factors = std::move(st.factors);
  return f;
}

std::string DihedralForm::key() const {
  std::string s = std::to_string(m) + "^" + std::to_string(delta_power) + ":";
  for (auto [a, k] : factors) {
    s += static_cast<char>('a' + a);
    s += std::to_string(k);
    s += '.';
  }
  return s;
}

AtomWord dihedral_form_word(const DihedralForm& f) {
  AtomWord out;
  auto emit_delta = [&](int sign) {
    if (sign > 0) {
      for (int i = 0; i < f.m; ++i) out.emplace_back(alt_letter(0, i), +1);
    } else {
      for (int i = f.m - 1; i >= 0; --i) out.emplace_back(alt_letter(0, i), -1);
    }
  };
  for (long long i = 0; i < std::abs(f.delta_power); ++i)
    emit_delta(f.delta_power > 0 ? +1 : -1);
  for (auto [a, k] : f.factors)
    for (int i = 0; i < k; ++i) out.emplace_back(alt_letter(a, i), +1);
  return out;
}

DihedralForm dihedral_normal_form(const PresentationGraph& g, int edge_index,
                                  const Word& w) {
  const auto& e = g.edges().at(edge_index);
  AtomWord aw;
  aw.reserve(w.size());
  for (const Letter& l : w) {
    if (l.gen == e.u)
      aw.emplace_back(0, l.sign);
    else if (l.gen == e.v)
      aw.emplace_back(1, l.sign);
    else
      throw GraphError("ForeignGenerator",
                       "word leaves the edge " + g.name(e.u) + "-" + g.name(e.v) +
                           ": " + g.name(l.gen));
  }
  return dihedral_normal_form(e.m, aw);
}

Word dihedral_canonical_word(const PresentationGraph& g, int edge_index,
                             const DihedralForm& f) {
  const auto& e = g.edges().at(edge_index);
  Word out;
  for (auto [atom, sign] : dihedral_form_word(f))
    out.push_back({atom == 0 ? e.u : e.v, sign});
  return out;
}

}  // namespace artin
