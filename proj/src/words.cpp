#include "artin/words.hpp"

#include <algorithm>
#include <sstream>

#include "artin/graph.hpp"

namespace artin {

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse(*it));
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word free_reduce(Word w) {
  Word out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

CyclicReduction cyclic_reduce(const Word& w) {
  Word core = free_reduce(w);
  Word conj;
  while (core.size() >= 2 && core.front().gen == core.back().gen &&
         core.front().sign == -core.back().sign) {
    conj.push_back(core.front());
    core.erase(core.begin());
    core.pop_back();
  }
  return {std::move(core), std::move(conj)};
}

Word pi_word(int x, int y, int k) {
  if (k < 1) throw std::invalid_argument("pi_word: k must be >= 1");
  if (x == y) throw std::invalid_argument("pi_word: generators must differ");
  Word w;
  w.reserve(k);
  for (int i = 0; i < k; ++i) w.push_back({i % 2 == 0 ? x : y, +1});
  return w;
}

std::vector<int> support(const Word& w) {
  std::vector<int> s;
  for (const Letter& l : w) s.push_back(l.gen);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (size_t i = 0; i < a.size(); ++i) {
    int ra = letter_rank(a[i]), rb = letter_rank(b[i]);
    if (ra != rb) return ra < rb;
  }
  return false;
}

std::string pack(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (const Letter& l : w) s.push_back(static_cast<char>(letter_rank(l) + 1));
  return s;
}

Word unpack(const std::string& s) {
  Word w;
  w.reserve(s.size());
  for (char c : s) {
    int r = static_cast<int>(c) - 1;
    w.push_back({r / 2, (r % 2) ? -1 : +1});
  }
  return w;
}

Word parse_word(const PresentationGraph& g, const std::string& text) {
  Word w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    int sign = +1;
    if (tok.size() > 3 && tok.compare(tok.size() - 3, 3, "^-1") == 0) {
      sign = -1;
      tok.resize(tok.size() - 3);
    }
    w.push_back({g.index_of(tok), sign});
  }
  return w;
}

std::string format_word(const PresentationGraph& g, const Word& w) {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += g.name(w[i].gen);
    if (w[i].sign < 0) out += "^-1";
  }
  return out;
}

std::optional<Word> ReducedWordStream::next() {
  if (!emitted_empty_) {
    emitted_empty_ = true;
    return Word{};
  }
  if (n_ == 0) return std::nullopt;
  advance();
  Word w;
  w.reserve(ranks_.size());
  for (int r : ranks_) w.push_back({r / 2, (r % 2) ? -1 : +1});
  return w;
}

// position i may not cancel against i-1
bool ReducedWordStream::reduced_at(size_t i) const {
  if (i == 0) return true;
  return ranks_[i] / 2 != ranks_[i - 1] / 2 ||
         (ranks_[i] % 2) == (ranks_[i - 1] % 2);
}

void ReducedWordStream::fill_min(size_t from) {
  for (size_t j = from; j < ranks_.size(); ++j) {
    ranks_[j] = 0;
    while (!reduced_at(j)) ++ranks_[j];
  }
}

void ReducedWordStream::advance() {
  const int top = 2 * n_ - 1;
  size_t i = ranks_.size();
  while (i > 0) {
    int r = ranks_[i - 1] + 1;
    while (r <= top) {
      ranks_[i - 1] = r;
      if (reduced_at(i - 1)) break;
      ++r;
    }
    if (r <= top) {
      fill_min(i);
      return;
    }
    --i;
  }
  ranks_.assign(ranks_.size() + 1, 0);
  fill_min(1);
}

}  // namespace artin
