#include <doctest.h>

#include <random>

#include "artin/dihedral.hpp"
#include "artin/graph.hpp"
#include "oracles.hpp"

using namespace artin;

namespace {

PresentationGraph edge(int m) {
  return parse_graph(R"({"vertices":["s","t"],"edges":[["s","t",)" +
                     std::to_string(m) + "]]}");
}

}  // namespace

TEST_CASE("braid relation collapses to Delta") {
  for (int m = 3; m <= 8; ++m) {
    PresentationGraph g = edge(m);
    DihedralForm lhs = dihedral_normal_form(g, 0, pi_word(0, 1, m));
    DihedralForm rhs = dihedral_normal_form(g, 0, pi_word(1, 0, m));
    CHECK(lhs == rhs);
    CHECK(lhs.delta_power == 1);
    CHECK(lhs.factors.empty());
  }
}

TEST_CASE("Delta conjugation swaps the generators for odd m") {
  PresentationGraph g = edge(3);
  // Delta s Delta^-1 = t
  Word w = parse_word(g, "s t s s s^-1 t^-1 s^-1");
  DihedralForm f = dihedral_normal_form(g, 0, w);
  DihedralForm t = dihedral_normal_form(g, 0, parse_word(g, "t"));
  CHECK(f == t);
}

TEST_CASE("empty word is the trivial form") {
  for (int m : {2, 3, 5, 8}) {
    DihedralForm f = dihedral_normal_form(m, {});
    CHECK(f.delta_power == 0);
    CHECK(f.factors.empty());
  }
}

TEST_CASE("foreign generators are rejected") {
  PresentationGraph g = parse_graph(
      R"({"vertices":["s","t","u"],"edges":[["s","t",3],["t","u",3],["s","u",3]]})");
  CHECK_THROWS_AS(dihedral_normal_form(g, 0, parse_word(g, "s u")), GraphError);
}

TEST_CASE("normal form matches the amalgam model exhaustively") {
  // all reduced words of length <= 7 for m in {3,4}: the partitions into
  // equality classes must coincide with the independent amalgam model
  for (int m : {3, 4, 5, 6}) {
    PresentationGraph g = edge(m);
    oracles::DihedralModel model(m);
    std::map<std::string, std::string> garside_to_amalgam;
    std::map<std::string, std::string> amalgam_to_garside;
    ReducedWordStream stream(2);
    while (auto w = stream.next()) {
      if (w->size() > 7) break;
      std::string gk = dihedral_normal_form(g, 0, *w).key();
      std::string ak = model.normal_form_graph_word(g, *w);
      auto [it1, f1] = garside_to_amalgam.emplace(gk, ak);
      CHECK(it1->second == ak);
      auto [it2, f2] = amalgam_to_garside.emplace(ak, gk);
      CHECK(it2->second == gk);
    }
  }
}

TEST_CASE("canonical word re-normalizes to the same form") {
  std::mt19937_64 rng(7);
  PresentationGraph g = edge(5);
  for (int i = 0; i < 300; ++i) {
    Word w;
    int len = static_cast<int>(rng() % 11);
    for (int j = 0; j < len; ++j)
      w.push_back({static_cast<int>(rng() % 2), rng() % 2 ? 1 : -1});
    DihedralForm f = dihedral_normal_form(g, 0, w);
    Word canon = dihedral_canonical_word(g, 0, f);
    CHECK(dihedral_normal_form(g, 0, canon) == f);
  }
}

TEST_CASE("never undecided on edge words up to length 10") {
  // the engine is total: any word over the edge produces a form; sample and
  // compare pairs against the amalgam model
  std::mt19937_64 rng(11);
  for (int m : {3, 4}) {
    PresentationGraph g = edge(m);
    oracles::DihedralModel model(m);
    for (int i = 0; i < 500; ++i) {
      Word u, v;
      int lu = static_cast<int>(rng() % 11), lv = static_cast<int>(rng() % 11);
      for (int j = 0; j < lu; ++j)
        u.push_back({static_cast<int>(rng() % 2), rng() % 2 ? 1 : -1});
      for (int j = 0; j < lv; ++j)
        v.push_back({static_cast<int>(rng() % 2), rng() % 2 ? 1 : -1});
      bool lib = dihedral_normal_form(g, 0, u) == dihedral_normal_form(g, 0, v);
      bool oracle = model.normal_form_graph_word(g, u) ==
                    model.normal_form_graph_word(g, v);
      CHECK(lib == oracle);
    }
  }
}
