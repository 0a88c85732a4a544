#include <doctest.h>

#include "artin/render.hpp"

using namespace artin;

namespace {

PresentationGraph tri() {
  return parse_graph(
      R"({"vertices":["a","b","c"],"edges":[["a","b",3],["b","c",3],["a","c",3]]})");
}

}  // namespace

TEST_CASE("verdict JSON round trip is byte-identical") {
  PresentationGraph g = tri();
  std::vector<Verdict> verdicts;
  {
    Verdict yes;
    yes.kind = VerdictKind::Yes;
    yes.witness = parse_word(g, "a b^-1");
    verdicts.push_back(yes);
    yes.rep_index = 3;
    verdicts.push_back(yes);
    Verdict no;
    no.kind = VerdictKind::No;
    no.certificate = "abelianization";
    verdicts.push_back(no);
    Verdict unk;
    unk.kind = VerdictKind::Unknown;
    unk.report = {12345, 4, 9, "witness candidates exhausted budget"};
    verdicts.push_back(unk);
  }
  for (const Verdict& v : verdicts) {
    std::string once = verdict_json(g, v);
    std::string twice = verdict_json(g, verdict_from_json(g, once));
    CHECK(once == twice);
  }
}

TEST_CASE("exit codes depend on the verdict only") {
  Verdict yes;
  yes.kind = VerdictKind::Yes;
  CHECK(verdict_exit_code(yes) == 0);
  yes.rep_index = 7;
  CHECK(verdict_exit_code(yes) == 0);
  Verdict no;
  no.kind = VerdictKind::No;
  CHECK(verdict_exit_code(no) == 3);
  Verdict unk;
  unk.kind = VerdictKind::Unknown;
  CHECK(verdict_exit_code(unk) == 4);
  Certainty eq;
  eq.kind = CertaintyKind::Equal;
  CHECK(certainty_exit_code(eq) == 0);
  Certainty ne;
  ne.kind = CertaintyKind::NotEqual;
  CHECK(certainty_exit_code(ne) == 3);
  Certainty unknown;
  unknown.kind = CertaintyKind::Unknown;
  CHECK(certainty_exit_code(unknown) == 4);
}

TEST_CASE("verdict and certainty lines") {
  PresentationGraph g = tri();
  Verdict yes;
  yes.kind = VerdictKind::Yes;
  yes.witness = parse_word(g, "a");
  CHECK(verdict_line(g, yes) == "YES witness=a");
  Verdict no;
  no.kind = VerdictKind::No;
  no.certificate = "abelianization";
  CHECK(verdict_line(g, no) == "NO certificate=abelianization");
  Verdict unk;
  unk.kind = VerdictKind::Unknown;
  CHECK(verdict_line(g, unk) == "UNKNOWN");
}
