#include "artin/render.hpp"

#include <nlohmann/json.hpp>

namespace artin {

using ojson = nlohmann::ordered_json;

namespace {

ojson budget_report_json(const BudgetReport& r) {
  ojson j;
  j["nodes_used"] = r.nodes_used;
  j["padding"] = r.padding;
  j["max_len"] = r.max_len;
  j["note"] = r.note;
  return j;
}

BudgetReport budget_report_from(const nlohmann::json& j) {
  BudgetReport r;
  r.nodes_used = j.at("nodes_used").get<long long>();
  r.padding = j.at("padding").get<int>();
  r.max_len = j.at("max_len").get<int>();
  r.note = j.at("note").get<std::string>();
  return r;
}

}  // namespace

std::string verdict_line(const PresentationGraph& g, const Verdict& v) {
  switch (v.kind) {
    case VerdictKind::Yes: {
      std::string s = "YES witness=" + format_word(g, v.witness);
      if (v.rep_index >= 0) s += " rep=" + std::to_string(v.rep_index);
      return s;
    }
    case VerdictKind::No:
      return "NO certificate=" + v.certificate;
    case VerdictKind::Unknown:
      return "UNKNOWN";
  }
  return "?";
}

std::string verdict_json(const PresentationGraph& g, const Verdict& v) {
  ojson j;
  switch (v.kind) {
    case VerdictKind::Yes:
      j["verdict"] = "YES";
      j["witness"] = format_word(g, v.witness);
      if (v.rep_index >= 0) j["rep"] = v.rep_index;
      break;
    case VerdictKind::No:
      j["verdict"] = "NO";
      j["certificate"] = v.certificate;
      break;
    case VerdictKind::Unknown:
      j["verdict"] = "UNKNOWN";
      j["budget"] = budget_report_json(v.report);
      break;
  }
  return j.dump();
}

Verdict verdict_from_json(const PresentationGraph& g, const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  Verdict v;
  std::string kind = j.at("verdict").get<std::string>();
  if (kind == "YES") {
    v.kind = VerdictKind::Yes;
    v.witness = parse_word(g, j.at("witness").get<std::string>());
    v.rep_index = j.value("rep", -1);
  } else if (kind == "NO") {
    v.kind = VerdictKind::No;
    v.certificate = j.at("certificate").get<std::string>();
  } else {
    v.kind = VerdictKind::Unknown;
    v.report = budget_report_from(j.at("budget"));
  }
  return v;
}

std::string certainty_line(const Certainty& c) {
  switch (c.kind) {
    case CertaintyKind::Equal:
      return "EQUAL engine=" + c.engine;
    case CertaintyKind::NotEqual:
      return "NOT_EQUAL certificate=" + c.certificate;
    case CertaintyKind::Unknown:
      return "UNKNOWN";
  }
  return "?";
}

std::string certainty_json(const Certainty& c) {
  ojson j;
  switch (c.kind) {
    case CertaintyKind::Equal:
      j["result"] = "EQUAL";
      j["engine"] = c.engine;
      j["rewrite_trace"] = c.trace_is_rewrite;
      break;
    case CertaintyKind::NotEqual:
      j["result"] = "NOT_EQUAL";
      j["engine"] = c.engine;
      j["certificate"] = c.certificate;
      break;
    case CertaintyKind::Unknown:
      j["result"] = "UNKNOWN";
      j["budget"] = budget_report_json(c.report);
      break;
  }
  return j.dump();
}

std::string trace_text(const PresentationGraph& g,
                       const std::vector<RewriteStep>& trace) {
  std::string out;
  for (size_t i = 0; i < trace.size(); ++i) {
    const RewriteStep& s = trace[i];
    out += std::to_string(i) + ": at " + std::to_string(s.pos) + " replace '" +
           format_word(g, s.removed) + "' by '" + format_word(g, s.inserted) +
           "'";
    if (s.edge >= 0) {
      const auto& e = g.edges()[s.edge];
      out += " (relator " + g.name(e.u) + "-" + g.name(e.v) + ")";
    }
    out += "\n";
  }
  return out;
}

namespace {

std::string vertex_set(const PresentationGraph& g, const std::vector<int>& vs) {
  std::string s = "{";
  for (size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ",";
    s += g.name(vs[i]);
  }
  return s + "}";
}

}  // namespace

std::string eligibility_line(const PresentationGraph& g,
                             const EligibilityReport& rep) {
  if (rep.route == EligibilityRoute::Ineligible) {
    std::string s = "ineligible";
    for (const auto& f : rep.failures) s += "\n  " + f;
    return s;
  }
  std::string s = std::string("eligible: ") + route_name(rep.route);
  for (const auto& c : rep.checklist) s += "\n  " + c;
  if (rep.hierarchy) {
    for (const auto& node : rep.hierarchy->nodes) {
      if (node.leaf)
        s += "\n  star leaf " + vertex_set(g, node.vertices);
      else
        s += "\n  split " + vertex_set(g, node.vertices) + " = " +
             vertex_set(g, node.split->part1) + " U " +
             vertex_set(g, node.split->part2);
    }
  }
  return s;
}

std::string eligibility_json(const PresentationGraph& g,
                             const EligibilityReport& rep) {
  ojson j;
  j["route"] = route_name(rep.route);
  j["eligible"] = rep.route != EligibilityRoute::Ineligible;
  j["checklist"] = rep.checklist;
  j["failures"] = rep.failures;
  if (rep.hierarchy) {
    ojson nodes = ojson::array();
    for (const auto& node : rep.hierarchy->nodes) {
      ojson jn;
      std::vector<std::string> names;
      for (int v : node.vertices) names.push_back(g.name(v));
      jn["vertices"] = names;
      jn["leaf"] = node.leaf;
      if (!node.leaf) {
        jn["child1"] = node.child1;
        jn["child2"] = node.child2;
      }
      nodes.push_back(std::move(jn));
    }
    j["hierarchy"] = std::move(nodes);
  }
  return j.dump();
}

int verdict_exit_code(const Verdict& v) {
  switch (v.kind) {
    case VerdictKind::Yes: return 0;
    case VerdictKind::No: return 3;
    case VerdictKind::Unknown: return 4;
  }
  return 1;
}

int certainty_exit_code(const Certainty& c) {
  switch (c.kind) {
    case CertaintyKind::Equal: return 0;
    case CertaintyKind::NotEqual: return 3;
    case CertaintyKind::Unknown: return 4;
  }
  return 1;
}

}  // namespace artin
