// artin-tcp: twisted conjugacy toolkit for large-type Artin groups.
//
// Subcommands: check-graph, wp, aut, tcp, orbit, extension, thicken.
// Exit codes: 0 = YES / Equal / pass / eligible, 3 = NO / NotEqual / fail /
// ineligible, 4 = UNKNOWN, 1 = error, 2 = usage.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "artin/render.hpp"

using namespace artin;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("FileNotFound", "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct CommonOpts {
  std::string graph_path;
  bool json = false;
  bool trace = false;
  int threads = 1;
  long long seed = 0;
  Budget budget;
  bool assume = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_budget = true) {
  cmd->add_option("--graph", o.graph_path, "graph file (JSON)")->required();
  cmd->add_flag("--json", o.json, "machine-readable JSON output");
  cmd->add_option("--threads", o.threads,
                  "internal parallelism (outputs are identical for all N)");
  cmd->add_option("--seed", o.seed,
                  "seed for any randomized search heuristics (the current "
                  "search order is fully deterministic)");
  if (with_budget) {
    cmd->add_option("--budget", o.budget.nodes, "node budget for searches");
    cmd->add_option("--padding", o.budget.padding,
                    "length padding for intermediate words");
  }
}

PresentationGraph load_graph(const CommonOpts& o) {
  return parse_graph(read_file(o.graph_path));
}

int run_check_graph(const CommonOpts& o) {
  PresentationGraph g = load_graph(o);
  EligibilityReport rep = eligibility(g, o.assume);
  std::cout << (o.json ? eligibility_json(g, rep) : eligibility_line(g, rep))
            << "\n";
  return rep.route == EligibilityRoute::Ineligible ? 3 : 0;
}

int run_wp(const CommonOpts& o, const std::string& u_text,
           const std::string& v_text) {
  PresentationGraph g = load_graph(o);
  WordProblemContext ctx(g);
  Word u = parse_word(g, u_text), v = parse_word(g, v_text);
  Certainty c = ctx.equal_words(u, v, o.budget);
  std::cout << (o.json ? certainty_json(c) : certainty_line(c)) << "\n";
  if (o.trace && c.kind == CertaintyKind::Equal && c.trace_is_rewrite)
    std::cout << trace_text(g, c.trace);
  return certainty_exit_code(c);
}

int run_aut(const CommonOpts& o) {
  PresentationGraph g = load_graph(o);
  auto reps = outer_representatives(g);
  if (o.json) {
    nlohmann::ordered_json j;
    j["count"] = reps.size();
    j["classes"] = nlohmann::ordered_json::array();
    for (const auto& c : reps) {
      nlohmann::ordered_json jc;
      jc["repr"] = format_automorphism(g, to_automorphism(g, c));
      jc["order"] = outer_order(c);
      j["classes"].push_back(std::move(jc));
    }
    std::cout << j.dump() << "\n";
  } else {
    std::cout << reps.size() << " outer classes\n";
    for (const auto& c : reps)
      std::cout << format_automorphism(g, to_automorphism(g, c))
                << "  (order " << outer_order(c) << ")\n";
  }
  return 0;
}

int run_tcp(const CommonOpts& o, const std::string& phi_text,
            const std::string& u_text, const std::string& v_text) {
  PresentationGraph g = load_graph(o);
  WordProblemContext ctx(g);
  Automorphism phi = parse_automorphism(g, phi_text);
  Word u = parse_word(g, u_text), v = parse_word(g, v_text);
  Verdict verdict = tcp(ctx, phi, u, v, o.budget, o.assume);
  std::cout << (o.json ? verdict_json(g, verdict) : verdict_line(g, verdict))
            << "\n";
  if (o.trace && verdict.kind == VerdictKind::Yes) {
    Certainty check = verify_witness(ctx, phi, u, v, verdict.witness, o.budget);
    if (check.kind == CertaintyKind::Equal && check.trace_is_rewrite)
      std::cout << trace_text(g, check.trace);
  }
  return verdict_exit_code(verdict);
}

int run_orbit(const CommonOpts& o, const std::string& u_text,
              const std::string& v_text) {
  PresentationGraph g = load_graph(o);
  WordProblemContext ctx(g);
  Word u = parse_word(g, u_text), v = parse_word(g, v_text);
  Verdict verdict = orbit_decide(ctx, u, v, outer_representatives(g), o.budget,
                                 o.assume);
  std::cout << (o.json ? verdict_json(g, verdict) : verdict_line(g, verdict))
            << "\n";
  return verdict_exit_code(verdict);
}

int run_extension(const CommonOpts& o, const std::string& phi_text,
                  bool finite_order) {
  PresentationGraph g = load_graph(o);
  Automorphism phi = parse_automorphism(g, phi_text);
  if (!free_reduce(phi.inner).empty())
    std::cerr << "note: inner part ignored; the extension uses the outer "
                 "class\n";
  OuterClass psi{phi.perm, phi.inv};
  ExtensionPresentation p = build_extension(g, psi, finite_order);
  if (o.json) {
    nlohmann::ordered_json j;
    j["generators"] = p.generators;
    j["relations"] = nlohmann::ordered_json::array();
    auto spell = [&](const Word& w) {
      std::string s;
      for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ' ';
        s += p.generators[w[i].gen];
        if (w[i].sign < 0) s += "^-1";
      }
      return s;
    };
    for (const auto& [lhs, rhs] : p.relations)
      j["relations"].push_back({spell(lhs), spell(rhs)});
    std::cout << j.dump() << "\n";
  } else {
    std::cout << p.format() << "\n";
  }
  return 0;
}

int run_thicken(const CommonOpts& o, int radius, bool check_links,
                const std::string& psi_text, const std::string& export_path) {
  PresentationGraph g = load_graph(o);
  WordProblemContext ctx(g);
  Patch patch = build_cayley_patch(ctx, radius, o.budget);
  int exit_code = 0;
  nlohmann::ordered_json j;
  j["group_vertices"] = patch.group_vertex_count;
  j["vertices"] = patch.vertices.size();
  j["edges"] = patch.edges.size();
  j["simplices"] = patch.simplices.size();
  j["precells"] = patch.precells.size();
  j["zigzags"] = patch.zigzags.size();
  if (!o.json) {
    std::cout << "patch: " << patch.vertices.size() << " vertices ("
              << patch.group_vertex_count << " group), " << patch.edges.size()
              << " edges, " << patch.precells.size() << " precells, "
              << patch.zigzags.size() << " zigzag edges, "
              << patch.simplices.size() << " higher simplices\n";
  }
  if (check_links) {
    auto reports = check_links_6_large(patch);
    int failures = 0;
    nlohmann::ordered_json jr = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
      if (!r.pass) ++failures;
      if (o.json) {
        nlohmann::ordered_json je;
        je["vertex"] = r.vertex;
        je["flag"] = r.flag_ok;
        je["bad_cycles"] = r.bad_cycles;
        je["pass"] = r.pass;
        jr.push_back(std::move(je));
      } else {
        std::cout << "link of vertex " << r.vertex << ": "
                  << (r.pass ? "pass" : "FAIL") << "\n";
        for (const auto& cycle : r.bad_cycles) {
          std::cout << "  induced cycle:";
          for (int v : cycle) std::cout << " " << v;
          std::cout << "\n";
        }
      }
    }
    j["links_checked"] = reports.size();
    j["link_failures"] = failures;
    j["link_reports"] = std::move(jr);
    if (!o.json)
      std::cout << reports.size() << " complete links checked, " << failures
                << " failures\n";
    if (failures > 0) exit_code = 3;
  }
  if (!psi_text.empty()) {
    Automorphism a = parse_automorphism(g, psi_text);
    OuterClass psi{a.perm, a.inv};
    InducedMapReport rep = induced_automorphism(patch, psi);
    j["equivariance_edge_violations"] = rep.edge_violations.size();
    j["equivariance_simplex_violations"] = rep.simplex_violations.size();
    j["image_outside_patch"] = rep.outside_count;
    if (!o.json)
      std::cout << "induced map: " << rep.edge_violations.size()
                << " edge violations, " << rep.simplex_violations.size()
                << " simplex violations, " << rep.outside_count
                << " vertices map outside\n";
    if (!rep.ok()) exit_code = 3;
  }
  if (o.json) std::cout << j.dump() << "\n";
  if (!export_path.empty()) {
    std::ofstream out(export_path);
    out << patch_to_json(patch);
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"twisted conjugacy toolkit for large-type Artin groups"};
  app.require_subcommand(1);

  CommonOpts check_o, wp_o, aut_o, tcp_o, orbit_o, ext_o, thicken_o;
  std::string wp_u, wp_v, tcp_phi, tcp_u, tcp_v, orbit_u, orbit_v, ext_phi;
  std::string thicken_psi, thicken_export;
  bool ext_finite = false, thicken_links = false;
  int thicken_radius = 2;

  auto* check = app.add_subcommand("check-graph", "eligibility of a graph");
  add_common(check, check_o, false);
  check->add_flag("--assume-out-generated", check_o.assume,
                  "accept the Out hypothesis without a route");

  auto* wp = app.add_subcommand("wp", "word problem: are two words equal");
  add_common(wp, wp_o);
  wp->add_option("--u", wp_u, "first word")->required();
  wp->add_option("--v", wp_v, "second word")->required();
  wp->add_flag("--trace", wp_o.trace, "print the rewrite trace on EQUAL");

  auto* aut = app.add_subcommand("aut", "outer class representatives");
  add_common(aut, aut_o, false);

  auto* tcpc = app.add_subcommand("tcp", "twisted conjugacy query");
  add_common(tcpc, tcp_o);
  tcpc->add_option("--phi", tcp_phi, "automorphism")->required();
  tcpc->add_option("--u", tcp_u, "left-hand word")->required();
  tcpc->add_option("--v", tcp_v, "right-hand word")->required();
  tcpc->add_flag("--trace", tcp_o.trace,
                 "print the witness verification trace on YES");
  tcpc->add_flag("--assume-out-generated", tcp_o.assume,
                 "accept the Out hypothesis without a route");

  auto* orbit = app.add_subcommand("orbit", "orbit decidability over Out");
  add_common(orbit, orbit_o);
  orbit->add_option("--u", orbit_u, "first word")->required();
  orbit->add_option("--v", orbit_v, "second word")->required();
  orbit->add_flag("--assume-out-generated", orbit_o.assume,
                  "accept the Out hypothesis without a route");

  auto* ext = app.add_subcommand("extension", "semidirect extension");
  add_common(ext, ext_o, false);
  ext->add_option("--phi", ext_phi, "automorphism")->required();
  ext->add_flag("--finite-order", ext_finite, "add x^k = 1");

  auto* thicken = app.add_subcommand("thicken", "thickened Cayley patch");
  add_common(thicken, thicken_o);
  thicken->add_option("--radius", thicken_radius, "ball radius")->required();
  thicken->add_flag("--check-links", thicken_links, "verify local 6-largeness");
  thicken->add_option("--psi", thicken_psi,
                      "verify the induced automorphism for this class");
  thicken->add_option("--export", thicken_export, "write the complex as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return run_check_graph(check_o);
    if (wp->parsed()) return run_wp(wp_o, wp_u, wp_v);
    if (aut->parsed()) return run_aut(aut_o);
    if (tcpc->parsed()) return run_tcp(tcp_o, tcp_phi, tcp_u, tcp_v);
    if (orbit->parsed()) return run_orbit(orbit_o, orbit_u, orbit_v);
    if (ext->parsed()) return run_extension(ext_o, ext_phi, ext_finite);
    if (thicken->parsed())
      return run_thicken(thicken_o, thicken_radius, thicken_links, thicken_psi,
                         thicken_export);
  } catch (const GraphError& e) {
    std::cerr << "error [" << e.code << "]: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
