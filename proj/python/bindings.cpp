#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "artin/coxeter.hpp"
#include "artin/render.hpp"

namespace py = pybind11;
using namespace artin;

namespace {

// thin handle bundling a graph with its word-problem engine
struct GroupHandle {
  PresentationGraph graph;
  WordProblemContext ctx;

  explicit GroupHandle(const std::string& json)
      : graph(parse_graph(json)), ctx(graph) {}
};

std::string kind_name(CertaintyKind k) {
  switch (k) {
    case CertaintyKind::Equal: return "equal";
    case CertaintyKind::NotEqual: return "not_equal";
    case CertaintyKind::Unknown: return "unknown";
  }
  return "?";
}

std::string kind_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::Yes: return "yes";
    case VerdictKind::No: return "no";
    case VerdictKind::Unknown: return "unknown";
  }
  return "?";
}

Budget make_budget(long long nodes, int padding) {
  Budget b;
  b.nodes = nodes;
  b.padding = padding;
  return b;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "twisted conjugacy for large-type Artin groups";

  py::register_exception<GraphError>(m, "GroupError");

  py::class_<GroupHandle>(m, "Group")
      .def(py::init<const std::string&>(), py::arg("graph_json"))
      .def_property_readonly(
          "generators",
          [](const GroupHandle& h) { return h.graph.vertex_names(); })
      .def("type_flags",
           [](const GroupHandle& h) {
             TypeFlags f = type_class(h.graph);
             py::dict d;
             d["large"] = f.large;
             d["xl"] = f.xl;
             d["xxxl"] = f.xxxl;
             d["free_of_infinity"] = f.free_of_infinity;
             d["even_edge"] = f.even_edge;
             return d;
           })
      .def("eligibility",
           [](const GroupHandle& h, bool assume) {
             EligibilityReport rep = eligibility(h.graph, assume);
             py::dict d;
             d["route"] = route_name(rep.route);
             d["eligible"] = rep.route != EligibilityRoute::Ineligible;
             d["failures"] = rep.failures;
             return d;
           },
           py::arg("assume_out_generated") = false)
      .def("is_twistless",
           [](const GroupHandle& h) { return is_twistless(h.graph); })
      .def("cut_vertices",
           [](const GroupHandle& h) {
             std::vector<std::string> out;
             for (int v : cut_vertices(h.graph)) out.push_back(h.graph.name(v));
             return out;
           })
      .def("graph_automorphism_count",
           [](const GroupHandle& h) {
             return graph_automorphisms(h.graph).size();
           })
      .def("outer_representatives",
           [](const GroupHandle& h) {
             std::vector<std::string> out;
             for (const auto& c : outer_representatives(h.graph))
               out.push_back(
                   format_automorphism(h.graph, to_automorphism(h.graph, c)));
             return out;
           })
      .def("equal_words",
           [](const GroupHandle& h, const std::string& u, const std::string& v,
              long long nodes, int padding) {
             Certainty c =
                 h.ctx.equal_words(parse_word(h.graph, u),
                                   parse_word(h.graph, v),
                                   make_budget(nodes, padding));
             py::dict d;
             d["result"] = kind_name(c.kind);
             d["engine"] = c.engine;
             d["certificate"] = c.certificate;
             return d;
           },
           py::arg("u"), py::arg("v"), py::arg("nodes") = 1'000'000,
           py::arg("padding") = 4)
      .def("dihedral_normal_form",
           [](const GroupHandle& h, const std::string& w) {
             if (h.graph.edge_count() != 1)
               throw GraphError("ForeignGenerator",
                                "normal form needs a single-edge graph");
             DihedralForm f =
                 dihedral_normal_form(h.graph, 0, parse_word(h.graph, w));
             return format_word(h.graph,
                                dihedral_canonical_word(h.graph, 0, f));
           })
      .def("coxeter_trivial",
           [](const GroupHandle& h, const std::string& w) {
             return coxeter_trivial(h.graph, parse_word(h.graph, w));
           })
      .def("abelianize",
           [](const GroupHandle& h, const std::string& w) {
             return abelianize(h.graph, parse_word(h.graph, w));
           })
      .def("tcp",
           [](const GroupHandle& h, const std::string& phi,
              const std::string& u, const std::string& v, long long nodes,
              int padding, bool assume) {
             Verdict verdict = tcp(h.ctx, parse_automorphism(h.graph, phi),
                                   parse_word(h.graph, u),
                                   parse_word(h.graph, v),
                                   make_budget(nodes, padding), assume);
             py::dict d;
             d["verdict"] = kind_name(verdict.kind);
             d["witness"] = format_word(h.graph, verdict.witness);
             d["certificate"] = verdict.certificate;
             return d;
           },
           py::arg("phi"), py::arg("u"), py::arg("v"),
           py::arg("nodes") = 1'000'000, py::arg("padding") = 4,
           py::arg("assume_out_generated") = false)
      .def("orbit_decide",
           [](const GroupHandle& h, const std::string& u, const std::string& v,
              long long nodes, int padding, bool assume) {
             Verdict verdict = orbit_decide(
                 h.ctx, parse_word(h.graph, u), parse_word(h.graph, v),
                 outer_representatives(h.graph), make_budget(nodes, padding),
                 assume);
             py::dict d;
             d["verdict"] = kind_name(verdict.kind);
             d["witness"] = format_word(h.graph, verdict.witness);
             d["certificate"] = verdict.certificate;
             d["rep"] = verdict.rep_index;
             return d;
           },
           py::arg("u"), py::arg("v"), py::arg("nodes") = 1'000'000,
           py::arg("padding") = 4, py::arg("assume_out_generated") = false)
      .def("extension",
           [](const GroupHandle& h, const std::string& phi, bool finite) {
             Automorphism a = parse_automorphism(h.graph, phi);
             return build_extension(h.graph, OuterClass{a.perm, a.inv}, finite)
                 .format();
           },
           py::arg("phi"), py::arg("finite_order") = true)
      .def("thicken",
           [](const GroupHandle& h, int radius, bool check_links,
              long long nodes, int padding) {
             Patch p = build_cayley_patch(h.ctx, radius,
                                          make_budget(nodes, padding));
             py::dict d;
             d["group_vertices"] = p.group_vertex_count;
             d["vertices"] = p.vertices.size();
             d["edges"] = p.edges.size();
             d["precells"] = p.precells.size();
             d["zigzags"] = p.zigzags.size();
             d["simplices"] = p.simplices.size();
             d["json"] = patch_to_json(p);
             if (check_links) {
               int failures = 0;
               auto reports = check_links_6_large(p);
               for (const auto& r : reports)
                 if (!r.pass) ++failures;
               d["links_checked"] = reports.size();
               d["link_failures"] = failures;
             }
             return d;
           },
           py::arg("radius"), py::arg("check_links") = false,
           py::arg("nodes") = 1'000'000, py::arg("padding") = 4);
}
