#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "forcelab/braid.hpp"
#include "forcelab/catalog.hpp"
#include "forcelab/cli.hpp"
#include "forcelab/error.hpp"
#include "forcelab/garside.hpp"
#include "forcelab/graphmap.hpp"
#include "forcelab/graphmap_io.hpp"
#include "forcelab/horseshoe.hpp"
#include "forcelab/reduction.hpp"
#include "forcelab/symdyn.hpp"

namespace py = pybind11;
using namespace forcelab;

namespace {

py::object fraction(const mpq_class& q) {
  py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(py::int_(py::str(q.get_num().get_str())), py::int_(py::str(q.get_den().get_str())));
}

py::object from_json(const std::string& text) { return py::module_::import("json").attr("loads")(text); }

TransitionGraph transition_graph(const GraphMap& gm) {
  for (const auto& e : gm.graph.edges()) {
    if (e.peripheral) return TransitionGraph(reduce(gm));
  }
  return TransitionGraph(ReducedGraphMap(gm));
}

py::dict conjugacy(const ConjugacyVerdict& v) {
  py::dict d;
  d["outcome"] = to_string(v.outcome);
  d["witness"] = v.witness ? py::object(py::str(to_string(*v.witness))) : py::object(py::none());
  d["effort"] = v.effort;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Braid forcing toolkit: Garside conjugacy, graph-map certificates, orbits and horseshoe codes";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<InvalidGraphMap>(m, "InvalidGraphMap", PyExc_ValueError);
  py::register_exception<PathNotPresent>(m, "PathNotPresent", PyExc_LookupError);
  py::register_exception<Inconsistency>(m, "Inconsistency", PyExc_RuntimeError);

  py::class_<BraidWord>(m, "BraidWord")
      .def(py::init([](const std::string& text) { return parse_braid(text); }), py::arg("text"))
      .def_property_readonly("strands", &BraidWord::strands)
      .def("__len__", &BraidWord::length)
      .def("inverse", &BraidWord::inverse)
      .def("__mul__", &BraidWord::operator*)
      .def("__eq__", [](const BraidWord& a, const BraidWord& b) { return a == b; })
      .def("__str__", [](const BraidWord& w) { return to_string(w); })
      .def("__repr__", [](const BraidWord& w) { return "BraidWord('" + to_string(w) + "')"; });

  m.def("make_beta", &make_beta, py::arg("m"), py::arg("n"));
  m.def("make_sigma", &make_sigma, py::arg("m"), py::arg("n"));
  m.def("make_sigma_prime", &make_sigma_prime, py::arg("m"), py::arg("n"));
  m.def("full_twist", &full_twist, py::arg("strands"));
  m.def("normal_form", [](const BraidWord& w) { return to_string(normal_form(w)); }, py::arg("word"));
  m.def("equal_in_group", &equal_in_group, py::arg("u"), py::arg("v"));
  m.def(
      "conjugacy_test", [](const BraidWord& u, const BraidWord& v, std::size_t budget) { return conjugacy(conjugacy_test(u, v, budget)); },
      py::arg("u"), py::arg("v"), py::arg("budget") = 100000);
  m.def(
      "braid_type_equal",
      [](const BraidWord& u, const BraidWord& v, std::size_t budget) { return conjugacy(braid_type_equal(u, v, budget)); },
      py::arg("u"), py::arg("v"), py::arg("budget") = 100000);

  py::class_<GraphMap>(m, "GraphMap")
      .def(py::init([](const std::string& text) { return parse_graph_map(text); }), py::arg("text"))
      .def_property_readonly("vertices", [](const GraphMap& gm) {
        std::vector<std::string> out;
        for (const auto& v : gm.graph.vertices()) out.push_back(v.name);
        return out;
      })
      .def_property_readonly("edges", [](const GraphMap& gm) {
        std::vector<std::string> out;
        for (const auto& e : gm.graph.edges()) out.push_back(e.name);
        return out;
      })
      .def("__eq__", [](const GraphMap& a, const GraphMap& b) { return a == b; })
      .def("__str__", [](const GraphMap& gm) { return write_graph_map(gm); });

  m.def("reduce", [](const GraphMap& gm) { return reduce(gm).map(); }, py::arg("graph_map"));
  m.def("transition_matrix", &transition_matrix, py::arg("graph_map"));
  m.def(
      "bh_verdict",
      [](const GraphMap& gm, int digits) {
        BhVerdict v = bh_verdict(gm);
        py::dict d;
        d["pseudo_anosov"] = v.pseudo_anosov;
        d["efficient"] = v.efficiency.efficient;
        d["irreducible"] = v.irreducible;
        d["minimal_polynomial"] = v.dilatation ? py::object(py::str(v.dilatation->minimal_polynomial().to_string())) : py::object(py::none());
        d["dilatation"] = v.dilatation ? py::object(py::str(v.dilatation->decimal(digits))) : py::object(py::none());
        d["reasons"] = v.reasons;
        return d;
      },
      py::arg("graph_map"), py::arg("digits") = 30);

  m.def(
      "transition_graph",
      [](const GraphMap& gm) {
        TransitionGraph xi = transition_graph(gm);
        py::dict d;
        std::vector<std::string> names;
        std::vector<std::pair<std::string, std::string>> arcs;
        for (int v = 0; v < xi.size(); ++v) {
          names.push_back(xi.name(v));
          for (int w : xi.successors(v)) arcs.emplace_back(xi.name(v), xi.name(w));
        }
        d["vertices"] = names;
        d["arcs"] = arcs;
        return d;
      },
      py::arg("graph_map"));
  m.def(
      "exact_orbit",
      [](const GraphMap& gm, const std::vector<std::string>& path) {
        TransitionGraph xi = transition_graph(gm);
        closed_path(xi, path);
        std::vector<int> walk;
        for (const auto& name : path) walk.push_back(*xi.find(name));
        ExactOrbit o = exact_orbit(xi, walk);
        py::dict d;
        d["period"] = o.period;
        d["symbolic_period"] = o.symbolic_period;
        d["regular"] = o.regular;
        py::list points;
        for (const auto& p : o.points) points.append(py::make_tuple(xi.reduced().graph().edge(p.edge).name, fraction(p.t)));
        d["points"] = points;
        return d;
      },
      py::arg("graph_map"), py::arg("path"));

  m.def("primitive_codes", [](int max_len) {
    std::vector<std::string> out;
    for (const auto& c : primitive_codes(max_len)) out.push_back(c.word());
    return out;
  }, py::arg("max_len"));
  m.def("braid_from_code", [](const std::string& code) { return braid_from_code(Code(code)); }, py::arg("code"));
  m.def("orbit_coordinates", [](const std::string& code) {
    py::list out;
    for (const auto& p : orbit_coordinates(Code(code))) out.append(py::make_tuple(fraction(p.x), fraction(p.y)));
    return out;
  }, py::arg("code"));
  m.def("sigma_code", [](int mm, int n) { return sigma_code(mm, n).word(); }, py::arg("m"), py::arg("n"));

  m.def("family_graph_map", [](const std::string& f, int mm, int n) { return family_graph_map(parse_family(f), mm, n); },
        py::arg("family"), py::arg("m"), py::arg("n"));
  m.def(
      "dilatation_table",
      [](const std::string& f, int max, int digits) {
        Family family = parse_family(f);
        py::object doc = from_json(table_to_json(family, dilatation_table(family, max, digits)));
        return py::object(doc["rows"]);
      },
      py::arg("family"), py::arg("max"), py::arg("digits") = 30);
  m.def("verify_theorem1", [](int m_max, int n_max) { return from_json(verify_theorem1(m_max, n_max).to_json()); },
        py::arg("m_max") = 6, py::arg("n_max") = 6);
  m.def(
      "verify_theorem2",
      [](int k_max, int code_len, std::size_t budget) { return from_json(verify_theorem2(k_max, code_len, budget).to_json()); },
      py::arg("k_max") = 5, py::arg("code_len") = 7, py::arg("budget") = 100000);
  m.def(
      "verify_corollary3",
      [](int m_max, int n_max, int code_len, std::size_t budget) {
        return from_json(verify_corollary3(m_max, n_max, code_len, budget).to_json());
      },
      py::arg("m_max") = 6, py::arg("n_max") = 6, py::arg("code_len") = 7, py::arg("budget") = 100000);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args, const std::string& input) {
        std::istringstream in(input);
        std::ostringstream out;
        std::ostringstream err;
        int code = dispatch(args, in, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), py::arg("input") = "");
}
