#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "critideals/ideals.hpp"
#include "critideals/intalg.hpp"
#include "critideals/suites.hpp"

namespace py = pybind11;
using namespace critideals;

namespace {

py::int_ to_python(const Integer& v) { return py::int_(py::str(v.get_str())); }

Integer from_python(const py::handle& v) { return Integer(py::str(v).cast<std::string>()); }

std::vector<std::string> strings_of(const GeneratorSet& g) { return g.to_strings(); }

GeneratorSet set_of(const std::vector<std::string>& polys) {
  GeneratorSet out;
  for (const auto& p : polys) out.insert(parse_polynomial(p));
  return out;
}

py::dict record_dict(const ReportRecord& r) {
  py::dict d;
  d["tree"] = r.tree;
  d["j"] = r.j ? py::object(py::int_(*r.j)) : py::object(py::none());
  d["check"] = r.check;
  d["status"] = r.status;
  d["witness"] = r.witness ? py::object(py::str(*r.witness)) : py::object(py::none());
  return d;
}

py::dict group_dict(const AbelianGroup& g) {
  py::list torsion;
  for (const Integer& t : g.torsion) torsion.append(to_python(t));
  py::dict d;
  d["torsion"] = torsion;
  d["free_rank"] = g.free_rank;
  d["text"] = g.torsion_string();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Critical ideals of trees";

  py::register_exception<ResourceLimit>(m, "ResourceLimitError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InputError& e) {
      py::set_error(PyExc_ValueError, e.what());
    }
  });

  py::class_<Tree>(m, "Tree")
      .def_static("from_edges", [](int n, const std::vector<std::pair<int, int>>& edges) {
        std::vector<Edge> es;
        for (auto [a, b] : edges) es.emplace_back(a, b);
        return Tree::from_edges(n, std::move(es));
      }, py::arg("n"), py::arg("edges"))
      .def_static("parse", [](const std::string& text) { return parse_tree(text); }, py::arg("text"))
      .def_static("family", [](const std::string& spec) { return build_tree(FamilySpec::parse(spec)); }, py::arg("spec"))
      .def_static("random", &random_tree, py::arg("n"), py::arg("seed"))
      .def_property_readonly("size", &Tree::size)
      .def_property_readonly("edges", [](const Tree& t) {
        std::vector<std::pair<int, int>> out;
        for (const Edge& e : t.edges()) out.emplace_back(e.u, e.v);
        return out;
      })
      .def_property_readonly("leaves", &Tree::leaves)
      .def_property_readonly("id", [](const Tree& t) { return tree_id(t); })
      .def("is_path", &Tree::is_path)
      .def("__str__", [](const Tree& t) { return serialize_tree(t); })
      .def("__repr__", [](const Tree& t) { return "Tree('" + tree_id(t) + "')"; });

  m.def("nu2", [](const Tree& t) { return nu2(t); }, py::arg("tree"));
  m.def("certify_gamma", [](const Tree& t) {
    GammaCertificate c = certify_gamma(t);
    py::dict d;
    d["nu2"] = c.nu2;
    d["trivial_at_nu2"] = c.trivial_at_nu2;
    d["proper_above"] = c.proper_above;
    d["ok"] = c.ok();
    return d;
  }, py::arg("tree"));

  m.def("critical_ideal", [](const Tree& t, int j) { return strings_of(critical_ideal(t, j).generators); },
        py::arg("tree"), py::arg("j"), "Canonical generator strings from the minimal 2-matchings.");
  m.def("critical_ideal_with_provenance", [](const Tree& t, int j) {
    CriticalIdeal ideal = critical_ideal(t, j);
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t i = 0; i < ideal.generators.size(); ++i) {
      out.emplace_back(ideal.generators[i].to_string(), ideal.provenance[i].to_string());
    }
    return out;
  }, py::arg("tree"), py::arg("j"));
  m.def("all_minor_ideal", [](const Tree& t, int j) { return strings_of(all_minor_ideal(t, j)); }, py::arg("tree"), py::arg("j"));
  m.def("minimal_matchings", [](const Tree& t, int j) {
    std::vector<std::string> out;
    for (const auto& mm : enumerate_minimal(t, j)) out.push_back(mm.to_string());
    return out;
  }, py::arg("tree"), py::arg("j"));
  m.def("d_of_matching", [](const Tree& t, const std::string& matching) {
    return d_of_matching(t, TwoMatching::parse(matching)).to_string();
  }, py::arg("tree"), py::arg("matching"));
  m.def("expand_nonminimal", [](const Tree& t, const std::string& matching) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& term : expand_nonminimal(t, TwoMatching::parse(matching))) {
      out.emplace_back(term.coefficient.to_string(), term.minimal.to_string());
    }
    return out;
  }, py::arg("tree"), py::arg("matching"));

  m.def("normalize", [](const std::string& p) { return parse_polynomial(p).to_string(); }, py::arg("polynomial"));
  m.def("groebner_basis", [](const std::vector<std::string>& gens) { return strings_of(groebner_complete(set_of(gens))); },
        py::arg("generators"));
  m.def("is_groebner_basis", [](const std::vector<std::string>& b) { return is_groebner_basis(set_of(b)); }, py::arg("basis"));
  m.def("is_reduced_groebner_basis", [](const std::vector<std::string>& b) { return is_reduced_groebner_basis(set_of(b)); },
        py::arg("basis"));
  m.def("reduces_to_zero", [](const std::string& p, const std::vector<std::string>& basis) {
    return reduces_to_zero(parse_polynomial(p), set_of(basis));
  }, py::arg("polynomial"), py::arg("groebner_basis"));

  m.def("smith_normal_form", [](const std::vector<std::vector<py::int_>>& rows) {
    IntMatrix mat(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != mat.cols()) throw InputError("ragged matrix");
      for (std::size_t c = 0; c < mat.cols(); ++c) mat.at(r, c) = from_python(rows[r][c]);
    }
    py::list out;
    for (const Integer& f : smith_normal_form(mat).factors) out.append(to_python(f));
    return out;
  }, py::arg("rows"));
  m.def("critical_group", [](const std::string& graph) {
    if (graph.find(':') != std::string::npos) return group_dict(critical_group(build_graph(FamilySpec::parse(graph))));
    return group_dict(critical_group(parse_multigraph(graph)));
  }, py::arg("graph"), "Graph as a family spec ('wired:4,3') or in the edge-list file format.");
  m.def("arithmetical_c5_group", [](int m_param) { return group_dict(critical_group(c5_arithmetical(m_param))); },
        py::arg("m"));

  m.def("suite_names", &suite_names);
  m.def("run_suite", [](const std::string& name, int max_n, std::uint64_t seed) {
    SuiteOptions options;
    options.max_n = max_n;
    options.seed = seed;
    py::list records;
    run_suite(name, options, [&](const ReportRecord& r) { records.append(record_dict(r)); });
    return records;
  }, py::arg("name"), py::arg("max_n") = 6, py::arg("seed") = 1);
}
