// Python bindings. Presentations, diagrams and reports cross the boundary as
// JSON text; the package wrapper converts to and from dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kirk/report.hpp"

namespace py = pybind11;
using namespace kirk;

namespace {

LinkMapPresentation load(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("invalid JSON: ") + e.what());
  }
  return presentation_from_json(j);
}

py::tuple residue_tuple(const Residue& r) { return py::make_tuple(r.value, r.modulus); }

py::list pairs(const std::vector<KPair>& k) {
  py::list out;
  for (const KPair& p : k) out.append(py::make_tuple(p.rho, p.residue.value, p.residue.modulus));
  return out;
}

}  // namespace

PYBIND11_MODULE(_kirk, m) {
  m.doc() = "Link-homotopy invariants of link maps from reduced Magnus expansions";
  m.attr("__engine__") = kEngineVersion;

  auto invalid = py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<ArityMismatch>(m, "ArityMismatch", invalid.ptr());
  py::register_exception<ParseError>(m, "ParseError", invalid.ptr());
  py::register_exception<MalformedDiagram>(m, "MalformedDiagram", invalid.ptr());
  py::register_exception<NonStabilizing>(m, "NonStabilizing", PyExc_RuntimeError);
  py::register_exception<CoefficientOverflow>(m, "CoefficientOverflow", PyExc_OverflowError);

  m.def("expand", [](const std::string& word, int n, int i) {
    return magnus_expand(parse_word(word, n, i).flatten(n, i)).to_string();
  }, py::arg("word"), py::arg("n"), py::arg("i"));

  m.def("expand_terms", [](const std::string& word, int n, int i) {
    std::vector<std::pair<std::vector<int>, Coeff>> out;
    for (const Term& t : magnus_expand(parse_word(word, n, i).flatten(n, i)).terms())
      out.emplace_back(t.monomial.indices(), t.coeff);
    return out;
  }, py::arg("word"), py::arg("n"), py::arg("i"));

  m.def("is_positive", [](const std::string& word, int n, int i) {
    return is_positive(parse_word(word, n, i).flatten(n, i));
  }, py::arg("word"), py::arg("n"), py::arg("i"));

  m.def("rf_equal", [](const std::string& u, const std::string& v, int n, int i) {
    return rf_equal(parse_word(u, n, i).flatten(n, i), parse_word(v, n, i).flatten(n, i));
  }, py::arg("u"), py::arg("v"), py::arg("n"), py::arg("i"));

  m.def("e_invariant", [](const std::string& p, int i) { return e_invariant(load(p), i).to_string(); },
        py::arg("presentation"), py::arg("i"));

  m.def("kappa_tilde", [](const std::string& p, int i, const std::vector<int>& seq) {
    return residue_tuple(kappa_tilde(load(p), i, seq));
  }, py::arg("presentation"), py::arg("i"), py::arg("sequence"));

  m.def("k_sequence", [](const std::string& p, int i, const std::vector<int>& seq) {
    const KSequence k = k_sequence(load(p), i, seq);
    py::dict out;
    out["full"] = pairs(k.full);
    out["filtered"] = pairs(k.filtered);
    return out;
  }, py::arg("presentation"), py::arg("i"), py::arg("sequence"));

  m.def("k_multiset", [](const std::string& p, int i) { return k_multiset(load(p), i).to_string(); },
        py::arg("presentation"), py::arg("i"));

  m.def("sigma", [](const std::string& p, int i) { return sigma_covering(load(p), i).to_string(); },
        py::arg("presentation"), py::arg("i"));

  m.def("kirk_classical", [](const std::string& p) {
    const auto pair = kirk_classical(load(p));
    return py::make_tuple(to_string(pair[0]), to_string(pair[1]));
  }, py::arg("presentation"));

  m.def("report", [](const std::string& p, std::optional<int> component,
                     std::optional<std::vector<int>> sequence, bool all) {
    ReportOptions opt;
    opt.component = component;
    opt.sequence = sequence;
    opt.all = all;
    return build_report(load(p), opt).dump();
  }, py::arg("presentation"), py::arg("component") = py::none(), py::arg("sequence") = py::none(),
     py::arg("all") = false);

  m.def("compare", [](const std::string& a, const std::string& b) {
    return to_json(compare(load(a), load(b))).dump();
  }, py::arg("a"), py::arg("b"));

  m.def("from_cross_section", [](const std::string& text) {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::exception& e) {
      throw InvalidInput(std::string("invalid JSON: ") + e.what());
    }
    return to_json(presentation_from_cross_section(cross_section_from_json(j))).dump();
  }, py::arg("cross_section"));

  m.def("catalog_names", [] {
    std::vector<std::string> out;
    for (const CatalogInfo& c : catalog_names()) out.push_back(c.name);
    return out;
  });

  m.def("catalog_emit", [](const std::string& name, std::optional<int> n, std::optional<int> reversed) {
    const CatalogEntry e = build_catalog_entry(name, n, reversed);
    Json j = to_json(e.presentation);
    j["expected"] = expectations_to_json(e.expected);
    return j.dump();
  }, py::arg("name"), py::arg("n") = py::none(), py::arg("reversed") = py::none());
}
