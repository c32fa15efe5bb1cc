#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "diamondlab/certificate.hpp"
#include "diamondlab/error.hpp"
#include "diamondlab/graph.hpp"
#include "diamondlab/lattice.hpp"
#include "diamondlab/patterns.hpp"
#include "diamondlab/search.hpp"
#include "diamondlab/verify.hpp"

namespace py = pybind11;
namespace dl = diamondlab;

namespace {

py::object fraction(const dl::Rational& q) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(dl::to_string(q));
}

dl::Rational rational(const py::handle& x) { return dl::parse_rational(py::str(x)); }

dl::Family family(int n, const std::vector<std::vector<int>>& sets) {
  std::vector<dl::ElementSet> members;
  for (const auto& s : sets) {
    for (int e : s)
      if (e < 1 || e > n) throw dl::Error(dl::ErrorCode::BadParameter, "element " + std::to_string(e) + " outside [n]");
    members.push_back(dl::ElementSet::from_elements(s));
  }
  return dl::Family(n, std::move(members));
}

std::vector<std::vector<int>> sets_of(const dl::Family& f) {
  std::vector<std::vector<int>> out;
  for (auto s : f) out.push_back(s.elements());
  return out;
}

dl::Graph graph(int v, const std::vector<std::pair<int, int>>& edges) {
  dl::Graph g(v);
  for (auto [i, j] : edges) {
    if (i < 1 || j < 1 || i > v || j > v || i == j) throw dl::Error(dl::ErrorCode::BadParameter, "bad edge");
    g.add_edge(i - 1, j - 1);
  }
  return g;
}

py::dict search_result(const dl::SearchResult& r) {
  py::dict d;
  d["objective"] = fraction(r.objective);
  d["witness"] = sets_of(r.witness);
  d["nodes_explored"] = r.nodes_explored;
  d["exhaustive"] = r.exhaustive;
  return d;
}

std::string reports_json(const std::vector<dl::Report>& reports) { return dl::format_json(reports); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Lubell, pattern, graph-invariant and certificate computations";

  py::register_exception<dl::Error>(m, "DiamondlabError", PyExc_ValueError);

  m.def("binomial", [](long n, long k) { return py::int_(py::str(dl::binomial(n, k).get_str())); }, py::arg("n"), py::arg("k"));
  m.def("lubell", [](int n, const std::vector<std::vector<int>>& sets) { return fraction(dl::lubell(family(n, sets))); },
        py::arg("n"), py::arg("sets"));
  m.def("psi_census",
        [](int n, const std::vector<std::vector<int>>& sets, unsigned threads) {
          py::gil_scoped_release release;
          return dl::psi_census(family(n, sets), threads).counts;
        },
        py::arg("n"), py::arg("sets"), py::arg("threads") = 1);
  m.def("middle_layers", [](int n, int k) { return sets_of(dl::middle_layers(n, k)); }, py::arg("n"), py::arg("k"));
  m.def("parse_family", [](const std::string& text) {
    auto f = dl::parse_family(text);
    return py::make_tuple(f.universe(), sets_of(f));
  });
  m.def("format_family", [](int n, const std::vector<std::vector<int>>& sets) { return dl::format_family(family(n, sets)); },
        py::arg("n"), py::arg("sets"));

  m.def("is_diamond_free", [](int n, const std::vector<std::vector<int>>& sets) { return dl::is_diamond_free(family(n, sets)); },
        py::arg("n"), py::arg("sets"));
  m.def("find_pattern",
        [](int n, const std::vector<std::vector<int>>& sets, const std::string& pattern) -> py::object {
          auto f = family(n, sets);
          auto w = dl::find_pattern(f, dl::parse_pattern(pattern));
          if (!w) return py::none();
          py::list images;
          for (auto i : *w) images.append(f.members()[i].elements());
          return images;
        },
        py::arg("n"), py::arg("sets"), py::arg("pattern"));
  m.def("e_value", [](const std::string& pattern, int n) { return dl::e_value(dl::parse_pattern(pattern), n); },
        py::arg("pattern"), py::arg("n"));

  m.def("la",
        [](int n, const std::string& pattern, bool exhaustive, std::uint64_t node_budget, unsigned threads) {
          dl::SearchResult r;
          {
            py::gil_scoped_release release;
            r = dl::la(n, dl::parse_pattern(pattern), {exhaustive, node_budget, threads});
          }
          return search_result(r);
        },
        py::arg("n"), py::arg("pattern"), py::arg("exhaustive") = true, py::arg("node_budget") = 200'000'000,
        py::arg("threads") = 0);
  m.def("lubell_star",
        [](int n, bool exhaustive, std::uint64_t node_budget, unsigned threads) {
          dl::SearchResult r;
          {
            py::gil_scoped_release release;
            r = dl::lubell_star(n, {exhaustive, node_budget, threads});
          }
          return search_result(r);
        },
        py::arg("n"), py::arg("exhaustive") = true, py::arg("node_budget") = 200'000'000, py::arg("threads") = 0);

  m.def("subgraph_census",
        [](int v, const std::vector<std::pair<int, int>>& edges) {
          auto c = dl::subgraph_census(graph(v, edges));
          return py::make_tuple(std::vector<std::uint64_t>(c.alpha.begin(), c.alpha.end()),
                                std::vector<std::uint64_t>(c.beta.begin(), c.beta.end()));
        },
        py::arg("v"), py::arg("edges"));
  m.def("f_value_of_family",
        [](int n, const std::vector<std::vector<int>>& sets) { return fraction(dl::f_value(n, dl::extract_structure(family(n, sets)))); },
        py::arg("n"), py::arg("sets"));
  m.def("f_value",
        [](int n, int v, const std::vector<std::pair<int, int>>& edges, const std::vector<std::vector<int>>& x_sides) {
          dl::StructureW s;
          s.graph = graph(v, edges);
          for (const auto& x : x_sides) {
            std::uint32_t mask = 0;
            for (int i : x) {
              if (i < 1 || i > v) throw dl::Error(dl::ErrorCode::BadParameter, "vertex outside the graph");
              mask |= 1u << (i - 1);
            }
            s.parts.push_back(dl::Bipartition::from_x(mask, v));
          }
          return fraction(dl::f_value(n, s));
        },
        py::arg("n"), py::arg("v"), py::arg("edges"), py::arg("x_sides"));
  m.def("worst_case_f",
        [](int n, int v, const std::vector<std::pair<int, int>>& edges) { return fraction(dl::worst_case_f(n, graph(v, edges))); },
        py::arg("n"), py::arg("v"), py::arg("edges"));

  m.def("class_names", [] {
    std::vector<std::string> out;
    for (auto h : dl::kAllClasses) out.emplace_back(dl::class_name(h));
    return out;
  });
  m.def("dstar", [](const std::string& h, int n, int v) { return fraction(dl::dstar(dl::parse_class(h), n, v)); },
        py::arg("hclass"), py::arg("n"), py::arg("v"));
  m.def("gamma", [](int n, int v) { return fraction(dl::gamma(n, v)); }, py::arg("n"), py::arg("v"));
  m.def("c_weight", [](const std::string& h) { return dl::c_weight(dl::parse_class(h)); }, py::arg("hclass"));
  m.def("g_eval", [](const std::string& h, py::handle x) { return fraction(dl::g_eval(dl::parse_class(h), rational(x))); },
        py::arg("hclass"), py::arg("x"));
  m.def("g_claimed_max",
        [](const std::string& h) -> py::object {
          auto r = dl::g_claimed_max(dl::parse_class(h));
          if (!r) return py::none();
          return py::make_tuple(fraction(r->value), fraction(r->argmax));
        },
        py::arg("hclass"));

  // Verification drivers return the JSON report text.
  m.def("verify_lemma2",
        [](int exhaustive_n_max, std::vector<int> random_n, int random_count, std::uint64_t seed, unsigned threads) {
          py::gil_scoped_release release;
          return reports_json(dl::verify_lemma2({exhaustive_n_max, std::move(random_n), random_count, seed, threads}));
        },
        py::arg("exhaustive_n_max") = 4, py::arg("random_n") = std::vector<int>{6, 7}, py::arg("random_count") = 1000,
        py::arg("seed") = 1, py::arg("threads") = 0);
  m.def("verify_fh",
        [](int count, std::uint64_t seed, unsigned threads) {
          py::gil_scoped_release release;
          return reports_json({dl::verify_fh(count, seed, threads)});
        },
        py::arg("count") = 500, py::arg("seed") = 1, py::arg("threads") = 0);
  m.def("verify_sq_identity",
        [](int count, int v_max, std::uint64_t seed, unsigned threads) {
          py::gil_scoped_release release;
          return reports_json({dl::verify_sq_identity(count, v_max, seed, threads)});
        },
        py::arg("count") = 200, py::arg("v_max") = 16, py::arg("seed") = 1, py::arg("threads") = 0);
  m.def("verify_tables",
        [](const std::string& which) {
          py::gil_scoped_release release;
          return reports_json(dl::verify_tables(which));
        },
        py::arg("which") = "all");
  m.def("lemma3_scan",
        [](int v_max, int n_max, unsigned threads) {
          py::gil_scoped_release release;
          return reports_json({dl::lemma3_scan(v_max, n_max, threads)});
        },
        py::arg("v_max") = 7, py::arg("n_max") = 40, py::arg("threads") = 0);
}
