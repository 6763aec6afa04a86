#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "binmat/canonical.hpp"
#include "binmat/classify.hpp"
#include "binmat/compose.hpp"
#include "binmat/connectivity.hpp"
#include "binmat/enumerate.hpp"
#include "binmat/minor.hpp"
#include "binmat/verify.hpp"

namespace py = pybind11;
using namespace binmat;

namespace {

ElementSet to_elements(const std::vector<std::string>& names) {
  ElementSet out;
  for (const auto& n : names) out.push_back(n);
  return out;
}

std::vector<std::string> from_elements(const ElementSet& s) {
  std::vector<std::string> out;
  for (const auto& e : s) out.push_back(e.name);
  return out;
}

std::vector<std::vector<std::string>> family_to_lists(const SubsetFamily& f) {
  std::vector<std::vector<std::string>> out;
  for (const auto& s : f.sets) out.push_back(from_elements(s));
  return out;
}

py::dict classification_dict(const BinaryMatroid& m, const Classification& c) {
  py::dict d;
  d["label"] = class_name(c.label);
  if (c.separation) {
    py::dict sep;
    sep["side_x"] = from_elements(c.separation->side_x);
    sep["side_y"] = from_elements(c.separation->side_y);
    sep["lambda"] = c.separation->lambda_value;
    d["separation"] = sep;
  }
  if (c.p9_witness) {
    py::dict w;
    w["delete"] = from_elements(c.p9_witness->deleted);
    w["contract"] = from_elements(c.p9_witness->contracted);
    d["witness"] = w;
  }
  if (c.spike) d["spike"] = spike_name(*c.spike);
  if (c.family_member) d["member"] = *c.family_member;
  if (c.starfish) {
    py::dict s;
    s["extra"] = c.starfish->extra;
    s["n"] = c.starfish->n;
    s["t"] = c.starfish->t;
    d["starfish"] = s;
  }
  if (c.regular_kind) d["regular_kind"] = *c.regular_kind;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact computation with binary matroids";

  py::class_<BinaryMatroid>(m, "Matroid")
      .def_static(
          "from_reduced",
          [](const std::vector<std::string>& rows) {
            return BinaryMatroid::from_reduced_strings(rows);
          },
          py::arg("rows"), "Build [I|D] from 0/1 row strings of D.")
      .def_static(
          "from_full",
          [](const std::vector<std::string>& rows) {
            return BinaryMatroid::from_full_strings(rows);
          },
          py::arg("rows"))
      .def_property_readonly("size", &BinaryMatroid::size)
      .def_property_readonly("rank", &BinaryMatroid::rank)
      .def_property_readonly("corank", &BinaryMatroid::corank)
      .def_property_readonly("elements",
                             [](const BinaryMatroid& m) { return from_elements(m.elements()); })
      .def("rank_of",
           [](const BinaryMatroid& m, const std::vector<std::string>& s) {
             return m.rank_of(to_elements(s));
           })
      .def("dual", &BinaryMatroid::dual)
      .def("delete_elements",
           [](const BinaryMatroid& m, const std::vector<std::string>& s) {
             return m.delete_elements(to_elements(s));
           })
      .def("contract",
           [](const BinaryMatroid& m, const std::vector<std::string>& s) {
             return m.contract_elements(to_elements(s));
           })
      .def("closure",
           [](const BinaryMatroid& m, const std::vector<std::string>& s) {
             return from_elements(m.closure(to_elements(s)));
           })
      .def("simplify", &BinaryMatroid::simplify)
      .def("cosimplify", &BinaryMatroid::cosimplify)
      .def("is_simple", &BinaryMatroid::is_simple)
      .def("circuits",
           [](const BinaryMatroid& m, int max_size) { return family_to_lists(m.circuits(max_size)); },
           py::arg("max_size") = 0)
      .def("cocircuits",
           [](const BinaryMatroid& m, int max_size) {
             return family_to_lists(m.cocircuits(max_size));
           },
           py::arg("max_size") = 0)
      .def("triangles", [](const BinaryMatroid& m) { return family_to_lists(m.triangles()); })
      .def("triads", [](const BinaryMatroid& m) { return family_to_lists(m.triads()); })
      .def("to_text", [](const BinaryMatroid& m) { return write_matrix_text(m); })
      .def("__repr__", [](const BinaryMatroid& m) {
        return "<Matroid |E|=" + std::to_string(m.size()) +
               " rank=" + std::to_string(m.rank()) + ">";
      });

  m.def("named", [](const std::string& n) { return named(n); }, py::arg("name"));
  m.def("catalog_names", &catalog_names);
  m.def("from_text", [](const std::string& t) { return read_matrix_text(t).matroid; });

  m.def("lambda_", [](const BinaryMatroid& m, const std::vector<std::string>& x) {
    return lambda(m, to_elements(x));
  });
  m.def("tau", [](const BinaryMatroid& m) -> py::object {
    auto t = tau(m);
    if (!t) return py::none();
    return py::int_(*t);
  });
  m.def("is_three_connected", &is_three_connected);
  m.def("is_internally_4_connected", &is_internally_4_connected);

  m.def("canonical_key", [](const BinaryMatroid& m) { return canonical_key(m).hex(); });
  m.def("are_isomorphic", &are_isomorphic);

  m.def("has_minor", &has_minor);
  m.def("has_rooted_minor",
        [](const BinaryMatroid& m, const std::vector<std::string>& t,
           const BinaryMatroid& pattern, const std::vector<std::string>& root) {
          return has_rooted_minor(m, to_elements(t), RootedPattern{pattern, to_elements(root)});
        });
  m.def("is_regular", &is_regular);
  m.def("is_graphic", &is_graphic);
  m.def("is_cographic", &is_cographic);

  m.def("direct_sum", &direct_sum);
  m.def("two_sum", [](const BinaryMatroid& a, const BinaryMatroid& b, const std::string& p1,
                      const std::string& p2) { return two_sum(a, b, p1, p2); });
  m.def("parallel_connection",
        [](const BinaryMatroid& a, const BinaryMatroid& b, const std::vector<std::string>& lt,
           const std::vector<std::string>& rt) {
          return parallel_connection_triangle({a, b, to_elements(lt), to_elements(rt)});
        });
  m.def("three_sum",
        [](const BinaryMatroid& a, const BinaryMatroid& b, const std::vector<std::string>& lt,
           const std::vector<std::string>& rt) {
          return three_sum({a, b, to_elements(lt), to_elements(rt)});
        });
  m.def("first_triangle",
        [](const BinaryMatroid& m) { return from_elements(first_triangle(m)); });
  m.def("build_starfish", [](int extra, int n, int t) {
    return build_starfish({extra, n, t});
  });

  m.def("extensions", [](const BinaryMatroid& m, bool three_connected, bool simple) {
    SearchFilters f;
    f.three_connected = three_connected;
    f.simple_only = simple;
    return extensions(m, f);
  });
  m.def("coextensions", [](const BinaryMatroid& m, bool three_connected, bool simple) {
    SearchFilters f;
    f.three_connected = three_connected;
    f.simple_only = simple;
    return coextensions(m, f);
  });

  m.def("classify", [](const BinaryMatroid& m, bool refine_regular) {
    ClassifyOptions opts;
    opts.refine_regular = refine_regular;
    Classification c = classify(m, opts);
    return classification_dict(m, c);
  }, py::arg("m"), py::arg("refine_regular") = false);

  m.def("verification_case_ids", []() {
    std::vector<std::string> out;
    for (const auto& c : verification_cases()) out.push_back(c.id);
    return out;
  });
  m.def("run_verification_case", [](const std::string& id) {
    auto r = run_verification_case(id);
    py::dict d;
    d["id"] = r.id;
    d["pass"] = r.pass;
    d["details"] = r.details;
    d["seconds"] = r.seconds;
    return d;
  });
}
