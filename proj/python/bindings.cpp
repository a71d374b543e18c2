#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ordsemi/enumeration.hpp"
#include "ordsemi/ideals.hpp"
#include "ordsemi/properties.hpp"
#include "ordsemi/relations.hpp"
#include "ordsemi/structure.hpp"
#include "ordsemi/theorems.hpp"

namespace py = pybind11;
using namespace ordsemi;

namespace {

std::vector<int> to_list(ElementSubset x) {
  auto e = x.elements();
  return {e.begin(), e.end()};
}

std::vector<int> to_list(std::vector<Element> const& xs) {
  return {xs.begin(), xs.end()};
}

ElementSubset from_list(OrderedSemigroup const& s, std::vector<int> const& xs) {
  auto out = ElementSubset::empty(s.order());
  for (int x : xs) {
    if (x < 0 || static_cast<std::size_t>(x) >= s.order()) {
      throw py::index_error("element out of range");
    }
    out.insert(static_cast<Element>(x));
  }
  return out;
}

std::vector<std::vector<int>> classes(Partition const& p) {
  std::vector<std::vector<int>> out;
  for (auto const& c : p.classes()) out.push_back(to_list(c));
  return out;
}

OrderedSemigroup make(std::vector<std::vector<int>> const& mult,
                      std::vector<std::pair<int, int>> const& leq) {
  auto const n = mult.size();
  std::vector<Element> table;
  for (auto const& row : mult) {
    if (row.size() != n) throw std::invalid_argument("table must be square");
    for (int v : row) {
      if (v < 0 || static_cast<std::size_t>(v) >= n) {
        throw std::invalid_argument("table entry out of range");
      }
      table.push_back(static_cast<Element>(v));
    }
  }
  std::vector<std::uint8_t> order(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) order[i * n + i] = 1;
  for (auto [a, b] : leq) {
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n ||
        static_cast<std::size_t>(b) >= n) {
      throw std::invalid_argument("order pair out of range");
    }
    order[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)] = 1;
  }
  return {n, std::move(table), std::move(order)};
}

py::dict property_dict(PropertyReport const& r) {
  py::dict d;
  d["property"] = r.property;
  d["holds"] = r.holds;
  d["applicable"] = r.applicable;
  d["witness"] = to_list(r.witness);
  d["notes"] = r.notes;
  return d;
}

py::dict verdict_dict(ConditionVerdict const& v) {
  py::dict d;
  d["condition"] = v.id;
  d["holds"] = v.holds;
  d["hypothesis_met"] = v.hypothesis_met;
  d["witness"] = to_list(v.witness);
  return d;
}

}  // namespace

PYBIND11_MODULE(ordsemi, m) {
  m.doc() = "Finite ordered semigroups: validation, ideals, Green's relations, "
            "theorem sweeps and enumeration.";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<OrderedSemigroup>(m, "OrderedSemigroup")
      .def(py::init(&make), py::arg("mult"),
           py::arg("leq") = std::vector<std::pair<int, int>>{},
           "Build from a square table and a list of (x, y) pairs meaning "
           "x <= y. Reflexive pairs are implied.")
      .def_property_readonly("order", &OrderedSemigroup::order)
      .def("mul", [](OrderedSemigroup const& s, Element a, Element b) {
        return static_cast<int>(s.mul(a, b));
      })
      .def("leq", &OrderedSemigroup::leq)
      .def("table",
           [](OrderedSemigroup const& s) {
             std::vector<std::vector<int>> rows(s.order());
             for (Element a = 0; a < s.order(); ++a)
               for (Element b = 0; b < s.order(); ++b)
                 rows[a].push_back(s.mul(a, b));
             return rows;
           })
      .def("__eq__", [](OrderedSemigroup const& a, OrderedSemigroup const& b) {
        return a == b;
      })
      .def("__str__", [](OrderedSemigroup const& s) {
        return serialize_structure(s);
      })
      .def("__repr__", [](OrderedSemigroup const& s) {
        return "<OrderedSemigroup " + canonical_form(s).str() + ">";
      });

  m.def("parse_structure", [](std::string const& text) {
    auto ns = parse_structure(text);
    return py::make_tuple(ns.algebra, ns.names);
  }, "Parse the text format; returns (structure, element names).");

  m.def("validate", [](OrderedSemigroup const& s) {
    auto r = validate(s);
    py::list failures;
    for (auto const& f : r.failures) {
      py::dict d;
      d["axiom"] = std::string(to_string(f.axiom));
      d["witness"] = to_list(f.witness);
      failures.append(d);
    }
    py::dict d;
    d["valid"] = r.valid;
    d["failures"] = failures;
    return d;
  });
  m.def("canonical_form",
        [](OrderedSemigroup const& s) { return canonical_form(s).str(); });
  m.def("is_isomorphic", &is_isomorphic);
  m.def("opposite", &opposite);

  m.def("downward_closure",
        [](OrderedSemigroup const& s, std::vector<int> const& xs) {
          return to_list(downward_closure(s, from_list(s, xs)));
        });
  m.def("principal_ideal",
        [](OrderedSemigroup const& s, Element a, std::string const& side) {
          return to_list(principal_ideal(s, a, parse_side(side)));
        },
        py::arg("s"), py::arg("a"), py::arg("side") = "two_sided");
  m.def("greens_relations", [](OrderedSemigroup const& s) {
    auto g = greens_relations(s);
    py::dict d;
    d["L"] = classes(g.L);
    d["R"] = classes(g.R);
    d["J"] = classes(g.J);
    d["H"] = classes(g.H);
    return d;
  });
  m.def("least_complete_semilattice_congruence", [](OrderedSemigroup const& s) {
    return classes(least_complete_semilattice_congruence(s));
  });

  m.def("ordered_idempotents",
        [](OrderedSemigroup const& s) { return to_list(ordered_idempotents(s)); });
  m.def("inverses_of", [](OrderedSemigroup const& s, Element a) {
    return to_list(inverses_of(s, a));
  });
  m.def("regularity",
        [](OrderedSemigroup const& s, std::string const& kind) {
          return property_dict(regularity(s, parse_regularity(kind)));
        },
        py::arg("s"), py::arg("kind") = "regular");
  m.def("is_inverse_ordered", [](OrderedSemigroup const& s) {
    return property_dict(is_inverse_ordered(s));
  });

  m.def("condition_ids", [] {
    std::vector<std::string> ids;
    for (auto const& c : condition_catalog()) ids.push_back(c.id);
    return ids;
  });
  m.def("theorem_ids", &all_theorem_ids);
  m.def("evaluate_condition", [](OrderedSemigroup const& s, std::string const& id) {
    return verdict_dict(evaluate_condition(s, id));
  });
  m.def("check_theorem", [](OrderedSemigroup const& s, std::string const& id) {
    auto r = check_theorem(s, id);
    py::list vs;
    for (auto const& v : r.vector) vs.append(verdict_dict(v));
    py::dict d;
    d["theorem"] = r.theorem;
    d["hypothesis_met"] = r.hypothesis_met;
    d["consistent"] = r.consistent;
    d["verdicts"] = vs;
    return d;
  });

  m.def("enumerate",
        [](std::size_t order, bool up_to_iso,
           std::vector<std::string> filters, std::string const& shard) {
          EnumerationOptions o;
          o.order = order;
          o.mode = up_to_iso ? EnumerationMode::up_to_iso
                             : EnumerationMode::labelled;
          o.filters = std::move(filters);
          o.shard = parse_shard(shard);
          py::gil_scoped_release release;
          return enumerate_ordered_semigroups(o);
        },
        py::arg("order"), py::arg("up_to_iso") = false,
        py::arg("filters") = std::vector<std::string>{},
        py::arg("shard") = "0/1");

  m.def("sweep",
        [](std::vector<OrderedSemigroup> const& corpus,
           std::vector<std::string> theorems, std::size_t threads) {
          if (theorems.empty()) theorems = all_theorem_ids();
          SweepReport r;
          {
            py::gil_scoped_release release;
            r = sweep(corpus, theorems, {.threads = threads});
          }
          py::dict out;
          for (auto const& t : r.theorems) {
            py::dict d;
            d["checked"] = t.checked;
            d["hypothesis_met"] = t.hypothesis_met;
            d["inconsistent"] = t.inconsistent;
            d["outside_disagreements"] = t.outside_disagreements;
            py::list bad;
            for (auto const& inc : t.inconsistencies) bad.append(inc.structure_text);
            d["inconsistencies"] = bad;
            out[py::str(t.theorem)] = d;
          }
          return out;
        },
        py::arg("corpus"), py::arg("theorems") = std::vector<std::string>{},
        py::arg("threads") = 1);
}
