#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cfr/constructions.hpp"
#include "cfr/designs.hpp"
#include "cfr/errors.hpp"
#include "cfr/oracle.hpp"
#include "cfr/randomizer.hpp"
#include "cfr/skipcost.hpp"
#include "cfr/tables.hpp"

namespace py = pybind11;
using namespace cfr;

namespace {

py::object fraction(const Rational& x) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(x.numerator(), x.denominator());
}

py::dict plan_dict(const RepairPlan& plan) {
  py::list parts;
  for (const auto& t : plan.transmissions) {
    py::dict d;
    d["helper"] = t.helper + 1;
    d["values"] = t.values;
    std::vector<int> rows;
    for (int r : t.rows) rows.push_back(r + 1);
    d["rows"] = rows;
    d["cost"] = t.cost;
    parts.append(d);
  }
  py::dict out;
  out["erased"] = plan.erased + 1;
  out["cost"] = plan.total_cost;
  out["transmissions"] = parts;
  return out;
}

py::object optional_plan(const std::optional<RepairPlan>& plan) {
  return plan ? py::object(plan_dict(*plan)) : py::object(py::none());
}

int zero_based(const CfrArray& a, int column) {
  if (column < 1 || column > a.columns()) throw py::index_error("column out of range");
  return column - 1;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Zero skip-cost fractional repetition codes from covering designs";

  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  auto parse = py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<RangeError>(m, "RangeError", parse.ptr());
  py::register_exception<ArityError>(m, "ArityError", parse.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<ParameterError>(m, "ParameterError", base.ptr());
  py::register_exception<CapacityError>(m, "CapacityError", base.ptr());
  py::register_exception<ConstructionError>(m, "ConstructionError", base.ptr());
  py::register_exception<ConsistencyError>(m, "ConsistencyError", base.ptr());

  py::class_<DesignParams>(m, "DesignParams")
      .def(py::init([](int t, int k, int v) {
             DesignParams p{t, k, v};
             p.validate();
             return p;
           }),
           py::arg("t"), py::arg("k"), py::arg("v"))
      .def_readonly("t", &DesignParams::t)
      .def_readonly("k", &DesignParams::k)
      .def_readonly("v", &DesignParams::v)
      .def(py::self == py::self)
      .def("__repr__", [](const DesignParams& p) { return "DesignParams" + to_string(p); });

  py::class_<CoveringDesign>(m, "CoveringDesign")
      .def(py::init<DesignParams, std::vector<Block>>(), py::arg("params"), py::arg("blocks"))
      .def_property_readonly("params", &CoveringDesign::params)
      .def_property_readonly("blocks", &CoveringDesign::blocks)
      .def("__len__", &CoveringDesign::size)
      .def("has_duplicate_blocks", &CoveringDesign::has_duplicate_blocks)
      .def("__repr__", [](const CoveringDesign& d) {
        return "<CoveringDesign " + to_string(d.params()) + " with " + std::to_string(d.size()) +
               " blocks>";
      });

  py::class_<CfrArray>(m, "CfrArray")
      .def(py::init<int, int, std::vector<std::vector<int>>>(), py::arg("k"), py::arg("v"),
           py::arg("columns"))
      .def_property_readonly("rows", &CfrArray::rows)
      .def_property_readonly("alphabet", &CfrArray::alphabet)
      .def_property_readonly("columns", &CfrArray::data)
      .def("__len__", &CfrArray::columns)
      .def(py::self == py::self)
      .def("__repr__", [](const CfrArray& a) {
        return "<CfrArray " + std::to_string(a.rows()) + "x" + std::to_string(a.columns()) +
               " over [" + std::to_string(a.alphabet()) + "]>";
      });

  m.def("parse_design", py::overload_cast<const std::string&, const DesignParams&>(&parse_design),
        py::arg("text"), py::arg("params"));
  m.def("load_design", [](const std::string& path, const DesignParams& p) {
    return load_design(path, p);
  }, py::arg("path"), py::arg("params"));
  m.def("serialize_design", &serialize_design);
  m.def("verify_covering", &verify_covering, "Uncovered t-subsets in lexicographic order.");
  m.def("replication_bound", [](const DesignParams& p, int s) {
    return fraction(replication_bound(p, s));
  }, py::arg("params"), py::arg("s"));
  m.def("min_blocks_bound", [](const DesignParams& p) { return fraction(min_blocks_bound(p)); });
  m.def("is_properly_local", [](const DesignParams& p) {
    const auto c = is_properly_local(p);
    py::dict d;
    d["lhs"] = c.lhs;
    d["q"] = c.q;
    d["properly_local"] = c.properly_local;
    d["weak"] = c.weak;
    return d;
  });
  m.def("multiply_design", &multiply_design, py::arg("design"), py::arg("n"));

  m.def("parse_array", py::overload_cast<const std::string&>(&parse_array));
  m.def("load_array", [](const std::string& path) { return load_array(path); });
  m.def("serialize_array", &serialize_array);
  m.def("array_from_design", &array_from_design);
  m.def("transmission_cost", [](const std::vector<int>& column, const std::vector<int>& values) {
    return transmission_cost(column, values);
  }, py::arg("column"), py::arg("values"));
  m.def("column_repair_cost", [](const CfrArray& a, int column, int locality) {
    return optional_plan(column_repair_cost(a, zero_based(a, column), locality));
  }, py::arg("array"), py::arg("column"), py::arg("locality"),
        "Optimal plan for a 1-based column, or None when no plan exists.");
  m.def("brute_force_repair_cost", [](const CfrArray& a, int column, int locality) {
    return brute_force_repair_cost(a, zero_based(a, column), locality);
  }, py::arg("array"), py::arg("column"), py::arg("locality"));
  m.def("array_skip_cost", [](const CfrArray& a, int locality) {
    return array_skip_cost(a, locality).cost;
  }, py::arg("array"), py::arg("locality"));
  m.def("is_zero_skip", [](const CfrArray& a, int locality) {
    return is_zero_skip(a, locality).zero_skip;
  }, py::arg("array"), py::arg("locality"));
  m.def("failing_columns", [](const CfrArray& a, int locality) {
    std::vector<int> out;
    for (int j : is_zero_skip(a, locality).failing) out.push_back(j + 1);
    return out;
  }, py::arg("array"), py::arg("locality"));
  m.def("replication_profile", [](const CfrArray& a) {
    const auto p = replication_profile(a);
    return py::make_tuple(p.counts, p.rho);
  });
  m.def("expansion_factor", [](std::int64_t n, const DesignParams& p) {
    return fraction(expansion_factor(n, p));
  }, py::arg("n_columns"), py::arg("params"));
  m.def("default_locality", &default_locality, py::arg("t"), py::arg("k"));

  m.def("construct_duplicate", &construct_duplicate);
  m.def("construct_combination", &construct_combination, py::arg("design_t"),
        py::arg("design_t_minus_1"));
  m.def("construct_recursive", [](const CoveringDesign& d, bool strict) {
    auto build = construct_recursive(d, strict);
    std::vector<std::string> family;
    for (auto f : build.family) family.push_back(to_string(f));
    py::dict out;
    out["design"] = build.design;
    out["array"] = build.array;
    out["family"] = family;
    out["predicted_blocks"] = build.prediction.predicted_blocks;
    out["warnings"] = build.warnings;
    return out;
  }, py::arg("design"), py::arg("strict") = false);
  m.def("predict_recursive_size", [](const DesignParams& p, std::int64_t blocks) {
    return predict_recursive_size(p, blocks).predicted_blocks;
  }, py::arg("params"), py::arg("base_blocks"));
  m.def("asymptotic_expansion", [](int t, int k) { return fraction(asymptotic_expansion(t, k)); },
        py::arg("t"), py::arg("k"));

  m.def("random_ordering", &random_ordering, py::arg("design"), py::arg("seed"));
  m.def("search_zero_skip", [](const CoveringDesign& d, std::uint64_t seed,
                               std::int64_t max_trials, const std::string& strategy,
                               int locality) {
    SearchConfig cfg;
    cfg.seed = seed;
    cfg.max_trials = max_trials;
    if (strategy == "global") {
      cfg.strategy = SearchStrategy::kGlobalReshuffle;
    } else if (strategy == "local") {
      cfg.strategy = SearchStrategy::kLocalRepair;
    } else {
      throw ParameterError("strategy must be 'global' or 'local'");
    }
    cfg.locality = locality;
    const auto out = search_zero_skip(d, cfg);
    py::dict res;
    res["success"] = out.success;
    res["array"] = out.array ? py::cast(*out.array) : py::object(py::none());
    res["trials_used"] = out.trials_used;
    std::vector<int> failing;
    for (int j : out.failing_columns) failing.push_back(j + 1);
    res["failing_columns"] = failing;
    return res;
  }, py::arg("design"), py::arg("seed"), py::arg("max_trials"), py::arg("strategy") = "global",
        py::arg("locality"));
}
