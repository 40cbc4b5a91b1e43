#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hyperfuzzy/convex.hpp"
#include "hyperfuzzy/dfuzzy.hpp"
#include "hyperfuzzy/document.hpp"
#include "hyperfuzzy/error.hpp"
#include "hyperfuzzy/hypnum.hpp"
#include "hyperfuzzy/props.hpp"
#include "hyperfuzzy/universe.hpp"

namespace py = pybind11;
using namespace hyperfuzzy;

namespace {

void bind_errors(py::module_& m) {
  static py::exception<Error> base(m, "Error", PyExc_ValueError);
  py::register_exception<InvalidNumber>(m, "InvalidNumber", base.ptr());
  py::register_exception<IncomparableError>(m, "IncomparableError", base.ptr());
  py::register_exception<RangeError>(m, "RangeError", base.ptr());
  py::register_exception<LengthMismatch>(m, "LengthMismatch", base.ptr());
  py::register_exception<UniverseMismatch>(m, "UniverseMismatch", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<UsageError>(m, "UsageError", base.ptr());
}

void bind_hyp(py::module_& m) {
  py::enum_<OrderMode>(m, "OrderMode")
      .value("STRICT", OrderMode::Strict)
      .value("LATTICE", OrderMode::Lattice);

  py::class_<Hyp>(m, "Hyp")
      .def(py::init<double, double>(), py::arg("u"), py::arg("v"))
      .def_static("from_standard", &Hyp::from_standard, py::arg("a1"), py::arg("a2"))
      .def_static("real", &Hyp::real)
      .def_static("parse", &parse_hyp)
      .def_static("zero", &Hyp::zero)
      .def_static("one", &Hyp::one)
      .def_static("e1", &Hyp::e1)
      .def_static("e2", &Hyp::e2)
      .def_static("k", &Hyp::k)
      .def_property_readonly("u", &Hyp::u)
      .def_property_readonly("v", &Hyp::v)
      .def("to_standard", [](const Hyp& x) {
        const StandardForm s = x.to_standard();
        return py::make_tuple(s.a1, s.a2);
      })
      .def("format", [](const Hyp& x, bool standard) {
        return to_string(x, standard ? HypForm::Standard : HypForm::Idempotent);
      }, py::arg("standard") = false)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self * double())
      .def(-py::self)
      .def(py::self == py::self)
      .def("__hash__", [](const Hyp& x) { return py::hash(py::make_tuple(x.u(), x.v())); })
      .def("__str__", [](const Hyp& x) { return to_string(x); })
      .def("__repr__", [](const Hyp& x) { return "Hyp(" + to_string(x) + ")"; });

  m.def("leq", &leq);
  m.def("lt", &lt);
  m.def("compare", [](const Hyp& x, const Hyp& y) { return std::string(to_string(compare(x, y))); });
  m.def("classify", [](const Hyp& x) { return std::string(to_string(classify(x))); });
  m.def("order_max", &order_max, py::arg("x"), py::arg("y"), py::arg("mode") = OrderMode::Lattice);
  m.def("order_min", &order_min, py::arg("x"), py::arg("y"), py::arg("mode") = OrderMode::Lattice);
  m.def("modulus", &modulus);
  m.def("metric", &metric);
}

// pybind11 holders cannot point to const.
using HeldUniverse = std::shared_ptr<Universe>;

HeldUniverse held(const UniversePtr& u) { return std::const_pointer_cast<Universe>(u); }

void bind_sets(py::module_& m) {
  py::class_<Universe, HeldUniverse>(m, "Universe")
      .def_static("line", [](std::size_t n) { return held(Universe::line(n)); })
      .def_static("grid", [](const std::vector<std::size_t>& extents) { return held(Universe::grid(extents)); })
      .def_static(
          "from_points",
          [](const std::vector<std::vector<double>>& points, std::vector<std::string> labels) {
            return held(Universe::from_points(points, std::move(labels)));
          },
          py::arg("points"), py::arg("labels") = std::vector<std::string>{})
      .def_static("product", [](const Universe& x, const Universe& y) { return held(Universe::product(x, y)); })
      .def_property_readonly("dim", &Universe::dim)
      .def("__len__", &Universe::size)
      .def("point", [](const Universe& u, std::size_t i) {
        if (i >= u.size()) throw py::index_error();
        auto p = u.point(i);
        return std::vector<double>(p.begin(), p.end());
      });

  py::class_<DFuzzySet>(m, "DFuzzySet")
      .def(py::init([](const HeldUniverse& u, std::vector<Hyp> values) { return DFuzzySet(u, std::move(values)); }),
           py::arg("universe"), py::arg("values"))
      .def_static("constant", [](const HeldUniverse& u, const Hyp& x) { return DFuzzySet::constant(u, x); })
      .def_static("empty", [](const HeldUniverse& u) { return DFuzzySet::empty(u); })
      .def_property_readonly("universe", [](const DFuzzySet& a) { return held(a.universe_ptr()); })
      .def_property_readonly("values", [](const DFuzzySet& a) {
        return std::vector<Hyp>(a.values().begin(), a.values().end());
      })
      .def("__len__", &DFuzzySet::size)
      .def("__getitem__", [](const DFuzzySet& a, std::size_t i) {
        if (i >= a.size()) throw py::index_error();
        return a[i];
      })
      .def("__eq__", [](const DFuzzySet& a, const DFuzzySet& b) { return equals(a, b); })
      .def("__repr__", [](const DFuzzySet& a) {
        std::string out = "DFuzzySet([";
        for (std::size_t i = 0; i < a.size(); ++i) out += (i ? ", " : "") + to_string(a[i]);
        return out + "])";
      });

  m.def("is_subset", [](const DFuzzySet& a, const DFuzzySet& b) { return bool(is_subset(a, b)); });
  m.def("complement", &complement);
  m.def("union", &unite, py::arg("a"), py::arg("b"), py::arg("mode") = OrderMode::Lattice);
  m.def("intersection", &intersect, py::arg("a"), py::arg("b"), py::arg("mode") = OrderMode::Lattice);
  m.def("algebraic_sum", &algebraic_sum);
  m.def("algebraic_product", &algebraic_product);
  m.def("absolute_difference", &absolute_difference);
  m.def("cartesian_product", &cartesian_product, py::arg("a"), py::arg("b"),
        py::arg("mode") = OrderMode::Lattice);
  m.def("convex_combination", &convex_combination);
}

void bind_convex(py::module_& m) {
  m.def("alpha_cut", &alpha_cut);
  m.def("convex_by_cuts", [](const DFuzzySet& a) { return convex_by_cuts(a).convex; });
  m.def("convex_pointwise", [](const DFuzzySet& a, OrderMode mode) { return convex_pointwise(a, mode).convex; },
        py::arg("a"), py::arg("mode") = OrderMode::Lattice);
  m.def("strongly_convex", [](const DFuzzySet& a) { return strongly_convex(a).convex; });
  m.def("essential_supremum", [](const DFuzzySet& a) {
    const Supremum s = essential_supremum(a);
    return py::make_tuple(s.value, s.attained);
  });
  m.def("core", &core);
  m.def("q_set", &q_set);
  m.def("shadow", &shadow);
  m.def("optimal_separation", [](const DFuzzySet& a, const DFuzzySet& b) {
    const SeparationReport r = optimal_separation(a, b);
    py::dict d;
    d["best_degree"] = r.best_degree;
    d["intersection_max"] = r.intersection_max;
    d["joint_best_degree"] = r.joint_best_degree;
    d["joint_threshold"] = py::make_tuple(r.joint_hyperplane.axis, r.joint_hyperplane.threshold);
    return d;
  });
}

void bind_tools(py::module_& m) {
  m.def("run_suite", [](const std::string& name, std::uint64_t seed, std::size_t trials) {
    py::list out;
    for (const auto& r : testkit::run_suite(name, seed, trials)) {
      py::dict d;
      d["name"] = r.name;
      d["trials"] = r.trials;
      d["failures"] = r.failures;
      d["first_counterexample"] = r.first_counterexample;
      out.append(d);
    }
    return out;
  }, py::arg("name"), py::arg("seed") = 42, py::arg("trials") = 100);

  py::class_<Document>(m, "Document")
      .def_property_readonly("universe", [](const Document& d) { return held(d.universe()); })
      .def_property_readonly("sets", [](const Document& d) {
        py::dict out;
        for (const auto& [name, set] : d.sets()) out[py::str(name)] = set;
        return out;
      })
      .def("get", &Document::get, py::return_value_policy::copy)
      .def("put", &Document::put)
      .def("dump", [](const Document& d, bool standard) {
        return dump_document(d, standard ? HypForm::Standard : HypForm::Idempotent);
      }, py::arg("standard") = false);
  m.def("parse_document", &parse_document);
  m.def("load_document", [](const std::string& path) { return load_document(path); });
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hyperbolic-valued fuzzy sets";
  bind_errors(m);
  bind_hyp(m);
  bind_sets(m);
  bind_convex(m);
  bind_tools(m);
}
