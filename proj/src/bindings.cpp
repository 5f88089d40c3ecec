#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "lcgroups/campaigns.hpp"
#include "lcgroups/caps.hpp"
#include "lcgroups/cli.hpp"
#include "lcgroups/corpus.hpp"
#include "lcgroups/errors.hpp"
#include "lcgroups/group.hpp"
#include "lcgroups/group_expr.hpp"
#include "lcgroups/group_io.hpp"
#include "lcgroups/lc_series.hpp"
#include "lcgroups/lcm.hpp"
#include "lcgroups/structure.hpp"
#include "lcgroups/version.hpp"

namespace py = pybind11;
using namespace lcg;

namespace {

FiniteGroup build_group_py(const std::string& expr, const Caps& caps) {
  return build_group_expr(expr, caps, load_group_file);
}

py::object report_dict(const CampaignReport& r) {
  py::module_ json = py::module_::import("json");
  return json.attr("loads")(report_json(r).dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite-group engine for lcm-closure invariants";
  m.attr("__version__") = kVersion;

  auto err = py::register_exception<Error>(m, "EngineError");
  py::register_exception<CapExceededError>(m, "CapExceededError", err);
  py::register_exception<LatticeCapExceededError>(m, "LatticeCapExceededError", err);
  py::register_exception<InvalidArgumentError>(m, "InvalidArgumentError", err);
  py::register_exception<ParseError>(m, "ParseError", err);
  py::register_exception<InvariantViolationError>(m, "InvariantViolationError", err);

  py::class_<Caps>(m, "Caps")
      .def(py::init<>())
      .def(py::init([](std::size_t order, std::size_t lattice) {
             return Caps{order, lattice};
           }),
           py::arg("order"), py::arg("lattice") = Caps{}.lattice)
      .def_readwrite("order", &Caps::order)
      .def_readwrite("lattice", &Caps::lattice);

  py::class_<Perm>(m, "Perm")
      .def(py::init<std::vector<uint32_t>>(), py::arg("images"))
      .def_static("identity", &Perm::identity, py::arg("degree"))
      .def_property_readonly("degree", &Perm::degree)
      .def("__call__", &Perm::operator(), py::arg("point"))
      .def("__mul__", [](const Perm& a, const Perm& b) { return compose(a, b); })
      .def("inverse", &Perm::inverse)
      .def("power", &Perm::power, py::arg("exponent"))
      .def("order", [](const Perm& p) { return element_order(p); })
      .def("cycles", &Perm::cycles)
      .def("is_identity", &Perm::is_identity)
      .def("__eq__", [](const Perm& a, const Perm& b) { return a == b; })
      .def("__hash__", [](const Perm& p) { return PermHash{}(p); })
      .def("__str__", &Perm::cycle_string)
      .def("__repr__", [](const Perm& p) { return "Perm " + p.cycle_string(); });

  py::class_<FiniteGroup>(m, "Group")
      .def_property_readonly("degree", &FiniteGroup::degree)
      .def_property_readonly("order", &FiniteGroup::order)
      .def_property_readonly("exponent", &FiniteGroup::exponent)
      .def("__len__", &FiniteGroup::order)
      .def("element", &FiniteGroup::element, py::arg("index"))
      .def("index_of",
           [](const FiniteGroup& g, const Perm& p) -> std::optional<uint32_t> {
             return g.index_of(p);
           })
      .def("mul", &FiniteGroup::mul, py::arg("a"), py::arg("b"))
      .def("inv", &FiniteGroup::inv, py::arg("a"))
      .def("conj", &FiniteGroup::conj, py::arg("h"), py::arg("g"))
      .def("power", &FiniteGroup::power, py::arg("a"), py::arg("e"))
      .def("commutator", &FiniteGroup::commutator, py::arg("a"), py::arg("b"))
      .def("order_of", &FiniteGroup::order_of, py::arg("a"))
      .def_property_readonly("generator_indices", &FiniteGroup::generator_indices)
      .def("canonical_order", &FiniteGroup::canonical_order)
      .def("__repr__", [](const FiniteGroup& g) {
        std::ostringstream os;
        os << "Group(order=" << g.order() << ", degree=" << g.degree() << ")";
        return os.str();
      });

  py::class_<Subgroup>(m, "Subgroup")
      .def_property_readonly("order", &Subgroup::order)
      .def_property_readonly("members", &Subgroup::members)
      .def_property_readonly("generators", &Subgroup::generators)
      .def("contains", &Subgroup::contains, py::arg("index"))
      .def("is_trivial", &Subgroup::is_trivial)
      .def("is_whole", &Subgroup::is_whole)
      .def("as_group", &Subgroup::as_group, py::arg("order_cap") = Caps{}.order)
      .def("__len__", &Subgroup::order)
      .def("__repr__", [](const Subgroup& s) {
        std::ostringstream os;
        os << "Subgroup(order=" << s.order() << " of " << s.parent().order() << ")";
        return os.str();
      });

  py::class_<Epimorphism>(m, "Epimorphism")
      .def_readonly("kernel", &Epimorphism::kernel)
      .def_readonly("image", &Epimorphism::image)
      .def_readonly("forward", &Epimorphism::forward)
      .def("map_index", &Epimorphism::map_index, py::arg("index"));

  m.def("build_group", &build_group_py, py::arg("expr"), py::arg("caps") = Caps{},
        "Build a group from an expression like 'Dih(8)' or 'prod(Cyc(3),Sym(3))'");
  m.def("enumerate_group", &enumerate_group, py::arg("generators"),
        py::arg("order_cap") = Caps{}.order);
  m.def("subgroup_generated", &subgroup_generated, py::arg("group"), py::arg("seed"));
  m.def("center", &center, py::arg("group"));
  m.def("derived_subgroup", &derived_subgroup, py::arg("group"));
  m.def("sylow_subgroup", &sylow_subgroup, py::arg("group"), py::arg("p"));
  m.def("fitting_subgroup", &fitting_subgroup, py::arg("group"),
        py::arg("order_cap") = Caps{}.order);
  m.def("quotient", &quotient, py::arg("group"), py::arg("normal"),
        py::arg("order_cap") = Caps{}.order);
  m.def("is_nilpotent", &is_nilpotent, py::arg("group"), py::arg("order_cap") = Caps{}.order);
  m.def("nilpotency_class", &nilpotency_class, py::arg("group"),
        py::arg("order_cap") = Caps{}.order);
  m.def("is_solvable", &is_solvable, py::arg("group"));
  m.def("is_supersolvable", &is_supersolvable, py::arg("group"),
        py::arg("order_cap") = Caps{}.order);
  m.def("all_subgroups", &all_subgroups, py::arg("group"),
        py::arg("lattice_cap") = Caps{}.lattice);
  m.def("normal_subgroups", &normal_subgroups, py::arg("group"),
        py::arg("lattice_cap") = Caps{}.lattice);

  m.def("lcm_set", &lcm_set, py::arg("group"));
  m.def("lc_subgroup", &lc_subgroup, py::arg("group"));
  m.def("lcm_set_fast", &lcm_set_fast, py::arg("group"));
  m.def("is_lcm_group", &is_lcm_group, py::arg("group"), py::arg("caps") = Caps{});

  py::class_<Cp2Verdict>(m, "Cp2Verdict")
      .def_readonly("holds", &Cp2Verdict::holds)
      .def_property_readonly("route",
                             [](const Cp2Verdict& v) {
                               switch (v.route) {
                                 case Cp2Verdict::Route::PowerLayers: return "power-layers";
                                 case Cp2Verdict::Route::Frobenius: return "frobenius";
                                 default: return "none";
                               }
                             })
      .def_readonly("detail", &Cp2Verdict::detail)
      .def_readonly("x", &Cp2Verdict::x)
      .def_readonly("y", &Cp2Verdict::y)
      .def_readonly("order_x", &Cp2Verdict::order_x)
      .def_readonly("order_y", &Cp2Verdict::order_y)
      .def_readonly("order_xy", &Cp2Verdict::order_xy);
  m.def("is_cp2", &is_cp2, py::arg("group"), py::arg("caps") = Caps{});

  py::class_<NlcmReport>(m, "NlcmReport")
      .def_readonly("is_nlcm", &NlcmReport::is_nlcm)
      .def_readonly("reason", &NlcmReport::reason)
      .def_readonly("p_group", &NlcmReport::p_group)
      .def_readonly("p", &NlcmReport::p)
      .def_readonly("minimal_non_nilpotent", &NlcmReport::minimal_non_nilpotent)
      .def_readonly("exponent", &NlcmReport::exponent)
      .def_readonly("two_generated", &NlcmReport::two_generated)
      .def_readonly("center_order", &NlcmReport::center_order)
      .def_readonly("irregular", &NlcmReport::irregular);
  m.def("nlcm_check", &nlcm_check, py::arg("group"), py::arg("caps") = Caps{});

  py::class_<LcSeriesResult>(m, "LcSeries")
      .def_readonly("terms", &LcSeriesResult::terms)
      .def_readonly("factor_nilpotent", &LcSeriesResult::factor_nilpotent)
      .def_readonly("terminated", &LcSeriesResult::terminated)
      .def_readonly("lc_class", &LcSeriesResult::lc_class);
  m.def("lc_series", &lc_series, py::arg("group"), py::arg("order_cap") = Caps{}.order);

  py::class_<LcBoundCheck>(m, "LcBoundCheck")
      .def_readonly("applies", &LcBoundCheck::applies)
      .def_readonly("p", &LcBoundCheck::p)
      .def_readonly("nilpotency", &LcBoundCheck::nilpotency)
      .def_readonly("bound", &LcBoundCheck::bound)
      .def_readonly("lc_class", &LcBoundCheck::lc_class)
      .def_readonly("within", &LcBoundCheck::within);
  m.def("lc_class_bound_check", &lc_class_bound_check, py::arg("group"),
        py::arg("order_cap") = Caps{}.order);

  m.def("campaign_ids", [] { return campaign_ids(); });
  m.def("campaign_description",
        [](const std::string& id) { return campaign_description(id); }, py::arg("id"));
  m.def(
      "run_campaign",
      [](const std::string& id, const Caps& caps, const std::string& filter) {
        return report_dict(run_campaign(id, caps, filter));
      },
      py::arg("id"), py::arg("caps") = Caps{}, py::arg("filter") = "");
  m.def(
      "run_all_campaigns",
      [](const Caps& caps, const std::string& filter) {
        py::list out;
        for (const CampaignReport& r : run_all_campaigns(caps, filter))
          out.append(report_dict(r));
        return out;
      },
      py::arg("caps") = Caps{}, py::arg("filter") = "");

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err_s;
        int code = cli_dispatch(args, out, err_s);
        return py::make_tuple(code, out.str(), err_s.str());
      },
      py::arg("args"), "Run the command-line driver in-process; returns (code, stdout, stderr)");

  m.def("corpus_names", [] {
    std::vector<std::string> names;
    for (const CorpusEntry& e : corpus()) names.push_back(e.name);
    return names;
  });
}
