#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gprc/components.hpp"
#include "gprc/genperm.hpp"
#include "gprc/rauzy.hpp"
#include "gprc/spin.hpp"
#include "gprc/surface.hpp"

namespace py = pybind11;
using namespace gprc;

namespace {

py::dict profile_dict(const SingularityProfile& prof) {
  py::dict d;
  d["holonomy"] = prof.holonomy == Holonomy::Abelian ? "abelian" : "quadratic";
  d["degrees"] = prof.degrees;
  d["genus"] = prof.genus;
  d["left_degree"] = prof.left_degree;
  d["right_degree"] = prof.right_degree;
  d["marked_points"] = prof.marked_points;
  return d;
}

std::optional<std::string> op_text(const OpResult& r) {
  if (!r) return std::nullopt;
  return format(*r.perm);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  static py::exception<Error> error(m, "Error");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  m.def("canonical", [](const std::string& s) { return format(parse(s)); });
  m.def("inverse", [](const std::string& s) { return format(inverse(parse(s))); });
  m.def("is_irreducible", [](const std::string& s) { return is_irreducible(parse(s)); });
  m.def("is_cylindrical", [](const std::string& s) { return is_cylindrical(parse(s)); });
  m.def("stratum", [](const std::string& s) { return profile_dict(stratum_of(parse(s))); });
  m.def("spin_parity", [](const std::string& s) { return spin_parity(parse(s)); });
  m.def("op_a", [](const std::string& s) { return op_text(op_a(parse(s))); });
  m.def("op_b", [](const std::string& s) { return op_text(op_b(parse(s))); });
  m.def("op_c", [](const std::string& s) { return format(op_c(parse(s))); });
  m.def(
      "erase",
      [](const std::string& s, const std::vector<int>& victims, bool relabel) {
        return format(erase_symbols(parse_labeled(s), victims, relabel));
      },
      py::arg("perm"), py::arg("symbols"), py::arg("relabel") = true);
  m.def(
      "class_size",
      [](const std::string& s, bool extended, int jobs) {
        EnumOptions opts;
        opts.jobs = jobs;
        opts.keep_members = false;
        py::gil_scoped_release release;
        return enumerate_class(parse(s), extended ? ClassKind::Extended : ClassKind::Rauzy, opts).cardinality;
      },
      py::arg("perm"), py::arg("extended") = false, py::arg("jobs") = 1);
  m.def("classify", [](const std::string& s) { return format(classify(parse(s))); });
  m.def("representative", [](const std::string& spec) { return format(representative(resolve(parse_component(spec)))); });
  m.def("components", [](const std::string& spec) {
    std::vector<std::string> out;
    for (const auto& c : components_of(parse_component(spec).stratum)) out.push_back(format(c));
    return out;
  });
}
