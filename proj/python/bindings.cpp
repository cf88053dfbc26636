#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "arrfiber/arrangement.hpp"
#include "arrfiber/errors.hpp"
#include "arrfiber/hjcf.hpp"
#include "arrfiber/local.hpp"
#include "arrfiber/report.hpp"
#include "arrfiber/resolution.hpp"
#include "arrfiber/surface.hpp"
#include "arrfiber/verify.hpp"

namespace py = pybind11;
using namespace arrfiber;

namespace {

// Exact conversion through the decimal string.
py::int_ to_py(const mpz_class& value) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(value.get_str().c_str(), nullptr, 10));
}

py::object from_json(const nlohmann::json& value) {
  return py::module_::import("json").attr("loads")(value.dump());
}

Profile make_profile(std::int64_t d, const Profile::Counts& t) { return validate_profile(d, t); }

py::dict profile_dict(const Profile& p) {
  py::dict t;
  for (const auto& [r, count] : p.counts()) t[py::int_(r)] = count;
  py::dict out;
  out["d"] = p.d();
  out["t"] = t;
  return out;
}

py::dict local_dict(const LocalInvariants& inv) {
  py::dict out;
  out["dci"] = to_py(inv.dci);
  out["dcii"] = to_py(inv.dcii);
  out["dmy"] = to_py(inv.dmy);
  out["e"] = to_py(inv.e);
  return out;
}

py::dict oracle_dict(const OracleReport& rep) {
  py::dict out;
  out["r"] = rep.r;
  out["d"] = rep.d;
  out["coefficients_match"] = rep.coefficients_match;
  out["dci_match"] = rep.dci_match;
  out["dcii_match"] = rep.dcii_match;
  out["oracle_dci"] = to_py(rep.oracle_dci);
  out["oracle_dcii"] = to_py(rep.oracle_dcii);
  out["closed_dci"] = to_py(rep.closed_dci);
  out["closed_dcii"] = to_py(rep.closed_dcii);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact invariants of surfaces attached to line arrangements";
  m.attr("__version__") = std::string(kVersion);

  // Owned for the interpreter's lifetime.
  static py::handle error_type = PyErr_NewException("arrfiber._core.ArrfiberError", PyExc_ValueError, nullptr);
  m.attr("ArrfiberError") = error_type;
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type)(std::string(e.what()));
      exc.attr("kind") = std::string(e.name());
      exc.attr("detail") = e.detail();
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  m.def("profile", [](std::int64_t d, const Profile::Counts& t) { return profile_dict(make_profile(d, t)); },
        py::arg("d"), py::arg("t"), "Validate a profile and return it normalised.");
  m.def("arrangement_profile",
        [](const std::string& text) { return profile_dict(profile_of(parse_arrangement(text))); }, py::arg("text"),
        "Profile of an arrangement in the line-list text format.");
  m.def(
      "catalog",
      [](const std::string& name, std::optional<std::int64_t> param) {
        const CatalogEntry e = param ? catalog_profile(name, param) : catalog_lookup(name);
        py::dict out = profile_dict(e.profile);
        out["name"] = e.name;
        out["q"] = e.q ? py::object(py::int_(*e.q)) : py::object(py::none());
        return out;
      },
      py::arg("name"), py::arg("param") = py::none());

  m.def(
      "invariants",
      [](std::int64_t d, const Profile::Counts& t, std::optional<std::int64_t> q) {
        return from_json(invariants_report(ReportInput{"profile", make_profile(d, t), q}));
      },
      py::arg("d"), py::arg("t"), py::arg("q") = py::none(), "Full invariants report, same layout as the CLI JSON.");
  m.def(
      "chern_numbers",
      [](std::int64_t d, const Profile::Counts& t) {
        const ChernNumbers c = chern_numbers(make_profile(d, t));
        return py::make_tuple(to_py(c.c1sq), to_py(c.c2));
      },
      py::arg("d"), py::arg("t"));
  m.def(
      "hodge_diamond",
      [](std::int64_t d, const Profile::Counts& t, std::int64_t q) {
        const HodgeDiamond h = hodge_diamond(make_profile(d, t), q);
        py::dict out;
        out["q"] = to_py(h.q);
        out["pg"] = to_py(h.pg);
        out["h11"] = to_py(h.h11);
        return out;
      },
      py::arg("d"), py::arg("t"), py::arg("q"));

  m.def("local_invariants", [](std::int64_t r, std::int64_t d) { return local_dict(local_invariants(r, d)); },
        py::arg("r"), py::arg("d"));
  m.def(
      "canonical_coefficients",
      [](std::int64_t r, std::int64_t d) {
        const CanonicalCoefficients c = canonical_coefficients(r, d);
        return py::make_tuple(std::string(shape_name(c.shape)), c.a);
      },
      py::arg("r"), py::arg("d"));
  m.def(
      "weight_data",
      [](std::int64_t r, std::int64_t d) {
        const WeightData w = weight_data(r, d);
        py::dict out;
        out["g"] = w.g;
        out["weights"] = py::make_tuple(w.w1, w.w2, w.w3);
        out["N"] = w.N;
        out["alpha"] = w.alpha;
        out["bprime"] = w.bprime;
        out["beta"] = w.beta;
        out["b"] = w.b;
        out["genus"] = w.genus0;
        return out;
      },
      py::arg("r"), py::arg("d"));
  m.def("resolution_graph", [](std::int64_t r, std::int64_t d) { return from_json(graph_report(build_resolution_graph(r, d))); },
        py::arg("r"), py::arg("d"));
  m.def("resolution_dot", [](std::int64_t r, std::int64_t d) { return to_dot(build_resolution_graph(r, d)); },
        py::arg("r"), py::arg("d"));

  m.def("modular_beta", &modular_beta, py::arg("alpha"), py::arg("bprime"));
  m.def("hj_expand", [](std::int64_t alpha, std::int64_t beta) { return hj_expand(alpha, beta).terms; },
        py::arg("alpha"), py::arg("beta"));
  m.def(
      "hj_evaluate",
      [](const std::vector<std::int64_t>& terms) {
        const auto v = hj_evaluate(terms);
        return py::make_tuple(v[0], v[1]);
      },
      py::arg("terms"));

  m.def("verify_pair", [](std::int64_t r, std::int64_t d) { return oracle_dict(verify_pair(r, d)); }, py::arg("r"),
        py::arg("d"));
  m.def(
      "sweep_verify",
      [](std::int64_t r_max, std::int64_t d_max) {
        std::vector<OracleReport> reports;
        {
          py::gil_scoped_release release;
          reports = sweep_verify(r_max, d_max);
        }
        py::list out;
        for (const auto& rep : reports) out.append(oracle_dict(rep));
        return out;
      },
      py::arg("r_max"), py::arg("d_max"));
}
