#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ghwlab/charsums.hpp"
#include "ghwlab/error.hpp"
#include "ghwlab/ghw.hpp"
#include "ghwlab/report.hpp"
#include "ghwlab/verify.hpp"

namespace py = pybind11;
using namespace ghwlab;

namespace {

std::vector<std::int64_t> cyc_list(const cyclo::CycInt& x) { return {x.coeffs().begin(), x.coeffs().end()}; }

report::AnalysisConfig make_config(std::uint32_t p, unsigned m, const std::string& d_mode,
                                   const std::optional<std::string>& methods, std::optional<unsigned> r_max,
                                   unsigned threads, std::uint64_t ceiling) {
  report::AnalysisConfig c;
  c.p = p;
  c.m = m;
  c.d_mode = codes::parse_dmode(d_mode);
  if (methods) c.methods = ghw::parse_methods(*methods);
  c.r_max = r_max;
  c.threads = threads;
  c.feasibility_ceiling = ceiling;
  return c;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Finite fields, Gaussian periods and weight hierarchies of trace codes";

  // Owned for the life of the interpreter.
  static py::handle error_type = py::exception<Error>(mod, "GhwlabError", PyExc_ValueError).release();
  py::register_exception_translator([](std::exception_ptr ptr) {
    try {
      if (ptr) std::rethrow_exception(ptr);
    } catch (const Error& e) {
      py::object exc = error_type(e.what());
      exc.attr("code") = std::string(errc_name(e.code()));
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  py::class_<gf::FieldCtx, std::shared_ptr<gf::FieldCtx>>(mod, "Field")
      .def(py::init([](std::uint32_t p, unsigned m) { return std::make_shared<gf::FieldCtx>(gf::FieldCtx::build(p, m)); }),
           py::arg("p"), py::arg("m"))
      .def_property_readonly("p", &gf::FieldCtx::p)
      .def_property_readonly("m", &gf::FieldCtx::m)
      .def_property_readonly("q", &gf::FieldCtx::q)
      .def_property_readonly("modulus", [](const gf::FieldCtx& f) {
        return std::vector<std::uint32_t>(f.modulus().begin(), f.modulus().end());
      })
      .def_property_readonly("alpha", [](const gf::FieldCtx& f) { return f.alpha().packed; })
      .def("coeffs", [](const gf::FieldCtx& f, std::uint32_t x) { return f.coeffs(gf::FqElem{x}); })
      .def("from_coeffs", [](const gf::FieldCtx& f, std::vector<std::uint32_t> c) { return f.from_coeffs(c).packed; })
      .def("add", [](const gf::FieldCtx& f, std::uint32_t a, std::uint32_t b) { return f.add(gf::FqElem{a}, gf::FqElem{b}).packed; })
      .def("mul", [](const gf::FieldCtx& f, std::uint32_t a, std::uint32_t b) { return f.mul(gf::FqElem{a}, gf::FqElem{b}).packed; })
      .def("inv", [](const gf::FieldCtx& f, std::uint32_t a) { return f.inv(gf::FqElem{a}).packed; })
      .def("pow", [](const gf::FieldCtx& f, std::uint32_t a, std::int64_t e) { return f.pow(gf::FqElem{a}, e).packed; })
      .def("exp", [](const gf::FieldCtx& f, std::int64_t k) { return f.exp(k).packed; })
      .def("dlog", [](const gf::FieldCtx& f, std::uint32_t a) { return f.dlog(gf::FqElem{a}); })
      .def("trace", [](const gf::FieldCtx& f, std::uint32_t a, unsigned e) { return f.trace(gf::FqElem{a}, e).packed; },
           py::arg("x"), py::arg("e") = 1)
      .def("__repr__", [](const gf::FieldCtx& f) {
        return "Field(p=" + std::to_string(f.p()) + ", m=" + std::to_string(f.m()) + ")";
      });

  mod.def(
      "gaussian_periods",
      [](const gf::FieldCtx& f, std::uint32_t n) {
        std::vector<std::vector<std::int64_t>> out;
        for (const auto& eta : charsums::gaussian_periods_bf(f, n)) out.push_back(cyc_list(eta));
        return out;
      },
      py::arg("field"), py::arg("N"), "Coefficient vectors of eta_0..eta_{N-1} over 1, z, ..., z^{p-1}.");

  mod.def(
      "omega",
      [](const gf::FieldCtx& f, std::uint32_t big_m, std::uint32_t a_log, std::optional<std::uint32_t> b_log) {
        return report::dump(report::omega_json(f, big_m, a_log, b_log));
      },
      py::arg("field"), py::arg("M"), py::arg("a_log"), py::arg("b_log") = py::none(),
      "Omega(a,b) as JSON text, brute force and closed form.");

  mod.def(
      "ghw_closed",
      [](std::uint32_t p, unsigned m, const std::string& d_mode, unsigned r) {
        return ghw::ghw_closed(p, m, codes::DModeParams::make(p, m, codes::parse_dmode(d_mode)), r);
      },
      py::arg("p"), py::arg("m"), py::arg("d_mode"), py::arg("r"));

  mod.def(
      "analyze_json",
      [](std::uint32_t p, unsigned m, const std::string& d_mode, std::optional<std::string> methods,
         std::optional<unsigned> r_max, unsigned threads, std::uint64_t ceiling) {
        const auto config = make_config(p, m, d_mode, methods, r_max, threads, ceiling);
        std::string text;
        int code = 0;
        {
          py::gil_scoped_release release;
          const auto result = report::analyze(config);
          text = report::dump(report::to_json(result));
          code = result.exit_code();
        }
        return py::make_tuple(text, code);
      },
      py::arg("p"), py::arg("m"), py::arg("d_mode") = "one", py::arg("methods") = py::none(),
      py::arg("r_max") = py::none(), py::arg("threads") = 1u, py::arg("ceiling") = ghw::kDefaultCeiling,
      "Full analysis as (JSON text, exit code).");

  mod.def(
      "verify",
      [](const std::string& suite) {
        const auto which = verify::parse_suite(suite);
        std::vector<verify::CheckResult> results;
        {
          py::gil_scoped_release release;
          results = verify::run_suite(which);
        }
        py::list out;
        for (const auto& r : results) {
          py::dict row;
          row["id"] = r.id;
          row["title"] = r.title;
          row["status"] = std::string(verify::to_string(r.status));
          row["detail"] = r.detail;
          out.append(row);
        }
        return out;
      },
      py::arg("suite") = "core");
}
