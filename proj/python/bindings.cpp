#include <optional>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "prym/fano_ns.hpp"
#include "prym/picard.hpp"
#include "prym/quartic_fiber.hpp"
#include "prym/suites.hpp"
#include "prym/theta_f2.hpp"

namespace py = pybind11;

namespace {

prym::Parity parse_parity(const std::string& s) {
  if (s == "even") return prym::Parity::Even;
  if (s == "odd") return prym::Parity::Odd;
  throw py::value_error("parity must be 'even' or 'odd'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact verification suites for Prym-map computations";

  // Later registrations are tried first, so the subclass goes last.
  py::register_exception<prym::Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<prym::UsageError>(m, "UsageError", PyExc_ValueError);

  m.def(
      "run_suite_json",
      [](const std::string& suite, std::uint64_t seed, std::size_t samples, std::optional<std::uint32_t> prime,
         std::optional<std::uint32_t> ext, std::optional<int> genus, std::optional<std::string> curve,
         bool timings) {
        prym::SuiteOptions opt;
        opt.seed = seed;
        opt.samples = samples;
        opt.prime = prime;
        opt.ext = ext;
        opt.genus = genus;
        opt.curve = curve;
        prym::VerificationReport r;
        {
          py::gil_scoped_release release;
          r = prym::run_suite(suite, opt);
        }
        return r.to_json(timings).dump(2);
      },
      py::arg("suite"), py::kw_only(), py::arg("seed") = 0, py::arg("samples") = 100, py::arg("prime") = py::none(),
      py::arg("ext") = py::none(), py::arg("genus") = py::none(), py::arg("curve") = py::none(),
      py::arg("timings") = false);

  m.def("suite_names", &prym::suite_names);

  m.def(
      "class_T",
      [](int g, const std::string& parity) { return prym::picard::class_T(g, parse_parity(parity)).to_string(); },
      py::arg("genus"), py::arg("parity"));
  m.def(
      "fiber_relation",
      [](const std::string& parity) {
        const auto c = prym::picard::class_T(5, parse_parity(parity));
        return prym::to_string(prym::picard::apply_fiber_relation(prym::picard::fiber_restrict(c)));
      },
      py::arg("parity"));

  m.def("node_budget", [] { return prym::fano::node_budget(); });
  m.def("adjunction_genus", [](std::int64_t multiple) {
    return prym::to_string(prym::fano::adjunction_genus(prym::fano::NSClass{multiple}));
  });

  m.def(
      "count_parities",
      [](int g) {
        const auto c = prym::theta::count_parities(g);
        return py::make_tuple(c.even, c.odd);
      },
      py::arg("genus"));

  m.def(
      "builtin_bitangent_count",
      [](const std::string& name, std::uint32_t ext) {
        for (const auto& b : prym::quartic::builtin_quartics())
          if (b.name == name) {
            const auto c = prym::quartic::count_bitangents(b.curve, ext);
            return py::make_tuple(c.count, c.hyperflexes);
          }
        throw py::value_error("unknown built-in quartic '" + name + "'");
      },
      py::arg("name"), py::arg("ext"));
}
