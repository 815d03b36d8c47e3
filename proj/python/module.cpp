#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "cli.hpp"
#include "swapalg/circle.hpp"
#include "swapalg/errors.hpp"

namespace py = pybind11;

namespace {

swapalg::Point resolve(int r, const std::string& name) { return swapalg::PointSet(r).resolve(name); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bindings to the rank-n swapping algebra library";

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code;
        {
          py::gil_scoped_release release;
          code = swapalg::cli::run_cli(args, out, err);
        }
        return std::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs one swapalg command line; returns (exit code, stdout, stderr).");

  m.def(
      "linking_number",
      [](const std::string& r, const std::string& x, const std::string& s, const std::string& y, int points) {
        return swapalg::linking_number(resolve(points, r), resolve(points, x), resolve(points, s), resolve(points, y))
            .value()
            .get_str();
      },
      py::arg("r"), py::arg("x"), py::arg("s"), py::arg("y"), py::arg("points"),
      "J(rx, sy) as a rational string, for named points of a1..a<points>.");

  m.def(
      "parallel_number",
      [](const std::string& i, const std::string& j, const std::string& ip, const std::string& jp, int points) {
        return swapalg::parallel_number(resolve(points, i), resolve(points, j), resolve(points, ip), resolve(points, jp))
            .value()
            .get_str();
      },
      py::arg("i"), py::arg("j"), py::arg("ip"), py::arg("jp"), py::arg("points"),
      "s_||(a_i a_j, a_i' a_j') as a rational string.");

  py::register_exception<swapalg::Error>(m, "SwapalgError", PyExc_ValueError);
}
