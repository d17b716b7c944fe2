#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "unitri/cli.hpp"

namespace py = pybind11;
using namespace unitri;

namespace {

Algebra full_algebra(int n, long long q) { return Algebra::full(n, cli::field_spec_for_order(q).build()); }

Functional functional(const Algebra& alg, const std::vector<std::array<long long, 3>>& lambda) {
  return Functional::from_entries(alg, lambda_entries(lambda, alg));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact character computations for algebra groups over finite fields";

  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);

  m.def(
      "execute",
      [](const std::string& job_text) {
        const JobSpec job = job_from_json(Json::parse(job_text));
        std::ostringstream err;
        const cli::CommandResult res = cli::execute_checked(job, err);
        return py::make_tuple(res.exit_code, res.output.is_null() ? std::string() : cli::dump(res.output), err.str());
      },
      py::arg("job"), "Runs a JSON job; returns (exit_code, stdout_text, stderr_text).");

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs a command line; returns (exit_code, stdout_text, stderr_text).");

  m.def(
      "field_order_split",
      [](long long q) {
        const FieldSpec f = cli::field_spec_for_order(q);
        return py::make_tuple(f.p, f.e);
      },
      py::arg("q"));

  m.def(
      "chain_dims",
      [](int n, long long q, const std::vector<std::array<long long, 3>>& lambda) {
        const Algebra alg = full_algebra(n, q);
        const ChainResult c = chain_compute(functional(alg, lambda));
        std::vector<std::size_t> l, s;
        for (const auto& x : c.l_list) l.push_back(x.dim());
        for (const auto& x : c.s_list) s.push_back(x.dim());
        return py::make_tuple(c.d, l, s);
      },
      py::arg("n"), py::arg("q"), py::arg("lambda_"));

  m.def(
      "orbit_size",
      [](int n, long long q, const std::vector<std::array<long long, 3>>& lambda, const std::string& which,
         std::uint64_t cap) {
        const Algebra alg = full_algebra(n, q);
        return orbit(functional(alg, lambda), parse_orbit_kind(which), cap).size();
      },
      py::arg("n"), py::arg("q"), py::arg("lambda_"), py::arg("which") = "two-sided", py::arg("cap") = kDefaultCap);

  m.def(
      "shape",
      [](int n, long long q, const std::vector<std::array<long long, 3>>& lambda) {
        const Algebra alg = full_algebra(n, q);
        return shape(functional(alg, lambda)).parts;
      },
      py::arg("n"), py::arg("q"), py::arg("lambda_"));

  m.def(
      "xi_exponents",
      [](int n, long long q, const std::vector<std::array<long long, 3>>& lambda) {
        const Algebra alg = full_algebra(n, q);
        const ChainResult c = chain_compute(functional(alg, lambda));
        return py::make_tuple(c.xi_degree_exponent(), c.xi_norm_exponent());
      },
      py::arg("n"), py::arg("q"), py::arg("lambda_"));
}
