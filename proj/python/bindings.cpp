#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "transmute/config.hpp"
#include "transmute/kernel.hpp"
#include "transmute/lbase.hpp"
#include "transmute/potential.hpp"
#include "transmute/spps.hpp"
#include "transmute/transmutation.hpp"
#include "transmute/verify.hpp"

namespace py = pybind11;
using namespace transmute;

namespace {

std::vector<Complex> values_of(const SampledFunction& f) {
  return {f.values().begin(), f.values().end()};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "transmutation operators for the one-dimensional Schrodinger operator "
      "d^2/dx^2 - q(x)";

  py::register_exception<GridMismatchError>(m, "GridMismatchError",
                                            PyExc_ValueError);
  py::register_exception<DegenerateBasisError>(m, "DegenerateBasisError",
                                               PyExc_ValueError);
  py::register_exception<TruncationError>(m, "TruncationError",
                                          PyExc_RuntimeError);

  py::class_<Grid>(m, "Grid")
      .def(py::init<double, int>(), py::arg("half_width"),
           py::arg("subintervals"))
      .def_property_readonly("half_width", &Grid::half_width)
      .def_property_readonly("subintervals", &Grid::subintervals)
      .def_property_readonly("step", &Grid::step)
      .def("node", &Grid::node)
      .def("nodes",
           [](const Grid& g) {
             std::vector<double> xs(g.size());
             for (int i = 0; i < g.size(); ++i) xs[i] = g.node(i);
             return xs;
           })
      .def("__len__", &Grid::size)
      .def("__eq__", [](const Grid& a, const Grid& b) { return a == b; });

  py::class_<SampledFunction>(m, "SampledFunction")
      .def(py::init([](const Grid& g, const std::vector<Complex>& values) {
             return SampledFunction(g, values);
           }),
           py::arg("grid"), py::arg("values"))
      .def_property_readonly("grid", &SampledFunction::grid)
      .def_property_readonly("values", &values_of)
      .def("sup_norm", &SampledFunction::sup_norm)
      .def("at_zero", &SampledFunction::at_zero)
      .def("__len__", &SampledFunction::size);

  m.def("sample",
        [](const Grid& g, const std::function<Complex(double)>& f) {
          return SampledFunction::sample(g, f);
        },
        py::arg("grid"), py::arg("f"),
        "Sample a callable on the grid nodes.");
  m.def("make_potential", &make_potential, py::arg("grid"),
        py::arg("descriptor"));
  m.def("cumulative_integral", &cumulative_integral);
  m.def("l1_norm", &l1_norm);
  m.def("derivative", &derivative);
  m.def("second_difference", &second_difference);
  m.def("interp_linear", &interp_linear);

  py::class_<KernelBuildOptions>(m, "KernelBuildOptions")
      .def(py::init([](double tol, int n_max) {
             return KernelBuildOptions{tol, n_max};
           }),
           py::arg("tol") = 1e-12, py::arg("n_max") = 60)
      .def_readwrite("tol", &KernelBuildOptions::tol)
      .def_readwrite("n_max", &KernelBuildOptions::n_max);

  py::class_<GoursatKernel>(m, "GoursatKernel")
      .def_property_readonly("grid", &GoursatKernel::grid)
      .def_property_readonly("converged", &GoursatKernel::converged)
      .def_property_readonly("iterations", &GoursatKernel::iterations)
      .def_property_readonly("tail_bound", &GoursatKernel::tail_bound)
      .def_property_readonly("q_l1", &GoursatKernel::q_l1)
      .def_property_readonly("sup_h", &GoursatKernel::sup_h)
      .def("kernel_at", &GoursatKernel::kernel_at, py::arg("x"),
           py::arg("t"));

  m.def("build_kernel", &build_kernel, py::arg("q"),
        py::arg("options") = KernelBuildOptions{});
  m.def("kernel_distance", &kernel_distance);
  m.def("verify_goursat_bc",
        [](const GoursatKernel& k, const SampledFunction& q) {
          const GoursatResiduals r = verify_goursat_bc(k, q);
          return std::make_pair(r.diagonal, r.antidiagonal);
        });
  m.def("verify_weak_goursat", &verify_weak_goursat, py::arg("kernel"),
        py::arg("q"), py::arg("family_size") = 5);

  py::class_<BaseSolutionPair>(m, "BaseSolutionPair")
      .def_readonly("phi0", &BaseSolutionPair::phi0)
      .def_readonly("phi1", &BaseSolutionPair::phi1)
      .def_readonly("init_data", &BaseSolutionPair::init_data)
      .def_readonly("wronskian", &BaseSolutionPair::wronskian);

  m.def("solve_base_solution",
        [](const SampledFunction& q, Complex u0, Complex u0p) {
          return solve_base_solution(q, u0, u0p);
        },
        py::arg("q"), py::arg("u0"), py::arg("u0p"));
  m.def("canonical_pair",
        [](const SampledFunction& q) { return canonical_pair(q); },
        py::arg("q"));
  m.def("make_base_pair",
        [](const SampledFunction& q, Complex a0, Complex a0p, Complex b0,
           Complex b0p) { return make_base_pair(q, a0, a0p, b0, b0p); },
        py::arg("q"), py::arg("a0"), py::arg("a0p"), py::arg("b0"),
        py::arg("b0p"));
  m.def("green_function", &green_function, py::arg("pair"), py::arg("x"),
        py::arg("s"));

  py::class_<SLBase>(m, "SLBase")
      .def_readonly("pair", &SLBase::pair)
      .def_readonly("members", &SLBase::members);

  m.def("build_slbase", &build_slbase, py::arg("pair"), py::arg("k_max"));
  m.def("polynomial_approx", &polynomial_approx, py::arg("u"), py::arg("u0"),
        py::arg("u0p"), py::arg("degree"));

  m.def("project_even", &project_even);
  m.def("project_odd", &project_odd);
  m.def("apply_transmutation", &apply_transmutation);
  m.def("apply_inverse", &apply_inverse);
  m.def("apply_transpose", &apply_transpose);

  py::enum_<Fundamental>(m, "Fundamental")
      .value("EvenPart", Fundamental::EvenPart)
      .value("OddPart", Fundamental::OddPart)
      .value("AntiderivativeOfEven", Fundamental::AntiderivativeOfEven)
      .value("DerivativeOfOdd", Fundamental::DerivativeOfOdd);
  m.def("fundamental_apply", &fundamental_apply);

  py::class_<TransmutationSpec>(m, "TransmutationSpec")
      .def(py::init([](Complex cp, Complex ca, Complex cd, Complex cm) {
             return TransmutationSpec{cp, ca, cd, cm};
           }),
           py::arg("c_plus") = Complex(1.0), py::arg("c_a") = Complex(0.0),
           py::arg("c_d") = Complex(0.0), py::arg("c_minus") = Complex(1.0))
      .def_readwrite("c_plus", &TransmutationSpec::c_plus)
      .def_readwrite("c_a", &TransmutationSpec::c_a)
      .def_readwrite("c_d", &TransmutationSpec::c_d)
      .def_readwrite("c_minus", &TransmutationSpec::c_minus)
      .def("determinant", &TransmutationSpec::determinant)
      .def_static("from_pair", &TransmutationSpec::from_pair);

  m.def("general_apply", &general_apply);
  m.def("general_inverse_apply", &general_inverse_apply);
  m.def("relate_bases", &relate_bases);

  py::class_<SPPSSolution>(m, "SPPSSolution")
      .def_readonly("lambda_", &SPPSSolution::lambda)
      .def_readonly("k_used", &SPPSSolution::k_used)
      .def_readonly("tail_estimate", &SPPSSolution::tail_estimate)
      .def_readonly("v1", &SPPSSolution::v1)
      .def_readonly("v2", &SPPSSolution::v2);

  m.def("spps_solve",
        [](const SLBase& base, Complex lambda, double tol) {
          return spps_solve(base, lambda, tol);
        },
        py::arg("base"), py::arg("lambda_"), py::arg("tol") = 1e-12);
  m.def("general_solution",
        [](const SLBase& base, Complex lambda, Complex c1, Complex c2) {
          return general_solution(base, lambda, c1, c2);
        },
        py::arg("base"), py::arg("lambda_"), py::arg("c1"), py::arg("c2"));
  m.def("dirichlet_char", &dirichlet_char, py::arg("base"),
        py::arg("lambda_"), py::arg("left"), py::arg("right"));
  m.def("find_eigenvalues",
        [](const SLBase& base, double left, double right, double lambda_min,
           double lambda_max, int samples, double tol, int count) {
          return find_eigenvalues(base, left, right,
                                  {lambda_min, lambda_max, samples, tol},
                                  count);
        },
        py::arg("base"), py::arg("left"), py::arg("right"),
        py::arg("lambda_min"), py::arg("lambda_max"),
        py::arg("samples") = 200, py::arg("tol") = 1e-8,
        py::arg("count") = 3);

  m.def("run_verification",
        [](const SampledFunction& q, int kmax) {
          auto checks = run_verification(q, {}, kmax, {});
          std::vector<std::tuple<std::string, double, double, bool>> rows;
          rows.reserve(checks.size());
          for (const auto& c : checks)
            rows.emplace_back(c.name, c.value, c.threshold, c.pass);
          return rows;
        },
        py::arg("q"), py::arg("kmax") = 8);
}
