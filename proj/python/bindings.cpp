#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <stdexcept>
#include <vector>

#include "distfrac/gamma.hpp"
#include "distfrac/krylov.hpp"
#include "distfrac/operators.hpp"
#include "distfrac/problems.hpp"
#include "distfrac/quadrature.hpp"
#include "distfrac/scheme1d.hpp"
#include "distfrac/scheme2d.hpp"
#include "distfrac/spectrum.hpp"
#include "distfrac/stencil.hpp"
#include "distfrac/temporal.hpp"

namespace py = pybind11;
using namespace distfrac;

namespace {

struct SolveSummary {
  int dimension = 1;
  std::size_t space_intervals = 0;
  std::size_t time_steps = 0;
  double sigma = 0.0;
  double max_error = 0.0;
  bool has_error = false;
  double avg_iterations = 0.0;
  double solve_seconds = 0.0;
  std::vector<double> final_field;  // row-major for 2D, x fastest
};

SolveSummary solve_problem(const ManufacturedProblem& problem, std::size_t m,
                           std::size_t n, std::size_t j,
                           const std::string& solver,
                           const std::string& precond,
                           std::optional<double> final_time) {
  SolveSummary summary;
  summary.dimension = problem.dimension;
  summary.space_intervals = m;
  summary.time_steps = n;
  if (problem.dimension == 1) {
    Problem1D p = *problem.one_d;
    if (final_time) p.final_time = *final_time;
    Discretization1D d;
    d.space_intervals = m;
    d.time_steps = n;
    d.alpha_half_count = j;
    d.solver = solver_from_string(solver);
    d.precond = precond_from_string(precond);
    const auto sol = solve_1d(p, d);
    summary.sigma = sol.sigma;
    summary.avg_iterations = sol.average_iterations();
    summary.solve_seconds = sol.solve_seconds;
    const auto last = sol.level(n);
    summary.final_field.assign(last.begin(), last.end());
    if (p.exact) {
      summary.max_error = max_error_1d(sol, p.exact);
      summary.has_error = true;
    }
  } else {
    Problem2D p = *problem.two_d;
    if (final_time) p.final_time = *final_time;
    Discretization2D d;
    d.space_intervals_x = m;
    d.space_intervals_y = m;
    d.time_steps = n;
    d.alpha_half_count = j;
    d.solver = solver_from_string(solver);
    d.precond = precond_from_string(precond);
    const auto sol = solve_2d(p, d);
    summary.sigma = sol.sigma;
    summary.avg_iterations = sol.average_iterations();
    summary.solve_seconds = sol.solve_seconds;
    const auto last = sol.level(n);
    summary.final_field.assign(last.begin(), last.end());
    if (p.exact) {
      summary.max_error = max_error_2d(sol, p.exact);
      summary.has_error = true;
    }
  }
  return summary;
}

DenseMatrix dense_from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw std::invalid_argument("matrix must not be empty");
  DenseMatrix a(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != a.cols) {
      throw std::invalid_argument("matrix rows must have equal length");
    }
    for (std::size_t jj = 0; jj < a.cols; ++jj) a(i, jj) = rows[i][jj];
  }
  return a;
}

}  // namespace

PYBIND11_MODULE(distfrac, m) {
  m.doc() =
      "Second-order schemes for time distributed-order and Riesz space "
      "fractional diffusion equations with circulant-preconditioned "
      "Krylov solvers";

  m.def("gamma_fn", &gamma_fn, py::arg("x"));

  py::class_<DistributedOrderQuadrature>(m, "Quadrature")
      .def_readonly("nodes", &DistributedOrderQuadrature::nodes)
      .def_readonly("weights", &DistributedOrderQuadrature::weights)
      .def("weight_sum", &DistributedOrderQuadrature::weight_sum);
  m.def(
      "build_quadrature",
      [](const std::function<double(double)>& weight, std::size_t j) {
        return build_quadrature(weight, j);
      },
      py::arg("weight"), py::arg("half_count"));
  m.def("quadrature_from_points", &quadrature_from_points, py::arg("nodes"),
        py::arg("weights"));
  m.def("sigma_residual", &sigma_residual, py::arg("quadrature"),
        py::arg("tau"), py::arg("sigma"));
  m.def("sigma_root", &sigma_root, py::arg("quadrature"), py::arg("tau"));

  py::class_<TemporalCoefficients>(m, "TemporalCoefficients")
      .def_readonly("sigma", &TemporalCoefficients::sigma)
      .def_readonly("tau", &TemporalCoefficients::tau)
      .def_readonly("level", &TemporalCoefficients::level)
      .def_readonly("ladder", &TemporalCoefficients::ladder);
  m.def("temporal_coefficients", &temporal_coefficients, py::arg("quadrature"),
        py::arg("tau"), py::arg("sigma"), py::arg("level"));

  py::class_<RieszStencil>(m, "RieszStencil")
      .def_readonly("order", &RieszStencil::order)
      .def_readonly("coefficients", &RieszStencil::g);
  m.def("build_stencil", &build_stencil, py::arg("order"),
        py::arg("max_offset"));

  py::class_<SymToeplitz>(m, "SymToeplitz")
      .def(py::init<std::vector<double>>(), py::arg("first_col"))
      .def_property_readonly("dim", &SymToeplitz::dim)
      .def_property_readonly("first_col", &SymToeplitz::first_col)
      .def("matvec", [](const SymToeplitz& t, const std::vector<double>& v) {
        return t.matvec(v);
      });

  py::class_<CirculantOp>(m, "CirculantOp")
      .def(py::init<std::vector<double>>(), py::arg("first_col"))
      .def_property_readonly("dim", &CirculantOp::dim)
      .def_property_readonly("first_col", &CirculantOp::first_col)
      .def_property_readonly("eigenvalues", &CirculantOp::eigenvalues)
      .def("matvec",
           [](const CirculantOp& c, const std::vector<double>& v) {
             return c.matvec(v);
           })
      .def("solve", [](const CirculantOp& c, const std::vector<double>& b) {
        return c.solve(b);
      });
  m.def("strang_circulant", &strang_circulant, py::arg("toeplitz"));
  m.def("tchan_circulant", &tchan_circulant, py::arg("toeplitz"));
  m.def("rchan_circulant", &rchan_circulant, py::arg("toeplitz"));
  m.def("shifted_circulant", &shifted_circulant, py::arg("shift"),
        py::arg("scale"), py::arg("circulant"));

  py::class_<ShiftedToeplitz1D>(m, "ShiftedToeplitz")
      .def(py::init([](double shift, double scale,
                       std::vector<double> first_col) {
             return ShiftedToeplitz1D{shift, scale,
                                      SymToeplitz(std::move(first_col))};
           }),
           py::arg("shift"), py::arg("scale"), py::arg("first_col"))
      .def_property_readonly("dim", &ShiftedToeplitz1D::dim)
      .def("apply",
           [](const ShiftedToeplitz1D& op, const std::vector<double>& v) {
             return op.apply(v);
           });

  py::class_<SolveReport>(m, "SolveReport")
      .def_readonly("solution", &SolveReport::solution)
      .def_readonly("iterations", &SolveReport::iterations)
      .def_readonly("final_relative_residual",
                    &SolveReport::final_relative_residual)
      .def_readonly("converged", &SolveReport::converged);
  m.def(
      "cg",
      [](const ShiftedToeplitz1D& op, const std::vector<double>& b, double tol,
         std::size_t max_iterations) {
        const LinearOperator lin{
            op.dim(), [&op](std::span<const double> v, std::span<double> out) {
              op.apply(v, out);
            }};
        return cg(lin, b, tol,
                  max_iterations > 0 ? max_iterations : 10 * op.dim());
      },
      py::arg("operator"), py::arg("b"), py::arg("tol") = 1e-12,
      py::arg("max_iterations") = 0);
  m.def(
      "pcg",
      [](const ShiftedToeplitz1D& op, const CirculantOp& precond,
         const std::vector<double>& b, double tol,
         std::size_t max_iterations) {
        const LinearOperator lin{
            op.dim(), [&op](std::span<const double> v, std::span<double> out) {
              op.apply(v, out);
            }};
        const LinearOperator prec{
            precond.dim(),
            [&precond](std::span<const double> v, std::span<double> out) {
              precond.solve(v, out);
            }};
        return pcg(lin, prec, b, tol,
                   max_iterations > 0 ? max_iterations : 10 * op.dim());
      },
      py::arg("operator"), py::arg("preconditioner"), py::arg("b"),
      py::arg("tol") = 1e-12, py::arg("max_iterations") = 0);

  m.def(
      "spectrum",
      [](const std::vector<std::vector<double>>& rows) {
        return spectrum(dense_from_rows(rows));
      },
      py::arg("matrix"));
  m.def(
      "precond_spectrum",
      [](const std::vector<std::vector<double>>& a,
         const std::vector<std::vector<double>>& p) {
        return precond_spectrum(dense_from_rows(a), dense_from_rows(p));
      },
      py::arg("matrix"), py::arg("preconditioner"));

  py::class_<ManufacturedProblem>(m, "ManufacturedProblem")
      .def_readonly("name", &ManufacturedProblem::name)
      .def_readonly("dimension", &ManufacturedProblem::dimension);
  m.def("example1", &example1, py::arg("beta"));
  m.def("example2", &example2, py::arg("beta"), py::arg("gamma"));
  m.def("registry_lookup", &registry_lookup, py::arg("name"), py::arg("beta"),
        py::arg("gamma"));
  m.def("registered_problems", &registered_problems);
  m.def("log_ratio_factor", &log_ratio_factor, py::arg("t"));

  py::class_<SolveSummary>(m, "SolveSummary")
      .def_readonly("dimension", &SolveSummary::dimension)
      .def_readonly("space_intervals", &SolveSummary::space_intervals)
      .def_readonly("time_steps", &SolveSummary::time_steps)
      .def_readonly("sigma", &SolveSummary::sigma)
      .def_readonly("max_error", &SolveSummary::max_error)
      .def_readonly("has_error", &SolveSummary::has_error)
      .def_readonly("avg_iterations", &SolveSummary::avg_iterations)
      .def_readonly("solve_seconds", &SolveSummary::solve_seconds)
      .def_readonly("final_field", &SolveSummary::final_field);
  m.def("solve", &solve_problem, py::arg("problem"), py::arg("M"),
        py::arg("N"), py::arg("J"), py::arg("solver") = "pcg",
        py::arg("precond") = "rchan", py::arg("T") = py::none());
}
