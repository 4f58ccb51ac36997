// Command-line harness: convergence studies, solver comparisons, spectrum
// dumps and single solves for the distributed-order fractional diffusion
// schemes. Exit codes: 0 success, 2 configuration error, 3 solver failure,
// 4 dense cap exceeded.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "distfrac/errors.hpp"
#include "distfrac/io.hpp"
#include "distfrac/operators.hpp"
#include "distfrac/problems.hpp"
#include "distfrac/scheme1d.hpp"
#include "distfrac/scheme2d.hpp"
#include "distfrac/spectrum.hpp"
#include "distfrac/stencil.hpp"

namespace {

using namespace distfrac;

struct RunConfig {
  std::string problem = "example1";
  double beta = 1.5;
  double gamma = 1.5;
  double final_time = 1.5;
  std::size_t space_intervals = 32;  // M (both axes in 2D)
  std::size_t time_steps = 16;       // N
  std::size_t alpha_half_count = 4;  // J
  std::string solver = "pcg";
  std::string precond = "rchan";
  std::string axis = "space";
  std::size_t levels = 2;  // converge: rows; spectrum: time level
  std::string out;
  std::size_t dense_cap = kDefaultDenseCap;
};

void add_common_options(CLI::App& app, RunConfig& cfg) {
  app.add_option("--problem", cfg.problem, "Registered problem name");
  app.add_option("--beta", cfg.beta, "Space order (x direction)");
  app.add_option("--gamma", cfg.gamma, "Space order (y direction, 2D)");
  app.add_option("--T", cfg.final_time, "Final time");
  app.add_option("--M", cfg.space_intervals,
                 "Space intervals per axis (M, or both axes in 2D)");
  app.add_option("--N", cfg.time_steps, "Time steps");
  app.add_option("--J", cfg.alpha_half_count,
                 "Half count of the order grid (2J intervals)");
  app.add_option("--solver", cfg.solver, "cholesky | cg | pcg");
  app.add_option("--precond", cfg.precond, "none | strang | tchan | rchan");
  app.add_option("--levels", cfg.levels,
                 "converge: number of rows; spectrum: time level (1 or 2)");
  app.add_option("--axis", cfg.axis, "converge axis: space | time | distorder");
  app.add_option("--out", cfg.out, "Output path (stdout when omitted)");
  app.add_option("--dense-cap", cfg.dense_cap,
                 "Largest dimension allowed to go dense");
  app.set_config("--config", "", "Flat key = value configuration file");
  app.allow_config_extras(CLI::config_extras_mode::error);
}

void write_text(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) {
    throw std::invalid_argument("cannot open output file '" + cfg.out + "'");
  }
  file << text;
}

ManufacturedProblem load_problem(const RunConfig& cfg) {
  auto problem = registry_lookup(cfg.problem, cfg.beta, cfg.gamma);
  if (problem.one_d) problem.one_d->final_time = cfg.final_time;
  if (problem.two_d) problem.two_d->final_time = cfg.final_time;
  return problem;
}

Discretization1D disc_1d(const RunConfig& cfg) {
  Discretization1D d;
  d.space_intervals = cfg.space_intervals;
  d.time_steps = cfg.time_steps;
  d.alpha_half_count = cfg.alpha_half_count;
  d.solver = solver_from_string(cfg.solver);
  d.precond = precond_from_string(cfg.precond);
  d.dense_cap = cfg.dense_cap;
  return d;
}

Discretization2D disc_2d(const RunConfig& cfg) {
  Discretization2D d;
  d.space_intervals_x = cfg.space_intervals;
  d.space_intervals_y = cfg.space_intervals;
  d.time_steps = cfg.time_steps;
  d.alpha_half_count = cfg.alpha_half_count;
  d.solver = solver_from_string(cfg.solver);
  d.precond = precond_from_string(cfg.precond);
  d.dense_cap = cfg.dense_cap;
  return d;
}

struct RunResult {
  double error = 0.0;
  double seconds = 0.0;
  double avg_iterations = 0.0;
};

RunResult run_once(const ManufacturedProblem& problem, const RunConfig& cfg,
                   bool need_error) {
  RunResult result;
  if (problem.dimension == 1) {
    const auto sol = solve_1d(*problem.one_d, disc_1d(cfg));
    if (need_error) {
      if (!problem.one_d->exact) {
        throw std::invalid_argument("problem has no exact solution");
      }
      result.error = max_error_1d(sol, problem.one_d->exact);
    }
    result.seconds = sol.solve_seconds;
    result.avg_iterations = sol.average_iterations();
  } else {
    const auto sol = solve_2d(*problem.two_d, disc_2d(cfg));
    if (need_error) {
      if (!problem.two_d->exact) {
        throw std::invalid_argument("problem has no exact solution");
      }
      result.error = max_error_2d(sol, problem.two_d->exact);
    }
    result.seconds = sol.solve_seconds;
    result.avg_iterations = sol.average_iterations();
  }
  return result;
}

int cmd_converge(RunConfig cfg) {
  if (cfg.axis != "space" && cfg.axis != "time" && cfg.axis != "distorder") {
    throw std::invalid_argument("axis must be space, time or distorder");
  }
  if (cfg.levels < 1) {
    throw std::invalid_argument("levels must be at least 1");
  }
  const auto problem = load_problem(cfg);

  std::ostringstream csv;
  csv << "param,error,rate\n";
  double previous_error = 0.0;
  for (std::size_t level = 0; level < cfg.levels; ++level) {
    std::size_t param;
    if (cfg.axis == "space") {
      param = cfg.space_intervals;
    } else if (cfg.axis == "time") {
      param = cfg.time_steps;
    } else {
      param = cfg.alpha_half_count;
    }
    const auto result = run_once(problem, cfg, true);
    csv << param << "," << format_double(result.error) << ",";
    if (level > 0) {
      csv << format_double(std::log2(previous_error / result.error));
    }
    csv << "\n";
    previous_error = result.error;

    if (cfg.axis == "space") {
      cfg.space_intervals *= 2;
    } else if (cfg.axis == "time") {
      cfg.time_steps *= 2;
    } else {
      cfg.alpha_half_count *= 2;
    }
  }
  write_text(cfg, csv.str());
  return 0;
}

int cmd_compare(const RunConfig& cfg) {
  const auto problem = load_problem(cfg);
  const std::size_t interior =
      problem.dimension == 1
          ? cfg.space_intervals - 1
          : (cfg.space_intervals - 1) * (cfg.space_intervals - 1);

  std::ostringstream csv;
  csv << "method,cpu_seconds,avg_iters\n";

  if (interior <= cfg.dense_cap) {
    RunConfig direct = cfg;
    direct.solver = "cholesky";
    const auto result = run_once(problem, direct, false);
    csv << "cholesky," << format_double(result.seconds) << ",\n";
  } else {
    std::cerr << "cholesky skipped: dimension " << interior
              << " exceeds dense cap " << cfg.dense_cap << "\n";
    csv << "cholesky,,\n";
  }
  {
    RunConfig plain = cfg;
    plain.solver = "cg";
    const auto result = run_once(problem, plain, false);
    csv << "cg," << format_double(result.seconds) << ","
        << format_double(result.avg_iterations) << "\n";
  }
  for (const std::string kind : {"strang", "tchan", "rchan"}) {
    RunConfig fast = cfg;
    fast.solver = "pcg";
    fast.precond = kind;
    const auto result = run_once(problem, fast, false);
    csv << "pcg-" << kind << "," << format_double(result.seconds) << ","
        << format_double(result.avg_iterations) << "\n";
  }
  write_text(cfg, csv.str());
  return 0;
}

int cmd_spectrum(const RunConfig& cfg) {
  const std::size_t level = cfg.levels;
  if (level != 1 && level != 2) {
    throw std::invalid_argument("spectrum time level must be 1 or 2");
  }
  if (cfg.time_steps < level) {
    throw std::invalid_argument("spectrum needs N >= the requested level");
  }
  const PrecondKind precond = precond_from_string(cfg.precond);
  if (precond == PrecondKind::none) {
    throw std::invalid_argument("spectrum needs a preconditioner kind");
  }
  const auto problem = load_problem(cfg);

  const auto circulant_of = [precond](const SymToeplitz& g) {
    switch (precond) {
      case PrecondKind::strang:
        return strang_circulant(g);
      case PrecondKind::tchan:
        return tchan_circulant(g);
      default:
        return rchan_circulant(g);
    }
  };

  DenseMatrix system;
  DenseMatrix preconditioner;
  if (problem.dimension == 1) {
    const auto& p = *problem.one_d;
    const std::size_t m = cfg.space_intervals;
    const double h = p.length / static_cast<double>(m);
    const double tau = p.final_time / static_cast<double>(cfg.time_steps);
    const auto quad = build_quadrature(p.weight, cfg.alpha_half_count);
    const double sigma = sigma_root(quad, tau);
    const TemporalLadderTable table(quad, tau, sigma, cfg.time_steps);
    const double shift = level == 1 ? table.tail(1) : table.head(0);
    const double scale =
        sigma * p.diffusivity * std::pow(h, -p.space_order);
    const auto stencil = build_stencil(
        p.space_order, std::max<std::size_t>(m - 2, 1));
    const SymToeplitz g(
        std::vector<double>(stencil.g.begin(), stencil.g.begin() + m - 1));
    system = to_dense(ShiftedToeplitz1D{shift, scale, g}, cfg.dense_cap);
    preconditioner = to_dense(
        shifted_circulant(shift, scale, circulant_of(g)), cfg.dense_cap);
  } else {
    const auto& p = *problem.two_d;
    const std::size_t m = cfg.space_intervals;
    const double hx = p.length_x / static_cast<double>(m);
    const double hy = p.length_y / static_cast<double>(m);
    const double tau = p.final_time / static_cast<double>(cfg.time_steps);
    const auto quad = build_quadrature(p.weight, cfg.alpha_half_count);
    const double sigma = sigma_root(quad, tau);
    const TemporalLadderTable table(quad, tau, sigma, cfg.time_steps);
    const double shift = level == 1 ? table.tail(1) : table.head(0);
    const double scale_x =
        sigma * p.diffusivity_x * std::pow(hx, -p.order_x);
    const double scale_y =
        sigma * p.diffusivity_y * std::pow(hy, -p.order_y);
    const auto stencil_x =
        build_stencil(p.order_x, std::max<std::size_t>(m - 2, 1));
    const auto stencil_y =
        build_stencil(p.order_y, std::max<std::size_t>(m - 2, 1));
    const SymToeplitz gx(std::vector<double>(stencil_x.g.begin(),
                                             stencil_x.g.begin() + m - 1));
    const SymToeplitz gy(std::vector<double>(stencil_y.g.begin(),
                                             stencil_y.g.begin() + m - 1));
    system = to_dense(KronSum2D{shift, scale_x, scale_y, gx, gy},
                      cfg.dense_cap);
    preconditioner = to_dense(BccbPrecond(shift, scale_x, scale_y,
                                          circulant_of(gx), circulant_of(gy)),
                              cfg.dense_cap);
  }

  const auto original = spectrum(system);
  const auto preconditioned = precond_spectrum(system, preconditioner);

  std::ostringstream csv;
  csv << "index,eigenvalue,kind\n";
  for (std::size_t i = 0; i < original.size(); ++i) {
    csv << i << "," << format_double(original[i]) << ",original\n";
  }
  for (std::size_t i = 0; i < preconditioned.size(); ++i) {
    csv << i << "," << format_double(preconditioned[i]) << ",preconditioned\n";
  }
  write_text(cfg, csv.str());
  return 0;
}

int cmd_solve(const RunConfig& cfg) {
  const auto problem = load_problem(cfg);

  SolutionFile file;
  file.metadata.emplace_back("problem", cfg.problem);
  file.metadata.emplace_back("dimension",
                             std::to_string(problem.dimension));
  file.metadata.emplace_back("beta", format_double(cfg.beta));
  if (problem.dimension == 2) {
    file.metadata.emplace_back("gamma", format_double(cfg.gamma));
  }
  file.metadata.emplace_back("T", format_double(cfg.final_time));
  file.metadata.emplace_back("M", std::to_string(cfg.space_intervals));
  file.metadata.emplace_back("N", std::to_string(cfg.time_steps));
  file.metadata.emplace_back("J", std::to_string(cfg.alpha_half_count));
  file.metadata.emplace_back("solver", cfg.solver);
  file.metadata.emplace_back("precond", cfg.precond);

  if (problem.dimension == 1) {
    const auto sol = solve_1d(*problem.one_d, disc_1d(cfg));
    file.metadata.emplace_back("sigma", format_double(sol.sigma));
    file.metadata.emplace_back("c0_first_step",
                               format_double(sol.shift_first));
    file.metadata.emplace_back("c0_later_steps",
                               format_double(sol.shift_steady));
    file.metadata.emplace_back("avg_iterations",
                               format_double(sol.average_iterations()));
    file.columns = {"x", "u"};
    const auto last = sol.level(sol.time_steps);
    for (std::size_t i = 0; i <= sol.space_intervals; ++i) {
      file.rows.push_back({static_cast<double>(i) * sol.mesh_width, last[i]});
    }
  } else {
    const auto sol = solve_2d(*problem.two_d, disc_2d(cfg));
    file.metadata.emplace_back("sigma", format_double(sol.sigma));
    file.metadata.emplace_back("c0_first_step",
                               format_double(sol.shift_first));
    file.metadata.emplace_back("c0_later_steps",
                               format_double(sol.shift_steady));
    file.metadata.emplace_back("avg_iterations",
                               format_double(sol.average_iterations()));
    file.columns = {"x", "y", "u"};
    for (std::size_t j = 0; j <= sol.space_intervals_y; ++j) {
      for (std::size_t i = 0; i <= sol.space_intervals_x; ++i) {
        file.rows.push_back({static_cast<double>(i) * sol.mesh_width_x,
                             static_cast<double>(j) * sol.mesh_width_y,
                             sol.value(sol.time_steps, i, j)});
      }
    }
  }

  std::ostringstream text;
  write_solution_file(text, file);
  write_text(cfg, text.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Solvers for time distributed-order and Riesz space "
               "fractional diffusion equations"};
  app.require_subcommand(1);
  app.fallthrough();  // shared options may follow the subcommand name

  RunConfig cfg;
  add_common_options(app, cfg);
  auto* converge =
      app.add_subcommand("converge", "Single-axis refinement study (CSV)");
  auto* compare =
      app.add_subcommand("compare", "Solver/preconditioner comparison (CSV)");
  auto* spectrum_cmd = app.add_subcommand(
      "spectrum", "Eigenvalues of the system and preconditioned system (CSV)");
  auto* solve =
      app.add_subcommand("solve", "One solve; writes the final field");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (converge->parsed()) return cmd_converge(cfg);
    if (compare->parsed()) return cmd_compare(cfg);
    if (spectrum_cmd->parsed()) return cmd_spectrum(cfg);
    if (solve->parsed()) return cmd_solve(cfg);
    return 2;
  } catch (const cap_exceeded_error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 4;
  } catch (const solver_failure_error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 3;
  } catch (const singular_operator_error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 3;
  } catch (const not_spd_error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
}
