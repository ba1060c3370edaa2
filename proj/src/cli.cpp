#include "simnitm/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "simnitm/analysis.hpp"
#include "simnitm/csv_io.hpp"
#include "simnitm/invariance.hpp"

namespace simnitm::cli {

namespace fs = std::filesystem;

unsigned sweep_threads() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("SIMNITM_THREADS")) {
    try {
      const int cap = std::stoi(env);
      if (cap >= 1) n = static_cast<unsigned>(cap);
    } catch (const std::exception&) {
    }
  }
  return n;
}

namespace {

struct CommonOptions {
  std::string family;
  std::string sign = "auto";
  std::string eta_inf = "auto";
  std::string format = "csv";
  std::string out_dir = ".";
  IntegratorConfig cfg;
};

void add_common(CLI::App* cmd, CommonOptions& o, bool with_sign, bool with_eta,
                bool moving_wall_default = false) {
  auto* fam =
      cmd->add_option("--family", o.family, "moving-wall | gasification | blasius | falkner-skan");
  if (moving_wall_default) {
    o.family = "moving-wall";
  } else {
    fam->required();
  }
  if (with_sign) {
    cmd->add_option("--sign", o.sign, "star f''(0) normalization: +1 | -1 | auto")
        ->check(CLI::IsMember({"+1", "-1", "1", "auto"}));
  }
  if (with_eta) {
    cmd->add_option("--eta-inf", o.eta_inf, "star truncated boundary, or auto");
  }
  cmd->add_option("--rtol", o.cfg.rel_tol, "relative tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--atol", o.cfg.abs_tol, "absolute tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--plateau-tol", o.cfg.plateau_tol, "|f''(eta_inf)| plateau threshold")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-steps", o.cfg.max_steps, "integrator step budget");
  cmd->add_option("--format", o.format, "csv | tsv")->check(CLI::IsMember({"csv", "tsv"}));
  cmd->add_option("--out", o.out_dir, "output directory");
}

io::TableFormat table_format(const CommonOptions& o) {
  return {o.format == "tsv" ? '\t' : ','};
}

std::string table_name(const CommonOptions& o, const std::string& stem) {
  return stem + "." + o.format;
}

Family require_family(const CommonOptions& o) {
  const auto family = parse_family(o.family);
  if (!family) {
    throw CLI::ValidationError("--family", "unknown family '" + o.family + "'");
  }
  return *family;
}

std::optional<Sign> fixed_sign(const std::string& text) {
  if (text == "auto") return std::nullopt;
  return text == "-1" ? Sign::Minus : Sign::Plus;
}

std::optional<double> fixed_eta(const std::string& text) {
  if (text == "auto") return std::nullopt;
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used == text.size() && v > 0.0) return v;
  } catch (const std::exception&) {
  }
  throw CLI::ValidationError("--eta-inf", "expected a positive number or 'auto'");
}

SimilarityProblem make_problem(Family family, double P_star, Sign sign) {
  switch (family) {
    case Family::MovingWall: return SimilarityProblem::moving_wall(P_star, sign);
    case Family::Gasification: return SimilarityProblem::gasification(P_star);
    case Family::ClassicBlasius: return SimilarityProblem::classic_blasius(0.5);
    case Family::FalknerSkan: return SimilarityProblem::falkner_skan(P_star);
  }
  return SimilarityProblem::falkner_skan(P_star);
}

ScaledSolution solve_with(const SimilarityProblem& p, const CommonOptions& o) {
  if (const auto eta = fixed_eta(o.eta_inf)) {
    return solve_noniterative(p, o.cfg, *eta);
  }
  const std::vector<double> candidates = default_eta_candidates(p.family);
  return solve_auto_truncation(p, o.cfg, candidates);
}

void emit_solution(const ScaledSolution& sol, const Trajectory* star, Sign sign,
                   const CommonOptions& o, std::size_t uniform, std::ostream& out) {
  const SimilarityProblem p = make_problem(sol.family, sol.P_star, sign);
  const ResidualReport residual = bvp_residual(sol, p);
  const io::TableFormat fmt = table_format(o);
  const fs::path dir(o.out_dir);

  std::ostringstream traj;
  io::write_trajectory(traj, uniform > 1 ? resample_uniform(sol.trajectory, uniform)
                                         : sol.trajectory,
                       fmt);
  io::write_file(dir / table_name(o, "solution"), traj.str());
  if (star) {
    std::ostringstream st;
    io::write_trajectory(st, uniform > 1 ? resample_uniform(*star, uniform) : *star, fmt);
    io::write_file(dir / table_name(o, "star_solution"), st.str());
  }
  std::ostringstream summary;
  io::write_summary(summary, sol, sign, residual.ode_max, fmt);
  io::write_file(dir / table_name(o, "summary"), summary.str());
  out << summary.str();
}

// Re-integrates the star IVP so the CLI can also emit it (Figures 1 and 3).
std::optional<Trajectory> star_trajectory(const ScaledSolution& sol, Sign sign,
                                          const IntegratorConfig& cfg) {
  if (sol.family == Family::MovingWall && sol.P_star == 0.5 && sol.d2f0 == 0.0) {
    return std::nullopt;
  }
  const SimilarityProblem p = make_problem(sol.family, sol.P_star, sign);
  return integrate_ivp(p.field(), star_initial_conditions(p), sol.star_eta_inf, cfg);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Non-iterative transformation method for Blasius-type boundary layers"};
  app.require_subcommand(1);

  CommonOptions solve_o, target_o, sweep_o, crit_o, dual_o, inv_o;
  double pstar = 0.0;
  std::size_t uniform = 0;
  auto* solve = app.add_subcommand("solve", "solve one BVP from a star parameter");
  add_common(solve, solve_o, true, true);
  solve->add_option("--pstar", pstar, "star parameter P*")->required();
  solve->add_option("--uniform", uniform, "resample output onto N uniform points");

  double target_p = 0.0;
  std::vector<double> target_bracket;
  auto* target = app.add_subcommand("target", "solve for a prescribed physical P");
  add_common(target, target_o, true, true);
  target->add_option("--p", target_p, "target physical parameter")->required();
  target->add_option("--bracket", target_bracket, "P* bracket")->expected(2)->required();
  target->add_option("--uniform", uniform, "resample output onto N uniform points");

  std::string pstar_file;
  std::vector<double> pstar_list;
  std::string sweep_file = "sweep";
  auto* sweep_cmd = app.add_subcommand("sweep", "tabulate solutions over P* values");
  add_common(sweep_cmd, sweep_o, true, true);
  auto* file_opt = sweep_cmd->add_option("--pstar-file", pstar_file, "file of P* values");
  sweep_cmd->add_option("--pstar", pstar_list, "P* values")->excludes(file_opt);
  sweep_cmd->add_option("--name", sweep_file, "output table stem");

  std::vector<double> crit_bracket;
  std::vector<double> scan_range;
  std::size_t points = 101;
  auto* crit = app.add_subcommand("critical", "locate the critical parameter P_c");
  add_common(crit, crit_o, true, true, true);
  crit->add_option("--bracket", crit_bracket, "P* bracket")->expected(2)->required();
  crit->add_option("--scan", scan_range, "P* range for the branch data (default: bracket)")
      ->expected(2);
  crit->add_option("--points", points, "branch data points")->check(CLI::Range(2, 100000));

  double dual_p = 0.0;
  auto* dual = app.add_subcommand("dual", "both moving-wall solutions for a P in (P_c, 0)");
  add_common(dual, dual_o, false, true, true);
  dual->add_option("--p", dual_p, "target physical parameter")->required();

  auto* inv = app.add_subcommand("invariance", "test for an extended scaling group");
  inv->add_option("--family", inv_o.family, "moving-wall | gasification | falkner-skan")
      ->required();

  std::vector<const char*> argv{"simnitm"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (solve->parsed()) {
      const Family family = require_family(solve_o);
      if (family == Family::FalknerSkan) {
        throw SolverError(ErrorKind::Unsupported, "family not solvable by non-ITM");
      }
      Sign sign = family == Family::MovingWall ? fixed_sign(solve_o.sign).value_or(Sign::Plus)
                                               : Sign::Plus;
      ScaledSolution sol;
      if (family == Family::MovingWall && !fixed_sign(solve_o.sign)) {
        // Pilot on the Plus branch; fall back to Minus when it has no solution.
        try {
          sol = solve_with(make_problem(family, pstar, Sign::Plus), solve_o);
          sign = recommended_sign(sol.P_physical) == SignRecommendation::Minus ? Sign::Minus
                                                                                : Sign::Plus;
          if (sign == Sign::Minus) sol = solve_with(make_problem(family, pstar, sign), solve_o);
        } catch (const SolverError&) {
          sign = Sign::Minus;
          sol = solve_with(make_problem(family, pstar, sign), solve_o);
        }
      } else {
        sol = solve_with(make_problem(family, pstar, sign), solve_o);
      }
      const auto star = star_trajectory(sol, sign, solve_o.cfg);
      emit_solution(sol, star ? &*star : nullptr, sign, solve_o, uniform, out);
      return kExitOk;
    }

    if (target->parsed()) {
      const Family family = require_family(target_o);
      if (family == Family::FalknerSkan) {
        throw SolverError(ErrorKind::Unsupported, "family not solvable by non-ITM");
      }
      Sign sign = Sign::Plus;
      if (family != Family::MovingWall) {
        sign = Sign::Plus;
      } else if (const auto s = fixed_sign(target_o.sign)) {
        sign = *s;
      } else if (recommended_sign(target_p) == SignRecommendation::Minus) {
        sign = Sign::Minus;
      }
      const double eta = fixed_eta(target_o.eta_inf).value_or(default_eta_inf(family));
      const ScaledSolution sol =
          solve_for_target_P(family, target_p, sign, {target_bracket[0], target_bracket[1]},
                             target_o.cfg, eta);
      const auto star = star_trajectory(sol, sign, target_o.cfg);
      emit_solution(sol, star ? &*star : nullptr, sign, target_o, uniform, out);
      return kExitOk;
    }

    if (sweep_cmd->parsed()) {
      const Family family = require_family(sweep_o);
      std::vector<double> values = pstar_list;
      if (!pstar_file.empty()) {
        std::ifstream in(pstar_file);
        if (!in) throw CLI::ValidationError("--pstar-file", "cannot read " + pstar_file);
        values = io::read_number_list(in);
      }
      SweepOptions opts;
      opts.cfg = sweep_o.cfg;
      opts.eta_inf = fixed_eta(sweep_o.eta_inf);
      opts.threads = sweep_threads();
      if (const auto s = fixed_sign(sweep_o.sign)) {
        opts.sign = *s == Sign::Plus ? SignPolicy::Plus : SignPolicy::Minus;
      } else {
        opts.sign = SignPolicy::Auto;
      }
      const std::vector<SweepRow> rows = sweep(family, values, opts);
      std::ostringstream table;
      io::write_sweep(table, family, rows, table_format(sweep_o));
      io::write_file(fs::path(sweep_o.out_dir) / table_name(sweep_o, sweep_file), table.str());
      out << table.str();
      return kExitOk;
    }

    if (crit->parsed()) {
      const Family family = require_family(crit_o);
      const Sign sign = fixed_sign(crit_o.sign).value_or(Sign::Plus);
      const double eta = fixed_eta(crit_o.eta_inf).value_or(default_eta_inf(family));
      const CriticalResult res = find_critical_parameter(
          family, sign, {crit_bracket[0], crit_bracket[1]}, crit_o.cfg, eta);
      out << "P_c = " << io::format_number(res.P_c) << '\n'
          << "P_star_at_Pc = " << io::format_number(res.P_star_at_Pc) << '\n'
          << "d2f0_at_Pc = " << io::format_number(res.d2f0_at_Pc) << '\n'
          << "iterations = " << res.iterations << '\n';

      const double lo = scan_range.empty() ? crit_bracket[0] : scan_range[0];
      const double hi = scan_range.empty() ? crit_bracket[1] : scan_range[1];
      std::vector<double> grid(points);
      for (std::size_t i = 0; i < points; ++i) {
        grid[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
      }
      SweepOptions opts;
      opts.cfg = crit_o.cfg;
      opts.eta_inf = eta;
      opts.threads = sweep_threads();
      opts.sign = sign == Sign::Plus ? SignPolicy::Plus : SignPolicy::Minus;
      std::vector<std::pair<double, double>> branch;
      for (const SweepRow& row : sweep(family, grid, opts)) {
        if (row.ok()) branch.emplace_back(row.P_physical, row.d2f0);
      }
      std::ostringstream table;
      io::write_columns(table, "P", "d2f0", branch, table_format(crit_o));
      io::write_file(fs::path(crit_o.out_dir) / table_name(crit_o, "branch"), table.str());
      return kExitOk;
    }

    if (dual->parsed()) {
      if (require_family(dual_o) != Family::MovingWall) {
        throw SolverError(ErrorKind::Unsupported, "dual solutions exist for the moving wall only");
      }
      const double eta = fixed_eta(dual_o.eta_inf).value_or(default_eta_inf(Family::MovingWall));
      const auto [lower, upper] = dual_solutions(dual_p, dual_o.cfg, eta);
      const std::vector<SweepRow> rows{to_sweep_row(lower, Sign::Plus),
                                       to_sweep_row(upper, Sign::Plus)};
      std::ostringstream table;
      io::write_sweep(table, Family::MovingWall, rows, table_format(dual_o));
      io::write_file(fs::path(dual_o.out_dir) / table_name(dual_o, "dual"), table.str());
      out << table.str();
      return kExitOk;
    }

    if (inv->parsed()) {
      const Family family = require_family(inv_o);
      const ExponentSystem sys = build_exponent_system(family);
      const InvarianceReport report = solve_exponent_system(sys);
      out << "family: " << to_string(family) << '\n';
      for (std::size_t i = 0; i < sys.rows.size(); ++i) {
        out << "  " << sys.labels[i] << "  " << format_form(sys.rows[i]) << " = 0\n";
      }
      out << "nullspace_dim = " << report.nullspace_dim << '\n';
      if (report.nullspace_dim == 0) {
        out << "nullspace is trivial\n";
      }
      for (const auto& v : report.basis) {
        out << "basis " << format_form(v) << '\n';
      }
      out << (report.applicable ? "non-ITM applicable\n" : "non-ITM not applicable\n");
      return report.applicable ? kExitOk : kExitNotApplicable;
    }
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SolverError& e) {
    err << "error [" << to_string(e.kind()) << "]: " << e.what() << '\n';
    return kExitSolver;
  }
  return kExitUsage;
}

}  // namespace simnitm::cli
