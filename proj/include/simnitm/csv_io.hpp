#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "simnitm/analysis.hpp"
#include "simnitm/scaling.hpp"

namespace simnitm::io {

/// Shortest representation that round-trips to the same double (at most
/// 17 significant digits). NaN prints as "nan".
std::string format_number(double x);

struct TableFormat {
  char separator = ',';
};

/// eta,f,df,d2f with one header line, LF endings.
void write_trajectory(std::ostream& os, const Trajectory& traj, TableFormat fmt = {});
Trajectory read_trajectory(std::istream& is, TableFormat fmt = {});

inline constexpr const char* kSummaryHeader =
    "family,p_star,sign,df_star_inf,lambda,P,f0,df0,d2f0,eta_inf,ode_max_residual";

void write_summary(std::ostream& os, const ScaledSolution& sol, Sign sign, double ode_max,
                   TableFormat fmt = {});

/// Parses a summary written by write_summary back into the solution's
/// scalar fields (the trajectory is left empty).
std::pair<ScaledSolution, Sign> read_summary(std::istream& is, TableFormat fmt = {});

inline constexpr const char* kSweepHeader =
    "family,p_star,sign,df_star_inf,lambda,P,f0,d2f0,eta_inf,plateau_ok,status";

void write_sweep(std::ostream& os, Family family, std::span<const SweepRow> rows,
                 TableFormat fmt = {});

/// Two-column plot data with a header.
void write_columns(std::ostream& os, const std::string& x_name, const std::string& y_name,
                   std::span<const std::pair<double, double>> points, TableFormat fmt = {});

/// Whitespace/comma separated numbers, '#' comments allowed.
std::vector<double> read_number_list(std::istream& is);

void write_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace simnitm::io
