#include "simnitm/csv_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "simnitm/error.hpp"

namespace simnitm::io {

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general);
  return std::string(buf, res.ptr);
}

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, sep)) out.push_back(cell);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

double parse_number(const std::string& text) {
  if (text == "nan") return std::nan("");
  if (text == "inf") return HUGE_VAL;
  if (text == "-inf") return -HUGE_VAL;
  double v = 0.0;
  const char* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, v);
  if (res.ec != std::errc{} || res.ptr != end) {
    throw SolverError(ErrorKind::InvalidArgument, "not a number: '" + text + "'");
  }
  return v;
}

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

}  // namespace

void write_trajectory(std::ostream& os, const Trajectory& traj, TableFormat fmt) {
  const char s = fmt.separator;
  os << "eta" << s << "f" << s << "df" << s << "d2f" << '\n';
  for (const IvpState& p : traj.samples) {
    os << format_number(p.eta) << s << format_number(p.f) << s << format_number(p.df) << s
       << format_number(p.d2f) << '\n';
  }
}

Trajectory read_trajectory(std::istream& is, TableFormat fmt) {
  std::string line;
  if (!std::getline(is, line)) {
    throw SolverError(ErrorKind::InvalidArgument, "empty solution table");
  }
  Trajectory traj;
  while (std::getline(is, line)) {
    line = strip_cr(line);
    if (line.empty()) continue;
    const auto cells = split(line, fmt.separator);
    if (cells.size() != 4) {
      throw SolverError(ErrorKind::InvalidArgument, "solution row needs 4 columns: " + line);
    }
    traj.samples.push_back({parse_number(cells[0]), parse_number(cells[1]),
                            parse_number(cells[2]), parse_number(cells[3])});
  }
  if (traj.samples.empty()) {
    throw SolverError(ErrorKind::InvalidArgument, "solution table has no rows");
  }
  traj.eta_inf = traj.samples.back().eta;
  traj.df_terminal = traj.samples.back().df;
  return traj;
}

void write_summary(std::ostream& os, const ScaledSolution& sol, Sign sign, double ode_max,
                   TableFormat fmt) {
  const char s = fmt.separator;
  std::string header = kSummaryHeader;
  if (s != ',') std::replace(header.begin(), header.end(), ',', s);
  os << header << '\n'
     << to_string(sol.family) << s << format_number(sol.P_star) << s << to_string(sign) << s
     << format_number(sol.df_star_inf) << s << format_number(sol.lambda) << s
     << format_number(sol.P_physical) << s << format_number(sol.f0) << s
     << format_number(sol.df0) << s << format_number(sol.d2f0) << s
     << format_number(sol.star_eta_inf) << s << format_number(ode_max) << '\n';
}

std::pair<ScaledSolution, Sign> read_summary(std::istream& is, TableFormat fmt) {
  std::string header, line;
  if (!std::getline(is, header) || !std::getline(is, line)) {
    throw SolverError(ErrorKind::InvalidArgument, "summary needs a header and one row");
  }
  const auto cells = split(strip_cr(line), fmt.separator);
  if (cells.size() != 11) {
    throw SolverError(ErrorKind::InvalidArgument, "summary row needs 11 columns");
  }
  const auto family = parse_family(cells[0]);
  if (!family) {
    throw SolverError(ErrorKind::InvalidArgument, "unknown family '" + cells[0] + "'");
  }
  ScaledSolution sol;
  sol.family = *family;
  sol.P_star = parse_number(cells[1]);
  const Sign sign = cells[2] == "-1" ? Sign::Minus : Sign::Plus;
  sol.df_star_inf = parse_number(cells[3]);
  sol.lambda = parse_number(cells[4]);
  sol.P_physical = parse_number(cells[5]);
  sol.f0 = parse_number(cells[6]);
  sol.df0 = parse_number(cells[7]);
  sol.d2f0 = parse_number(cells[8]);
  sol.star_eta_inf = parse_number(cells[9]);
  return {sol, sign};
}

void write_sweep(std::ostream& os, Family family, std::span<const SweepRow> rows,
                 TableFormat fmt) {
  const char s = fmt.separator;
  std::string header = kSweepHeader;
  if (s != ',') std::replace(header.begin(), header.end(), ',', s);
  os << header << '\n';
  for (const SweepRow& r : rows) {
    os << to_string(family) << s << format_number(r.P_star) << s << to_string(r.sign) << s
       << format_number(r.df_star_inf) << s << format_number(r.lambda) << s
       << format_number(r.P_physical) << s << format_number(r.f0) << s
       << format_number(r.d2f0) << s << format_number(r.eta_inf_used) << s
       << (r.plateau_ok ? 1 : 0) << s << (r.status ? to_string(*r.status) : "ok") << '\n';
  }
}

void write_columns(std::ostream& os, const std::string& x_name, const std::string& y_name,
                   std::span<const std::pair<double, double>> points, TableFormat fmt) {
  os << x_name << fmt.separator << y_name << '\n';
  for (const auto& [x, y] : points) {
    os << format_number(x) << fmt.separator << format_number(y) << '\n';
  }
}

std::vector<double> read_number_list(std::istream& is) {
  std::vector<double> values;
  std::string line;
  while (std::getline(is, line)) {
    line = line.substr(0, line.find('#'));
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ss(line);
    std::string token;
    while (ss >> token) values.push_back(parse_number(token));
  }
  return values;
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw SolverError(ErrorKind::InvalidArgument, "cannot write " + path.string());
  }
  out << contents;
}

}  // namespace simnitm::io
