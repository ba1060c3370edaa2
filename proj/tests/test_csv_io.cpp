#include <doctest.h>

#include <charconv>
#include <cmath>
#include <cstring>
#include <limits>
#include <random>
#include <sstream>

#include "simnitm/analysis.hpp"
#include "simnitm/csv_io.hpp"
#include "simnitm/error.hpp"

using namespace simnitm;

namespace {

double parse(const std::string& s) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  REQUIRE(res.ec == std::errc{});
  REQUIRE(res.ptr == s.data() + s.size());
  return v;
}

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

}  // namespace

TEST_CASE("format_number: shortest round trip") {
  CHECK(io::format_number(0.0) == "0");
  CHECK(io::format_number(-0.0) == "0");
  CHECK(io::format_number(1.0) == "1");
  CHECK(io::format_number(0.1) == "0.1");
  CHECK(io::format_number(-2.5) == "-2.5");
  CHECK(io::format_number(std::numeric_limits<double>::quiet_NaN()) == "nan");
  CHECK(io::format_number(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(io::format_number(-std::numeric_limits<double>::infinity()) == "-inf");

  std::mt19937_64 rng(99u);
  std::uniform_real_distribution<double> mant(-1.0, 1.0);
  std::uniform_int_distribution<int> expo(-300, 300);
  for (int i = 0; i < 20000; ++i) {
    const double x = std::ldexp(mant(rng), expo(rng));
    if (x == 0.0) continue;
    const std::string s = io::format_number(x);
    CHECK(same_bits(parse(s), x));
    std::size_t digits = 0;
    bool leading = true;
    for (const char ch : s) {
      if (ch == 'e' || ch == 'E') break;
      if (ch < '0' || ch > '9') continue;
      if (leading && ch == '0') continue;
      leading = false;
      ++digits;
    }
    CHECK(digits <= 17);
  }
}

TEST_CASE("trajectory round trip") {
  const auto p = SimilarityProblem::moving_wall(-0.75, Sign::Plus);
  const auto sol = solve_noniterative(p, IntegratorConfig{}, 15.0);
  std::ostringstream os;
  io::write_trajectory(os, sol.trajectory);
  const std::string text = os.str();
  CHECK(text.rfind("eta,f,df,d2f\n", 0) == 0);
  CHECK(text.find('\r') == std::string::npos);

  std::istringstream is(text);
  const auto back = io::read_trajectory(is);
  REQUIRE(back.samples.size() == sol.trajectory.samples.size());
  for (std::size_t i = 0; i < back.samples.size(); ++i) {
    CHECK(same_bits(back.samples[i].eta, sol.trajectory.samples[i].eta));
    CHECK(same_bits(back.samples[i].f, sol.trajectory.samples[i].f));
    CHECK(same_bits(back.samples[i].df, sol.trajectory.samples[i].df));
    CHECK(same_bits(back.samples[i].d2f, sol.trajectory.samples[i].d2f));
  }
  CHECK(back.eta_inf == sol.trajectory.eta_inf);

  // The residual oracle sees the same numbers after a write/read cycle.
  auto reread = sol;
  reread.trajectory = back;
  CHECK(bvp_residual(reread, p).ode_max == bvp_residual(sol, p).ode_max);
  CHECK(bvp_residual(reread, p).passes(1e-5));

  std::ostringstream again;
  io::write_trajectory(again, back);
  CHECK(again.str() == text);
}

TEST_CASE("trajectory with tab separator") {
  Trajectory t;
  t.samples = {{0.0, 0.0, 0.5, 0.25}, {1.0, 0.625, 0.75, 0.25}};
  std::ostringstream os;
  io::write_trajectory(os, t, {'\t'});
  CHECK(os.str() == "eta\tf\tdf\td2f\n0\t0\t0.5\t0.25\n1\t0.625\t0.75\t0.25\n");
  std::istringstream is(os.str());
  CHECK(io::read_trajectory(is, {'\t'}).samples.size() == 2);
}

TEST_CASE("read_trajectory: malformed input") {
  const auto kind_of = [](const std::string& text) {
    std::istringstream is(text);
    try {
      io::read_trajectory(is);
    } catch (const SolverError& e) {
      return e.kind();
    }
    FAIL("no SolverError thrown");
    return ErrorKind::NonFinite;
  };
  CHECK(kind_of("") == ErrorKind::InvalidArgument);
  CHECK(kind_of("eta,f,df,d2f\n") == ErrorKind::InvalidArgument);
  CHECK(kind_of("eta,f,df,d2f\n1,2,3\n") == ErrorKind::InvalidArgument);
  CHECK(kind_of("eta,f,df,d2f\n1,2,x,4\n") == ErrorKind::InvalidArgument);
}

TEST_CASE("summary round trip") {
  const auto sol = solve_noniterative(SimilarityProblem::gasification(0.5), IntegratorConfig{}, 10.0);
  std::ostringstream os;
  io::write_summary(os, sol, Sign::Plus, 3.5e-8);
  const std::string text = os.str();
  CHECK(text.rfind(std::string(io::kSummaryHeader) + "\n", 0) == 0);
  std::istringstream is(text);
  const auto [back, sign] = io::read_summary(is);
  CHECK(sign == Sign::Plus);
  CHECK(back.family == Family::Gasification);
  CHECK(same_bits(back.P_star, sol.P_star));
  CHECK(same_bits(back.P_physical, sol.P_physical));
  CHECK(same_bits(back.lambda, sol.lambda));
  CHECK(same_bits(back.f0, sol.f0));
  CHECK(same_bits(back.df0, sol.df0));
  CHECK(same_bits(back.d2f0, sol.d2f0));
  CHECK(same_bits(back.df_star_inf, sol.df_star_inf));
  CHECK(same_bits(back.star_eta_inf, sol.star_eta_inf));
}

TEST_CASE("sweep table") {
  std::vector<SweepRow> rows(2);
  rows[0].P_star = 1.0;
  rows[0].P_physical = 0.25;
  rows[0].plateau_ok = true;
  rows[1].P_star = 1.5;
  rows[1].sign = Sign::Minus;
  rows[1].P_physical = std::numeric_limits<double>::quiet_NaN();
  rows[1].status = ErrorKind::NonFinite;
  std::ostringstream os;
  io::write_sweep(os, Family::MovingWall, rows);
  std::istringstream is(os.str());
  std::string header, first, second;
  std::getline(is, header);
  std::getline(is, first);
  std::getline(is, second);
  CHECK(header == io::kSweepHeader);
  CHECK(first.rfind("moving-wall,1,+1,", 0) == 0);
  CHECK(first.substr(first.size() - 5) == ",1,ok");
  CHECK(second.find(",nan,") != std::string::npos);
  CHECK(second.substr(second.size() - 10) == ",NonFinite");
}

TEST_CASE("read_number_list") {
  std::istringstream is("# P* values\n-500, -100\n-5 -1.5 # inline\n\n0\n");
  const auto v = io::read_number_list(is);
  REQUIRE(v.size() == 5);
  CHECK(v[0] == -500.0);
  CHECK(v[3] == -1.5);
  CHECK(v[4] == 0.0);
  std::istringstream bad("1 two 3\n");
  CHECK_THROWS_AS(io::read_number_list(bad), SolverError);
}

TEST_CASE("write_columns") {
  const std::vector<std::pair<double, double>> pts{{-1.0, 0.5}, {0.0, 0.25}};
  std::ostringstream os;
  io::write_columns(os, "P", "d2f0", pts);
  CHECK(os.str() == "P,d2f0\n-1,0.5\n0,0.25\n");
}
