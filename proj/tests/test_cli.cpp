#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "simnitm/cli.hpp"
#include "simnitm/csv_io.hpp"

namespace fs = std::filesystem;
using namespace simnitm;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "simnitm_cli_tests" / name;
  fs::remove_all(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("cli solve writes solution, star solution and summary") {
  const auto dir = scratch("solve");
  const auto r = run({"solve", "--family", "moving-wall", "--pstar", "1.719", "--sign", "-1",
                      "--eta-inf", "15", "--out", dir.string()});
  REQUIRE(r.code == cli::kExitOk);
  CHECK(fs::exists(dir / "solution.csv"));
  CHECK(fs::exists(dir / "star_solution.csv"));
  std::istringstream summary(slurp(dir / "summary.csv"));
  const auto [sol, sign] = io::read_summary(summary);
  CHECK(sign == Sign::Minus);
  CHECK(std::abs(sol.P_physical - 1.000027) < 5e-4);
  CHECK(std::abs(sol.d2f0 - (-0.443715)) < 5e-4);

  const std::string text = slurp(dir / "solution.csv");
  CHECK(text.rfind("eta,f,df,d2f\n", 0) == 0);
  CHECK(text.find('\r') == std::string::npos);
}

TEST_CASE("cli solve output is bit-stable") {
  const auto a = scratch("stable_a");
  const auto b = scratch("stable_b");
  const std::vector<std::string> base{"solve", "--family", "gasification", "--pstar", "0.5"};
  auto args_a = base;
  args_a.insert(args_a.end(), {"--out", a.string()});
  auto args_b = base;
  args_b.insert(args_b.end(), {"--out", b.string()});
  REQUIRE(run(args_a).code == 0);
  REQUIRE(run(args_b).code == 0);
  for (const char* name : {"solution.csv", "star_solution.csv", "summary.csv"}) {
    CHECK(slurp(a / name) == slurp(b / name));
  }
}

TEST_CASE("cli solve: gasification Blasius limit and tsv") {
  const auto dir = scratch("gas");
  const auto r = run({"solve", "--family", "gasification", "--pstar", "0", "--format", "tsv",
                      "--uniform", "21", "--out", dir.string()});
  REQUIRE(r.code == 0);
  std::istringstream summary(slurp(dir / "summary.tsv"));
  const auto [sol, sign] = io::read_summary(summary, {'\t'});
  CHECK(std::abs(sol.d2f0 - 0.469553) < 5e-4);
  std::istringstream traj(slurp(dir / "solution.tsv"));
  CHECK(io::read_trajectory(traj, {'\t'}).samples.size() == 21);
}

TEST_CASE("cli exit codes") {
  const auto fs_solve = run({"solve", "--family", "falkner-skan", "--pstar", "0", "--out",
                             scratch("fs").string()});
  CHECK(fs_solve.code == cli::kExitSolver);
  CHECK(fs_solve.err.find("family not solvable by non-ITM") != std::string::npos);

  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"bogus"}).code == cli::kExitUsage);
  CHECK(run({"solve", "--pstar", "1"}).code == cli::kExitUsage);
  CHECK(run({"solve", "--family", "nope", "--pstar", "1"}).code == cli::kExitUsage);
  CHECK(run({"solve", "--family", "moving-wall", "--pstar", "1", "--sign", "2"}).code ==
        cli::kExitUsage);

  const auto blowup = run({"solve", "--family", "moving-wall", "--pstar", "1.5", "--sign", "-1",
                           "--eta-inf", "15", "--out", scratch("blowup").string()});
  CHECK(blowup.code == cli::kExitSolver);
  CHECK(blowup.err.find("NonFinite") != std::string::npos);
}

TEST_CASE("cli invariance") {
  const auto fsk = run({"invariance", "--family", "falkner-skan"});
  CHECK(fsk.code == cli::kExitNotApplicable);
  CHECK(fsk.out.find("nullspace_dim = 0") != std::string::npos);
  CHECK(fsk.out.find("nullspace is trivial") != std::string::npos);

  const auto mw = run({"invariance", "--family", "moving-wall"});
  CHECK(mw.code == cli::kExitOk);
  CHECK(mw.out.find("nullspace_dim = 1") != std::string::npos);
  CHECK(mw.out.find("(-1, 1, 2)") != std::string::npos);

  const auto gas = run({"invariance", "--family", "gasification"});
  CHECK(gas.code == cli::kExitOk);
  CHECK(gas.out.find("(-1, 1, -2)") != std::string::npos);
}

TEST_CASE("cli sweep from a file") {
  const auto dir = scratch("sweep");
  fs::create_directories(dir);
  {
    std::ofstream list(dir / "pstar.txt");
    list << "# moving wall, +1\n-500 -100 -5\n-1.5, -1.25\n0\n";
  }
  const auto r = run({"sweep", "--family", "moving-wall", "--sign", "+1", "--pstar-file",
                      (dir / "pstar.txt").string(), "--out", dir.string()});
  REQUIRE(r.code == 0);
  std::istringstream table(slurp(dir / "sweep.csv"));
  std::string line;
  std::getline(table, line);
  CHECK(line == io::kSweepHeader);
  int rows = 0;
  while (std::getline(table, line)) {
    ++rows;
    CHECK(line.substr(line.size() - 3) == ",ok");
  }
  CHECK(rows == 6);
}

TEST_CASE("cli sweep keeps failed rows") {
  const auto dir = scratch("sweep_fail");
  const auto r = run({"sweep", "--family", "moving-wall", "--sign", "-1", "--eta-inf", "15",
                      "--pstar", "2", "1.5", "--out", dir.string()});
  CHECK(r.code == 0);
  const std::string text = slurp(dir / "sweep.csv");
  CHECK(text.find(",NonFinite\n") != std::string::npos);
}

TEST_CASE("cli target, critical and dual") {
  const auto t = scratch("target");
  const auto target = run({"target", "--family", "moving-wall", "--p", "1", "--sign", "-1",
                           "--bracket", "1.5", "2", "--out", t.string()});
  REQUIRE(target.code == 0);
  std::istringstream summary(slurp(t / "summary.csv"));
  const auto [sol, sign] = io::read_summary(summary);
  CHECK(std::abs(sol.P_star - 1.719) < 2e-3);
  CHECK(std::abs(sol.d2f0 - (-0.443748)) < 5e-4);

  const auto c = scratch("critical");
  const auto crit = run({"critical", "--bracket", "-1.5", "-1", "--points", "11", "--out", c.string()});
  REQUIRE(crit.code == 0);
  CHECK(crit.out.find("P_c = -0.548") != std::string::npos);
  const std::string branch = slurp(c / "branch.csv");
  CHECK(branch.rfind("P,d2f0\n", 0) == 0);
  CHECK(std::count(branch.begin(), branch.end(), '\n') == 12);

  const auto none = run({"critical", "--family", "moving-wall", "--bracket", "1", "5", "--out",
                         scratch("noext").string()});
  CHECK(none.code == cli::kExitSolver);
  CHECK(none.err.find("NoExtremum") != std::string::npos);

  const auto d = scratch("dual");
  REQUIRE(run({"dual", "--p", "-0.45", "--out", d.string()}).code == 0);
  const std::string dual = slurp(d / "dual.csv");
  CHECK(std::count(dual.begin(), dual.end(), '\n') == 3);
  CHECK(run({"dual", "--p", "0.3", "--out", d.string()}).code == cli::kExitSolver);
}

TEST_CASE("sweep_threads reads SIMNITM_THREADS") {
  ::setenv("SIMNITM_THREADS", "3", 1);
  CHECK(cli::sweep_threads() == 3);
  ::setenv("SIMNITM_THREADS", "garbage", 1);
  CHECK(cli::sweep_threads() >= 1);
  ::unsetenv("SIMNITM_THREADS");
  CHECK(cli::sweep_threads() >= 1);
}
