#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "eisenlab/analytic.hpp"

namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run(const std::string& args, const fs::path& stdout_file) {
  std::string cmd = std::string(EISENLAB_CLI_PATH) + " " + args + " > " +
                    stdout_file.string() + " 2>/dev/null";
  int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

fs::path tmp(const std::string& name) { return fs::temp_directory_path() / name; }

}  // namespace

TEST_CASE("spectrum-solve emits one root row per bracket, exit 0") {
  auto out = tmp("el_solve.csv");
  REQUIRE(run("spectrum-solve --a 3 --t-max 60 --no-timestamp", out) == 0);
  std::string body = slurp(out);
  CHECK(body.rfind("j,t_j,weight,norm_sq,tau_j,residual,deriv_cert\n", 0) == 0);
  int rows = -1;  // header
  for (char ch : body)
    if (ch == '\n') ++rows;
  CHECK(rows == 58);  // 59 zeros -> 58 brackets
}

TEST_CASE("casimir section5 JSON carries the eigenvalue string") {
  auto out = tmp("el_casimir.json");
  REQUIRE(run("casimir --n 4 --preset section5", out) == 0);
  std::string body = slurp(out);
  CHECK(body.find("4*s^2 + 4*sf^2 - 8*sf - 4*s") != std::string::npos);
  CHECK(body.find("\"ok\": true") != std::string::npos);
}

TEST_CASE("unknown flag: exit 1, no output file") {
  auto out = tmp("el_unknown.out");
  auto target = tmp("el_should_not_exist.csv");
  fs::remove(target);
  int rc = run("scattering-zeros --a 3 --t-max 20 --output " + target.string() +
                   " --definitely-not-a-flag",
               out);
  CHECK(rc == 1);
  CHECK(!fs::exists(target));
}

TEST_CASE("deterministic output modulo the timestamp header") {
  auto o1 = tmp("el_det1.csv"), o2 = tmp("el_det2.csv");
  REQUIRE(run("scattering-zeros --a 2 --t-max 25 --no-timestamp", o1) == 0);
  REQUIRE(run("scattering-zeros --a 2 --t-max 25 --no-timestamp", o2) == 0);
  CHECK(slurp(o1) == slurp(o2));
  CHECK(!slurp(o1).empty());
  // with the timestamp on, only the first line may differ
  auto t1 = tmp("el_ts1.csv"), t2 = tmp("el_ts2.csv");
  REQUIRE(run("scattering-zeros --a 2 --t-max 25", t1) == 0);
  std::string s1 = slurp(t1);
  CHECK(s1.rfind("# generated:", 0) == 0);
  CHECK(s1.substr(s1.find('\n') + 1) == slurp(o1));
}

TEST_CASE("interlace verdict exits 0 on the acceptance window") {
  auto out = tmp("el_interlace.json");
  CHECK(run("interlace --a 3 --t-max 40", out) == 0);
  CHECK(slurp(out).find("interlacing holds") != std::string::npos);
}

TEST_CASE("specfun extended precision") {
  auto out = tmp("el_specfun.json");
  REQUIRE(run("specfun --function zeta --re 2 --im 0 --precision extended", out) == 0);
  CHECK(slurp(out).find("\"precision\": \"extended\"") != std::string::npos);
}

TEST_CASE("correlate emits a histogram CSV") {
  auto out = tmp("el_corr.csv");
  REQUIRE(run("correlate --a 3 --t-max 100 --which theta --no-timestamp", out) == 0);
  CHECK(slurp(out).rfind("bin_lo,bin_hi,count_per_point\n", 0) == 0);
}

TEST_CASE("zero cache directory round trip") {
  auto dir = tmp("el_cache_dir");
  fs::remove_all(dir);
  auto o1 = tmp("el_c1.csv"), o2 = tmp("el_c2.csv");
  std::string env = "EISENLAB_CACHE_DIR=" + dir.string() + " ";
  std::string cmd1 = env + EISENLAB_CLI_PATH +
                     " scattering-zeros --a 3 --t-max 20 --no-timestamp > " + o1.string();
  std::string cmd2 = env + EISENLAB_CLI_PATH +
                     " scattering-zeros --a 3 --t-max 20 --no-timestamp > " + o2.string();
  REQUIRE(WEXITSTATUS(std::system(cmd1.c_str())) == 0);
  CHECK(!fs::is_empty(dir));
  REQUIRE(WEXITSTATUS(std::system(cmd2.c_str())) == 0);  // served from cache
  CHECK(slurp(o1) == slurp(o2));
  fs::remove_all(dir);
}

TEST_CASE("user LFunctionSpec file: parse, evaluate, validate") {
  auto path = tmp("el_user_spec.txt");
  {
    std::ofstream f(path);
    f << "# name: toy-zeta\n# degree: 1\n# gamma: 0.5,0\n";
    f << "# conductor: 0.56418958354775628\n# poles: 1\n";
    for (int n = 1; n <= 60; ++n) f << n << ",1\n";
  }
  auto spec = eisenlab::analytic::parse_lfunction_file(path.string());
  CHECK(spec.name == "toy-zeta");
  CHECK(spec.degree == 1);
  CHECK(spec.coefficient(7) == 1.0);
  CHECK(spec.coefficient(100) == 0.0);
  // truncated series vs the real zeta at Re s = 4 (tail ~ 2e-6)
  auto v = spec.value(std::complex<double>(4.0, 0.0));
  CHECK(std::abs(v - eisenlab::analytic::zeta(std::complex<double>(4.0, 0.0))) < 1e-4);

  // a(1) != 1 must be rejected
  auto bad = tmp("el_user_bad.txt");
  {
    std::ofstream f(bad);
    f << "# degree: 1\n# gamma: 0.5,0\n1,2\n2,1\n";
  }
  CHECK_THROWS_AS((void)eisenlab::analytic::parse_lfunction_file(bad.string()),
                  eisenlab::Error);
  fs::remove(path);
  fs::remove(bad);
}
