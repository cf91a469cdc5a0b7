#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace fs = std::filesystem;

namespace {

int run(const std::string& args) {
  const std::string cmd = std::string("\"") + XYDQPT_CLI + "\" " + args + " > /dev/null 2>&1";
  const int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("xydqpt_test_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& file) {
  std::ifstream in(file, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("successful runs exit 0") {
  const fs::path dir = scratch("ok");
  CHECK(run("spectrum --gamma 0.5 --lambda 0.5 --N 16") == 0);
  CHECK(run("--out " + dir.string() + " fisher --path B --beta 1 --resolution 256 --output b.csv") == 0);
  CHECK(fs::exists(dir / "b.csv"));
  CHECK(run("--out " + dir.string() + " mz --gamma0 0.5 --lambda0 1.2 --beta 0.1:10:3 --output mz.csv") == 0);
  CHECK(run("selftest") == 0);
  CHECK(run("--help") == 0);
}

TEST_CASE("bad input exits 2") {
  const fs::path dir = scratch("bad");
  CHECK(run("--out " + dir.string() + " fisher --path Z --output x.csv") == 2);
  CHECK(run("--out " + dir.string() + " fisher --beta -1 --output x.csv") == 2);
  CHECK(run("--out " + dir.string() + " fisher --resolution 10 --output x.csv") == 2);
  CHECK(run("--out " + dir.string() + " fisher --config /nonexistent.json") == 2);
  CHECK(run("--out " + dir.string() + " figure fig7") == 2);
  CHECK(run("no-such-command") == 2);
  CHECK(run("--out " + dir.string() + " fisher --bogus-flag") == 2);
}

TEST_CASE("numerical failure exits 3 and keeps partial output") {
  const fs::path dir = scratch("numeric");
  CHECK(run("--out " + dir.string() +
            " rate --path B --beta 1 --N 64,0 --t 0:1:3 --set quad_tol=1e-300 --output r.csv") == 3);
  const std::string text = slurp(dir / "r.csv");
  CHECK(text.find(",status\n") != std::string::npos);
  CHECK(text.find("QuadratureNonConvergence") != std::string::npos);
}

TEST_CASE("worker count does not change the CSV bytes") {
  const fs::path one = scratch("w1");
  const fs::path four = scratch("w4");
  const std::string sweep = " area --gamma0 0.25:0.75:3 --lambda0 0 --gammaf gamma0 --lambdaf 0.999 --beta 0.5:5:3"
                            " --r-cap 16 --output a.csv";
  REQUIRE(run("--workers 1 --out " + one.string() + sweep) == 0);
  REQUIRE(run("--workers 4 --out " + four.string() + sweep) == 0);
  CHECK(slurp(one / "a.csv") == slurp(four / "a.csv"));
  REQUIRE(run("--workers 1 --out " + one.string() + " rate --path B --beta 1 --t 0:5:11 --output r.csv") == 0);
  REQUIRE(run("--workers 4 --out " + four.string() + " rate --path B --beta 1 --t 0:5:11 --output r.csv") == 0);
  CHECK(slurp(one / "r.csv") == slurp(four / "r.csv"));
}
