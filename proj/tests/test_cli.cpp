// End-to-end checks of the installed command-line driver.  The binary path
// is injected at configure time through FOCKH_CLI_PATH.
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

int run(const std::string& args) {
  const std::string cmd =
      std::string(FOCKH_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("cli exit codes") {
  const fs::path dir = fs::temp_directory_path() / "fockh-cli-test";
  fs::remove_all(dir);

  SUBCASE("passing suite exits 0 and writes reports") {
    CHECK(run("suite chernoff --out-dir " + (dir / "a").string()) == 0);
    CHECK(fs::exists(dir / "a" / "suite-chernoff.json"));
  }
  SUBCASE("usage errors exit 2") {
    CHECK(run("") == 2);
    CHECK(run("suite no-such-suite") == 2);
    CHECK(run("sweep") == 2);
    CHECK(run("suite chernoff --bogus-flag 1") == 2);
  }
  SUBCASE("runtime failure exits 1") {
    // m_max below the sweep's first grid point leaves the report empty.
    CHECK(run("sweep gamma-sum-ratio --m-max 5 --out-dir " +
              (dir / "b").string()) == 1);
  }
  SUBCASE("sweep output is byte-identical across runs") {
    const std::string common =
        "sweep gamma-sum-ratio --m-max 120 --seed 42 --out-dir ";
    CHECK(run(common + (dir / "c1").string()) == 0);
    CHECK(run(common + (dir / "c2").string()) == 0);
    const fs::path f1 = dir / "c1" / "sweep-gamma-sum-ratio.csv";
    const fs::path f2 = dir / "c2" / "sweep-gamma-sum-ratio.csv";
    REQUIRE(fs::exists(f1));
    REQUIRE(fs::exists(f2));
    CHECK(slurp(f1) == slurp(f2));
    CHECK(slurp(dir / "c1" / "sweep-gamma-sum-ratio.json") ==
          slurp(dir / "c2" / "sweep-gamma-sum-ratio.json"));
  }
  fs::remove_all(dir);
}
