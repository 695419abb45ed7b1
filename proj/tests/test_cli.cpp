#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "caj/cli.hpp"
#include "caj/givental.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace caj;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

fs::path temp_dir() {
  fs::path dir = fs::temp_directory_path() / "caj_cli_test";
  fs::create_directories(dir);
  return dir;
}

int run_cli(std::initializer_list<std::string> args) {
  return cli::run(std::vector<std::string>(args));
}

}  // namespace

TEST_CASE("compute writes the expected airy rows") {
  fs::path out = temp_dir() / "airy.csv";
  int rc = run_cli({"compute", "--config", "airy", "--order", "3", "--format", "csv",
                    "--out", out.string()});
  CHECK(rc == 0);
  std::string text = slurp(out);
  CHECK(text.find("1,T[1][0]^3,1,6") != std::string::npos);
  CHECK(text.find("1,T[1][1]^1,1,24") != std::string::npos);
  CHECK(fs::exists(out.string() + ".cutjoin.txt"));
}

TEST_CASE("compute writes the expected bessel rows") {
  fs::path out = temp_dir() / "bessel.csv";
  int rc = run_cli({"compute", "--config", "bessel", "--order", "2", "--format", "csv",
                    "--out", out.string()});
  CHECK(rc == 0);
  std::string text = slurp(out);
  CHECK(text.find("2,T[1][0]^2,9,128") != std::string::npos);
}

TEST_CASE("solver comparison on the bundled example") {
  fs::path out = temp_dir() / "mixed2.json";
  int rc = run_cli({"compute", "--config", "mixed2", "--solver", "all", "--order", "2",
                    "--out", out.string()});
  CHECK(rc == 0);
  CHECK(slurp(out).find("\"verdict\": \"match\"") != std::string::npos);
}

TEST_CASE("identical runs produce byte-identical output") {
  fs::path out1 = temp_dir() / "rep1.json";
  fs::path out2 = temp_dir() / "rep2.json";
  CHECK(run_cli({"compute", "--config", "mixed2", "--order", "2", "--out", out1.string()}) == 0);
  CHECK(run_cli({"compute", "--config", "mixed2", "--order", "2", "--out", out2.string()}) == 0);
  CHECK(slurp(out1) == slurp(out2));
}

TEST_CASE("validation failures exit with code 1") {
  fs::path bad = temp_dir() / "bad_r2.json";
  {
    std::ofstream f(bad);
    f << R"({"N":2,"order_K":2,
      "sectors":[{"alpha":1,"sqrt_delta":"1"},{"alpha":0,"sqrt_delta":"1"}],
      "r_jets":[[["0","0"],["0","0"]],[["1/3","0"],["0","0"]]]})";
  }
  CHECK(run_cli({"compute", "--config", bad.string()}) == 1);

  fs::path zero = temp_dir() / "zero_delta.json";
  {
    std::ofstream f(zero);
    f << R"({"N":1,"order_K":2,"sectors":[{"alpha":1,"sqrt_delta":"0"}]})";
  }
  CHECK(run_cli({"compute", "--config", zero.string()}) == 1);

  fs::path typo = temp_dir() / "typo.json";
  {
    std::ofstream f(typo);
    f << R"({"N":1,"order_K":2,"sectors":[{"alpha":1,"sqrt_delta":"1"}],"orderK":3})";
  }
  CHECK(run_cli({"compute", "--config", typo.string()}) == 1);

  CHECK(run_cli({"compute", "--config", (temp_dir() / "missing.json").string()}) == 3);
}

TEST_CASE("check suites pass on presets") {
  CHECK(run_cli({"check", "--config", "airy", "--suite", "commutators", "--order", "3"}) == 0);
  CHECK(run_cli({"check", "--config", "airy", "--suite", "virasoro", "--order", "2"}) == 0);
  CHECK(run_cli({"check", "--config", "mixed2", "--suite", "virtos", "--order", "2"}) == 0);
  CHECK(run_cli({"check", "--config", "bessel", "--suite", "dimension", "--order", "3"}) == 0);
  CHECK(run_cli({"check", "--config", "airy", "--suite", "nonsense"}) == 1);
}

TEST_CASE("inspect runs on a preset") {
  CHECK(run_cli({"inspect", "--config", "mixed2", "--order", "1"}) == 0);
}

TEST_CASE("bundled data file matches the builtin preset") {
  fs::path bundled = fs::path(CAJ_SOURCE_DIR) / "data" / "mixed2.json";
  GiventalData from_file = givental_from_json_text(slurp(bundled));
  GiventalData builtin = cli::preset("mixed2");
  CHECK(from_file.N == builtin.N);
  CHECK(from_file.order_K == builtin.order_K);
  for (int a = 0; a < 2; ++a) {
    CHECK(from_file.sectors[a].alpha == builtin.sectors[a].alpha);
    CHECK(from_file.sectors[a].sqrt_delta == builtin.sectors[a].sqrt_delta);
    CHECK(from_file.sectors[a].delta_T == builtin.sectors[a].delta_T);
  }
  REQUIRE(from_file.r_jets.size() == builtin.r_jets.size());
  for (size_t j = 0; j < builtin.r_jets.size(); ++j)
    CHECK(from_file.r_jets[j] == builtin.r_jets[j]);
}
