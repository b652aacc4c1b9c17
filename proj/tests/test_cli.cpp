#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace {
std::string cli() { return SPINF_CLI_PATH; }

int run(const std::string& args) {
  const std::string cmd = cli() + " " + args + " > /dev/null 2>&1";
  return std::system(cmd.c_str());
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}
}  // namespace

TEST_CASE("usage errors take a distinct exit path") {
  CHECK(run("") != 0);
  CHECK(run("simulate --N 1 --Q zero") != 0);  // N >= 2 required
  CHECK(run("ricci --N 8 --labels bogus") != 0);
  CHECK(run("embed --family nosuch") != 0);
}

TEST_CASE("verify battery passes end to end") {
  CHECK(run("verify --N 4") == 0);
  CHECK(run("verify --N 1") != 0);
}

TEST_CASE("embed emits the matrix csv plus a json report") {
  const fs::path out = fs::temp_directory_path() / "spinf_test_phi.csv";
  fs::remove(out);
  CHECK(run("embed --family rotation --alpha 0.5 --N 6 --out " + out.string()) == 0);
  const std::string text = slurp(out);
  CHECK(text.rfind("m,n,re,im\n", 0) == 0);
  fs::remove(out);
}

TEST_CASE("simulate output is deterministic for a fixed config") {
  const fs::path o1 = fs::temp_directory_path() / "spinf_paths1.csv";
  const fs::path o2 = fs::temp_directory_path() / "spinf_paths2.csv";
  const std::string base =
      "simulate --N 4 --Q power:2 --dt 0.005 --T 0.05 --paths 3 --seed 11 --out ";
  CHECK(run(base + o1.string()) == 0);
  CHECK(run(base + o2.string()) == 0);
  CHECK(slurp(o1) == slurp(o2));
  CHECK(slurp(o1).rfind("path,t,residual,norm2\n", 0) == 0);
  fs::remove(o1);
  fs::remove(o2);

  const fs::path oz = fs::temp_directory_path() / "spinf_zero.csv";
  CHECK(run("simulate --N 4 --Q zero --dt 0.001 --T 0.01 --paths 2 --out " +
            oz.string()) == 0);
  std::ifstream f(oz);
  std::string line;
  std::getline(f, line);  // header
  while (std::getline(f, line)) {
    // residual column must be exactly 0
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    const auto c3 = line.find(',', c2 + 1);
    CHECK(line.substr(c2 + 1, c3 - c2 - 1) == "0");
  }
  fs::remove(oz);
}

TEST_CASE("corrupted covariance file is a parse error") {
  const fs::path bad = fs::temp_directory_path() / "spinf_bad_cov.json";
  std::ofstream(bad) << "{not json";
  CHECK(run("simulate --N 4 --Q file:" + bad.string() + " --dt 0.01 --T 0.01") != 0);
  fs::remove(bad);
}

TEST_CASE("ricci subcommand writes the report with the corollary value") {
  const fs::path out = fs::temp_directory_path() / "spinf_ricci.csv";
  CHECK(run("ricci --N 16 --lambda uniform:0.70710678118654752 "
            "--labels mu_re:2,1 --out " + out.string()) == 0);
  const std::string text = slurp(out);
  CHECK(text.rfind("kind,a,b,N,brute,closed,abs_diff\n", 0) == 0);
  CHECK(text.find("-6.125") != std::string::npos);
  fs::remove(out);
}

TEST_CASE("lambda file grammar") {
  const fs::path lam = fs::temp_directory_path() / "spinf_lambda.txt";
  {
    std::ofstream f(lam);
    for (int i = 0; i < 8; ++i) f << 0.70710678118654752 << "\n";
  }
  const fs::path out = fs::temp_directory_path() / "spinf_ricci_file.csv";
  CHECK(run("ricci --N 8 --lambda file:" + lam.string() +
            " --labels mu_re:2,1 --out " + out.string()) == 0);
  CHECK(slurp(out).find("-3.125") != std::string::npos);
  CHECK(run("ricci --N 8 --lambda file:/nonexistent --labels mu_re:2,1") != 0);
  fs::remove(lam);
  fs::remove(out);
}
