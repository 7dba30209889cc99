#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = ptc::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("tau on a complete graph") {
    const Run r = run({"tau", "-g", "complete:6", "-k", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("tau_3 = 3\n", 0) == 0);
  }

  TEST_CASE("other connectivity subcommands") {
    CHECK(run({"kappa", "-g", "harary:10,4"}).out == "kappa = 4\n");
    CHECK(run({"mu", "-g", "complete:5", "-k", "3"}).out.rfind("mu_3 = ", 0) == 0);
    CHECK(run({"kappa-k", "--graph6", "EhEG", "-k", "3"}).code == 0);
    const Run local = run({"tau", "-g", "complete:5", "-S", "0,1,2", "--witness"});
    CHECK(local.out.rfind("tau({0,1,2}) = 2\n", 0) == 0);
  }

  TEST_CASE("gen emits graph6 and convert transcodes") {
    const Run g = run({"gen", "harary:9,3"});
    CHECK(g.code == 0);
    CHECK(g.out.back() == '\n');
    const std::string path = "cli_test_harary.g6";
    {
      std::ofstream f(path);
      f << g.out;
    }
    const Run c = run({"convert", "-i", path, "--to", "edgelist"});
    CHECK(c.code == 0);
    std::istringstream lines(c.out);
    std::string line;
    int count = -1;  // first line is the order
    while (std::getline(lines, line)) ++count;
    CHECK(count == 14);
    std::filesystem::remove(path);
  }

  TEST_CASE("extremal emits a record and enforces budgets") {
    const Run r = run({"extremal", "-n", "6", "-k", "3", "-l", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"f\":9") != std::string::npos);
    CHECK(r.out.find("\"exhaustive\":true") != std::string::npos);
    CHECK(run({"extremal", "-n", "8", "-k", "3", "-l", "4"}).code == 1);
    CHECK(run({"extremal", "-n", "8", "-k", "3", "-l", "4", "--budget-seconds", "30"}).code == 0);
    CHECK(run({"extremal", "-n", "9", "-k", "3", "-l", "2", "--strategy", "sparse", "--long-run", "--budget-graphs", "2"}).code == 2);
  }

  TEST_CASE("identical command lines give identical output") {
    const std::vector<std::string> a{"tau", "-g", "harary:9,3", "-k", "3", "--witness", "--json", "--seed", "4"};
    std::vector<std::string> b = a;
    b.push_back("--threads");
    b.push_back("3");
    CHECK(run(a).out == run(a).out);
    CHECK(run(a).out == run(b).out);
  }

  TEST_CASE("every subcommand supports a dry run") {
    CHECK(run({"tau", "--dry-run", "-g", "complete:6", "-k", "3"}).code == 0);
    CHECK(run({"mu", "--dry-run", "-g", "complete:6", "-k", "3"}).code == 0);
    CHECK(run({"kappa-k", "--dry-run", "-g", "complete:6", "-k", "3"}).code == 0);
    CHECK(run({"kappa", "--dry-run", "-g", "complete:6"}).code == 0);
    CHECK(run({"gen", "--dry-run", "cycle:5"}).code == 0);
    CHECK(run({"extremal", "--dry-run", "-n", "6", "-k", "3", "-l", "1"}).code == 0);
    CHECK(run({"verify", "--dry-run", "--theorem", "T1.3", "--n-max", "10"}).code == 0);
    CHECK(run({"extremal", "--dry-run", "-n", "6", "-k", "3", "-l", "9"}).code == 1);
  }

  TEST_CASE("input errors exit with 1") {
    CHECK(run({"tau", "-g", "nope:1", "-k", "3"}).code == 1);
    CHECK(run({"tau", "-g", "complete:4", "-k", "9"}).code == 1);
    CHECK(run({"tau", "-k", "3"}).code == 1);
    CHECK(run({"tau", "--bogus"}).code == 1);
    CHECK(run({}).code == 1);
    CHECK(run({"verify", "--theorem", "T7"}).code == 1);
    CHECK_FALSE(run({"tau", "-g", "nope:1", "-k", "3"}).err.empty());
  }

  TEST_CASE("violated verdicts exit with 3") {
    const Run r = run({"verify", "--lemma", "P3.1", "--n-min", "9", "--n-max", "9"});
    CHECK(r.code == 3);
    CHECK(r.out.find("\"reading\":\"contextual\"") != std::string::npos);
  }

  TEST_CASE("relative output paths use the output directory variable") {
    const auto dir = std::filesystem::temp_directory_path() / "ptc_cli_out";
    std::filesystem::remove_all(dir);
    setenv(ptc::cli::kOutputDirEnv, dir.c_str(), 1);
    CHECK(run({"gen", "cycle:5", "-o", "c5.g6"}).code == 0);
    unsetenv(ptc::cli::kOutputDirEnv);
    std::ifstream f(dir / "c5.g6");
    std::string text;
    std::getline(f, text);
    CHECK(text == "Dhc");
    std::filesystem::remove_all(dir);
  }
}
