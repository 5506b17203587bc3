#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "pancake");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = pancake::cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("pancake_cli_test_" + name);
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("decide") {
    const Result yes = call({"decide", "5 2 3 1 4"});
    CHECK(yes.code == 0);
    CHECK(yes.out == "efficiently sortable in 4 flips\nflips 5 4 2 3\n");

    const Result no = call({"decide", "5 2 3 4 1"});
    CHECK(no.code == 1);
    CHECK(no.out == "not efficiently sortable\n");

    CHECK(call({"decide", "-"}, "2 1 3\n").code == 0);
    CHECK(call({"decide", "1 1 2"}).code == pancake::cli::kExitUsage);

    const auto trace = std::filesystem::temp_directory_path() / "pancake_cli_test_trace.json";
    CHECK(call({"decide", "5 2 3 1 4", "--trace", trace.string()}).code == 0);
    std::ifstream f(trace);
    const std::string json((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    CHECK(json.find("\"db_trace\"") != std::string::npos);
    CHECK(json.find("\"source\"") < json.find("\"flips\""));
  }

  TEST_CASE("sort") {
    const Result exact = call({"sort", "5 2 3 4 1"});
    CHECK(exact.code == 0);
    CHECK(exact.out.rfind("distance ", 0) == 0);
    const Result greedy = call({"sort", "5 2 3 1 4", "--greedy"});
    CHECK(greedy.out.rfind("length 4\n", 0) == 0);
    CHECK(call({"sort", "2 1", "--json"}).out.find("\"efficient\": true") != std::string::npos);
    CHECK(call({"sort", "2 1", "--exact", "--greedy"}).code == pancake::cli::kExitUsage);
    CHECK(call({"sort", "1 2 3 4 5 6 7 8 9 10 11 12 13", "--exact"}).code == 3);
  }

  TEST_CASE("diameter") {
    CHECK(call({"diameter", "2"}).out == "f(2) = 1\n");
    CHECK(call({"diameter", "11"}).code == 3);
  }

  TEST_CASE("usage and io errors") {
    CHECK(call({}).code == pancake::cli::kExitUsage);
    CHECK(call({"frobnicate"}).code == pancake::cli::kExitUsage);
    CHECK(call({"--help"}).code == 0);
    const auto cnf = temp_file("a.cnf", "p cnf 1 1\n1 1 1 0\n");
    CHECK(call({"reduce", cnf.string(), "--out", "/nonexistent/dir/x.txt"}).code ==
          pancake::cli::kExitIo);
  }

  TEST_CASE("reduce then decide agrees with check-theorem") {
    for (const char* text : {"p cnf 1 1\n1 1 1 0\n", "p cnf 1 2\n1 1 1 0\n-1 -1 -1 0\n"}) {
      const auto cnf = temp_file("r.cnf", text);
      const auto perm = std::filesystem::temp_directory_path() / "pancake_cli_test_perm.txt";
      const auto layout = std::filesystem::temp_directory_path() / "pancake_cli_test_layout.json";
      REQUIRE(call({"reduce", cnf.string(), "--out", perm.string(), "--layout", layout.string()})
                  .code == 0);
      const Result verdict = call({"check-theorem", cnf.string()});
      CHECK(verdict.code == 0);
      const bool sortable = verdict.out.find("sortable true") != std::string::npos;
      CHECK(call({"decide", perm.string()}).code == (sortable ? 0 : 1));
      CHECK(std::filesystem::file_size(layout) > 0);
    }
    const auto big = temp_file("big.cnf", "p cnf 5 1\n1 2 3 0\n");
    CHECK(call({"check-theorem", big.string()}).code == 3);
    CHECK(call({"check-theorem", big.string(), "--max-vars", "5"}).code == 0);
    CHECK(call({"check-theorem", "-"}, "p cnf 1 1\n1 1 0\n").code == pancake::cli::kExitUsage);
  }

  TEST_CASE("verify-gadgets") {
    const Result r = call({"verify-gadgets", "--seed", "3", "--random", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("dock OK ", 0) == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 20);
    CHECK(call({"verify-gadgets", "--seed", "3", "--random", "2"}).out == r.out);
    CHECK(call({"verify-gadgets", "--kind", "lock_c"}).out.rfind("lock_c OK", 0) == 0);
    CHECK(call({"verify-gadgets", "--kind", "nope"}).code == pancake::cli::kExitUsage);
  }

  TEST_CASE("node budget from the environment") {
    setenv("PANCAKE_NODE_BUDGET", "3", 1);
    const int code = call({"decide", "5 2 3 1 4"}).code;
    unsetenv("PANCAKE_NODE_BUDGET");
    CHECK(code == 3);
  }
}
