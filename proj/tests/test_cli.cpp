#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

namespace fs = std::filesystem;

int run(const std::string& args, const std::string& env = "") {
  const std::string command = env + " " + FERMAT_CLI_PATH + " " + args + " >/dev/null 2>&1";
  const int status = std::system(command.c_str());
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "fermat_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run("analyze --r 7 --x 2 --y 1 --p 5") == 0);
  CHECK(run("--help") == 0);
  CHECK(run("") == 1);
  CHECK(run("analyze --r 7 --x 2") == 1);
  CHECK(run("frobnicate") == 1);
  CHECK(run("analyze --r 7 --x 2 --y 4 --p 5") == 2);
  CHECK(run("analyze --r 7 --x 2 --y 1 --p 7") == 2);
  CHECK(run("analyze --r 9 --x 2 --y 1 --p 5") == 2);
  CHECK(run("contexts --r 7 --x 1 --y -1 --p 5") == 2);
  CHECK(run("analyze --r 7 --x 3 --y 4 --p 5") == 4);
  CHECK(run("search --r 7 --D 3 --p 7 --bound 500") == 2);
  CHECK(run("search --r 7 --D 3 --p 7 --bound 201", "FERMAT_DESK_CAP=250") == 0);
  CHECK(run("sweep --bound 10") == 0);
  CHECK(run("sweep --r 7 --bound 4") == 0);
  CHECK(run("fixture-type2 --r 7 --p 5 --k 1 --seed 3") == 0);
}

TEST_CASE("json-out writes a deterministic document") {
  const fs::path a = scratch("a.json"), b = scratch("b.json");
  REQUIRE(run("analyze --r 7 --x 2402 --y -1 --p 5 --json-out " + a.string()) == 0);
  REQUIRE(run("analyze --r 7 --x 2402 --y -1 --p 5 --json-out " + b.string()) == 0);
  const std::string first = slurp(a);
  CHECK(!first.empty());
  CHECK(first == slurp(b));

  const auto doc = nlohmann::json::parse(first);
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["command"] == "analyze");
  CHECK(doc["result"]["analyses"][0]["curves"]["type2"]["j_beta_valuation"]["computed"] == -46);
  // Big integers travel as strings.
  CHECK(doc["result"]["analyses"][0]["input"]["D"].is_string());
  CHECK(nlohmann::json::parse(first).dump(2) + "\n" == first);
}

TEST_CASE("fixture command output") {
  const fs::path out = scratch("fixture.json");
  REQUIRE(run("fixture-type2 --r 7 --p 5 --k 1 --json-out " + out.string()) == 0);
  const auto doc = nlohmann::json::parse(slurp(out));
  CHECK(doc["result"]["x"] == "2402");
  CHECK(doc["result"]["y"] == "-1");
  CHECK(doc["result"]["power_sum_r_valuation"] == 5);
}
