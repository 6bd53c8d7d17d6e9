#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "incalg/json_io.hpp"
#include "testutil.hpp"

using namespace incalg;

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Runs the installed binary with stderr routed away from the JSON stream.
RunResult run_cli(const std::string& args, bool merge_stderr = false) {
  std::string cmd = std::string(INCALG_CLI_PATH) + " " + args +
                    (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.out.append(buffer, got);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

// Scratch directory for fixture files, cleaned up at process exit.
const fs::path& scratch_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("incalg_cli_tests_" + std::to_string(getpid()));
    fs::create_directories(d);
    std::atexit([] { fs::remove_all(fs::temp_directory_path() /
                                    ("incalg_cli_tests_" + std::to_string(getpid()))); });
    return d;
  }();
  return dir;
}

std::string write_fixture(const std::string& name, const std::string& text) {
  fs::path path = scratch_dir() / name;
  std::ofstream out(path);
  out << text;
  return path.string();
}

std::string poset_file(const std::string& name, const PreOrder& order) {
  return write_fixture(name, poset_to_json(order).dump(2));
}

const std::string& intro_file() {
  static std::string path = poset_file("intro.json", *testutil::intro_poset());
  return path;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("analyze reports the failing guarantee with exit 10") {
  RunResult r = run_cli("analyze " + intro_file());
  CHECK(r.exit_code == 10);
  Json doc = Json::parse(r.out);
  CHECK(doc["guaranteed"] == false);
  REQUIRE(doc["components"].size() == 1);
  Json classes = doc["components"][0]["edge_classes"];
  CHECK(classes == Json::array({Json::array({Json::array({"1", "3"})}),
                                Json::array({Json::array({"2", "3"})})}));
  CHECK_FALSE(doc.contains("dimensions"));  // default ring Z is not a field

  // byte-identical reruns, independent of the sampling seed
  RunResult again = run_cli("analyze " + intro_file() + " --seed 999");
  CHECK(again.out == r.out);
}

TEST_CASE("analyze over a field adds the dimension report") {
  RunResult r = run_cli("analyze " + intro_file() + " --ring Q");
  CHECK(r.exit_code == 10);
  Json doc = Json::parse(r.out);
  CHECK(doc["dimensions"]["commuting"] == 7);
  CHECK(doc["dimensions"]["proper"] == 6);
  CHECK(doc["witness_available"] == true);
}

TEST_CASE("analyze accepts the guaranteed example with exit 0") {
  std::string path = poset_file("fork.json", *testutil::fork_poset());
  RunResult r = run_cli("analyze " + path + " --ring Q");
  CHECK(r.exit_code == 0);
  Json doc = Json::parse(r.out);
  CHECK(doc["guaranteed"] == true);
  REQUIRE(doc["components"].size() == 1);
  CHECK(doc["components"][0]["edge_classes"].size() == 1);
  CHECK(doc["components"][0]["edge_classes"][0].size() == 5);
  CHECK(doc["dimensions"]["commuting"] == doc["dimensions"]["proper"]);
  CHECK(doc["witness_available"] == false);
}

TEST_CASE("solve prints the dimension and a basis of maps") {
  RunResult r = run_cli("solve " + intro_file() + " --ring Q");
  CHECK(r.exit_code == 0);
  Json doc = Json::parse(r.out);
  CHECK(doc["ring"] == "Q");
  CHECK(doc["dimension"] == 7);
  CHECK(doc["maps"].size() == 7);

  AlgebraPtr a = Algebra::create(testutil::intro_poset(), Ring(RingSpec::rationals()));
  for (const Json& m : doc["maps"]) CHECK(is_commuting(map_from_json(a, m)));
}

TEST_CASE("solve requires a field ring") {
  RunResult r = run_cli("solve " + intro_file() + " --ring Z", true);
  CHECK(r.exit_code == 3);
  CHECK(r.out.find("NotAField") != std::string::npos);
  CHECK(run_cli("solve " + intro_file() + " --ring Z/9").exit_code == 3);
}

TEST_CASE("witness emission and round trip through verify") {
  RunResult w = run_cli("witness " + intro_file() + " --ring Q");
  CHECK(w.exit_code == 0);
  std::string map_path = write_fixture("witness.json", w.out);
  RunResult v = run_cli("verify " + intro_file() + " " + map_path);
  CHECK(v.exit_code == 0);
  Json verdict = Json::parse(v.out);
  CHECK(verdict["commuting"] == true);
  CHECK(verdict["shape"] == true);
  CHECK(verdict["relations"]["ok"] == true);
  CHECK(verdict["proper"] == false);
}

TEST_CASE("witness reports none when every commuting map is proper") {
  std::string m3 = poset_file("m3.json", *testutil::full_preorder(3));
  RunResult r = run_cli("witness " + m3 + " --ring Q");
  CHECK(r.exit_code == 11);
  CHECK(r.out == "none\n");
  std::string t2 = poset_file("t2.json", *testutil::chain_poset(2));
  RunResult r2 = run_cli("witness " + t2 + " --ring Q");
  CHECK(r2.exit_code == 11);
  CHECK(r2.out == "none\n");
}

TEST_CASE("verify certifies the counterexample map") {
  std::string map_path = write_fixture("counterexample_map.json", R"({
    "ring": "Q",
    "entries": [
      {"on": ["1", "1"], "value": [["1", "1", "1"]]},
      {"on": ["1", "3"], "value": [["1", "3", "1"]]},
      {"on": ["3", "3"], "value": [["2", "2", "1"], ["3", "3", "1"]]}
    ]
  })");
  RunResult r = run_cli("verify " + intro_file() + " " + map_path);
  CHECK(r.exit_code == 0);
  Json verdict = Json::parse(r.out);
  CHECK(verdict["ring"] == "Q");
  CHECK(verdict["commuting"] == true);
  CHECK(verdict["shape"] == true);
  CHECK(verdict["relations"]["ok"] == true);
  CHECK(verdict["proper"] == false);
  CHECK_FALSE(verdict.contains("decomposition"));
}

TEST_CASE("verify decomposes the identity map") {
  AlgebraPtr a = Algebra::create(testutil::intro_poset(), Ring(RingSpec::rationals()));
  std::string map_path =
      write_fixture("identity_map.json", map_to_json(LinearMap::identity_map(a)).dump(2));
  RunResult r = run_cli("verify " + intro_file() + " " + map_path);
  CHECK(r.exit_code == 0);
  Json verdict = Json::parse(r.out);
  CHECK(verdict["proper"] == true);
  // lambda = delta = e_11 + e_22 + e_33, mu = 0
  CHECK(verdict["decomposition"]["lambda"] ==
        Json::array({Json::array({"1", "1", "1"}), Json::array({"2", "2", "1"}),
                     Json::array({"3", "3", "1"})}));
  CHECK(verdict["decomposition"]["mu"] == Json::array());
}

TEST_CASE("verify flags a non-commuting map with its violating pair") {
  std::string map_path = write_fixture("bad_map.json", R"({
    "ring": "Q",
    "entries": [{"on": ["1", "1"], "value": [["1", "3", "1"]]}]
  })");
  RunResult r = run_cli("verify " + intro_file() + " " + map_path);
  CHECK(r.exit_code == 0);
  Json verdict = Json::parse(r.out);
  CHECK(verdict["commuting"] == false);
  CHECK(verdict["proper"] == false);
  CHECK(verdict["violating_pair"] ==
        Json::array({Json::array({"1", "1"}), Json::array({"1", "1"})}));
}

TEST_CASE("verify keeps properness undecided over a non-field ring") {
  AlgebraPtr a = Algebra::create(testutil::intro_poset(), Ring(RingSpec::integers()));
  std::string map_path =
      write_fixture("identity_map_z.json", map_to_json(LinearMap::identity_map(a)).dump(2));
  RunResult r = run_cli("verify " + intro_file() + " " + map_path);
  CHECK(r.exit_code == 0);
  Json verdict = Json::parse(r.out);
  CHECK(verdict["ring"] == "Z");
  CHECK(verdict["commuting"] == true);
  CHECK(verdict["proper"].is_null());
}

TEST_CASE("verify rejects a conflicting ring flag") {
  AlgebraPtr a = Algebra::create(testutil::intro_poset(), Ring(RingSpec::rationals()));
  std::string map_path =
      write_fixture("ring_conflict.json", map_to_json(LinearMap::identity_map(a)).dump(2));
  RunResult r = run_cli("verify " + intro_file() + " " + map_path + " --ring Z/7", true);
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("RingMismatch") != std::string::npos);
  // naming the matching ring is fine
  CHECK(run_cli("verify " + intro_file() + " " + map_path + " --ring Q").exit_code == 0);
}

TEST_CASE("verify rejects a map over a different element set") {
  std::string map_path = write_fixture("unknown_basis.json", R"({
    "ring": "Q",
    "entries": [{"on": ["1", "2"], "value": []}]
  })");
  RunResult r = run_cli("verify " + intro_file() + " " + map_path, true);
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("UnknownBasisElement") != std::string::npos);
}

TEST_CASE("enumerate scans every labeled pre-order and asserts the equivalence") {
  RunResult r = run_cli("enumerate --max-size 3 --ring Q");
  CHECK(r.exit_code == 0);
  // header + 1 + 4 + 29 rows
  int lines = 0;
  for (char c : r.out)
    if (c == '\n') ++lines;
  CHECK(lines == 35);
  CHECK(r.out.rfind("id,guaranteed,dim_commuting,dim_proper\n", 0) == 0);
  CHECK(r.out.find("1-0,true,1,1\n") != std::string::npos);

  CHECK(run_cli("enumerate --max-size 3 --ring Z", true).exit_code == 3);
  CHECK(run_cli("enumerate --max-size 9 --ring Q --oracle-bound 9", true).exit_code == 2);
  CHECK(run_cli("enumerate --max-size 6 --ring Q --oracle-bound 4", true).exit_code == 2);
}

TEST_CASE("input problems exit with code 2") {
  CHECK(run_cli("analyze /nonexistent/nothing.json").exit_code == 2);
  std::string malformed = write_fixture("malformed.json", "{ not json");
  CHECK(run_cli("analyze " + malformed).exit_code == 2);
  CHECK(run_cli("analyze " + intro_file() + " --ring Z/4", true).exit_code == 2);
  std::string unclosed = write_fixture("unclosed.json",
                                       R"({"elements": ["1","2","3"],
                                           "relations": [["1","2"],["2","3"]]})");
  RunResult r = run_cli("analyze " + unclosed, true);
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("NotTransitive") != std::string::npos);
}

TEST_CASE("dot export writes both graph forms") {
  fs::path dot = scratch_dir() / "intro.dot";
  RunResult r = run_cli("analyze " + intro_file() + " --dot " + dot.string());
  CHECK(r.exit_code == 10);
  std::ifstream in(dot);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text.find("graph comparability") != std::string::npos);
  CHECK(text.find("digraph directed_edges") != std::string::npos);
}

TEST_SUITE_END();
