#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include "betadesign/design.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(BETADESIGN_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, n);
  int status = pclose(pipe);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

std::filesystem::path temp_path(const std::string& name) {
  std::filesystem::path dir = std::filesystem::temp_directory_path() /
                              ("betadesign_cli_" + std::to_string(getpid()));
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  REQUIRE(out.good());
  out << content;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("report exit codes and formats") {
  RunResult ok = run_cli("report 24 8 4 2");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("verdict: feasible") != std::string::npos);

  RunResult refuted = run_cli("report 20 10 4 3");
  CHECK(refuted.exit_code == 1);
  CHECK(refuted.out.find("infeasible(outer-upper)") != std::string::npos);
  CHECK(refuted.out.find("gamma1=9.6176") != std::string::npos);

  CHECK(run_cli("report 8 9 1 1").exit_code == 2);
  CHECK(run_cli("report 24 8 4").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);

  RunResult as_json = run_cli("report 24 8 4 2 --format json");
  CHECK(as_json.exit_code == 0);
  nlohmann::json doc = nlohmann::json::parse(as_json.out);
  CHECK(doc["feasible"] == true);
  CHECK(doc["b_max_num"] == "759");
  CHECK(doc["b_max_den"] == "1");
  CHECK(doc["window_lo"] == "16");
  CHECK(doc["window_hi"] == "24");
}

TEST_CASE("version flag") {
  RunResult version = run_cli("--version");
  CHECK(version.exit_code == 0);
  CHECK(version.out.find("betadesign 1.0.0") != std::string::npos);
}

TEST_CASE("screen emits identical bytes on repeated runs") {
  const std::string args = "screen --v 11..24 --k 4..10 --d 1..4";
  RunResult first = run_cli(args);
  RunResult second = run_cli(args);
  CHECK(first.exit_code == 0);
  CHECK(first.out == second.out);
  CHECK(first.out.rfind("# betadesign screen 1.0.0\n", 0) == 0);
  CHECK(first.out.find("v,k,d,i,mode,verdict,failing_rule,b_max_num,b_max_den,"
                       "window_lo,window_hi,gamma_annotation\n") !=
        std::string::npos);

  // pinned rows
  CHECK(first.out.find("\n24,8,4,2,design,feasible,,759,1,16,24,\n") !=
        std::string::npos);
  CHECK(first.out.find("\n20,10,4,3,design,infeasible,outer-upper,8398,293,20,"
                       "24,gamma1=9.6176\n") != std::string::npos);
  CHECK(first.out.find("\n11,4,1,1,design,infeasible,divisibility,55,6,9,,\n") !=
        std::string::npos);
  CHECK(first.out.find("# rows=") != std::string::npos);

  auto out_file = temp_path("screen.csv");
  RunResult to_file = run_cli(args + " --out " + out_file.string());
  CHECK(to_file.exit_code == 0);
  CHECK(to_file.out.empty());
  CHECK(read_file(out_file) == first.out);
}

TEST_CASE("screen single tuple compared across csv and json") {
  RunResult csv = run_cli("screen --v 20 --k 10 --d 4 --i 3");
  CHECK(csv.exit_code == 0);
  CHECK(csv.out ==
        "# betadesign screen 1.0.0\n"
        "v,k,d,i,mode,verdict,failing_rule,b_max_num,b_max_den,window_lo,"
        "window_hi,gamma_annotation\n"
        "20,10,4,3,design,infeasible,outer-upper,8398,293,20,24,gamma1=9.6176\n"
        "# rows=1 feasible=0 infeasible=1\n"
        "# failing outer-upper=1\n");

  RunResult as_json = run_cli("screen --v 20 --k 10 --d 4 --i 3 --format json");
  CHECK(as_json.exit_code == 0);
  nlohmann::json doc = nlohmann::json::parse(as_json.out);
  REQUIRE(doc["rows"].size() == 1);
  const nlohmann::json& row = doc["rows"][0];
  CHECK(row["verdict"] == "infeasible");
  CHECK(row["failing_rule"] == "outer-upper");
  CHECK(row["b_max_num"] == "8398");
  CHECK(row["b_max_den"] == "293");
  CHECK(row["gamma_annotation"] == "gamma1=9.6176");
  CHECK(doc["summary"]["infeasible"] == 1);
  CHECK(doc["summary"]["failing"]["outer-upper"] == 1);
}

TEST_CASE("screen perfect code mode") {
  RunResult csv = run_cli("screen --mode perfect-code --e 2 --k 8");
  CHECK(csv.exit_code == 0);
  CHECK(csv.out.find("\n,8,3,3,perfect-code,infeasible,perfect-interval,,,"
                     "16.7912,15.0000,roos=35/2\n") != std::string::npos);

  CHECK(run_cli("screen --mode perfect-code --k 8").exit_code == 2);
  CHECK(run_cli("screen --k 5").exit_code == 2);          // design mode needs --v/--d
  CHECK(run_cli("screen --v 10..9 --k 5 --d 1").exit_code == 2);  // empty grid
  CHECK(run_cli("screen --v ab..cd --k 5 --d 1").exit_code == 2);
}

TEST_CASE("verify a constructed design file") {
  auto fano_path = temp_path("fano.json");
  CHECK(run_cli("construct fano --out " + fano_path.string()).exit_code == 0);

  RunResult holds = run_cli("verify " + fano_path.string() + " --i 1");
  CHECK(holds.exit_code == 0);
  nlohmann::json doc = nlohmann::json::parse(holds.out);
  CHECK(doc["v"] == 7);
  CHECK(doc["k"] == 3);
  CHECK(doc["d"] == 1);
  CHECK(doc["b"] == 7);
  REQUIRE(doc["levels"].size() == 1);
  CHECK(doc["levels"][0]["holds"] == true);
  CHECK(doc["mu_d_bruteforce"]["constant"] == true);
  CHECK(doc["mu_d_bruteforce"]["min"] == 6);

  RunResult fails = run_cli("verify " + fano_path.string() + " --i 2");
  CHECK(fails.exit_code == 1);
  nlohmann::json fail_doc = nlohmann::json::parse(fails.out);
  CHECK(fail_doc["levels"][0]["holds"] == false);
  CHECK(fail_doc["levels"][0].contains("witness"));

  // any level holding suffices for the default all-levels scan
  CHECK(run_cli("verify " + fano_path.string()).exit_code == 0);

  // a tiny enumeration cap skips the level, which counts as unverified
  CHECK(run_cli("verify " + fano_path.string() + " --i 1 --max-subsets 5")
            .exit_code == 1);
}

TEST_CASE("construct round trips through the design parser") {
  RunResult pair = run_cli("construct pair:4");
  CHECK(pair.exit_code == 0);
  betadesign::Design parsed = betadesign::parse_design(pair.out);
  CHECK(parsed.v == 8);
  CHECK(parsed.blocks.size() == 2);
  CHECK(betadesign::serialize_design(parsed) == pair.out);

  RunResult complete = run_cli("construct complete:5,3");
  CHECK(complete.exit_code == 0);
  CHECK(betadesign::parse_design(complete.out).blocks.size() == 10);

  CHECK(run_cli("construct atlantis").exit_code == 1);
  CHECK(run_cli("construct pair:1").exit_code == 2);
  CHECK(run_cli("construct complete:40,20").exit_code == 1);  // block cap
}

TEST_CASE("malformed design files are usage errors") {
  auto garbage = temp_path("garbage.json");
  write_file(garbage, "this is not json");
  CHECK(run_cli("verify " + garbage.string()).exit_code == 2);

  auto duplicate = temp_path("duplicate.json");
  write_file(duplicate, "{\"v\": 6, \"blocks\": [[0,1,2],[0,1,2]]}");
  CHECK(run_cli("verify " + duplicate.string()).exit_code == 2);

  auto bad_v = temp_path("bad_v.json");
  write_file(bad_v, "{\"v\": \"six\", \"blocks\": []}");
  CHECK(run_cli("verify " + bad_v.string()).exit_code == 2);

  CHECK(run_cli("verify /nonexistent/design.json").exit_code == 2);
}

TEST_CASE("t-design root scan output") {
  RunResult scan = run_cli("tdesign-roots 24 8 4 2");
  CHECK(scan.exit_code == 0);
  nlohmann::json doc = nlohmann::json::parse(scan.out);
  CHECK(doc["roots"] == nlohmann::json::array({5, 7, 8}));
  CHECK(doc["smallest"] == 5);
  CHECK(doc["degenerate"] == false);
  REQUIRE(doc["values"].size() == 8);
  CHECK(doc["values"][0]["value"] == "204");
  CHECK(doc["values"][4]["value"] == "0");
  CHECK(doc["values"][5]["value"] == "-6");

  RunResult degenerate = run_cli("tdesign-roots 24 8 4 1");
  CHECK(degenerate.exit_code == 0);
  nlohmann::json deg_doc = nlohmann::json::parse(degenerate.out);
  CHECK(deg_doc["degenerate"] == true);
  CHECK(deg_doc["smallest"] == 5);
}
