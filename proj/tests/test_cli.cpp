#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>
#include <string>

#include "common.hpp"

using nlohmann::json;

namespace {

const char* cli_path() {
  const char* p = std::getenv("JOINLINK_CLI");
  REQUIRE_MESSAGE(p != nullptr, "JOINLINK_CLI must point at the CLI binary");
  return p;
}

std::string q(const std::string& s) { return "'" + s + "'"; }

struct RunResult {
  int exit_code = -1;
  std::string out;
  json doc;  // parsed stdout when it is JSON, null otherwise
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(cli_path()) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  if (!r.out.empty() && (r.out[0] == '{' || r.out[0] == '[')) {
    r.doc = json::parse(r.out, nullptr, false);
    if (r.doc.is_discarded()) r.doc = json();
  }
  return r;
}

std::string write_temp(const std::string& tag, const std::string& content) {
  const std::string path =
      "/tmp/jl_cli_" + std::to_string(getpid()) + "_" + tag + ".json";
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  f << content;
  f.close();
  return path;
}

const std::string kFlags = "--quiet --json-indent -1 ";

}  // namespace

TEST_CASE("zeta join on the figure-8 pair") {
  RunResult r = run_cli(kFlags + "zeta join --num1 '[1,-3,1]' --num2 '[1,-3,1]'");
  CHECK(r.exit_code == 0);
  REQUIRE(r.doc.is_object());
  CHECK(r.doc["result"]["num"] == json::parse("[1,-9,16,-9,1]"));
  CHECK(r.doc["result"]["den"] == json::parse("[1]"));
  CHECK(r.doc["manifest"]["seed"] == 0);
  CHECK(r.doc["manifest"]["version"] == "0.1.0");
  CHECK(r.doc["manifest"]["inputs"] == json::array());

  RunResult again = run_cli(kFlags + "zeta join --num1 '[1,-3,1]' --num2 '[1,-3,1]'");
  CHECK(again.out == r.out);
}

TEST_CASE("parse echoes canonical text and serialization") {
  RunResult r = run_cli(kFlags + "parse 'z1*z1 + 2'");
  CHECK(r.exit_code == 0);
  CHECK(r.doc["result"]["text"] == "z1^2 + 2");
  CHECK(r.doc["result"]["n"] == 1);
  CHECK(r.doc["result"]["poly"]["terms"].size() == 2);
}

TEST_CASE("seifert subcommands") {
  RunResult lam = run_cli(kFlags + "seifert lambda -m 3");
  CHECK(lam.exit_code == 0);
  CHECK(lam.doc["result"]["matrix"] == json::parse("[[1,0],[-1,1]]"));
  RunResult lam_neg = run_cli(kFlags + "seifert lambda -m -3");
  CHECK(lam_neg.doc["result"]["matrix"] == json::parse("[[1,-1],[0,1]]"));

  RunResult bri = run_cli(kFlags + "seifert brieskorn 2 2 2");
  CHECK(bri.doc["result"]["matrix"] == json::parse("[[1]]"));
  CHECK(bri.doc["result"]["k"] == 2);

  const std::string one = write_temp("one", "[[1]]");
  RunResult ten =
      run_cli(kFlags + "seifert tensor --n 1 --m 1 " + q(one) + " " + q(one));
  CHECK(ten.doc["result"]["matrix"] == json::parse("[[-1]]"));
  REQUIRE(ten.doc["manifest"]["inputs"].size() == 2);
  CHECK(ten.doc["manifest"]["inputs"][0]["sha256"].get<std::string>().size() == 64);

  const std::string b23 = write_temp("b23", "[[-1,0],[1,-1]]");
  RunResult cp = run_cli(kFlags + "seifert charpoly " + q(b23));
  CHECK(cp.doc["result"]["charpoly"] == json::parse("[1,-1,1]"));

  const std::string ext_in = write_temp("ext", "[[0,1],[1,2]]");
  RunResult ext =
      run_cli(kFlags + "seifert extend " + q(ext_in) + " --b 0 0 --eps 1");
  CHECK(ext.doc["result"]["matrix"] == json::parse("[[0,1,0],[1,2,0],[0,0,1]]"));

  RunResult inv = run_cli(kFlags + "seifert invariants " + q(one));
  CHECK(inv.doc["result"]["det"] == 1);
  CHECK(inv.doc["result"]["smith"] == json::parse("[1]"));

  const std::string a = write_temp("cga", "[[0,-1],[-1,2]]");
  const std::string b = write_temp("cgb", "[[0,1],[1,2]]");
  RunResult cong = run_cli(kFlags + "seifert congruent --depth 8 " + q(a) + " " + q(b));
  CHECK(cong.exit_code == 0);
  CHECK(cong.doc["result"]["status"] == "CongruentWitness");
  CHECK(cong.doc["result"]["witness"].is_array());
  CHECK(cong.doc["result"]["warnings"].size() == 1);

  std::remove(one.c_str());
  std::remove(b23.c_str());
  std::remove(ext_in.c_str());
  std::remove(a.c_str());
  std::remove(b.c_str());
}

TEST_CASE("newton subcommand") {
  RunResult full = run_cli(kFlags + "newton 'z1^2 + zb2^2'");
  CHECK(full.exit_code == 0);
  CHECK(full.doc["result"]["convenient"] == true);
  CHECK(full.doc["result"]["faces"].size() == 3);
  CHECK(!full.doc["result"].contains("nondegeneracy"));

  RunResult nd =
      run_cli("--seed 3 " + kFlags + "newton --nondegenerate --samples 16 'z1*zb1'");
  CHECK(nd.doc["manifest"]["seed"] == 3);
  CHECK(nd.doc["result"]["nondegeneracy"]["seed"] == 3);
  CHECK(nd.doc["result"]["nondegeneracy"]["degenerate_count"] == 1);
  CHECK(!nd.doc["result"].contains("faces"));

  RunResult parsed = run_cli(kFlags + "parse 'z1^2 + zb2^2'");
  const std::string pf = write_temp("poly", parsed.doc["result"]["poly"].dump());
  RunResult from_file = run_cli(kFlags + "newton --convenient --file " + q(pf));
  CHECK(from_file.doc["result"]["convenient"] == true);
  CHECK(from_file.doc["manifest"]["inputs"].size() == 1);
  std::remove(pf.c_str());

  RunResult neither = run_cli(kFlags + "newton --faces");
  CHECK(neither.exit_code == 1);
  CHECK(neither.doc["error"]["code"] == "BadInput");
}

TEST_CASE("degree subcommand") {
  RunResult d = run_cli(kFlags + "degree --poly 'z1^3*zb1' --eps 0.1");
  CHECK(d.exit_code == 0);
  CHECK(d.doc["result"]["degree"] == 2);
  CHECK(d.doc["result"]["stable"] == true);
  CHECK(d.doc["result"]["eps"] == 0.1);

  RunResult autod = run_cli(kFlags + "degree --poly 'z1 - 1/100' --eps 0.01");
  CHECK(autod.exit_code == 0);
  CHECK(autod.doc["result"]["degree"] == 0);
  CHECK(autod.doc["result"]["radius_used"] == 0.005);

  RunResult hard =
      run_cli(kFlags + "degree --poly 'z1 - 1/100' --eps 0.01 --max-halvings 0");
  CHECK(hard.exit_code == 1);
  CHECK(hard.doc["error"]["code"] == "NearZeroOnCircle");
}

TEST_CASE("enhanced subcommands") {
  RunResult w = run_cli(kFlags + "enhanced witness --ell 2 --k 2");
  CHECK(w.exit_code == 0);
  CHECK(w.doc["result"]["mu"] == 2);
  CHECK(w.doc["result"]["lambda"] == 1);
  CHECK(w.doc["result"]["polynomial"].is_string());

  RunResult j = run_cli(
      kFlags +
      "enhanced join --mu1 3 --lambda1 1 --k1 1 --mu2 5 --lambda2 0 --k2 1");
  CHECK(j.doc["result"]["mu"] == 15);
  CHECK(j.doc["result"]["lambda"] == 1);
  CHECK(j.doc["result"]["k"] == 3);

  RunResult bri = run_cli(kFlags + "enhanced brieskorn 3 4");
  CHECK(bri.doc["result"]["mu"] == 6);
  CHECK(bri.doc["result"]["display"] == json::parse("[6,0]"));
}

TEST_CASE("zeta file inputs") {
  const std::string flat = write_temp("flat", "[1,-1,1]");
  RunResult from = run_cli(kFlags + "zeta from-charpolys " + q(flat));
  CHECK(from.doc["result"]["charpolys"] == json::parse("[[1,-1],[1,-1,1]]"));
  CHECK(from.doc["result"]["divisor"]["num"] == json::parse("[1,-1,1]"));

  RunResult red = run_cli(kFlags + "zeta reduced " + q(flat));
  CHECK(red.doc["result"]["num"] == json::parse("[1,-1,1]"));
  CHECK(red.doc["result"]["den"] == json::parse("[1]"));

  const std::string list = write_temp("list", "[[1,-1],[1,-1,1]]");
  RunResult red2 = run_cli(kFlags + "zeta reduced " + q(list));
  CHECK(red2.doc["result"] == red.doc["result"]);

  std::remove(flat.c_str());
  std::remove(list.c_str());
}

TEST_CASE("pipeline subcommand") {
  const std::string chain = write_temp("chain", R"([
    {"op": "brieskorn_form", "args": {"exponents": [2, 3]}},
    {"op": "monodromy_charpoly", "inputs": [0]},
    {"op": "zeta_from_charpolys", "inputs": [1]},
    {"op": "reduced_zeta", "inputs": [2]}
  ])");
  RunResult r = run_cli(kFlags + "pipeline " + q(chain));
  CHECK(r.exit_code == 0);
  CHECK(r.doc["result"]["results"][3]["num"] == json::parse("[1,-1,1]"));
  std::remove(chain.c_str());

  const std::string empty = write_temp("empty", "[]");
  RunResult e = run_cli(kFlags + "pipeline " + q(empty));
  CHECK(e.exit_code == 0);
  CHECK(e.doc["result"]["results"] == json::array());
  std::remove(empty.c_str());

  const std::string bad = write_temp("bad", R"([
    {"op": "brieskorn_form", "args": {"exponents": [2, 3]}},
    {"op": "monodromy_charpoly", "inputs": [7]}
  ])");
  RunResult br = run_cli(kFlags + "pipeline " + q(bad));
  CHECK(br.exit_code == 1);
  CHECK(br.doc["result"]["error"]["step"] == 1);
  CHECK(br.doc["result"]["results"].size() == 1);
  std::remove(bad.c_str());

  RunResult missing = run_cli(kFlags + "pipeline /tmp/jl_cli_does_not_exist.json");
  CHECK(missing.exit_code == 1);
  CHECK(missing.doc["error"]["code"] == "BadInput");
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("nosuchcommand").exit_code == 2);
  CHECK(run_cli("degree").exit_code == 2);
  CHECK(run_cli("seifert").exit_code == 2);
  CHECK(run_cli("zeta join --num1 '[1,1]'").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}
