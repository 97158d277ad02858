#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

using Json = nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, bool with_stderr = false) {
  const std::string cmd = std::string(THUE_CLI_PATH) + " " + args + (with_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  Run r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("form") {
  const Run a = run("form 5 1 0 --format json");
  CHECK(a.code == 0);
  const Json j = Json::parse(a.out);
  CHECK(j["n"] == "5");
  CHECK(j["s"] == 1);
  CHECK(j["t"] == 0);
  CHECK(j["A"] == "-4");
  CHECK(j["B"] == "-7");

  const Json k = Json::parse(run("form 5 1 1 --format json").out);
  CHECK(k["A"] == "7");
  CHECK(k["B"] == "4");

  const Run d = run("form 5 0 0", true);
  CHECK(d.code == 0);
  CHECK(d.out.find("warning") != std::string::npos);

  CHECK(run("form 5 -1 2 --format csv").code == 0);
  CHECK(run("form x 1 0").code == 2);
  CHECK(run("form -3 1 0").code == 2);
}

TEST_CASE("solve") {
  const Run a = run("solve 0 1 0 --ybound 10 --format json");
  CHECK(a.code == 0);
  const Json j = Json::parse(a.out);
  bool found = false, trivial = false;
  for (const auto& e : j["solutions"]) {
    if (e["x"] == "-1" && e["y"] == "2" && e["value"] == 1) found = true;
    if (e["trivial"] == true) trivial = true;
  }
  CHECK(found);
  CHECK(trivial);

  const Json b = Json::parse(run("solve 100 2 1 --ybound 1000 --format json").out);
  for (const auto& e : b["solutions"]) CHECK(e["trivial"] == true);

  CHECK(run("solve 100 0 0").code == 2);
  CHECK(run("solve 100 1 1 --ybound 0").code == 2);
}

TEST_CASE("lemma") {
  const Run bad = run("lemma unknown --n 100", true);
  CHECK(bad.code == 2);
  CHECK(bad.out.find("regulator") != std::string::npos);
  CHECK(bad.out.find("wbar") != std::string::npos);

  const Run reg = run("lemma regulator --n 100:1000000:log10");
  CHECK(reg.code == 0);
  CHECK(reg.out.find("slope") != std::string::npos);

  const Run cov = run("lemma logdiff --n 10000 --smax 10 --table corrected");
  CHECK(cov.out.find("12/12") != std::string::npos);

  CHECK(run("lemma logdiff --n 1000:1000000:log10 --smax 3").code == 1);
  CHECK(run("lemma regulator --n 100 --eps 0.7").code == 2);
  CHECK(run("lemma regulator --n 5:1").code == 2);
}

TEST_CASE("bound") {
  const Run a = run("bound 100 2 1 --format json");
  CHECK(a.code == 0);
  const Json j = Json::parse(a.out);
  CHECK(j["c3"] == "706965049015104706497203195837614914543357369");
  CHECK(run("bound 100 2 1").out.find("c3 = 3^94") != std::string::npos);
  CHECK(j.contains("B_rhs"));
  CHECK(j["precision_bits"].is_number());
  CHECK(run("bound 100 0 0").code == 2);
}

TEST_CASE("scan output does not depend on the job count") {
  const Run a = run("scan --n 50:53 --smax 2 --ybound 300 --format csv --jobs 1");
  const Run b = run("scan --n 50:53 --smax 2 --ybound 300 --format csv --jobs 3");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  std::istringstream in(a.out);
  std::string line;
  std::size_t lines = 0;
  while (std::getline(in, line)) ++lines;
  CHECK(lines == 1 + 4 * 16);
}

TEST_CASE("output file") {
  const std::string path = "cli_test_output.json";
  CHECK(run("form 7 2 3 --format json -o " + path).code == 0);
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(Json::parse(ss.str())["n"] == "7");
  std::remove(path.c_str());
}

TEST_CASE("n0 exits 1 without a threshold") {
  const Run a = run("n0 --n 10:1000:log10 --policy small:1");
  CHECK(a.code == 1);
  CHECK(a.out.find("EMPIRICAL") != std::string::npos);
  CHECK(run("n0 --n 10 --policy bogus").code == 2);
}
