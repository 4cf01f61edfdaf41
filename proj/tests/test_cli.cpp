#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run tss(const std::string& args) {
  const std::string cmd = std::string(TSS_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path scratch() {
  auto dir = std::filesystem::temp_directory_path() / "tss_cli_tests";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string path(const char* name) { return (scratch() / name).string(); }

nlohmann::json load(const std::string& p) {
  std::ifstream f(p);
  return nlohmann::json::parse(f);
}

}  // namespace

TEST_CASE("construct") {
  const auto r = tss("construct standard --k 3 --lambda 2 --nu 1");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["kind"] == "tss");
  CHECK(j["meta"]["version"] == 1);
  CHECK(j["payload"]["k"] == 3);
  CHECK(j["payload"]["elements"][0]["entries"][0][0] == "1");
  CHECK(j["payload"]["elements"][0]["entries"][4][0] == "2");

  const auto s = tss("construct sporadic4 --nu 0");
  REQUIRE(s.code == 0);
  const auto e = nlohmann::json::parse(s.out)["payload"]["elements"];
  CHECK(e.size() == 4);
  CHECK(e[0]["entries"][0][0] == "0");
  CHECK(e[0]["entries"][2][0] == "1");
  // -mu - 2/3 = -1/3 - 2/3 i sqrt2
  CHECK(e[1]["entries"][2] == nlohmann::json({"-1/3", "0", "0", "0", "0", "-2/3", "0", "0"}));

  REQUIRE(tss("construct standard --k 2 --lambda 2 --nu 1 --out " + path("std2.json")).code == 0);
  REQUIRE(tss("construct induction --in " + path("std2.json") + " --p 1 --lambda 3 --out " + path("ind.json")).code == 0);
  const auto ind = load(path("ind.json"));
  CHECK(ind["payload"]["n"] == 6);
  CHECK(ind["payload"]["k"] == 3);

  for (const char* name : {"partition --values 1,1,2", "perm --values 1,2,3", "simplex --n 3", "dual-simplex --n 3",
                           "suspension-simplex --n 2", "ncsimplex --k 4", "s5-rep", "s5-arrangement", "s5-system",
                           "s5-construction --lambda 1 --mu -1", "ncsimplex --lambda zeta --mu 1/2"}) {
    CAPTURE(name);
    CHECK(tss(std::string("construct ") + name).code == 0);
  }
}

TEST_CASE("determinism and round trip") {
  CHECK(tss("construct s5-construction").out == tss("construct s5-construction").out);
  REQUIRE(tss("construct s5-arrangement --out " + path("s5.json")).code == 0);
  const auto again = tss("export --in " + path("s5.json"));
  REQUIRE(again.code == 0);
  std::ifstream f(path("s5.json"));
  const std::string original((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  CHECK(again.out == original);
  const auto text = tss("export --in " + path("s5.json") + " --format text");
  CHECK(text.code == 0);
  CHECK(text.out.rfind("arrangement", 0) == 0);
}

TEST_CASE("verify classify stabilizer") {
  REQUIRE(tss("construct simplex --n 2 --out " + path("simplex.json")).code == 0);
  const auto v = tss("verify --in " + path("simplex.json"));
  CHECK(v.code == 0);
  CHECK(nlohmann::json::parse(v.out)["result"]["verdict"] == "TotallySymmetric");

  REQUIRE(tss("construct partition --values 1,1,2,2 --out " + path("p.json")).code == 0);
  const auto c = tss("classify --in " + path("p.json"));
  CHECK(c.code == 0);
  const auto cj = nlohmann::json::parse(c.out)["result"];
  CHECK(cj["partition"] == "2≤2");
  CHECK(cj["dimension"] == 6);

  REQUIRE(tss("construct s5-arrangement --out " + path("a.json")).code == 0);
  const auto st = tss("stabilizer --in " + path("a.json"));
  CHECK(st.code == 0);
  CHECK(nlohmann::json::parse(st.out)["result"]["dimension"] == 1);

  // A non-symmetric set: edit one element of a constructed document.
  auto doc = load(path("p.json"));
  doc["payload"].erase("witness");
  doc["payload"]["elements"][0]["entries"][0] = {"5", "0", "0", "0", "0", "0", "0", "0"};
  std::ofstream(path("broken.json")) << doc.dump();
  const auto nv = tss("verify --in " + path("broken.json"));
  CHECK(nv.code == 1);
  CHECK(nlohmann::json::parse(nv.out)["result"]["verdict"] == "NotTotallySymmetric");

  REQUIRE(tss("construct suspension-simplex --n 2 --out " + path("sus.json")).code == 0);
  const auto nd = tss("classify --in " + path("sus.json"));
  CHECK(nd.code == 1);
  CHECK(nlohmann::json::parse(nd.out)["result"]["verdict"] == "NonDiagonalizable");
}

TEST_CASE("errors and exit codes") {
  CHECK(tss("construct nothing").code == 2);
  CHECK(tss("construct ncsimplex --lambda 1 --mu 1").code == 2);
  CHECK(tss("construct perm --values 1,1").code == 2);
  CHECK(tss("construct standard --lambda sqrt5").code == 2);
  CHECK(tss("frobnicate").code == 2);
  std::ofstream(path("garbage.json")) << "{ not json";
  CHECK(tss("verify --in " + path("garbage.json")).code == 2);
  CHECK(tss("verify --in " + path("missing-file.json")).code == 2);
  REQUIRE(tss("construct simplex --out " + path("arr.json")).code == 0);
  CHECK(tss("classify --in " + path("arr.json")).code == 2);
  REQUIRE(tss("construct s5-construction --out " + path("nc.json")).code == 0);
  CHECK(tss("classify --in " + path("nc.json")).code == 1);
}

TEST_CASE("catalog suite") {
  const auto r = tss("paper-suite --out " + path("suite.json"));
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  const auto j = load(path("suite.json"));
  CHECK(j["kind"] == "report");
  CHECK(j["payload"]["checks"].size() >= 25);
  CHECK(j["payload"]["passed"] == true);

  const auto bad = tss("paper-suite --tamper-t4");
  CHECK(bad.code == 1);
  const auto at = bad.out.find("FAIL  presentation (t_3 t_4)^3 = z");
  REQUIRE(at != std::string::npos);
  CHECK(bad.out.find("lhs - rhs:", at) != std::string::npos);
}
