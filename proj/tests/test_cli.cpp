#include <array>
#include <cstdio>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run(const std::string& args, const std::string& stdin_data = "") {
  std::string cmd;
  if (!stdin_data.empty()) cmd += "printf '%s\\n' \"" + stdin_data + "\" | ";
  cmd += std::string(NCPOSET_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf{};
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

}  // namespace

TEST_CASE("gen counts and listing") {
  auto r = run("gen --family ncA --n 4 --count");
  CHECK(r.status == 0);
  CHECK(r.out == "14\n");
  CHECK(run("gen --family signed --n 2 --count").out == "6\n");
  CHECK(run("gen --family perm132 --n 1").out == "1\n");
  CHECK(run("gen --family ncB --n 1").out == "1/-1\n1,-1\n");
}

TEST_CASE("identical invocations produce identical bytes") {
  for (const char* args : {"gen --family ncB --n 3", "export --family PA --n 4 --format dot",
                           "export --family NCB --n 2 --format json",
                           "gen --family perm321 --n 5 --format json"}) {
    auto a = run(args);
    auto b = run(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
  }
}

TEST_CASE("exit codes distinguish usage, failure and success") {
  CHECK(run("gen --family nope --n 2").status == 2);
  CHECK(run("gen --n 2").status == 2);
  CHECK(run("nonsense").status == 2);
  CHECK(run("verify --check iso --family PB,QB --n 3").status == 1);
  CHECK(run("verify --check iso --family PB,QB --n 3 --expect false").status == 0);
  CHECK(run("verify --check iso --family PA,QA --n 4").status == 0);
  CHECK(run("gen --family perm132 --n 99").status == 2);  // guard
}

TEST_CASE("stat pipeline") {
  auto r = run("stat --stat desB", "-2 1 -3 -5 4 7 -6");
  CHECK(r.status == 0);
  CHECK(r.out == "-2 1 -3 -5 4 7 -6\tdesB\t{1,3,4,7}\n");
  CHECK(run("stat --stat lrB", "1,-3,-5/-1,3,5/4/-4/2,-2").out ==
        "1,-3,-5/-1,3,5/4/-4/2,-2\tlrB\t({3,4},{1,4})\n");
  CHECK(run("stat --stat alpha --n 8", "{1,6}").out == "{1,6}\talpha\t{1,3,4,5,6}\n");
  CHECK(run("stat --stat excA", "3 2 5 1 4").out == "3 2 5 1 4\texcA\t{1,3}\n");
}

TEST_CASE("map pipeline") {
  CHECK(run("map --bijection f", "1,4,6/2,3/5/7,8").out == "6 4 5 7 3 8 1 2\n");
  CHECK(run("map --bijection finv", "6 4 5 7 3 8 1 2").out == "1,4,6/2,3/5/7,8\n");
  CHECK(run("map --bijection s", "2 4 1 6 3 5 9 10 7 8").out == "8 7 9 10 5 3 4 1 2 6\n");
  CHECK(run("map --bijection bencode", "-2 1 3 -5 4 -6 7").out == "({2,5,6},{1,4,6})\n");
  CHECK(run("map --bijection bdecode --n 7", "({2,5,6},{1,4,6})").out == "-2 1 3 -5 4 -6 7\n");
  CHECK(run("map --bijection qbdual", "1 2").out == "-1 -2\n");
}

TEST_CASE("verify reports are one JSON object per line") {
  auto r = run("verify --check ranks --family PB --n 3");
  CHECK(r.status == 0);
  CHECK(r.out.find("\"check\":\"ranks\"") != std::string::npos);
  CHECK(r.out.find("\"status\":\"pass\"") != std::string::npos);
  CHECK(r.out.find("\"elapsed_ms\":") != std::string::npos);
  CHECK(r.out.find("(1,9,9,1)") != std::string::npos);
  CHECK(r.out.back() == '\n');
}

TEST_CASE("export to file and golden JSON") {
  CHECK(run("export --family NCB --n 1 --format json").out ==
        "{\"family\":\"NCB\",\"n\":1,\"labels\":[\"1/-1\",\"1,-1\"],\"covers\":[[0,1]]}\n");
  auto dot = run("export --family PA --n 4 --format dot");
  CHECK(dot.status == 0);
  size_t nodes = 0;
  for (size_t pos = dot.out.find("[label="); pos != std::string::npos;
       pos = dot.out.find("[label=", pos + 1))
    ++nodes;
  CHECK(nodes == 14);

  auto path = std::string("/tmp/ncposet_export_test.json");
  auto r = run("export --family PB --n 2 --format json --path " + path);
  CHECK(r.status == 0);
  FILE* f = fopen(path.c_str(), "r");
  REQUIRE(f != nullptr);
  std::array<char, 4096> buf{};
  size_t got = fread(buf.data(), 1, buf.size(), f);
  fclose(f);
  std::string body(buf.data(), got);
  CHECK(body.find("\"covers\":[[") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("oracle subcommands mirror production") {
  CHECK(run("oracle gen --family perm132 --n 4 --count").out == "14\n");
  CHECK(run("oracle gen --family signed --n 2 --count").out == "6\n");
  CHECK(run("oracle kfamily --family PA --n 4 --k 1").out == "6\n");
  CHECK(run("oracle chains --family PB --n 2 --m 1").out == "4\n");
  CHECK(run("oracle mobius --family PA --n 3").out == "2\n");
  CHECK(run("oracle gen --family perm132 --n 4 --method fast").status == 2);
}

TEST_CASE("guard override") {
  CHECK(run("gen --family ncB --n 8 --count").status == 2);
  auto r = run("--max-n-override 8 gen --family signed --n 8 --count");
  CHECK(r.status == 0);
  CHECK(r.out == "12870\n");
}

TEST_CASE("NCPOSET_MAX_N raises the guards") {
  std::string cmd = "NCPOSET_MAX_N=10 " + std::string(NCPOSET_CLI_PATH) +
                    " gen --family signed --n 10 --count 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 256> buf{};
  std::string out;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  int rc = pclose(pipe);
  CHECK(WEXITSTATUS(rc) == 0);
  CHECK(out == "184756\n");
}
