// Drives the installed binary end to end; the binary path arrives as argv[1].
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

std::string g_bin;

struct RunResult {
  int status;
  std::string out;
};

RunResult run_cli(const std::string& args)
{
  std::string cmd = '"' + g_bin + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  for (;;) {
    std::size_t n = std::fread(buf, 1, sizeof buf, pipe);
    if (n == 0) break;
    out.append(buf, n);
  }
  int rc = pclose(pipe);
  return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, out};
}

// the four exact-value columns at the end of every csv row
std::vector<std::array<std::string, 4>> csv_values(const std::string& text)
{
  std::vector<std::array<std::string, 4>> rows;
  std::stringstream ss(text);
  std::string line;
  bool header = true;
  while (std::getline(ss, line)) {
    if (header) {
      header = false;
      continue;
    }
    if (line.empty()) continue;
    std::array<std::string, 4> f;
    std::string rest = line;
    for (int i = 3; i >= 0; --i) {
      auto pos = rest.rfind(',');
      REQUIRE(pos != std::string::npos);
      f[i] = rest.substr(pos + 1);
      rest.resize(pos);
    }
    rows.push_back(f);
  }
  return rows;
}

std::vector<std::array<std::string, 4>> json_values(const std::string& text)
{
  auto arr = nlohmann::json::parse(text);
  REQUIRE(arr.is_array());
  std::vector<std::array<std::string, 4>> rows;
  for (const auto& row : arr)
    rows.push_back({std::to_string(row.at("sign").get<int>()),
                    row.at("radicand").at("num").get<std::string>(),
                    row.at("radicand").at("den").get<std::string>(),
                    row.at("decimal").get<std::string>()});
  return rows;
}

}  // namespace

TEST_CASE("trivial table is the unit coefficient")
{
  RunResult r = run_cli("table su2 --jmax 0");
  REQUIRE(r.status == 0);
  auto arr = nlohmann::json::parse(r.out);
  REQUIRE(arr.size() == 1);
  CHECK(arr[0]["coupling"]["two_j"] == 0);
  CHECK(arr[0]["sign"] == 1);
  CHECK(arr[0]["radicand"]["num"] == "1");
  CHECK(arr[0]["radicand"]["den"] == "1");
}

TEST_CASE("identical invocations are byte-identical")
{
  RunResult a = run_cli("table su2 --jmax 2");
  RunResult b = run_cli("table su2 --jmax 2");
  REQUIRE(a.status == 0);
  REQUIRE(b.status == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("known rows appear in the two-mode table")
{
  RunResult r = run_cli("table su2 --jmax 2");
  REQUIRE(r.status == 0);
  auto arr = nlohmann::json::parse(r.out);
  bool found = false;
  for (const auto& row : arr) {
    const auto& c = row["coupling"];
    if (c["two_j1"] == 4 && c["two_m1"] == 0 && c["two_j2"] == 2 &&
        c["two_m2"] == 0 && c["two_j"] == 6) {
      found = true;
      CHECK(row["sign"] == 1);
      CHECK(row["radicand"]["num"] == "3");
      CHECK(row["radicand"]["den"] == "5");
    }
  }
  CHECK(found);
}

TEST_CASE("json and csv emissions carry the same values")
{
  RunResult j = run_cli("table su2 --jmax 1 --format json");
  RunResult c = run_cli("table su2 --jmax 1 --format csv");
  REQUIRE(j.status == 0);
  REQUIRE(c.status == 0);
  auto jv = json_values(j.out);
  auto cv = csv_values(c.out);
  REQUIRE(jv.size() == cv.size());
  CHECK(jv.size() > 1);
  for (std::size_t i = 0; i < jv.size(); ++i) CHECK(jv[i] == cv[i]);

  RunResult js = run_cli("table sun --N 3 --na 1,0,0 --nb 1,1,0 --format json");
  RunResult cs = run_cli("table sun --N 3 --na 1,0,0 --nb 1,1,0 --format csv");
  REQUIRE(js.status == 0);
  REQUIRE(cs.status == 0);
  auto jvs = json_values(js.out);
  auto cvs = csv_values(cs.out);
  REQUIRE(jvs.size() == cvs.size());
  for (std::size_t i = 0; i < jvs.size(); ++i) CHECK(jvs[i] == cvs[i]);
}

TEST_CASE("channel table of the N = 3 mixed tensor")
{
  RunResult r = run_cli("table sun --N 3 --na 1,0,0 --nb 1,1,0");
  REQUIRE(r.status == 0);
  auto arr = nlohmann::json::parse(r.out);
  REQUIRE(arr.size() == 2);
  CHECK(arr[0]["coupling"]["r"] == 0);
  CHECK(arr[0]["sign"] == 1);
  CHECK(arr[0]["radicand"]["num"] == "3");
  CHECK(arr[0]["radicand"]["den"] == "4");
  CHECK(arr[1]["coupling"]["r"] == 1);
  CHECK(arr[1]["sign"] == 1);
  CHECK(arr[1]["radicand"]["num"] == "1");
  CHECK(arr[1]["radicand"]["den"] == "4");
}

TEST_CASE("coupled-state expansions")
{
  RunResult r = run_cli("state su2 --j1 2 --m1 0 --j2 1 --m2 0 --r 0");
  REQUIRE(r.status == 0);
  CHECK(r.out.find("j=3, m=0") != std::string::npos);
  CHECK(r.out.find("+sqrt(9/25)") != std::string::npos);
  CHECK(r.out.find("+sqrt(3/25)") != std::string::npos);
  CHECK(r.out.find("normalization: +sqrt(5/3)") != std::string::npos);

  // half-integer labels in both accepted spellings
  RunResult h = run_cli("state su2 --j1 0.5 --m1 0.5 --j2 0 --m2 0 --r 0");
  REQUIRE(h.status == 0);
  CHECK(h.out.find("normalization: +sqrt(1/1)") != std::string::npos);

  RunResult f = run_cli("state su2 --j1 1/2 --m1 1/2 --j2 1/2 --m2 -1/2 --r 1");
  REQUIRE(f.status == 0);
  CHECK(f.out.find("j=0, m=0") != std::string::npos);
  CHECK(f.out.find("normalization: +sqrt(1/2)") != std::string::npos);
  CHECK(f.out.find("raise ratio") != std::string::npos);

  RunResult s = run_cli("state sun --N 3 --na 1,0,0 --nb 1,1,0 --r 0");
  REQUIRE(s.status == 0);
  CHECK(s.out.find("+sqrt(9/16)") != std::string::npos);
  CHECK(s.out.find("-sqrt(1/8)") != std::string::npos);
  CHECK(s.out.find("-sqrt(1/16)") != std::string::npos);
  CHECK(s.out.find("normalization: +sqrt(4/3)") != std::string::npos);
}

TEST_CASE("verify subcommand wiring")
{
  RunResult r = run_cli("verify algebra --max-total 3");
  REQUIRE(r.status == 0);
  CHECK(r.out.find("PASS algebra:") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);

  RunResult red = run_cli("verify cgc --max-total 3 --jmax 1 --reduce-n2");
  REQUIRE(red.status == 0);
  CHECK(red.out.find("reduces to the two-mode form") != std::string::npos);
  CHECK(red.out.find("routes agree") == std::string::npos);
}

TEST_CASE("bad invocations exit nonzero")
{
  CHECK(run_cli("table su2").status != 0);
  CHECK(run_cli("verify bogus").status != 0);
  CHECK(run_cli("state su2 --j1 2 --m1 7 --j2 1 --m2 0").status != 0);
  CHECK(run_cli("state su2 --j1 0.3 --m1 0 --j2 0 --m2 0").status != 0);
  CHECK(run_cli("table sun --N 3 --na 0,1,0 --nb 1,0,0").status != 0);
}

int main(int argc, char** argv)
{
  if (argc < 2) {
    std::fprintf(stderr, "usage: test_cli <path to sbcg binary>\n");
    return 1;
  }
  g_bin = argv[1];
  doctest::Context ctx;
  ctx.applyCommandLine(1, argv);
  return ctx.run();
}
