#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int exit_code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(SHEAFEX_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

const std::string kK3 = "cli_test_k3.json";

void write_k3() { REQUIRE(run("gen --family complete --n 3 --out " + kK3).exit_code == 0); }

}  // namespace

TEST_CASE("cli threshold table") {
  const Run r = run("table77");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("A2") != std::string::npos);
  CHECK(r.out.find("29") != std::string::npos);
  CHECK(r.out.find("257") != std::string::npos);
}

TEST_CASE("cli spectral and cb0 on K3") {
  write_k3();
  const Run s = run("spectral --in " + kK3);
  REQUIRE(s.exit_code == 0);
  const auto js = nlohmann::json::parse(s.out);
  CHECK(js["h"] == "2");
  CHECK(js["h_prime"] == "3/2");
  CHECK(js["eigenvalues"].size() == 3);

  const Run c = run("cb0 --in " + kK3 + " --group gf:2:1");
  REQUIRE(c.exit_code == 0);
  const auto jc = nlohmann::json::parse(c.out);
  CHECK(jc["cb0"] == "2");
  CHECK(jc["method"] == "exhaustive");
  CHECK(jc["consistent"] == true);

  const Run z3 = run("cb0 --in " + kK3 + " --group cyclic:3");
  REQUIRE(z3.exit_code == 0);
  CHECK(nlohmann::json::parse(z3.out)["cb0"] == "3/2");
}

TEST_CASE("cli output is deterministic") {
  write_k3();
  const Run a = run("cb0 --in " + kK3 + " --group gf:2:2 --mode sampled --trials 200 --seed 7");
  const Run b = run("cb0 --in " + kK3 + " --group gf:2:2 --mode sampled --trials 200 --seed 7");
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(nlohmann::json::parse(a.out)["seed"] == 7);
}

TEST_CASE("cli usage errors exit with 2") {
  CHECK(run("no-such-command").exit_code == 2);
  CHECK(run("cb0 --in does_not_exist.json").exit_code == 2);
  CHECK(run("gen --family nonsense").exit_code == 2);
  write_k3();
  CHECK(run("cb0 --in " + kK3 + " --group gf:6:1").exit_code == 2);
  CHECK(run("cb0 --in " + kK3 + " --group cyclic:16 --budget 4").exit_code == 2);
}

TEST_CASE("cli building and code reports") {
  const Run b = run("building --type A --n 2 --q 2");
  REQUIRE(b.exit_code == 0);
  const auto jb = nlohmann::json::parse(b.out);
  CHECK(jb["thickness"] == 3);

  REQUIRE(run("gen --family cycle --n 5 --out cli_test_c5.json").exit_code == 0);
  const Run l = run("ltc --graph cli_test_c5.json --m 5");
  REQUIRE(l.exit_code == 0);
  const auto jl = nlohmann::json::parse(l.out);
  CHECK(jl["rate_exact"] == "1/4");
  CHECK(jl["distance"] == "4/5");
  CHECK(jl["consistent"] == true);
}

TEST_CASE("cli acceptance subset") {
  const Run r = run("suite --only 1,3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}
