#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

// Runs the CLI with stderr folded into stdout.
RunResult run(const std::string& args) {
  const std::string cmd = std::string(VGM_CLI_PATH) + " " + args + " 2>&1";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.output.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("verdict: GF(3)[Z5] is mathieu, exit 0") {
  const auto r = run("verdict -f 3 -g Z5");
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "{\"field\":\"3\",\"group\":\"Z5\",\"outcome\":\"mathieu\","
        "\"method\":\"exhaustive-idempotent\",\"witness\":null,\"examined\":81}\n");
}

TEST_CASE("verdict: GF(4)[Z3] is not mathieu with a witness, exit 10") {
  const auto r = run("verdict -f 2^2 -g Z3");
  CHECK(r.exit_code == 10);
  CHECK(r.output ==
        "{\"field\":\"2^2\",\"group\":\"Z3\",\"outcome\":\"not_mathieu\","
        "\"method\":\"fast-path-nonidentity-sum\",\"witness\":[\"00\",\"01\",\"01\"],"
        "\"examined\":0}\n");
}

TEST_CASE("verdict: GF(7)[S3] is mathieu by the large-characteristic fast path") {
  const auto r = run("verdict -f 7 -g S3");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"method\":\"fast-path-large-char\"") != std::string::npos);
  CHECK(r.output.find("\"outcome\":\"mathieu\"") != std::string::npos);
}

TEST_CASE("verdict: indeterminate when the budget is too small, exit 20") {
  // no fast path applies: 5 < 7, no 7th root in GF(5), only trivial proper
  // subgroup, and 5^6 candidates exceed the budget
  const auto r = run("verdict -f 5 -g Z7 --budget 100");
  CHECK(r.exit_code == 20);
  CHECK(r.output.find("\"outcome\":\"indeterminate\"") != std::string::npos);
  CHECK(r.output.find("\"method\":\"budget-exceeded\"") != std::string::npos);
}

TEST_CASE("verdict: bad field spec names the token and exits 2") {
  const auto r = run("verdict -f 6 -g Z3");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("6") != std::string::npos);
  const auto r2 = run("verdict -f 5 -g Y3");
  CHECK(r2.exit_code == 2);
  CHECK(r2.output.find("Y3") != std::string::npos);
}

TEST_CASE("scan: GF(2) up to order 5") {
  const auto r = run("scan -f 2 -M 5");
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "field\tgroup\toutcome\tmethod\twitness\n"
        "2\tZ1\tmathieu\tfast-path-large-char\t-\n"
        "2\tZ2\tmathieu\tabelian-root-criterion\t-\n"
        "2\tZ3\tnot_mathieu\tfast-path-nonidentity-sum\t1*g1+1*g2\n"
        "2\tZ2xZ2\tmathieu\tabelian-root-criterion\t-\n"
        "2\tZ4\tmathieu\tabelian-root-criterion\t-\n"
        "2\tZ5\tnot_mathieu\tfast-path-nonidentity-sum\t1*g1+1*g2+1*g3+1*g4\n");
}

TEST_CASE("scan: GF(7) up to order 6 is all mathieu") {
  const auto r = run("scan -f 7 -M 6");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("not_mathieu") == std::string::npos);
  // 7 groups: Z1..Z5, Z2xZ2, Z6... orders 1,2,3,4(x2),5,6
  int rows = 0;
  for (char c : r.output) rows += c == '\n';
  CHECK(rows == 8);  // header + 7 groups
}

TEST_CASE("scan: GF(4) up to order 4") {
  const auto r = run("scan -f 2^2 -M 4");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("2^2\tZ3\tnot_mathieu") != std::string::npos);
  CHECK(r.output.find("2^2\tZ2\tmathieu") != std::string::npos);
  CHECK(r.output.find("2^2\tZ4\tmathieu") != std::string::npos);
}

TEST_CASE("scan output is byte-identical across runs") {
  const auto a = run("scan -f 2,3,2^2 -M 6");
  const auto b = run("scan -f 2,3,2^2 -M 6");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
}

TEST_CASE("counterexample command verifies and exits 0") {
  const auto r = run("counterexample -p 5 -M 500 -k 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("power traces vanish: yes") != std::string::npos);
  CHECK(r.output.find("cofactor traces match: yes") != std::string::npos);
  CHECK(r.output.find("500\t0\n") != std::string::npos);

  const auto j = run("counterexample -p 3 -M 50 -k 2 --json");
  CHECK(j.exit_code == 0);
  CHECK(j.output.find("\"ok\":true") != std::string::npos);
  CHECK(j.output.find("\"cofactor_rows\":[{\"k\":1,\"trace\":2,\"expected\":2}") !=
        std::string::npos);
}

TEST_CASE("binom command verifies and exits 0") {
  const auto r = run("binom -p 3 -k 4 -b 200");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("ok") != std::string::npos);
  const auto j = run("binom -p 2 -k 3 -b 100 --json");
  CHECK(j.exit_code == 0);
  CHECK(j.output.find("\"ok\":true") != std::string::npos);
}

TEST_CASE("subset-sum reports the minimal failing subset with exit 10") {
  const auto r = run("subset-sum -p 3 -c 1,1,1");
  CHECK(r.exit_code == 10);
  CHECK(r.output == "fail: subset {1,2,3} sums to zero\n");
  const auto ok = run("subset-sum -p 3 -c 1,1");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("pass") == 0);
  const auto bad = run("subset-sum -p 3 -c 1,3");
  CHECK(bad.exit_code == 2);  // 3 mod 3 = 0 coefficient
}

TEST_CASE("orthogonality command") {
  const auto r = run("orthogonality -f 13 -g Z12");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("ok") != std::string::npos);
  const auto r2 = run("orthogonality -f 13 -g Z2xZ2xZ3");
  CHECK(r2.exit_code == 0);
  // no 5th root in GF(13)
  const auto bad = run("orthogonality -f 13 -g Z5");
  CHECK(bad.exit_code == 2);
  // non-abelian groups are rejected up front
  const auto nonab = run("orthogonality -f 13 -g S3");
  CHECK(nonab.exit_code == 2);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("verdict").exit_code == 2);
  CHECK(run("nonsense").exit_code == 2);
  CHECK(run("").exit_code == 2);
  CHECK(run("counterexample -p 4 -M 10 -k 1").exit_code == 2);
}
