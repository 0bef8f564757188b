#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(GPRC_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 512> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("cli stratum") {
  auto r = run("--json stratum '0 1 2 3 / 3 2 1 0'");
  CHECK(r.status == 0);
  CHECK(r.out.find("\"degrees\":[2]") != std::string::npos);
  CHECK(r.out.find("\"genus\":2") != std::string::npos);
  CHECK(run("stratum '0 2 2 / 1 1 0'").out == "Q(-1^4) genus 0 left -1\n");
  CHECK(run("stratum '0 1 / 0 1'").status == 3);
  CHECK(run("stratum '0 1 / 1'").status == 2);
}

TEST_CASE("cli class, op, rep, classify") {
  CHECK(run("class '0 1 2 3 / 3 2 1 0'").out == "7\n");
  CHECK(run("class '0 1 2 3 / 1 0 3 2'").status == 3);
  CHECK(run("op c '0 1 1 / 2 2 0'").out == "0 1 1 / 2 2 0\n");
  CHECK(run("op a '0 1 1 0 / 2 2'").status == 3);
  auto rep = run("rep 'H(4):odd'");
  CHECK(rep.status == 0);
  CHECK(run("classify '" + rep.out.substr(0, rep.out.size() - 1) + "'").out == "H(4):odd\n");
  CHECK(run("rep 'H(4):even'").status == 2);
  CHECK(run("rep 'Q(4)'").status == 3);
  CHECK(run("spin '0 1 2 3 4 5 / 3 2 5 4 1 0'").out == "odd\n");
  CHECK(run("contract --keep-labels '0 1 2 3 4 5 6 7 8 / 4 3 2 5 8 7 6 1 0' 3 5").out ==
        "0 1 2 4 6 7 8 / 4 2 8 7 6 1 0\n");
  CHECK(run("member '0 1 2 3 / 3 2 1 0' '0 1 2 3 / 3 0 2 1'").out == "true\n");
  CHECK(run("inverse '0 1 1 / 2 2 0'").out == "0 0 1 / 1 2 2\n");
}

TEST_CASE("cli usage errors and verify") {
  CHECK(run("").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("verify nonsense").status == 2);
  auto v = run("--json verify conventions");
  CHECK(v.status == 0);
  CHECK(v.out.find("\"suite\"") != std::string::npos);
}
