#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>

#include "json.hpp"

using nlohmann::json;

namespace {

struct Run {
  int exit_code = -1;
  std::string out;
  json envelope;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(CYCLOKIT_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  Run r;
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::istringstream is(r.out);
  std::string line, last;
  while (std::getline(is, line))
    if (!line.empty()) last = line;
  if (!last.empty() && last.front() == '{') r.envelope = json::parse(last, nullptr, false);
  return r;
}

}  // namespace

TEST(Cli, Phi) {
  const auto r = run("phi 6");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.envelope["status"], "ok");
  EXPECT_EQ(r.envelope["command"], "phi");
  EXPECT_EQ(r.envelope["result"]["coefficients"], json({"1", "-1", "1"}));
}

TEST(Cli, PhiAllAlgorithmsAgree) {
  const auto r = run("phi 30 --algorithm all");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_TRUE(r.envelope["result"]["agree"].get<bool>());
  EXPECT_EQ(r.envelope["result"]["runs"].size(), 4u);
}

TEST(Cli, PsiHstarRamanujanToth) {
  EXPECT_EQ(run("psi 6").envelope["result"]["coefficients"], json({"-1", "-1", "0", "1", "1"}));
  EXPECT_EQ(run("hstar 6 3").envelope["result"]["values"], json({"1", "1", "0", "-1"}));
  EXPECT_EQ(run("ramanujan 6 2").envelope["result"]["value"], -1);
  EXPECT_EQ(run("ramanujan 12 -2").envelope["result"]["value"], 2);
  const auto t = run("toth 4").envelope["result"];
  EXPECT_EQ(t["coefficients"], json({"-2", "0", "-2"}));
  EXPECT_EQ(t["tau"], 2);
  EXPECT_TRUE(t["divisible"].get<bool>());
}

TEST(Cli, Divides) {
  const auto yes = run("divides --poly -1,0,0,0,0,0,1 --cyclotomic 6");
  EXPECT_EQ(yes.exit_code, 0);
  EXPECT_TRUE(yes.envelope["result"]["verdict"].get<bool>());
  EXPECT_EQ(yes.envelope["result"]["h_range_used"], json({0, 1, 2}));

  const auto no = run("divides --poly 1,0,1 --cyclotomic 2");
  EXPECT_EQ(no.exit_code, 0);
  EXPECT_FALSE(no.envelope["result"]["verdict"].get<bool>());
  EXPECT_EQ(no.envelope["result"]["witnesses"][0]["sum"], "2");

  EXPECT_TRUE(run("divides --poly 1,1 --phi-p 2 --s 1").envelope["result"]["verdict"].get<bool>());
  EXPECT_TRUE(run("divides --poly 1,0,0,-1 --descending --zn 3").envelope["result"]["verdict"].get<bool>());
  EXPECT_TRUE(run("divides --poly 1,0,1 --zn-eta 2 zeta:2:1").envelope["result"]["verdict"].get<bool>());
  EXPECT_TRUE(run("divides --poly 1,0,1 --zn-eta 2 -1").envelope["result"]["verdict"].get<bool>());
}

TEST(Cli, PreconditionErrorsExitTwo) {
  for (const char* args : {"phi 0", "phi 12 --algorithm extension", "divides --poly 1,x --cyclotomic 2",
                           "divides --poly 1,1 --cyclotomic 5", "hstar 0 3", "nonsense"}) {
    const auto r = run(args);
    EXPECT_EQ(r.exit_code, 2) << args;
  }
  const auto r = run("phi 0");
  EXPECT_EQ(r.envelope["status"], "precondition_error");
}

TEST(Cli, VerifyStreamsAndSummarizes) {
  const auto r = run("verify --suite ramanujan --max-n 40");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.envelope["result"]["failures"].size(), 0u);
  const auto total = r.envelope["result"]["reports"].get<std::int64_t>();
  EXPECT_GT(total, 0);
  std::istringstream is(r.out);
  std::string line;
  std::int64_t streamed = 0;
  while (std::getline(is, line)) {
    const auto j = json::parse(line, nullptr, false);
    if (!j.is_discarded() && j.contains("identity")) ++streamed;
  }
  EXPECT_EQ(streamed, total);
}

TEST(Cli, BenchSeededAndFitted) {
  const auto a = run("bench --max-degree 128 --points 4 --moduli 6,12 --trials 2 --seed 5");
  EXPECT_EQ(a.exit_code, 0);
  const auto& res = a.envelope["result"];
  EXPECT_EQ(res["records"], 32);
  for (const auto& fit : res["op_count_fits"]) EXPECT_GT(fit["r_squared"].get<double>(), 0.999);
}
