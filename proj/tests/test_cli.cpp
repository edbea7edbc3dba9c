#include "support.hpp"

#include "cli.hpp"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = zetakit::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

// Runs the installed binary through the shell and returns its exit status.
int run_binary(const std::string& args, std::string* captured = nullptr) {
  std::string cmd = std::string(ZETAKIT_BIN) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return -1;
  std::string text;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) text.append(buf, got);
  int status = pclose(p);
  if (captured) *captured = text;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(Cli, ExactValues) {
  CliRun r = run({"eval", "zeta-zn", "--n=3", "--s=2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("value=2/9"), std::string::npos) << r.out;
  r = run({"eval", "zeta-zn", "--n=3", "--s=1"});
  EXPECT_NE(r.out.find("value=2/3"), std::string::npos) << r.out;
  r = run({"eval", "zeta-z", "--s=-3"});
  EXPECT_NE(r.out.find("value=20"), std::string::npos) << r.out;
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"eval", "zeta-z", "--s=0.5"}).code, 3);
  EXPECT_EQ(run({"eval", "no-such-target", "--s=1"}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"eval", "zeta-z", "--s=abc"}).code, 2);
  EXPECT_EQ(run({"--precision-bits=10", "eval", "zeta-z", "--s=0.25"}).code, 2);
  EXPECT_EQ(run({"eval", "zeta-zn", "--n=1", "--s=2"}).code, 3);
  EXPECT_EQ(run({"--max-terms=10", "eval", "zeta-z", "--s=0.25", "--method=product"}).code, 4);
  EXPECT_EQ(run({"sweep", "zeta-z", "--s=3:1"}).code, 2);
}

TEST(Cli, NoStdoutOnError) {
  CliRun r = run({"eval", "zeta-z", "--s=0.5"});
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("PoleError"), std::string::npos);
  r = run({"extract", "--s=-1", "--n-min=100", "--n-max=101", "--points=3"});
  EXPECT_EQ(r.code, 4);
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, JsonRoundTrip) {
  CliRun r = run({"--format=json", "eval", "zeta-zn", "--n=7", "--s=3"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  zt::BigRational expect = zt::zeta_zn_closed_poly(3)(7);
  EXPECT_EQ(j["value"].get<std::string>(), expect.get_str());
  EXPECT_TRUE(j["exact"].get<bool>());
  EXPECT_EQ(j["method"].get<std::string>(), "exact");

  r = run({"--format=json", "eval", "zeta-z", "--s=0.25"});
  j = nlohmann::json::parse(r.out);
  zetakit::PrecisionScope scope(256);
  EXPECT_LT(testing_support::gap(zt::Real(j["value"].get<std::string>()),
                                 "1.18034059901609622604533794055848858723371663488144729951586"),
            1e-55);
  EXPECT_LT(j["err"].get<double>(), 1e-70);
}

TEST(Cli, OutputIsDeterministic) {
  std::vector<std::string> args = {"--format=csv", "sweep", "zeta-z", "--s=-3:0.45:0.25"};
  CliRun a = run(args), b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_FALSE(a.out.empty());
}

TEST(Cli, CsvSweep) {
  CliRun r = run({"--format=csv", "sweep", "zeta-zn", "--n=2:4", "--s=1"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "n,s,value,err,method\n2,1,1/4,0,exact\n3,1,2/3,0,exact\n4,1,5/4,0,exact\n");
  // poles stay in the table instead of aborting the sweep
  r = run({"--format=csv", "sweep", "zeta-z", "--s=0:1:0.5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("pole"), std::string::npos);
}

TEST(Cli, PrecisionFromEnvironment) {
  setenv("ZETAKIT_PRECISION_BITS", "128", 1);
  CliRun low = run({"--format=json", "eval", "zeta-z", "--s=0.25"});
  CliRun explicit_bits = run({"--precision-bits=256", "--format=json", "eval", "zeta-z", "--s=0.25"});
  unsetenv("ZETAKIT_PRECISION_BITS");
  auto a = nlohmann::json::parse(low.out);
  auto b = nlohmann::json::parse(explicit_bits.out);
  EXPECT_LT(a["value"].get<std::string>().size(), b["value"].get<std::string>().size());
  setenv("ZETAKIT_PRECISION_BITS", "lots", 1);
  EXPECT_EQ(run({"eval", "zeta-z", "--s=0.25"}).code, 2);
  unsetenv("ZETAKIT_PRECISION_BITS");
}

TEST(Cli, PolyAndVolumes) {
  CliRun r = run({"poly", "--m=2"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("(n^4 + 10*n^2 - 11)/720"), std::string::npos) << r.out;
  EXPECT_EQ(run({"poly", "--m=9"}).code, 2);
  r = run({"--format=json", "volumes", "--n=3"});
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  zetakit::PrecisionScope scope(256);
  zt::Real pi = zt::const_pi();
  EXPECT_LT(testing_support::gap(zt::Real(j["value"].get<std::string>()), 2 * pi * pi), 1e-70);
}

TEST(Cli, BinaryExitCodes) {
  std::string text;
  EXPECT_EQ(run_binary("eval zeta-zn --n=3 --s=2", &text), 0);
  EXPECT_NE(text.find("2/9"), std::string::npos);
  EXPECT_EQ(run_binary("eval zeta-z --s=0.5", &text), 3);
  EXPECT_TRUE(text.empty());
  EXPECT_EQ(run_binary("frobnicate"), 2);
  EXPECT_EQ(run_binary("verify spheres"), 0);
  EXPECT_EQ(run_binary("verify zeta-zn --corrupt-poly"), 1);
}
