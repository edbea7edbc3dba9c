#include "support.hpp"

using namespace zetakit;

namespace {

class SuiteAtPrecision : public ::testing::TestWithParam<std::tuple<std::string, long>> {};

TEST_P(SuiteAtPrecision, AllChecksPass) {
  const auto& [suite, bits] = GetParam();
  SuiteReport rep = run_verify_suite(suite, PrecisionContext(bits, 1e-30));
  EXPECT_FALSE(rep.checks.empty());
  for (const auto& c : rep.checks) EXPECT_TRUE(c.passed) << c.name << ": max error " << c.max_error << " " << c.detail;
}

INSTANTIATE_TEST_SUITE_P(Suites, SuiteAtPrecision,
                         ::testing::Combine(::testing::Values("numerics", "zeta-z", "zeta-zn", "spheres",
                                                             "asymptotics"),
                                            ::testing::Values(128L, 256L)),
                         [](const auto& info) {
                           std::string name = std::get<0>(info.param);
                           for (auto& ch : name)
                             if (ch == '-') ch = '_';
                           return name + "_" + std::to_string(std::get<1>(info.param));
                         });

}  // namespace

TEST(Verify, SpheresHasFourChecks) {
  EXPECT_EQ(run_verify_suite("spheres", PrecisionContext()).checks.size(), 4u);
}

TEST(Verify, CorruptedPolynomialIsCaught) {
  VerifyOptions opt;
  opt.corrupt_poly = true;
  SuiteReport rep = run_verify_suite("zeta-zn", PrecisionContext(), opt);
  EXPECT_FALSE(rep.passed());
}

TEST(Verify, UnknownSuite) { EXPECT_THROW(run_verify_suite("nope", PrecisionContext()), DomainError); }
