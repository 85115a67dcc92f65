#include <gtest/gtest.h>

#include "meadow/report.hpp"

using namespace meadow;

namespace {

std::string check_json(const std::string& desc, const std::string& eq, const CheckMode& mode, unsigned workers) {
  const auto m = make_meadow(desc);
  const Equation e = parse_equation(eq);
  return report::dump(report::check(*m, e, mode, check_equation(*m, e, {mode, workers, {}})));
}

}  // namespace

TEST(Report, Schema) {
  const auto m = make_meadow("prod:[zp:2,zp:3]");
  const auto j = report::inverse_law(*m, CheckMode::exhaustive(), check_IL(*m, {CheckMode::exhaustive(), 1, {}}));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"operation", "meadow", "equation", "mode", "verdicts", "passed"}));
  const auto& v = j["verdicts"][0];
  EXPECT_EQ(v["status"], "fails");
  EXPECT_EQ(v["witness"]["assignment"]["x"], "<0,1>");
  EXPECT_EQ(v["witness"]["lhs"], "<0,1>");
  EXPECT_EQ(v["assignments_checked"], 2);
}

TEST(Report, SampleModeEchoesSeed) {
  const std::string s = check_json("q0", "x * x^-1 * x = x", CheckMode::sample(50, 0), 1);
  EXPECT_NE(s.find("\"seed\": 0"), std::string::npos);
  EXPECT_NE(s.find("holds_sampled(50)"), std::string::npos);
}

TEST(Report, ByteIdenticalAcrossRunsAndWorkers) {
  const std::vector<std::tuple<std::string, std::string, CheckMode>> cases{
      {"zsf:30", "x * y * z = z * y", CheckMode::exhaustive()},
      {"q0", "(x + y) * (x + y)^-1 = 1", CheckMode::sample(300, 17)},
      {"prod:[q0,q0]", "x * x^-1 = 1", CheckMode::sample(300, 5)},
  };
  for (const auto& [d, e, mode] : cases) {
    const auto a = check_json(d, e, mode, 1);
    EXPECT_EQ(a, check_json(d, e, mode, 1));
    EXPECT_EQ(a, check_json(d, e, mode, 8));
  }
  const auto p1 = report::dump(report::presentation(
      verify_presentation(parse_presentation("const i\ni*i+1=0\n"), parse_poly("x^2+1"), 200, 3, 1), 200));
  const auto p8 = report::dump(report::presentation(
      verify_presentation(parse_presentation("const i\ni*i+1=0\n"), parse_poly("x^2+1"), 200, 3, 8), 200));
  EXPECT_EQ(p1, p8);
}
