#include "spin7/verify.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace spin7;

namespace {

const VerificationReport &full() {
  static const VerificationReport r = run_verification("all");
  return r;
}

} // namespace

TEST(Verify, AllSuitesPass) {
  EXPECT_TRUE(full().passed());
  EXPECT_EQ(full().count(CheckStatus::fail), 0u);
  for (const auto &c : full().checks)
    EXPECT_NE(c.status, CheckStatus::fail) << c.suite << "." << c.name << ": " << c.measured;
}

TEST(Verify, RegistryCoveredExactlyOnceInOrder) {
  std::vector<std::pair<std::string, std::string>> expected, got;
  for (const auto &[suite, names] : check_registry())
    for (auto n : names) expected.emplace_back(suite, n);
  for (const auto &c : full().checks) got.emplace_back(c.suite, c.name);
  EXPECT_EQ(got, expected);
}

TEST(Verify, RegistryFollowsSuiteOrder) {
  ASSERT_EQ(check_registry().size(), kSuites.size());
  for (std::size_t i = 0; i < kSuites.size(); ++i) EXPECT_EQ(check_registry()[i].first, kSuites[i]);
}

TEST(Verify, MeasuredOnlyForConformanceChecks) {
  std::map<std::string, bool> measured;
  for (const auto &c : full().checks)
    if (c.status == CheckStatus::measured) measured[c.suite + "." + c.name] = c.conforms;
  const std::map<std::string, bool> expected{{"spinor.seven_rep_eigenvalue", true},
                                             {"spinor.gamma_eps_eigenvalue", false},
                                             {"spinor.appendix_kappa_normalized", false},
                                             {"torsion.torsion_clifford_conformance", false}};
  EXPECT_EQ(measured, expected);
}

TEST(Verify, SingleSuiteSelection) {
  const VerificationReport r = run_verification("rigidity");
  ASSERT_FALSE(r.checks.empty());
  for (const auto &c : r.checks) EXPECT_EQ(c.suite, "rigidity");
  const std::string text = render_text(r);
  EXPECT_NE(text.find("SU(3): Scal = 77/6, non-rigid"), std::string::npos);
  EXPECT_NE(render_text(run_verification("cayley")).find("Λ² split: 7 + 21"), std::string::npos);
}

TEST(Verify, UnknownSuiteThrows) {
  EXPECT_FALSE(is_suite_name("geometry"));
  EXPECT_THROW(run_verification("geometry"), Error);
}

TEST(Verify, StrictModePromotesMismatches) {
  const VerificationReport r = run_verification("torsion", true);
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.count(CheckStatus::measured), 0u);
  EXPECT_EQ(r.count(CheckStatus::fail), 1u);
}

TEST(Verify, TextOutputIsDeterministic) {
  const std::string a = render_text(run_verification("all"));
  EXPECT_EQ(a, render_text(full()));
  EXPECT_NE(a.find("== result: 40 pass, 0 fail, 4 measured"), std::string::npos);
}

TEST(Verify, StructuredDocument) {
  const auto doc = nlohmann::ordered_json::parse(render_structured(full()));
  std::vector<std::string> keys;
  for (const auto &[k, v] : doc.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"checks", "constants", "notes", "summary"}));
  EXPECT_EQ(doc["checks"].size(), full().checks.size());
  EXPECT_EQ(doc["summary"]["fail"], 0);
  EXPECT_EQ(doc["summary"]["ok"], true);
  EXPECT_EQ(doc["checks"][0]["suite"], "clifford");
  EXPECT_EQ(render_structured(full()), render_structured(run_verification("all")));
}

TEST(Verify, PinnedConstants) {
  std::map<std::string, std::string> k;
  for (const auto &c : full().constants) k[c.name] = c.value;
  EXPECT_EQ(k.at("mu"), "-14");
  EXPECT_EQ(k.at("kappa"), "-42");
  EXPECT_EQ(k.at("gram_constant"), "7");
  EXPECT_EQ(k.at("torsion_clifford_ratio"), "49/6");
  EXPECT_EQ(k.at("torsion_norm_ratio"), "343/36");
  EXPECT_EQ(k.at("weitzenbock_c1"), "-6");
  EXPECT_EQ(k.at("lee_round_trip"), "6/7");
}
