#include <gtest/gtest.h>

#include "cli/commands.hpp"
#include "cli/sweep.hpp"
#include "cuspgroup/classlattice.hpp"

using namespace cuspgroup;
using namespace cuspgroup::cli;

namespace {

std::vector<Report> sample_reports() {
  return {cmd_cusps(36),
          cmd_lambda(12, false),
          cmd_lambda(12, true),
          cmd_cdivisor(72, 2, 2),
          cmd_cdivisor(9, 1, 1),
          cmd_order(11, 11, 1, OrderMethod::both),
          cmd_order(18, 2, 3, OrderMethod::closed),
          cmd_residues(22, 22, 1),
          cmd_qexp(9, 1, 1, 20),
          cmd_hecke(9, 3, "3:1,1:-2"),
          cmd_classify(33, std::nullopt),
          cmd_classify(33, 5),
          cmd_order(9, 9, 1, OrderMethod::both)};
}

}  // namespace

TEST(Json, RoundTripByteIdentical) {
  for (const auto& r : sample_reports()) {
    const std::string once = render_json(r.doc);
    const std::string twice = render_json(Json::parse(once));
    EXPECT_EQ(once, twice);
  }
}

TEST(Json, Deterministic) {
  const auto a = sample_reports();
  const auto b = sample_reports();
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(render_json(a[i].doc), render_json(b[i].doc));
    EXPECT_EQ(render_text(a[i].doc), render_text(b[i].doc));
  }
}

TEST(Json, RationalAndDivisorShapes) {
  EXPECT_EQ(rat_json(make_rat(-10, 4)).dump(), R"({"den":"2","num":"-5"})");
  EXPECT_EQ(rat_json(Rat(0)).dump(), R"({"den":"1","num":"0"})");
  const auto doc = cmd_cdivisor(33, 33, 1).doc;
  const auto& div = doc["outputs"]["divisor"];
  ASSERT_EQ(div.size(), 4u);
  std::int64_t last = 0;
  for (const auto& e : div) {
    EXPECT_GT(e["d"].get<std::int64_t>(), last);
    last = e["d"].get<std::int64_t>();
    EXPECT_TRUE(e["c"].contains("num"));
    EXPECT_TRUE(e["c"].contains("den"));
  }
}

TEST(Commands, OrderBoth) {
  const auto r = cmd_order(11, 11, 1, OrderMethod::both);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.doc["outputs"]["lattice"], "5");
  EXPECT_EQ(r.doc["outputs"]["closed"], "5");
  EXPECT_TRUE(r.doc["consistent"].get<bool>());
}

TEST(Commands, OrderClosedNotCovered) {
  const auto r = cmd_order(18, 2, 3, OrderMethod::closed);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_TRUE(r.doc["outputs"]["closed"].is_null());
  EXPECT_FALSE(r.doc["outputs"]["covered"].get<bool>());
}

TEST(Commands, Classify11) {
  const auto r = cmd_classify(11, std::nullopt);
  ASSERT_EQ(r.exit_code, 0);
  const auto& primes = r.doc["outputs"]["primes"];
  ASSERT_EQ(primes.size(), 1u);
  EXPECT_EQ(primes[0]["ell"], 5);
  EXPECT_EQ(primes[0]["datum"]["M"], 11);
  EXPECT_EQ(primes[0]["datum"]["D"], 1);
}

TEST(Commands, HeckeCaseTable) {
  const auto r = cmd_hecke(11, 11, "11:1");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.doc["outputs"]["image"], r.doc["outputs"]["case_table"]);
  const auto deep = cmd_hecke(9, 3, "9:1");
  ASSERT_EQ(deep.exit_code, 0);
  EXPECT_TRUE(deep.doc["outputs"]["case_table"].is_null());
}

TEST(Commands, ResiduesConsistent) {
  const auto r = cmd_residues(9, 1, 1);
  ASSERT_EQ(r.exit_code, 0);
  const auto& res = r.doc["outputs"]["residues"];
  EXPECT_EQ(res[0]["c"]["num"], "16");
  EXPECT_EQ(res[0]["c"]["den"], "3");
}

TEST(Commands, QexpDefaultShape) {
  const auto r = cmd_qexp(11, 11, 1, 60);
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.doc["outputs"]["coefficients"].size(), 61u);
  EXPECT_EQ(r.doc["outputs"]["precision"], 60);
}

TEST(ExitCodes, InvalidInput) {
  EXPECT_EQ(cmd_order(9, 9, 1, OrderMethod::both).exit_code, ExitCode::invalid_input);
  EXPECT_EQ(cmd_cusps(0).exit_code, ExitCode::invalid_input);
  EXPECT_EQ(cmd_qexp(11, 11, 1, -1).exit_code, ExitCode::invalid_input);
  EXPECT_EQ(cmd_hecke(11, 4, "1:1").exit_code, ExitCode::invalid_input);
  EXPECT_EQ(cmd_hecke(11, 2, "2:1").exit_code, ExitCode::invalid_input);
  EXPECT_EQ(cmd_hecke(11, 2, "1=1").exit_code, ExitCode::invalid_input);
  EXPECT_EQ(cmd_hecke(11, 2, "1:x").exit_code, ExitCode::invalid_input);
  EXPECT_EQ(cmd_classify(11, 4).exit_code, ExitCode::invalid_input);
  EXPECT_EQ(cmd_sweep(0).exit_code, ExitCode::invalid_input);
  EXPECT_THROW(parse_order_method("fast"), std::invalid_argument);
  EXPECT_TRUE(cmd_cusps(0).doc.contains("error"));
}

TEST(ExitCodes, ConsistencyFailure) {
  const auto thrown = guarded("probe", Json::object(), [](Json&, bool&) { throw ConsistencyError("boom"); });
  EXPECT_EQ(thrown.exit_code, ExitCode::consistency_failure);
  EXPECT_FALSE(thrown.doc["consistent"].get<bool>());
  const auto flagged = guarded("probe", Json::object(), [](Json&, bool& ok) { ok = false; });
  EXPECT_EQ(flagged.exit_code, ExitCode::consistency_failure);
}

TEST(Divisors, Parse) {
  const auto d = parse_divisor(33, "1:1, 3:-1,33:2");
  EXPECT_EQ(d.coefficient(1), 1);
  EXPECT_EQ(d.coefficient(3), -1);
  EXPECT_EQ(d.coefficient(33), 2);
  EXPECT_TRUE(parse_divisor(33, "").is_zero());
}

TEST(Text, RendersRationals) {
  const auto text = render_text(cmd_residues(9, 1, 1).doc);
  EXPECT_NE(text.find("16/3"), std::string::npos);
  EXPECT_NE(text.find("command: residues"), std::string::npos);
}

TEST(Sweep, SmallRangePasses) {
  const auto s = run_sweep(40);
  EXPECT_TRUE(s.ok());
  EXPECT_GT(s.checks.at("hecke_class_identity").checked, 0);
  const auto r = cmd_sweep(20);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_TRUE(r.doc["outputs"]["all_passed"].get<bool>());
}
