#include <gtest/gtest.h>

#include "cuspgroup/eisq.hpp"

using namespace cuspgroup;

namespace {

Rat r(long a, long b = 1) { return make_rat(a, b); }

std::vector<EisensteinDatum> all_data(std::int64_t n) {
  std::vector<EisensteinDatum> out;
  const Parts pt = parts(n);
  for (auto d : divisors_of(pt.square))
    for (auto m : divisors_of(pt.squarefree * d))
      if (!EisensteinDatum::validate(n, m, d)) out.push_back(EisensteinDatum::make(n, m, d));
  return out;
}

std::vector<Rat> rats(std::initializer_list<long> v) {
  std::vector<Rat> out;
  for (auto x : v) out.push_back(r(x));
  return out;
}

}  // namespace

TEST(BaseEpp, Oracles) {
  const auto e = base_epp(3, 8);
  EXPECT_EQ(e.precision(), 8);
  EXPECT_EQ(e[0], r(1, 12));
  EXPECT_EQ(e[1], 1);
  EXPECT_EQ(e[2], 3);
  EXPECT_EQ(e[3], 1);
  EXPECT_EQ(e[4], 7);
  EXPECT_EQ(e[6], 3);
  EXPECT_THROW(base_epp(4, 8), std::invalid_argument);
}

TEST(BaseEpp, HeckeEigen) {
  const auto e = base_epp(3, 60);
  const auto u3 = hecke_on_qexp(e, 3);
  EXPECT_EQ(u3.precision(), 20);
  EXPECT_FALSE(u3.first_difference(e).has_value());
  const auto t2 = hecke_on_qexp(e, 2);
  EXPECT_EQ(t2.precision(), 30);
  EXPECT_FALSE(t2.first_difference(r(3) * e).has_value());
}

TEST(Qexp, Oracles) {
  const auto e9 = build_qexp(EisensteinDatum::make(9, 1, 1), 6);
  EXPECT_EQ(e9.coeffs(), rats({0, 1, 3, 0, 7, 6, 0}));
  EXPECT_EQ(e9.level(), 9);
  EXPECT_EQ(build_qexp(EisensteinDatum::make(3, 3, 1), 30), base_epp(3, 30));
  EXPECT_EQ(build_qexp(EisensteinDatum::make(22, 22, 1), 10)[0], r(-5, 12));
  EXPECT_EQ(build_qexp(EisensteinDatum::make(22, 11, 1), 10)[0], 0);
}

TEST(Qexp, PrimeLevelConstantTerm) {
  for (std::int64_t p : {2, 3, 5, 7, 11, 13, 17}) {
    const auto e = build_qexp(EisensteinDatum::make(p, p, 1), 5);
    EXPECT_EQ(e[0], r(p - 1, 24));
    EXPECT_EQ(e.level(), p);
  }
}

TEST(Qexp, HeckeOnLevelAndOff) {
  const auto e = build_qexp(EisensteinDatum::make(9, 1, 1), 60);
  const auto u3 = hecke_on_qexp(e, 3);
  EXPECT_FALSE(u3.first_difference(r(0) * e).has_value());
  QExpansion constant(5, {r(2), r(0), r(0), r(0), r(0), r(0)});
  EXPECT_EQ(hecke_on_qexp(constant, 2)[0], r(6));
}

TEST(Qexp, ConsistencyIdentities) {
  // E_{M, N p^2} from E_{Mp, Np} by F(z) - F(pz), and from E_{M, Np} by
  // G(z) - p G(pz).
  for (auto [n, p] : {std::pair<std::int64_t, std::int64_t>{5, 2}, {7, 3}, {11, 2}, {13, 5}}) {
    const int prec = 60;
    const std::int64_t top = n * p * p;
    const auto target = build_qexp(EisensteinDatum::make(top, n, 1), prec);
    const auto f = build_qexp(EisensteinDatum::make(n * p, n * p, 1), prec);
    const auto g = build_qexp(EisensteinDatum::make(n * p, n, 1), prec);
    EXPECT_FALSE(target.first_difference(f - f.substitute(p, top)).has_value()) << n << " " << p;
    EXPECT_FALSE(target.first_difference(g - r(p) * g.substitute(p, top)).has_value()) << n << " " << p;
  }
}

TEST(EigenCheck, Oracles) {
  EXPECT_TRUE(eigen_check(EisensteinDatum::make(11, 11, 1), 60, 13).ok());
  const auto rep9 = eigen_check(EisensteinDatum::make(9, 1, 1), 60, 13);
  EXPECT_TRUE(rep9.ok());
  for (const auto& c : rep9.checks)
    if (c.prime == 3) {
      EXPECT_TRUE(c.on_level);
      EXPECT_EQ(c.eigenvalue, 0);
    }
  const auto rep45 = eigen_check(EisensteinDatum::make(45, 3, 3), 60, 13);
  EXPECT_TRUE(rep45.ok());
  for (const auto& c : rep45.checks)
    if (c.prime == 5) EXPECT_EQ(c.eigenvalue, 5);
  EXPECT_THROW(eigen_check(EisensteinDatum::make(11, 11, 1), 10, 13), std::invalid_argument);
}

TEST(EigenCheck, Property) {
  for (std::int64_t n = 2; n <= 60; ++n)
    for (const auto& d : all_data(n)) EXPECT_TRUE(eigen_check(d, 60, 13).ok()) << d.to_string();
}

TEST(EigenCheck, DetectsWrongSeries) {
  // a perturbed series fails T_2
  const auto e = build_qexp(EisensteinDatum::make(11, 11, 1), 40);
  std::vector<Rat> bad = e.coeffs();
  bad[6] += 1;
  const QExpansion f(11, bad);
  EXPECT_TRUE(hecke_on_qexp(f, 2).first_difference(r(3) * f).has_value());
}

TEST(Residues, Oracles) {
  const auto t3 = residue_table(EisensteinDatum::make(3, 3, 1));
  EXPECT_EQ(t3.at(1), 2);
  EXPECT_EQ(t3.at(3), -2);
  const auto t9 = residue_table(EisensteinDatum::make(9, 1, 1));
  EXPECT_EQ(t9.at(1), r(16, 3));
  EXPECT_EQ(t9.at(3), r(-8, 3));
  EXPECT_EQ(t9.at(9), 0);
  EXPECT_EQ(residue_table(EisensteinDatum::make(22, 22, 1)).at(22), 10);
  EXPECT_EQ(residue_table(EisensteinDatum::make(22, 11, 1)).at(22), 0);
}

TEST(Residues, ClosedOracles) {
  EXPECT_EQ(residue_closed(EisensteinDatum::make(9, 1, 1)).at_level_ml, r(-8, 3));
  EXPECT_EQ(residue_closed(EisensteinDatum::make(3, 3, 1)).at_infinity, -2);
  EXPECT_EQ(residue_closed(EisensteinDatum::make(11, 11, 1)).at_level_ml, -10);
}

TEST(Residues, Property) {
  long count = 0;
  for (std::int64_t n = 2; n <= 150; ++n)
    for (const auto& d : all_data(n)) {
      const auto t = residue_table(d);
      EXPECT_EQ(t.weighted_sum(), 0) << d.to_string();
      EXPECT_EQ(t, residue_table_by_pullback(d)) << d.to_string();
      const auto c = residue_closed(d);
      EXPECT_EQ(t.at(n), c.at_infinity) << d.to_string();
      EXPECT_EQ(t.at(d.m() * d.l_part()), c.at_level_ml) << d.to_string();
      EXPECT_EQ(t.at(n), r(-24) * build_qexp(d, 0)[0]) << d.to_string();
      ++count;
    }
  EXPECT_EQ(count, 561);
}

TEST(Residues, AdjunctionPlanOrder) {
  const auto plan = adjunction_plan(EisensteinDatum::make(90, 5, 1));
  EXPECT_EQ(plan.base_prime, 3);
  EXPECT_TRUE(plan.base_twisted);
  ASSERT_EQ(plan.steps.size(), 2u);
  EXPECT_EQ(plan.steps[0].prime, 2);
  EXPECT_EQ(plan.steps[0].role, PrimeRole::unramified);
  EXPECT_EQ(plan.steps[1].prime, 5);
  EXPECT_EQ(plan.steps[1].role, PrimeRole::multiplicative);
}
