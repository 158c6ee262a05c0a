#include <gtest/gtest.h>

#include "cuspgroup/classlattice.hpp"
#include "cuspgroup/heckediv.hpp"

using namespace cuspgroup;

namespace {

RationalCuspDivisor div_of(std::int64_t n, std::initializer_list<std::pair<std::int64_t, long>> terms) {
  RationalCuspDivisor d(n);
  for (const auto& [lvl, k] : terms) d.set(lvl, k);
  return d;
}

std::vector<EisensteinDatum> all_data(std::int64_t n) {
  std::vector<EisensteinDatum> out;
  const Parts pt = parts(n);
  for (auto d : divisors_of(pt.square))
    for (auto m : divisors_of(pt.squarefree * d))
      if (!EisensteinDatum::validate(n, m, d)) out.push_back(EisensteinDatum::make(n, m, d));
  return out;
}

}  // namespace

TEST(Datum, Validation) {
  EXPECT_NO_THROW(EisensteinDatum::make(11, 11, 1));
  EXPECT_NO_THROW(EisensteinDatum::make(45, 3, 3));
  EXPECT_THROW(EisensteinDatum::make(45, 3, 1), std::invalid_argument);  // 3 does not divide N^sf D = 5
  EXPECT_THROW(EisensteinDatum::make(11, 1, 1), std::invalid_argument);  // M L = 1
  EXPECT_THROW(EisensteinDatum::make(9, 1, 2), std::invalid_argument);
  EXPECT_THROW(EisensteinDatum::make(0, 1, 1), std::invalid_argument);
  const auto d = EisensteinDatum::make(72, 2, 2);
  EXPECT_EQ(d.l_part(), 3);
  EXPECT_FALSE(d.m_divides_squarefree());
}

TEST(Epsilon, Oracles) {
  EXPECT_EQ(epsilon(EisensteinDatum::make(11, 11, 1), 11), 1);
  EXPECT_EQ(epsilon(EisensteinDatum::make(9, 1, 1), 3), 0);
  EXPECT_EQ(epsilon(EisensteinDatum::make(45, 3, 3), 5), 5);
  EXPECT_EQ(epsilon(EisensteinDatum::make(45, 3, 3), 3), 1);
  EXPECT_THROW(epsilon(EisensteinDatum::make(11, 11, 1), 2), std::invalid_argument);
  EXPECT_THROW(epsilon(EisensteinDatum::make(12, 3, 1), 4), std::invalid_argument);
}

TEST(CDivisor, Oracles) {
  EXPECT_EQ(build_c_divisor(EisensteinDatum::make(11, 11, 1)), div_of(11, {{1, 1}, {11, -1}}));
  EXPECT_EQ(build_c_divisor(EisensteinDatum::make(9, 1, 1)), div_of(9, {{1, 2}, {3, -1}}));
  EXPECT_EQ(build_c_divisor(EisensteinDatum::make(33, 3, 1)), div_of(33, {{1, 1}, {3, -1}}));
  EXPECT_EQ(build_c_divisor(EisensteinDatum::make(33, 33, 1)), div_of(33, {{1, 1}, {3, -1}, {11, -1}, {33, 1}}));
}

TEST(CDivisor, PulledBackCase) {
  // gcd(M, N^sq) = 3: built at 3*... and pulled back along alpha
  const auto c = build_c_divisor(EisensteinDatum::make(9, 3, 3));
  EXPECT_EQ(c.level_n(), 9);
  EXPECT_EQ(c, alpha_pullback(div_of(3, {{1, 1}, {3, -1}}), 3));
  EXPECT_EQ(c.degree(), 0);
}

TEST(CDivisor, DegreeZeroProperty) {
  for (std::int64_t n = 2; n <= 150; ++n)
    for (const auto& d : all_data(n)) EXPECT_EQ(build_c_divisor(d).degree(), 0) << d.to_string();
}

TEST(HeckeDelta, Oracles) {
  EXPECT_EQ(hecke_delta(p_divisor(1, 11), 2), div_of(11, {{1, 3}}));
  EXPECT_EQ(hecke_delta(p_divisor(11, 11), 11), div_of(11, {{1, 10}, {11, 1}}));
  EXPECT_EQ(hecke_delta(p_divisor(3, 9), 3), div_of(9, {{1, 6}}));
  EXPECT_THROW(hecke_delta(p_divisor(1, 11), 4), std::invalid_argument);
}

TEST(HeckeDeltaClosed, Oracles) {
  EXPECT_EQ(*hecke_delta_closed(1, 11, 11), div_of(11, {{1, 11}}));
  EXPECT_EQ(*hecke_delta_closed(1, 3, 9), div_of(9, {{1, 3}}));
  EXPECT_EQ(*hecke_delta_closed(3, 3, 9), div_of(9, {{1, 6}}));
  EXPECT_FALSE(hecke_delta_closed(9, 3, 9).has_value());
  EXPECT_THROW(hecke_delta_closed(2, 3, 9), std::invalid_argument);
}

TEST(HeckeDelta, MatchesCaseTableProperty) {
  for (std::int64_t n = 1; n <= 150; ++n)
    for (auto d : divisors_of(n))
      for (std::int64_t p : {2, 3, 5, 7, 11, 13}) {
        if (valuation(d, p) > 1) continue;
        EXPECT_EQ(hecke_delta(p_divisor(d, n), p), *hecke_delta_closed(d, p, n)) << n << " " << d << " " << p;
      }
}

TEST(HeckeDelta, DegreeScalingProperty) {
  for (std::int64_t n = 1; n <= 150; n += 7)
    for (std::int64_t p : {2, 3, 5, 7, 11, 13}) {
      RationalCuspDivisor a(n);
      long k = 1;
      for (auto d : divisors_of(n)) a.set(d, k++ % 5 - 2);
      EXPECT_EQ(hecke_delta(a, p).degree(), Int(static_cast<long>(covering_degree(n, p))) * a.degree());
    }
}

TEST(HeckeDelta, AnnihilatesCProperty) {
  for (std::int64_t n = 2; n <= 150; ++n)
    for (const auto& datum : all_data(n)) {
      const auto c = build_c_divisor(datum);
      for (auto p : prime_divisors(n)) {
        const Int eps(static_cast<long>(epsilon(datum, p)));
        const auto delta = hecke_delta(c, p);
        if (datum.m_divides_squarefree()) EXPECT_EQ(delta, eps * c) << datum.to_string() << " p=" << p;
        EXPECT_TRUE(is_principal(delta - eps * c)) << datum.to_string() << " p=" << p;
      }
    }
}

TEST(DegMap, Definitions) {
  const auto a = div_of(11, {{1, 1}, {11, -1}});
  EXPECT_EQ(deg_map(DegMap::plain, a, 2), alpha_pullback(a, 2));
  EXPECT_EQ(deg_map(DegMap::plus, a, 2), alpha_pullback(a, 2) - beta_pullback(a, 2));
  EXPECT_EQ(deg_map(DegMap::minus, a, 2), Int(2) * alpha_pullback(a, 2) - beta_pullback(a, 2));
  EXPECT_EQ(parse_deg_map("minus"), DegMap::minus);
  EXPECT_EQ(to_string(DegMap::plus), "plus");
  EXPECT_THROW(parse_deg_map("other"), std::invalid_argument);
}

TEST(DegMap, MinusImageAt17) {
  const auto c17 = build_c_divisor(EisensteinDatum::make(17, 17, 1));
  const auto c289 = build_c_divisor(EisensteinDatum::make(289, 1, 1));
  const auto img = deg_map(DegMap::minus, c17, 17);
  EXPECT_EQ(img.level_n(), 289);
  EXPECT_TRUE(is_principal(img - Int(18) * c289));
}
