#include <gtest/gtest.h>

#include <json.hpp>
#include <random>

#include "cwb/bounds.hpp"
#include "cwb/error.hpp"
#include "cwb/orbit.hpp"

using namespace cwb;

namespace {

uint64_t val(const BoundValue& v) {
  EXPECT_TRUE(applicable(v)) << to_string(v);
  return applicable(v) ? static_cast<uint64_t>(value_of(v)) : 0;
}

uint64_t orbits(uint64_t q, uint64_t n, std::vector<uint64_t> reps, GroupKind kind, int l0 = 0) {
  const PrimePower pp = PrimePower::from_order(q);
  const CyclicCode code(CodeSpec{pp, n, std::move(reps)});
  return orbit_count(code, group_generators(kind, pp, n, l0)).count();
}

}  // namespace

TEST(Irreducible, KnownValues) {
  EXPECT_EQ(val(thm31_irreducible(2, 9, 1, 6)), 3u);
  EXPECT_EQ(val(rho_sigma_irreducible(2, 9, 1, 6)), 7u);
  EXPECT_EQ(val(thm31_irreducible(8, 21, 7, 2)), 2u);
  EXPECT_EQ(val(thm31_irreducible(3, 22, 2, 5)), 3u);
}

TEST(Irreducible, LiteralAndTotientFormsAgree) {
  for (uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    for (uint64_t n = 1; n <= 80; ++n) {
      if (gcd_u(n, q) != 1) continue;
      for (const auto& c : cyclotomic_cosets(n, q)) {
        EXPECT_EQ(val(thm31_irreducible(q, n, c.rep, c.size())), val(thm31_literal(q, n, c.rep, c.size())));
      }
    }
  }
}

TEST(Irreducible, Inapplicable) {
  EXPECT_FALSE(applicable(thm31_irreducible(2, 9, 1, 5)));  // wrong coset size
  EXPECT_FALSE(applicable(thm31_irreducible(2, 4, 1, 1)));  // gcd(n, q) != 1
}

TEST(TwoCosets, KnownValues) {
  EXPECT_EQ(val(cor33(2, 15, 0, 3, 4)), 5u);
  EXPECT_EQ(val(cz_published(2, 15, {0, 3})), 7u);
  EXPECT_EQ(val(cor34(2, 15, 1, 3, 4)), 8u);
  EXPECT_EQ(val(cz_published(2, 15, {1, 3})), 19u);
  EXPECT_EQ(val(cor34(2, 7, 1, 3, 3)), 5u);
  EXPECT_EQ(val(cor34(2, 21, 3, 9, 3)), 5u);
  EXPECT_EQ(val(cor34(4, 15, 1, 2, 2)), 5u);
  EXPECT_EQ(val(cor34(4, 15, 1, 7, 2)), 11u);
  EXPECT_EQ(val(thm33_two_cosets(2, 15, 0, 1, 3, 4)), 5u);
}

TEST(TwoCosets, HammingCodeHasThreeOrbits) {
  // [7,4] Hamming code: weights 3, 4, 7, one <mu_2, rho> orbit each.
  EXPECT_EQ(val(cor33(2, 7, 0, 1, 3)), 3u);
  EXPECT_EQ(orbits(2, 7, {0, 1}, GroupKind::MuQ), 3u);
}

TEST(Negation, KnownValues) {
  EXPECT_EQ(val(thm34(2, 7, 1, 3)), 4u);
  EXPECT_EQ(val(thm35(2, 21, 3, 3)), 4u);
  EXPECT_FALSE(applicable(thm35(2, 7, 1, 3)));  // -1 lies in <-2> mod 7
  EXPECT_FALSE(applicable(thm34(2, 21, 3, 3)));
  EXPECT_TRUE(is_negation_pair(2, 7, 1, 3));
  EXPECT_FALSE(is_negation_pair(2, 15, 1, 3));
}

TEST(HalfPower, KnownValues) {
  const PrimePower q4 = PrimePower::from_order(4);
  EXPECT_EQ(val(thm36(q4, 15, 1, 2, 0)), 3u);
  EXPECT_EQ(val(thm36(q4, 15, 1, 2, 1)), 6u);
  EXPECT_EQ(pe2_pairing(q4, 15, 1, 2), 0);
  EXPECT_EQ(pe2_pairing(q4, 15, 1, 7), 1);
  EXPECT_FALSE(applicable(thm36(PrimePower::from_order(8), 21, 1, 2, 0)));  // odd e
}

TEST(Exactness, RandomInstancesAgainstEnumeration) {
  std::mt19937_64 rng(21);
  int checked = 0;
  for (int t = 0; t < 400 && checked < 120; ++t) {
    const uint64_t q = std::vector<uint64_t>{2, 3, 4, 5, 9}[rng() % 5];
    const uint64_t n = 2 + rng() % 40;
    if (gcd_u(n, q) != 1) continue;
    const auto cs = cyclotomic_cosets(n, q);
    std::vector<uint64_t> reps{cs[rng() % cs.size()].rep};
    if (rng() % 2) {
      const uint64_t r2 = cs[rng() % cs.size()].rep;
      if (r2 != reps[0]) reps.push_back(r2);
    }
    uint64_t k = 0;
    for (uint64_t r : reps) k += coset_of(r, n, q).size();
    double size = 1;
    for (uint64_t i = 0; i < k; ++i) size *= static_cast<double>(q);
    if (size > 1 << 12) continue;
    ++checked;
    const PrimePower pp = PrimePower::from_order(q);
    const BoundReport rep = bound_report(pp, n, reps);
    const uint64_t mq = orbits(q, n, reps, GroupKind::MuQ);
    const uint64_t rs = orbits(q, n, reps, GroupKind::RhoSigma);
    for (const char* m : {"thm31", "thm33", "cor33", "cor34"}) {
      if (applicable(rep.entries.at(m))) EXPECT_EQ(val(rep.entries.at(m)), mq) << m << " " << q << " " << n;
    }
    if (applicable(rep.entries.at("thm34")) || applicable(rep.entries.at("thm35"))) {
      const uint64_t neg = orbits(q, n, reps, GroupKind::MuNegQ);
      for (const char* m : {"thm34", "thm35"})
        if (applicable(rep.entries.at(m))) EXPECT_EQ(val(rep.entries.at(m)), neg) << m;
    }
    if (applicable(rep.entries.at("thm36_l0"))) {
      EXPECT_EQ(val(rep.entries.at("thm36_l0")), orbits(q, n, reps, GroupKind::MuPe2, *rep.thm36_l0));
    }
    EXPECT_EQ(val(rep.entries.at("cz_corrected")), rs);
    EXPECT_GE(val(rep.entries.at("thm32")), mq);
  }
  EXPECT_GE(checked, 60);
}

TEST(General, SubsetTermsAreOrdered) {
  for (uint64_t q : {2, 3, 4}) {
    for (uint64_t n = 3; n <= 45; ++n) {
      if (gcd_u(n, q) != 1) continue;
      const auto cs = cyclotomic_cosets(n, q);
      for (size_t a = 0; a < cs.size(); ++a)
        for (size_t b = a + 1; b < cs.size() && b < a + 4; ++b) {
          const std::vector<uint64_t> sub{cs[a].rep, cs[b].rep};
          EXPECT_LE(thm32_subset_term(q, n, sub), cz_corrected_subset_term(q, n, sub));
        }
    }
  }
}

TEST(General, ThreeCosetCode) {
  // No closed form beyond thm32 and the <rho,sigma> counts for three cosets.
  const BoundReport rep = bound_report(PrimePower::from_order(2), 15, {0, 1, 3});
  EXPECT_FALSE(applicable(rep.entries.at("thm33")));
  EXPECT_GE(val(rep.entries.at("thm32")), orbits(2, 15, {0, 1, 3}, GroupKind::MuQ));
  EXPECT_EQ(val(rep.entries.at("cz_corrected")), orbits(2, 15, {0, 1, 3}, GroupKind::RhoSigma));
}

TEST(Predicates, FewWeightCriteria) {
  const auto a = predicate_cor31(8, 21, 7);
  ASSERT_TRUE(a.has_value());
  EXPECT_EQ(a->N, 1u);
  EXPECT_FALSE(predicate_cor31(8, 21, 3).has_value());  // gcd(3, 3) != 1
  const auto b = predicate_cor32(3, 22, 2);
  ASSERT_TRUE(b.has_value());
  EXPECT_EQ(b->k, 5u);
  EXPECT_FALSE(predicate_cor32(2, 9, 1).has_value());
}

TEST(Predicates, StrictImprovementTest) {
  EXPECT_TRUE(mu_q_strictly_fewer(2, 9, 1, 6));
  EXPECT_FALSE(mu_q_strictly_fewer(2, 7, 1, 3));  // 1 orbit either way
  EXPECT_FALSE(mu_q_strictly_fewer(2, 9, 0, 1));
}

TEST(Report, BestSkipsSupersededBaseline) {
  const BoundReport rep = bound_report(PrimePower::from_order(2), 15, {1, 3});
  const auto best = rep.best();
  ASSERT_TRUE(best.has_value());
  EXPECT_EQ(best->second, 8);
  EXPECT_NE(best->first, "cz_published");
  const auto j = nlohmann::json::parse(rep.to_json());
  EXPECT_EQ(j["q"], 2);
  EXPECT_EQ(j["n"], 15);
  EXPECT_EQ(j["methods"]["cor34"]["value"], 8);
  EXPECT_EQ(j["methods"]["cz_published"]["value"], 19);
  EXPECT_FALSE(j["methods"]["thm31"]["applicable"].get<bool>());
  EXPECT_TRUE(j["methods"]["thm31"].contains("reason"));
  EXPECT_EQ(j["best"]["value"], 8);
  for (const auto& m : method_names()) EXPECT_TRUE(j["methods"].contains(m)) << m;
}

TEST(Report, HalfPowerChoice) {
  const BoundReport rep = bound_report(PrimePower::from_order(4), 15, {1, 7});
  EXPECT_EQ(rep.thm36_l0, 1);
  EXPECT_EQ(val(rep.entries.at("thm36_l0")), 6u);
  EXPECT_EQ(rep.best()->second, 6);
}

TEST(Report, NonCoprimeIsInapplicableEverywhere) {
  const BoundReport rep = bound_report(PrimePower::from_order(2), 9, {3});
  EXPECT_TRUE(rep.best().has_value());
  const BoundReport bad = bound_report(PrimePower::from_order(3), 9, {1});
  EXPECT_FALSE(bad.best().has_value());
}
