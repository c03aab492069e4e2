#include <gtest/gtest.h>

#include <deque>
#include <random>
#include <set>

#include "cwb/code.hpp"
#include "cwb/error.hpp"
#include "cwb/orbit.hpp"

using namespace cwb;

namespace {

CyclicCode make(uint64_t q, uint64_t n, std::vector<uint64_t> reps) {
  return CyclicCode(CodeSpec{PrimePower::from_order(q), n, std::move(reps)});
}

std::vector<ActionGenerator> preset(const CyclicCode& c, GroupKind k, int l0 = 0) {
  return group_generators(k, c.spec().pp, c.n(), l0);
}

// Orbits by explicit word sets, no index arithmetic.
std::vector<std::set<Word>> naive_orbits(const CyclicCode& code, const std::vector<ActionGenerator>& gens) {
  std::set<Word> left;
  for (uint64_t i = 1; i < code.size(); ++i) left.insert(code.codeword(i));
  std::vector<std::set<Word>> out;
  while (!left.empty()) {
    std::set<Word> orb{*left.begin()};
    std::deque<Word> todo{*left.begin()};
    while (!todo.empty()) {
      const Word w = todo.front();
      todo.pop_front();
      for (const auto& g : gens) {
        Word img = apply_generator(code, g, w);
        if (orb.insert(img).second) todo.push_back(img);
      }
    }
    for (const auto& w : orb) left.erase(w);
    out.push_back(std::move(orb));
  }
  return out;
}

struct Case {
  uint64_t q, n;
  std::vector<uint64_t> reps;
};

const std::vector<Case> kCases{{2, 7, {1}},     {2, 7, {1, 3}},  {2, 9, {1}},     {2, 15, {1, 3}},
                               {2, 15, {0, 3}}, {2, 21, {3, 9}}, {3, 8, {1, 2}},  {3, 13, {1}},
                               {3, 22, {2}},    {4, 15, {1, 2}}, {4, 15, {1, 7}}, {4, 13, {1}},
                               {5, 12, {1, 7}}, {8, 21, {7}},    {9, 10, {1, 3}}, {2, 17, {1}}};

}  // namespace

TEST(Generators, ActOnCoordinates) {
  const auto code = make(2, 7, {1, 3});
  const Word c = code.codeword(5);
  const Word r = apply_generator(code, ActionGenerator::shift(), c);
  for (size_t i = 0; i < 7; ++i) EXPECT_EQ(r[(i + 1) % 7], c[i]);
  const Word m = apply_generator(code, ActionGenerator::multiplier(3), c);
  for (size_t i = 0; i < 7; ++i) EXPECT_EQ(m[(3 * i) % 7], c[i]);
  EXPECT_THROW(apply_generator(make(2, 9, {1}), ActionGenerator::multiplier(3), code.codeword(1)),
               PreconditionError);
}

TEST(Generators, Preservation) {
  const auto c1 = make(2, 7, {1});
  EXPECT_TRUE(preserves_code(c1, ActionGenerator::multiplier(2)));
  EXPECT_TRUE(preserves_code(c1, ActionGenerator::shift()));
  EXPECT_TRUE(preserves_code(c1, ActionGenerator::scalar()));
  EXPECT_FALSE(preserves_code(c1, ActionGenerator::multiplier(-1)));
  EXPECT_TRUE(preserves_code(make(2, 7, {1, 3}), ActionGenerator::multiplier(-1)));
  EXPECT_THROW(orbit_count(c1, {ActionGenerator::multiplier(-1)}), PreconditionError);
}

TEST(Group, KnownOrders) {
  const auto a = make(2, 9, {1});
  EXPECT_EQ(group_order(a, preset(a, GroupKind::MuQ)), 54u);
  const auto b = make(2, 21, {3, 9});
  EXPECT_EQ(group_order(b, preset(b, GroupKind::MuNegQ)), 252u);
  const auto c = make(4, 15, {1, 2});
  EXPECT_EQ(group_order(c, preset(c, GroupKind::RhoSigma)), 45u);
}

TEST(Group, ElementsAreDistinctMaps) {
  for (const auto& cs : kCases) {
    const auto code = make(cs.q, cs.n, cs.reps);
    const auto gens = auto_group(code).gens;
    std::set<std::pair<std::vector<uint64_t>, uint64_t>> maps;
    for (const auto& g : enumerate_group(code, gens)) {
      std::vector<uint64_t> perm(code.n());
      for (uint64_t i = 0; i < code.n(); ++i) perm[i] = g.b * ((i + g.r) % code.n()) % code.n();
      maps.insert({perm, g.s});
    }
    EXPECT_EQ(maps.size(), group_order(code, gens));
  }
}

TEST(Orbits, TrivialRepetitionCode) {
  const auto code = make(2, 7, {0});
  const auto p = orbit_count(code, {ActionGenerator::shift(), ActionGenerator::scalar()});
  EXPECT_EQ(p.count(), 1u);
  EXPECT_EQ(p.orbits[0].weight, 7u);
}

TEST(Orbits, ClosureMatchesNaiveSets) {
  for (const auto& cs : kCases) {
    const auto code = make(cs.q, cs.n, cs.reps);
    if (code.size() > 4096) continue;
    for (GroupKind k : {GroupKind::RhoSigma, GroupKind::MuQ}) {
      const auto gens = preset(code, k);
      const auto part = orbit_count(code, gens);
      const auto naive = naive_orbits(code, gens);
      ASSERT_EQ(part.count(), naive.size());
      std::set<Word> reps;
      for (const auto& o : naive) reps.insert(*o.begin());  // set order = lexicographic
      size_t i = 0;
      for (const auto& r : reps) {
        EXPECT_EQ(part.orbits[i].rep, r);
        ++i;
      }
    }
  }
}

TEST(Orbits, BurnsideScanRankClosureAgree) {
  for (const auto& cs : kCases) {
    const auto code = make(cs.q, cs.n, cs.reps);
    std::vector<std::vector<ActionGenerator>> groups{preset(code, GroupKind::RhoSigma),
                                                     preset(code, GroupKind::MuQ),
                                                     auto_group(code).gens};
    for (const auto& gens : groups) {
      const uint64_t closure = orbit_count(code, gens).count();
      EXPECT_EQ(burnside_count(code, gens, FixMode::Scan), closure);
      EXPECT_EQ(burnside_count(code, gens, FixMode::Rank), closure);
      EXPECT_EQ(burnside_count(code, gens, FixMode::Scan, 3), closure);
    }
  }
}

TEST(Orbits, FixedPointModesAgreePerElement) {
  const auto code = make(4, 15, {1, 2});
  const auto gens = auto_group(code).gens;
  for (const auto& g : enumerate_group(code, gens)) {
    EXPECT_EQ(fixed_nonzero(code, g, FixMode::Scan), fixed_nonzero(code, g, FixMode::Rank));
  }
}

TEST(Orbits, PartitionInvariants) {
  for (const auto& cs : kCases) {
    const auto code = make(cs.q, cs.n, cs.reps);
    const auto gens = auto_group(code).gens;
    const uint64_t order = group_order(code, gens);
    const auto part = orbit_count(code, gens);
    uint64_t sum = 0;
    for (const auto& o : part.orbits) {
      sum += o.size;
      EXPECT_EQ(order % o.size, 0u);
      EXPECT_EQ(hamming_weight(o.rep), o.weight);
      EXPECT_TRUE(code.contains(o.rep));
    }
    EXPECT_EQ(sum, code.size() - 1);
    for (size_t i = 1; i < part.orbits.size(); ++i) EXPECT_LT(part.orbits[i - 1].rep, part.orbits[i].rep);
  }
}

TEST(Orbits, WeightsNeverExceedOrbits) {
  for (const auto& cs : kCases) {
    const auto code = make(cs.q, cs.n, cs.reps);
    const uint64_t l = num_nonzero_weights(weight_distribution(code, 1));
    for (GroupKind k : {GroupKind::RhoSigma, GroupKind::MuQ}) {
      EXPECT_LE(l, orbit_count(code, preset(code, k)).count());
    }
    EXPECT_LE(l, orbit_count(code, auto_group(code).gens).count());
  }
}

TEST(Orbits, LargerGroupsNeverHaveMoreOrbits) {
  for (const auto& cs : kCases) {
    const auto code = make(cs.q, cs.n, cs.reps);
    const uint64_t rs = orbit_count(code, preset(code, GroupKind::RhoSigma)).count();
    const uint64_t mq = orbit_count(code, preset(code, GroupKind::MuQ)).count();
    EXPECT_LE(mq, rs);
    auto big = preset(code, GroupKind::MuQ);
    for (const auto& g : preset(code, GroupKind::MuNegQ)) big.push_back(g);
    bool ok = true;
    for (const auto& g : big) ok = ok && preserves_code(code, g);
    if (ok) EXPECT_LE(orbit_count(code, big).count(), mq);
  }
}

TEST(Orbits, TwoWeightCodeHasOneOrbitPerWeight) {
  const auto code = make(8, 21, {7});
  const auto part = orbit_count(code, preset(code, GroupKind::MuQ));
  EXPECT_EQ(part.count(), 2u);
  EXPECT_TRUE(same_weight_same_orbit(code, part));
  const auto c2 = make(4, 15, {1, 2});
  EXPECT_FALSE(same_weight_same_orbit(c2, orbit_count(c2, preset(c2, GroupKind::MuPe2, 0))));
}

TEST(AutoGroup, PicksLargestPreservingPreset) {
  // -1 lies in <2> mod 9, so mu_{-2} is admissible but generates the same group as mu_2.
  const auto c9 = make(2, 9, {1});
  const auto a = auto_group(c9);
  EXPECT_EQ(a.kind, GroupKind::MuNegQ);
  EXPECT_EQ(group_order(c9, a.gens), group_order(c9, preset(c9, GroupKind::MuQ)));
  EXPECT_EQ(auto_group(make(2, 21, {1})).kind, GroupKind::MuQ);
  EXPECT_EQ(auto_group(make(2, 7, {1, 3})).kind, GroupKind::MuNegQ);
  const auto g = auto_group(make(4, 15, {1, 2}));
  EXPECT_EQ(g.kind, GroupKind::MuPe2);
  EXPECT_EQ(g.l0, 0);
  const auto h = auto_group(make(4, 15, {1, 7}));
  EXPECT_EQ(h.kind, GroupKind::MuPe2);
  EXPECT_EQ(h.l0, 1);
}

TEST(Orbits, JsonShape) {
  const auto code = make(2, 7, {0});
  const auto p = orbit_count(code, {ActionGenerator::shift()});
  EXPECT_EQ(p.to_json(), R"({"count":1,"sizes":[1],"orbits":[{"rep":"01010101010101","size":1,"weight":7}]})");
}

TEST(Orbits, CapIsEnforced) {
  const auto code = make(2, 63, {1, 3, 5, 7});
  EXPECT_THROW(orbit_count(code, {ActionGenerator::shift()}, 1000), CapExceeded);
}
