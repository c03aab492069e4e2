#include <gtest/gtest.h>

#include <random>
#include <set>

#include "cwb/error.hpp"
#include "cwb/gf.hpp"

using namespace cwb;

namespace {

// Schoolbook product of two elements (base-p digit vectors) reduced by the modulus.
Elem naive_mul(const FieldTable& f, Elem a, Elem b) {
  const uint32_t p = f.characteristic(), d = f.degree();
  std::vector<uint64_t> x(d), y(d), z(2 * d, 0);
  for (uint32_t i = 0; i < d; ++i, a /= p, b /= p) {
    x[i] = a % p;
    y[i] = b % p;
  }
  for (uint32_t i = 0; i < d; ++i)
    for (uint32_t j = 0; j < d; ++j) z[i + j] = (z[i + j] + x[i] * y[j]) % p;
  const Poly& m = f.modulus();
  for (uint32_t t = 2 * d - 1; t >= d && t < 2 * d; --t) {
    const uint64_t c = z[t];
    if (!c) continue;
    for (uint32_t i = 0; i <= d; ++i) z[t - d + i] = (z[t - d + i] + (p - c) * m[i]) % p;
  }
  Elem r = 0;
  for (uint32_t i = d; i-- > 0;) r = r * p + static_cast<Elem>(z[i]);
  return r;
}

Elem naive_add(const FieldTable& f, Elem a, Elem b) {
  const uint32_t p = f.characteristic();
  Elem r = 0, w = 1;
  for (uint32_t i = 0; i < f.degree(); ++i, a /= p, b /= p, w *= p) r += ((a % p + b % p) % p) * w;
  return r;
}

const std::vector<std::pair<uint32_t, uint32_t>> kFields{{2, 1}, {2, 3}, {2, 8}, {3, 1}, {3, 4},
                                                         {5, 2}, {7, 1}, {2, 12}, {13, 2}};

}  // namespace

TEST(PrimePower, FactorsOrders) {
  const auto a = PrimePower::from_order(4);
  EXPECT_EQ(a.p, 2u);
  EXPECT_EQ(a.e, 2u);
  const auto b = PrimePower::from_order(243);
  EXPECT_EQ(b.p, 3u);
  EXPECT_EQ(b.e, 5u);
  EXPECT_THROW(PrimePower::from_order(6), PreconditionError);
  EXPECT_THROW(PrimePower::from_order(1), PreconditionError);
  EXPECT_THROW(PrimePower::from_order(0), PreconditionError);
}

TEST(FindIrreducible, SmallestByValue) {
  EXPECT_EQ(find_irreducible(PrimePower(2, 1), 3), (Poly{1, 1, 0, 1}));  // x^3+x+1
  EXPECT_EQ(find_irreducible(PrimePower(3, 1), 2), (Poly{1, 0, 1}));     // x^2+1
  EXPECT_EQ(find_irreducible(PrimePower(2, 1), 2), (Poly{1, 1, 1}));
  EXPECT_EQ(find_irreducible(PrimePower(5, 1), 1), (Poly{0, 1}));
}

TEST(FindIrreducible, HasNoRootsAndNoFactors) {
  // Degree 4 over GF(3): no root and not a product of two quadratics, checked by brute force.
  const Poly f = find_irreducible(PrimePower(3, 1), 4);
  const FieldTable gf3(3, {0, 1});
  for (Elem x = 0; x < 3; ++x) EXPECT_NE(poly_eval(gf3, f, x), 0u);
  for (Elem a = 0; a < 9; ++a) {
    for (Elem b = 0; b < 9; ++b) {
      const Poly g{a % 3, a / 3, 1}, h{b % 3, b / 3, 1};
      EXPECT_NE(poly_mul(gf3, g, h), f);
    }
  }
}

TEST(FieldTable, MatchesSchoolbookOracle) {
  std::mt19937_64 rng(7);
  for (auto [p, d] : kFields) {
    const FieldTable f = build_field(PrimePower(p, 1), d);
    std::uniform_int_distribution<Elem> pick(0, f.order() - 1);
    for (int t = 0; t < 300; ++t) {
      const Elem a = pick(rng), b = pick(rng);
      ASSERT_EQ(f.mul(a, b), naive_mul(f, a, b)) << p << "^" << d << " " << a << "*" << b;
      ASSERT_EQ(f.add(a, b), naive_add(f, a, b)) << p << "^" << d << " " << a << "+" << b;
    }
  }
}

TEST(FieldTable, AxiomsOnRandomTriples) {
  std::mt19937_64 rng(11);
  for (auto [p, d] : kFields) {
    const FieldTable f = build_field(PrimePower(p, 1), d);
    std::uniform_int_distribution<Elem> pick(0, f.order() - 1);
    for (int t = 0; t < 1000; ++t) {
      const Elem a = pick(rng), b = pick(rng), c = pick(rng);
      ASSERT_EQ(f.add(a, f.add(b, c)), f.add(f.add(a, b), c));
      ASSERT_EQ(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
      ASSERT_EQ(f.add(a, b), f.add(b, a));
      ASSERT_EQ(f.mul(a, b), f.mul(b, a));
      ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
      ASSERT_EQ(f.add(a, f.neg(a)), 0u);
      ASSERT_EQ(f.add(a, 0), a);
      ASSERT_EQ(f.mul(a, 1), a);
      if (a) ASSERT_EQ(f.mul(a, f.inv(a)), 1u);
      if (b) ASSERT_EQ(f.mul(f.div(a, b), b), a);
    }
  }
}

TEST(FieldTable, FrobeniusIsAdditiveExhaustive) {
  for (auto [p, d] : std::vector<std::pair<uint32_t, uint32_t>>{{2, 6}, {3, 3}, {5, 2}, {2, 12}}) {
    const FieldTable f = build_field(PrimePower(p, 1), d);
    for (Elem a = 0; a < f.order(); ++a) {
      ASSERT_EQ(f.pow(a, f.order()), a);
      const Elem b = (a * 2654435761u) % f.order();
      ASSERT_EQ(f.pow(f.add(a, b), p), f.add(f.pow(a, p), f.pow(b, p)));
    }
  }
}

TEST(FieldTable, PrimitiveGeneratesEverything) {
  for (auto [p, d] : kFields) {
    const FieldTable f = build_field(PrimePower(p, 1), d);
    std::set<Elem> seen;
    for (uint32_t k = 0; k + 1 < f.order(); ++k) {
      const Elem x = f.antilog(k);
      seen.insert(x);
      ASSERT_EQ(f.log(x), k);
    }
    EXPECT_EQ(seen.size(), f.order() - 1u);
  }
}

TEST(FieldTable, PrimeSubfieldIsIntegersModP) {
  const FieldTable f = build_field(PrimePower(7, 1), 3);
  for (Elem a = 0; a < 7; ++a)
    for (Elem b = 0; b < 7; ++b) {
      EXPECT_EQ(f.add(a, b), (a + b) % 7);
      EXPECT_EQ(f.mul(a, b), (a * b) % 7);
    }
}

TEST(FieldTable, CapIsEnforced) {
  EXPECT_THROW(build_field(PrimePower(2, 1), 25), CapExceeded);
  EXPECT_NO_THROW(build_field(PrimePower(2, 1), 24));
}

TEST(FieldTable, SharedFieldIsMemoized) {
  const auto a = shared_field(PrimePower(2, 2), 3);
  const auto b = shared_field(PrimePower(2, 1), 6);
  EXPECT_EQ(a.get(), b.get());
  EXPECT_EQ(a->order(), 64u);
}

TEST(RootsOfUnity, ExactOrder) {
  const FieldTable f = build_field(PrimePower(2, 1), 6);
  for (uint64_t n : {1, 3, 7, 9, 21, 63}) {
    const Elem z = nth_root_of_unity(f, n);
    EXPECT_EQ(f.pow(z, n), 1u);
    for (uint64_t d = 1; d < n; ++d)
      if (n % d == 0) EXPECT_NE(f.pow(z, d), 1u) << n << " " << d;
  }
  EXPECT_THROW(nth_root_of_unity(f, 5), PreconditionError);
}

TEST(Subfield, EmbeddingIsClosed) {
  const FieldTable big = build_field(PrimePower(2, 1), 6);
  const auto sub = subfield_embed(big, 8);
  ASSERT_EQ(sub.size(), 8u);
  const std::set<Elem> s(sub.begin(), sub.end());
  EXPECT_EQ(s.size(), 8u);
  for (Elem a : sub)
    for (Elem b : sub) {
      EXPECT_TRUE(s.count(big.add(a, b)));
      EXPECT_TRUE(s.count(big.mul(a, b)));
    }
}

TEST(Subfield, IsomorphismIsARingMap) {
  for (auto [p, e, m] : std::vector<std::tuple<uint32_t, uint32_t, uint32_t>>{{2, 2, 3}, {3, 2, 2}, {2, 3, 2}}) {
    const FieldTable small = build_field(PrimePower(p, e), 1);
    const FieldTable big = build_field(PrimePower(p, e), m);
    const auto phi = subfield_isomorphism(small, big);
    ASSERT_EQ(phi.size(), small.order());
    EXPECT_EQ(phi[0], 0u);
    EXPECT_EQ(phi[1], 1u);
    for (Elem a = 0; a < small.order(); ++a)
      for (Elem b = 0; b < small.order(); ++b) {
        EXPECT_EQ(phi[small.add(a, b)], big.add(phi[a], phi[b]));
        EXPECT_EQ(phi[small.mul(a, b)], big.mul(phi[a], phi[b]));
      }
  }
}

TEST(Poly, DivmodReconstructs) {
  std::mt19937_64 rng(3);
  const FieldTable f = build_field(PrimePower(3, 1), 2);
  std::uniform_int_distribution<Elem> pick(0, 8);
  for (int t = 0; t < 200; ++t) {
    Poly a(1 + rng() % 12), b(1 + rng() % 6);
    for (auto& c : a) c = pick(rng);
    for (auto& c : b) c = pick(rng);
    b.back() = 1 + pick(rng) % 8;
    const auto [quo, rem] = poly_divmod(f, a, b);
    Poly back = poly_mul(f, quo, b);
    back.resize(std::max(back.size(), rem.size()), 0);
    for (size_t i = 0; i < rem.size(); ++i) back[i] = f.add(back[i], rem[i]);
    poly_trim(back);
    Poly at = a;
    poly_trim(at);
    EXPECT_EQ(back, at);
    EXPECT_LT(rem.size(), b.size());
  }
}
