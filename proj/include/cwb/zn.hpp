#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace cwb {

// A q-cyclotomic coset modulo n; rep is its smallest element.
struct CyclotomicCoset {
  uint64_t n = 1;
  uint64_t q = 2;
  uint64_t rep = 0;
  std::vector<uint64_t> elements;  // sorted

  uint64_t size() const { return elements.size(); }
  bool contains(uint64_t x) const;
  bool operator==(const CyclotomicCoset& o) const {
    return n == o.n && q == o.q && elements == o.elements;
  }
};

uint64_t gcd_u(uint64_t a, uint64_t b);
uint64_t lcm_u(uint64_t a, uint64_t b);

// Residue of a (possibly negative) integer in 0..n-1.
uint64_t mod_n(int64_t a, uint64_t n);

// All cosets sorted by representative. Throws PreconditionError if gcd(n,q) != 1.
std::vector<CyclotomicCoset> cyclotomic_cosets(uint64_t n, uint64_t q);

// The coset containing i.
CyclotomicCoset coset_of(uint64_t i, uint64_t n, uint64_t q);

// Least k >= 1 with a^k = 1 mod n; a may be negative.
uint64_t mult_order(int64_t a, uint64_t n);

// Inverse of a unit mod n.
uint64_t inverse_mod(int64_t a, uint64_t n);

// x in <g> inside Z_n^*.
bool in_cyclic_subgroup(int64_t x, int64_t g, uint64_t n);

uint64_t euler_phi(uint64_t b);
std::vector<uint64_t> divisors(uint64_t k);

// The coset holding a^{-1} * rep: nonzeros of mu_a applied to the minimal ideal of `coset`.
CyclotomicCoset coset_image_under_multiplier(int64_t a, const CyclotomicCoset& coset);

struct UnitGroupFacts {
  uint64_t n = 1;
  uint64_t q = 2;
  uint64_t m = 1;       // ord_n(q)
  uint64_t m_neg = 1;   // ord_n(-q)
  bool contains_minus_one_in_neg_q = false;
  // For even e: ord_n((-1)^{l0} p^{e/2}), l0 = 0, 1.
  std::optional<uint64_t> m_l0[2];
};

UnitGroupFacts unit_group_facts(uint64_t p, uint64_t e, uint64_t n);

}  // namespace cwb
