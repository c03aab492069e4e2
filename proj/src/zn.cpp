#include "cwb/zn.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cwb/error.hpp"

namespace cwb {

bool CyclotomicCoset::contains(uint64_t x) const {
  return std::binary_search(elements.begin(), elements.end(), x % n);
}

uint64_t gcd_u(uint64_t a, uint64_t b) { return std::gcd(a, b); }

uint64_t lcm_u(uint64_t a, uint64_t b) { return a / std::gcd(a, b) * b; }

uint64_t mod_n(int64_t a, uint64_t n) {
  if (n == 0) throw PreconditionError("modulus must be positive");
  const int64_t nn = static_cast<int64_t>(n);
  int64_t r = a % nn;
  if (r < 0) r += nn;
  return static_cast<uint64_t>(r);
}

namespace {

void require_coprime(uint64_t n, uint64_t q) {
  if (n == 0) throw PreconditionError("n must be positive");
  if (std::gcd(n, q) != 1) {
    throw PreconditionError("gcd(n, q) = gcd(" + std::to_string(n) + ", " + std::to_string(q) +
                            ") != 1");
  }
}

void require_unit(int64_t a, uint64_t n) {
  if (std::gcd(mod_n(a, n), n) != 1 && n != 1) {
    throw PreconditionError(std::to_string(a) + " is not a unit mod " + std::to_string(n));
  }
}

}  // namespace

CyclotomicCoset coset_of(uint64_t i, uint64_t n, uint64_t q) {
  require_coprime(n, q);
  CyclotomicCoset c;
  c.n = n;
  c.q = q;
  const uint64_t start = i % n;
  uint64_t x = start;
  do {
    c.elements.push_back(x);
    x = static_cast<uint64_t>((static_cast<unsigned __int128>(x) * q) % n);
  } while (x != start);
  std::sort(c.elements.begin(), c.elements.end());
  c.rep = c.elements.front();
  return c;
}

std::vector<CyclotomicCoset> cyclotomic_cosets(uint64_t n, uint64_t q) {
  require_coprime(n, q);
  std::vector<CyclotomicCoset> out;
  std::vector<bool> seen(n, false);
  for (uint64_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    out.push_back(coset_of(i, n, q));
    for (uint64_t x : out.back().elements) seen[x] = true;
  }
  return out;
}

uint64_t mult_order(int64_t a, uint64_t n) {
  require_unit(a, n);
  if (n == 1) return 1;
  const uint64_t base = mod_n(a, n);
  uint64_t x = base;
  uint64_t k = 1;
  while (x != 1) {
    x = static_cast<uint64_t>((static_cast<unsigned __int128>(x) * base) % n);
    ++k;
  }
  return k;
}

uint64_t inverse_mod(int64_t a, uint64_t n) {
  require_unit(a, n);
  if (n == 1) return 0;
  const uint64_t base = mod_n(a, n);
  uint64_t x = 1;
  for (uint64_t k = 1; k < mult_order(a, n); ++k) {
    x = static_cast<uint64_t>((static_cast<unsigned __int128>(x) * base) % n);
  }
  return x;
}

bool in_cyclic_subgroup(int64_t x, int64_t g, uint64_t n) {
  require_unit(x, n);
  require_unit(g, n);
  const uint64_t target = mod_n(x, n);
  const uint64_t base = mod_n(g, n);
  uint64_t y = 1 % n;
  do {
    if (y == target) return true;
    y = static_cast<uint64_t>((static_cast<unsigned __int128>(y) * base) % n);
  } while (y != 1 % n);
  return false;
}

uint64_t euler_phi(uint64_t b) {
  if (b == 0) throw PreconditionError("euler_phi(0)");
  uint64_t r = b;
  for (uint64_t d = 2; d * d <= b; ++d) {
    if (b % d == 0) {
      r -= r / d;
      while (b % d == 0) b /= d;
    }
  }
  if (b > 1) r -= r / b;
  return r;
}

std::vector<uint64_t> divisors(uint64_t k) {
  if (k == 0) throw PreconditionError("divisors(0)");
  std::vector<uint64_t> lo, hi;
  for (uint64_t d = 1; d * d <= k; ++d) {
    if (k % d == 0) {
      lo.push_back(d);
      if (d != k / d) hi.push_back(k / d);
    }
  }
  lo.insert(lo.end(), hi.rbegin(), hi.rend());
  return lo;
}

CyclotomicCoset coset_image_under_multiplier(int64_t a, const CyclotomicCoset& coset) {
  const uint64_t n = coset.n;
  const uint64_t ainv = inverse_mod(a, n);
  const uint64_t img = static_cast<uint64_t>((static_cast<unsigned __int128>(ainv) * coset.rep) % n);
  return coset_of(img, n, coset.q);
}

UnitGroupFacts unit_group_facts(uint64_t p, uint64_t e, uint64_t n) {
  UnitGroupFacts f;
  uint64_t q = 1;
  for (uint64_t i = 0; i < e; ++i) q *= p;
  require_coprime(n, q);
  f.n = n;
  f.q = q;
  const int64_t qs = static_cast<int64_t>(q % n);
  f.m = mult_order(qs, n);
  f.m_neg = mult_order(-qs, n);
  f.contains_minus_one_in_neg_q = in_cyclic_subgroup(-1, -qs, n);
  if (e % 2 == 0) {
    uint64_t h = 1;
    for (uint64_t i = 0; i < e / 2; ++i) h = h * p % n;
    const int64_t hs = static_cast<int64_t>(h);
    f.m_l0[0] = mult_order(hs, n);
    f.m_l0[1] = mult_order(-hs, n);
  }
  return f;
}

}  // namespace cwb
