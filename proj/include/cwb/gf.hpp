#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

namespace cwb {

// q = p^e with p prime.
struct PrimePower {
  uint32_t p = 2;
  uint32_t e = 1;
  uint64_t q = 2;

  PrimePower() = default;
  PrimePower(uint32_t p, uint32_t e);

  // Factor q as p^e; throws PreconditionError if q is not a prime power.
  static PrimePower from_order(uint64_t q);
};

bool is_prime(uint64_t x);

// Field element: index of the polynomial-basis representation read as a base-p integer.
// 0 is the additive zero, 1 the multiplicative one, 0..p-1 the prime subfield.
using Elem = uint32_t;

// Coefficients lowest degree first. Over GF(p) the coefficients are plain residues.
using Poly = std::vector<Elem>;

inline constexpr uint64_t kFieldTableCap = uint64_t{1} << 24;

class FieldTable {
 public:
  // Builds GF(p^deg(modulus)). The modulus must be monic and irreducible over GF(p).
  FieldTable(uint32_t p, Poly modulus);

  uint32_t characteristic() const { return p_; }
  uint32_t degree() const { return deg_; }  // over GF(p)
  uint32_t order() const { return order_; }
  const Poly& modulus() const { return modulus_; }
  Elem primitive() const { return theta_; }

  Elem add(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    uint64_t s = uint64_t{log_[a]} + log_[b];
    return exp_[s >= order_ - 1 ? s - (order_ - 1) : s];
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, uint64_t k) const;

  // Discrete log to base theta; a must be nonzero.
  uint32_t log(Elem a) const;
  // theta^k
  Elem antilog(uint64_t k) const { return exp_[k % (order_ - 1)]; }

 private:
  uint32_t p_;
  uint32_t deg_;
  uint32_t order_;
  Poly modulus_;
  Elem theta_ = 1;
  std::vector<Elem> exp_;
  std::vector<uint32_t> log_;
  std::vector<uint32_t> zech_;  // odd p only: log(1 + theta^k), kNoLog if zero
};

// Smallest monic irreducible of degree d over GF(p), ordered by the base-p value of its
// coefficient vector.
Poly find_irreducible(const PrimePower& pp, uint32_t d);

// GF(p^{e*m}) built directly over GF(p).
FieldTable build_field(const PrimePower& pp, uint32_t m);
// Memoized build_field, keyed by (p, e*m); safe to call from several threads.
std::shared_ptr<const FieldTable> shared_field(const PrimePower& pp, uint32_t m);

// theta^{(|F|-1)/n}
Elem nth_root_of_unity(const FieldTable& f, uint64_t n);

// Subfield of order q_sub: index 0 -> 0, index j >= 1 -> beta^{j-1} with
// beta = theta^{(|F|-1)/(q_sub-1)}.
std::vector<Elem> subfield_embed(const FieldTable& big, uint64_t q_sub);

// Ring isomorphism from `small` onto the subfield of `big` of the same order, given as the
// image of every element of `small`. Sends the class of x to the smallest root of small's
// modulus in `big`.
std::vector<Elem> subfield_isomorphism(const FieldTable& small, const FieldTable& big);

// Polynomial helpers over a FieldTable.
void poly_trim(Poly& a);
Poly poly_mul(const FieldTable& f, const Poly& a, const Poly& b);
// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> poly_divmod(const FieldTable& f, const Poly& a, const Poly& b);
Elem poly_eval(const FieldTable& f, const Poly& a, Elem x);

}  // namespace cwb
