#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cwb/gf.hpp"
#include "cwb/zn.hpp"

namespace cwb {

// Codeword coordinates are GF(q) element indices (q <= 256).
using Word = std::vector<uint8_t>;

inline constexpr uint64_t kWeightEnumCap = uint64_t{1} << 26;

// Cap override from the CWB_CAP environment variable, if set.
uint64_t cap_from_env(uint64_t fallback);

struct CodeSpec {
  PrimePower pp;
  uint64_t n = 1;
  std::vector<uint64_t> reps;  // coset representatives (coset minima), distinct

  uint64_t q() const { return pp.q; }
};

// Throws PreconditionError on gcd(n,q) != 1, empty/duplicate reps or reps that are not coset minima.
void validate_spec(const CodeSpec& spec);

// GF(q), a splitting field GF(q^L) holding the needed roots of unity, and the embedding between
// them. L is the lcm of the coset sizes. zeta is a virtual primitive n-th root: only powers
// zeta^j with d | j are materialized, d = gcd(n, reps).
class SplittingContext {
 public:
  SplittingContext(const PrimePower& pp, uint64_t n, const std::vector<uint64_t>& reps);

  const FieldTable& base() const { return *base_; }
  const FieldTable& ext() const { return *ext_; }
  uint64_t n() const { return n_; }
  uint64_t q() const { return pp_.q; }
  const PrimePower& prime_power() const { return pp_; }

  // zeta^j; throws PreconditionError if d does not divide j mod n.
  Elem zeta_pow(int64_t j) const;
  Elem to_ext(uint8_t a) const { return embed_[a]; }
  // Inverse embedding; throws BugTrap if x lies outside GF(q).
  uint8_t to_base(Elem x) const;

  // Dense GF(q) tables.
  uint8_t add(uint8_t a, uint8_t b) const { return add_[a * qi_ + b]; }
  uint8_t mul(uint8_t a, uint8_t b) const { return mul_[a * qi_ + b]; }
  uint8_t neg(uint8_t a) const { return neg_[a]; }
  const uint8_t* mul_row(uint8_t a) const { return &mul_[a * qi_]; }
  const uint8_t* add_row(uint8_t a) const { return &add_[a * qi_]; }
  // Distinguished generator of GF(q)^*.
  uint8_t xi() const { return static_cast<uint8_t>(base_->primitive()); }

 private:
  PrimePower pp_;
  uint64_t n_;
  uint64_t d_;
  std::shared_ptr<const FieldTable> base_;
  std::shared_ptr<const FieldTable> ext_;
  Elem zeta_;
  uint64_t n_eff_;
  uint32_t qi_;
  std::vector<Elem> embed_;
  std::vector<std::pair<Elem, uint8_t>> unembed_;
  std::vector<uint8_t> add_, mul_, neg_;
};

class CyclicCode {
 public:
  explicit CyclicCode(const CodeSpec& spec);

  const CodeSpec& spec() const { return spec_; }
  const SplittingContext& ctx() const { return *ctx_; }
  uint64_t n() const { return spec_.n; }
  uint64_t q() const { return spec_.pp.q; }
  uint32_t k() const { return k_; }
  const std::vector<CyclotomicCoset>& cosets() const { return cosets_; }

  const Poly& generator() const { return g_; }  // over GF(q), deg n-k
  const Poly& check() const { return h_; }      // over GF(q), deg k
  const std::vector<Word>& generator_matrix() const { return rows_; }
  // Basis whose top k coordinates form the identity; codeword(index) uses it.
  const std::vector<Word>& systematic_basis() const { return sys_; }

  bool contains(const Word& w) const;
  Word encode(const std::vector<uint8_t>& msg) const;
  // Bijection C -> [0, q^k): top k coordinates read as base-q digits.
  uint64_t index_of(const uint8_t* w) const;
  Word codeword(uint64_t index) const;
  uint64_t size() const;  // q^k

 private:
  CodeSpec spec_;
  std::shared_ptr<const SplittingContext> ctx_;
  std::vector<CyclotomicCoset> cosets_;
  uint32_t k_ = 0;
  Poly g_, h_;
  std::vector<Word> rows_, sys_;
};

CyclicCode build_code(const CodeSpec& spec);

// Minimal polynomial over GF(q) of zeta^{rep}, coefficients as GF(q) indices.
Poly minimal_polynomial(const SplittingContext& ctx, const CyclotomicCoset& coset);

// eps_t with coefficient_j = (1/n) sum_{i in coset} zeta^{-ij}.
Word primitive_idempotent(const SplittingContext& ctx, const CyclotomicCoset& coset);

// a * b mod x^n - 1 over GF(q).
Word ring_mul(const SplittingContext& ctx, const Word& a, const Word& b);

struct WeightDistribution {
  uint64_t n = 0;
  std::vector<uint64_t> counts;  // counts[w] = A_w, size n+1

  uint64_t total() const;
  std::string to_csv() const;
  std::string to_json() const;
  std::string to_polynomial() const;  // 1+9x^2+...
};

// Exhaustive enumeration of all q^k codewords. Throws CapExceeded above `cap`.
WeightDistribution weight_distribution(const CyclicCode& code, unsigned threads = 0,
                                       uint64_t cap = kWeightEnumCap);

uint64_t num_nonzero_weights(const WeightDistribution& dist);

uint32_t hamming_weight(const Word& w);

}  // namespace cwb
