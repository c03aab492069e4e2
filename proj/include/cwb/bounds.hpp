#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cwb/code.hpp"

namespace cwb {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

struct NotApplicable {
  std::string reason;
};

// An orbit count / bound, or the failed hypothesis.
using BoundValue = std::variant<BigInt, NotApplicable>;

inline bool applicable(const BoundValue& v) { return std::holds_alternative<BigInt>(v); }
inline const BigInt& value_of(const BoundValue& v) { return std::get<BigInt>(v); }
std::string to_string(const BoundValue& v);

// Orbits of <mu_q, rho, sigma> on an irreducible code (coset of i, size k): divisor/totient form.
BoundValue thm31_irreducible(uint64_t q, uint64_t n, uint64_t i, uint64_t k);
// Same quantity via the literal sum over r = 0..m-1.
BoundValue thm31_literal(uint64_t q, uint64_t n, uint64_t i, uint64_t k);

// Orbits of <rho, sigma> on an irreducible code.
BoundValue rho_sigma_irreducible(uint64_t q, uint64_t n, uint64_t i, uint64_t k);

// Closed-form test for thm31 < rho_sigma_irreducible: k > 1 and
// gcd(q-1, (q^k-1)/(q-1), i(q^k-1)/n) < gcd((q^k-1)/(q-1), i(q^k-1)/n).
bool mu_q_strictly_fewer(uint64_t q, uint64_t n, uint64_t i, uint64_t k);

// Per-subset term of the general multi-coset bound; reps index a subset of the code's cosets.
BigRational thm32_subset_term(uint64_t q, uint64_t n, const std::vector<uint64_t>& reps);
// Sum over all nonempty subsets; at most 12 cosets.
BoundValue thm32_general(uint64_t q, uint64_t n, const std::vector<uint64_t>& reps);

// Two cosets with k1 | k2: exact orbit count under <mu_q, rho, sigma>.
BoundValue thm33_two_cosets(uint64_t q, uint64_t n, uint64_t i1, uint64_t k1, uint64_t i2,
                            uint64_t k2);
// k1 = 1, k2 = k.
BoundValue cor33(uint64_t q, uint64_t n, uint64_t i1, uint64_t i2, uint64_t k);
// k1 = k2 = k.
BoundValue cor34(uint64_t q, uint64_t n, uint64_t i1, uint64_t i2, uint64_t k);

// Code Gamma_i + (-Gamma_i), -1 in <-q>: orbits of <mu_{-q}, rho, sigma>.
BoundValue thm34(uint64_t q, uint64_t n, uint64_t i, uint64_t k);
// Code Gamma_i + (-Gamma_i), -1 not in <-q>: orbits of <mu_{-1}, mu_{-q}, rho, sigma>.
BoundValue thm35(uint64_t q, uint64_t n, uint64_t i, uint64_t k);
// q = p^e, e even, a = (-1)^l0 p^{e/2}: code Gamma_i + a^{-1} Gamma_i, orbits of <mu_a, rho, sigma>.
BoundValue thm36(const PrimePower& pp, uint64_t n, uint64_t i, uint64_t k, int l0);

// <rho, sigma> orbit count with the baseline's fixed-point miscount, per subset and summed.
BigRational cz_published_subset_term(uint64_t q, uint64_t n, const std::vector<uint64_t>& reps);
BoundValue cz_published(uint64_t q, uint64_t n, const std::vector<uint64_t>& reps);
// Exact <rho, sigma> orbit count, per subset and summed.
BigRational cz_corrected_subset_term(uint64_t q, uint64_t n, const std::vector<uint64_t>& reps);
BoundValue cz_corrected(uint64_t q, uint64_t n, const std::vector<uint64_t>& reps);

// Hypotheses of the two few-weight criteria for an irreducible code.
struct Cor31Witness {
  uint64_t N;
};
struct Cor32Witness {
  uint64_t k;
  uint64_t N;
};
std::optional<Cor31Witness> predicate_cor31(uint64_t q, uint64_t n, uint64_t i);
std::optional<Cor32Witness> predicate_cor32(uint64_t q, uint64_t n, uint64_t i);

inline const std::vector<std::string>& method_names() {
  static const std::vector<std::string> names{
      "thm31", "thm32", "thm33",        "cor33",        "cor34",
      "thm34", "thm35", "thm36_l0",     "cz_published", "cz_corrected",
      "rho_sigma_irreducible"};
  return names;
}

struct BoundReport {
  PrimePower pp;
  uint64_t n = 1;
  std::vector<uint64_t> reps;
  std::map<std::string, BoundValue> entries;
  std::optional<int> thm36_l0;  // which l0 the thm36_l0 entry used

  // Minimum over applicable methods, excluding cz_published. Empty if none.
  std::optional<std::pair<std::string, BigInt>> best() const;
  std::string to_json() const;
};

// Evaluates every method on the code spanned by `reps` (coset minima).
BoundReport bound_report(const PrimePower& pp, uint64_t n, const std::vector<uint64_t>& reps);

// Structured pairings detected from coset relations.
bool is_negation_pair(uint64_t q, uint64_t n, uint64_t i1, uint64_t i2);
std::optional<int> pe2_pairing(const PrimePower& pp, uint64_t n, uint64_t i1, uint64_t i2);

}  // namespace cwb
