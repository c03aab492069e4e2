#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cwb/code.hpp"

namespace cwb {

inline constexpr uint64_t kOrbitCap = uint64_t{1} << 22;

struct ActionGenerator {
  enum class Kind { Shift, Scalar, Multiplier };
  Kind kind = Kind::Shift;
  int64_t a = 1;  // multiplier only

  static ActionGenerator shift() { return {Kind::Shift, 1}; }
  static ActionGenerator scalar() { return {Kind::Scalar, 1}; }
  static ActionGenerator multiplier(int64_t a) { return {Kind::Multiplier, a}; }
  std::string name() const;  // "rho", "sigma", "mu(a)"
};

// rho: i -> i+1; sigma: scale by xi; mu_a: coefficient at i moves to a*i mod n.
Word apply_generator(const CyclicCode& code, const ActionGenerator& g, const Word& c);

// True iff g maps every generator-matrix row back into the code.
bool preserves_code(const CyclicCode& code, const ActionGenerator& g);

struct Orbit {
  Word rep;  // lexicographically smallest member
  uint64_t size = 0;
  uint32_t weight = 0;
};

struct OrbitPartition {
  std::vector<Orbit> orbits;  // sorted by representative

  uint64_t count() const { return orbits.size(); }
  std::vector<uint64_t> sizes() const;  // ascending
  std::string to_json() const;
};

// Orbits of <gens> on C \ {0} by breadth-first closure.
OrbitPartition orbit_count(const CyclicCode& code, const std::vector<ActionGenerator>& gens,
                           uint64_t cap = kOrbitCap);

// One element mu_b rho^r sigma^s of a group generated by multipliers, rho and sigma.
struct GroupElement {
  uint64_t b = 1;
  uint64_t r = 0;
  uint64_t s = 0;
};

// Every element of <gens>, each exactly once, as mu_b rho^r sigma^s with b ranging over the
// subgroup of Z_n^* generated by the multipliers (built from exponent tuples).
std::vector<GroupElement> enumerate_group(const CyclicCode& code,
                                          const std::vector<ActionGenerator>& gens);

enum class FixMode { Auto, Scan, Rank };

// Number of nonzero codewords fixed by g. Scan tests every codeword; Rank uses the dimension of
// the fixed subspace, q^{k - rank(g - id)} - 1.
uint64_t fixed_nonzero(const CyclicCode& code, const GroupElement& g, FixMode mode);

// (1/|G|) sum_g |Fix(g)|; throws BugTrap if the average is not an integer.
uint64_t burnside_count(const CyclicCode& code, const std::vector<ActionGenerator>& gens,
                        FixMode mode = FixMode::Auto, unsigned threads = 1);

// Each nonzero weight is carried by exactly one orbit.
bool same_weight_same_orbit(const CyclicCode& code, const OrbitPartition& partition);

enum class GroupKind { RhoSigma, MuQ, MuNegQ, MuPe2 };

std::string group_kind_name(GroupKind k);

// Generators of the preset groups: <rho,sigma>, <mu_q,rho,sigma>, <mu_{-q},rho,sigma> (plus
// mu_{-1} when -1 is not in <-q>), <mu_{(-1)^l0 p^{e/2}},rho,sigma>.
std::vector<ActionGenerator> group_generators(GroupKind kind, const PrimePower& pp, uint64_t n,
                                              int l0 = 0);

uint64_t group_order(const CyclicCode& code, const std::vector<ActionGenerator>& gens);

struct GroupChoice {
  GroupKind kind;
  int l0 = 0;
  std::vector<ActionGenerator> gens;
};

// Largest preset group whose generators preserve the code.
GroupChoice auto_group(const CyclicCode& code);

}  // namespace cwb
