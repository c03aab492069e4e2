#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cwb/bounds.hpp"
#include "cwb/code.hpp"
#include "cwb/orbit.hpp"

namespace cwb {

struct SearchConfig {
  std::vector<uint64_t> qs{2};
  uint64_t n_min = 1;
  uint64_t n_max = 63;
  int max_cosets = 1;              // 1 or 2
  std::optional<uint64_t> tau;     // keep records with best bound <= tau; none = keep all
  bool verify = false;             // enumerate weights when q^k <= cap
  bool orbit_check = false;        // also count orbits under the best method's group
  uint64_t cap = uint64_t{1} << 20;
  unsigned threads = 1;
};

struct Verification {
  uint64_t l = 0;
  WeightDistribution dist;
  std::optional<uint64_t> orbit_count;
  std::string group;
  bool tight = false;  // l == best bound
};

struct SearchRecord {
  uint64_t q = 0;
  uint64_t n = 0;
  std::vector<uint64_t> reps;
  uint64_t dim = 0;
  BoundReport report;
  std::optional<std::pair<std::string, BigInt>> best;
  std::vector<std::string> notes;
  std::optional<Verification> verified;

  std::string to_json() const;
  std::string to_csv_row() const;
};

inline const char* kSearchCsvHeader = "q,n,cosets,dim,best_bound,method,l,tight";

struct SkipEntry {
  uint64_t q = 0;
  uint64_t n = 0;
  std::vector<uint64_t> reps;
  std::string code;    // machine-readable reason code
  std::string detail;

  std::string to_json() const;
};

// Group whose orbit count the method evaluates or bounds.
GroupChoice group_for_method(const std::string& method, const PrimePower& pp, uint64_t n,
                             std::optional<int> l0);

// Candidate coset sets for one (q, n): singletons and, for max_cosets = 2, structured pairs
// (k1 | k2, negation pairs, (-1)^l0 p^(e/2) pairs), in lexicographic order.
std::vector<std::vector<uint64_t>> candidate_subsets(const PrimePower& pp, uint64_t n,
                                                     int max_cosets);

SearchRecord evaluate_record(const PrimePower& pp, uint64_t n, const std::vector<uint64_t>& reps);

// Fills the oracle fields; marks the record unverified when q^k > cap.
void verify_record(SearchRecord& rec, uint64_t cap, bool orbit_check, unsigned threads = 1);

// Deterministic sweep: q ascending, n ascending, subsets lexicographic. Records are delivered in
// that order whatever the thread count.
void run_search(const SearchConfig& cfg, const std::function<void(const SearchRecord&)>& on_record,
                const std::function<void(const SkipEntry&)>& on_skip);

}  // namespace cwb
