#include "cwb/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <json.hpp>
#include <sstream>
#include <thread>

#include "cwb/error.hpp"

namespace cwb {

namespace {

using ojson = nlohmann::ordered_json;

ojson big_json(const BigInt& v) {
  if (v <= std::numeric_limits<int64_t>::max() && v >= std::numeric_limits<int64_t>::min())
    return static_cast<int64_t>(v);
  return v.str();
}

std::string join_reps(const std::vector<uint64_t>& reps, char sep) {
  std::string s;
  for (size_t i = 0; i < reps.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(reps[i]);
  }
  return s;
}

}  // namespace

std::string SearchRecord::to_json() const {
  ojson j;
  j["q"] = q;
  j["n"] = n;
  j["cosets"] = reps;
  j["dim"] = dim;
  ojson b = ojson::object();
  for (const auto& name : method_names()) {
    const auto& v = report.entries.at(name);
    b[name] = applicable(v) ? big_json(value_of(v)) : ojson(nullptr);
  }
  j["bounds"] = b;
  if (best) {
    j["best_bound"] = big_json(best->second);
    j["method"] = best->first;
  } else {
    j["best_bound"] = nullptr;
    j["method"] = nullptr;
  }
  if (report.thm36_l0) j["l0"] = *report.thm36_l0;
  j["notes"] = notes;
  if (verified) {
    ojson v;
    v["l"] = verified->l;
    v["weights"] = ojson::parse(verified->dist.to_json())["weights"];
    if (verified->orbit_count) {
      v["orbit_count"] = *verified->orbit_count;
      v["group"] = verified->group;
    }
    v["tight"] = verified->tight;
    j["verified"] = v;
  } else {
    j["verified"] = nullptr;
  }
  return j.dump();
}

std::string SearchRecord::to_csv_row() const {
  std::ostringstream os;
  os << q << ',' << n << ',' << join_reps(reps, ';') << ',' << dim << ',';
  if (best) os << best->second << ',' << best->first;
  else os << ',';
  os << ',';
  if (verified) os << verified->l << ',' << (verified->tight ? "true" : "false");
  else os << ',';
  return os.str();
}

std::string SkipEntry::to_json() const {
  ojson j;
  j["q"] = q;
  j["n"] = n;
  j["cosets"] = reps;
  j["skip"] = code;
  j["detail"] = detail;
  return j.dump();
}

GroupChoice group_for_method(const std::string& method, const PrimePower& pp, uint64_t n,
                             std::optional<int> l0) {
  GroupChoice g{GroupKind::MuQ, 0, {}};
  if (method == "thm34" || method == "thm35") {
    g.kind = GroupKind::MuNegQ;
  } else if (method == "thm36_l0") {
    g.kind = GroupKind::MuPe2;
    g.l0 = l0.value_or(0);
  } else if (method == "cz_corrected" || method == "cz_published" ||
             method == "rho_sigma_irreducible") {
    g.kind = GroupKind::RhoSigma;
  }
  g.gens = group_generators(g.kind, pp, n, g.l0);
  return g;
}

std::vector<std::vector<uint64_t>> candidate_subsets(const PrimePower& pp, uint64_t n,
                                                     int max_cosets) {
  const auto cosets = cyclotomic_cosets(n, pp.q);
  std::vector<std::vector<uint64_t>> out;
  for (size_t a = 0; a < cosets.size(); ++a) {
    out.push_back({cosets[a].rep});
    if (max_cosets < 2) continue;
    for (size_t b = a + 1; b < cosets.size(); ++b) {
      const uint64_t i1 = cosets[a].rep, i2 = cosets[b].rep;
      const uint64_t k1 = cosets[a].size(), k2 = cosets[b].size();
      const bool divides = k2 % k1 == 0 || k1 % k2 == 0;
      const bool structured = divides || is_negation_pair(pp.q, n, i1, i2) ||
                              (pp.e % 2 == 0 && pe2_pairing(pp, n, i1, i2).has_value());
      if (structured) out.push_back({i1, i2});
    }
  }
  return out;
}

SearchRecord evaluate_record(const PrimePower& pp, uint64_t n, const std::vector<uint64_t>& reps) {
  SearchRecord rec;
  rec.q = pp.q;
  rec.n = n;
  rec.reps = reps;
  std::sort(rec.reps.begin(), rec.reps.end());
  for (uint64_t r : rec.reps) rec.dim += coset_of(r, n, pp.q).size();
  rec.report = bound_report(pp, n, rec.reps);
  rec.best = rec.report.best();
  if (!rec.best) rec.notes.push_back("no_applicable_method");
  if (rec.reps.size() == 1) {
    if (auto w = predicate_cor31(pp.q, n, rec.reps[0]))
      rec.notes.push_back("few_weight_unit_N=" + std::to_string(w->N));
    if (auto w = predicate_cor32(pp.q, n, rec.reps[0]))
      rec.notes.push_back("few_weight_k" + std::to_string(w->k) + "_N=" + std::to_string(w->N));
  }
  return rec;
}

void verify_record(SearchRecord& rec, uint64_t cap, bool orbit_check, unsigned threads) {
  BigInt size = boost::multiprecision::pow(BigInt(rec.q), static_cast<unsigned>(rec.dim));
  if (size > cap) {
    rec.notes.push_back("unverified_cap");
    return;
  }
  const PrimePower pp = PrimePower::from_order(rec.q);
  const CyclicCode code(CodeSpec{pp, rec.n, rec.reps});
  Verification v;
  v.dist = weight_distribution(code, threads, cap);
  v.l = num_nonzero_weights(v.dist);
  v.tight = rec.best && BigInt(v.l) == rec.best->second;
  if (orbit_check && rec.best) {
    GroupChoice g = group_for_method(rec.best->first, pp, rec.n, rec.report.thm36_l0);
    v.group = group_kind_name(g.kind);
    v.orbit_count = burnside_count(code, g.gens, FixMode::Auto, threads);
  }
  rec.verified = std::move(v);
}

void run_search(const SearchConfig& cfg, const std::function<void(const SearchRecord&)>& on_record,
                const std::function<void(const SkipEntry&)>& on_skip) {
  if (cfg.max_cosets != 1 && cfg.max_cosets != 2)
    throw PreconditionError("max cosets must be 1 or 2");
  if (cfg.n_min < 1 || cfg.n_min > cfg.n_max) throw PreconditionError("empty n range");
  std::vector<uint64_t> qs = cfg.qs;
  std::sort(qs.begin(), qs.end());
  qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
  const unsigned threads = std::max(1u, cfg.threads);

  for (uint64_t q : qs) {
    const PrimePower pp = PrimePower::from_order(q);
    for (uint64_t n = cfg.n_min; n <= cfg.n_max; ++n) {
      if (gcd_u(n, q) != 1) {
        if (on_skip) on_skip({q, n, {}, "gcd_not_one", "gcd(n, q) != 1"});
        continue;
      }
      const auto subsets = candidate_subsets(pp, n, cfg.max_cosets);
      std::vector<SearchRecord> recs(subsets.size());
      std::vector<std::exception_ptr> errs(subsets.size());
      std::atomic<size_t> next{0};
      auto work = [&] {
        for (size_t t; (t = next.fetch_add(1)) < subsets.size();) {
          try {
            recs[t] = evaluate_record(pp, n, subsets[t]);
            if (cfg.verify) verify_record(recs[t], cfg.cap, cfg.orbit_check, 1);
          } catch (...) {
            errs[t] = std::current_exception();
          }
        }
      };
      if (threads == 1 || subsets.size() < 2) {
        work();
      } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < std::min<size_t>(threads, subsets.size()); ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
      }
      for (size_t t = 0; t < subsets.size(); ++t) {
        if (errs[t]) {
          try {
            std::rethrow_exception(errs[t]);
          } catch (const BugTrap&) {
            throw;
          } catch (const std::exception& e) {
            if (on_skip) on_skip({q, n, subsets[t], "error", e.what()});
            continue;
          }
        }
        const auto& r = recs[t];
        if (!r.best) {
          if (on_skip) on_skip({q, n, r.reps, "no_applicable_method", ""});
          continue;
        }
        if (cfg.tau && r.best->second > *cfg.tau) {
          if (on_skip) on_skip({q, n, r.reps, "above_tau", r.best->second.str()});
          continue;
        }
        on_record(r);
      }
    }
  }
}

}  // namespace cwb
