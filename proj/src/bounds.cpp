#include "cwb/bounds.hpp"

#include <algorithm>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <json.hpp>

#include "cwb/error.hpp"

namespace cwb {

namespace {

BigInt big(uint64_t x) { return BigInt(x); }

BigInt pw(uint64_t q, uint64_t k) { return boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(k)); }

// q^k - 1
BigInt qm1(uint64_t q, uint64_t k) { return pw(q, k) - 1; }

BigInt absval(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

BigInt gcd2(const BigInt& a, const BigInt& b) {
  BigInt x = absval(a), y = absval(b);
  while (y != 0) {
    BigInt r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

BigInt gcd_all(std::initializer_list<BigInt> xs) {
  BigInt g = 0;
  for (const auto& x : xs) g = gcd2(g, x);
  return g;
}

BigInt exact_div(const BigInt& a, const BigInt& b, const char* where) {
  if (b == 0 || a % b != 0) {
    throw BugTrap(std::string("non-exact division in ") + where + ": " + a.str() + " / " + b.str());
  }
  return a / b;
}

BigInt to_integer(const BigRational& r, const char* where) {
  if (boost::multiprecision::denominator(r) != 1) {
    throw BugTrap(std::string(where) + " is not an integer: " + r.str());
  }
  return boost::multiprecision::numerator(r);
}

std::optional<std::string> check_basic(uint64_t q, uint64_t n) {
  if (n == 0) return "n must be positive";
  if (q < 2) return "q must be at least 2";
  if (std::gcd(n, q) != 1) return "gcd(n, q) != 1";
  return std::nullopt;
}

std::optional<std::string> check_coset(uint64_t q, uint64_t n, uint64_t i, uint64_t k) {
  if (auto e = check_basic(q, n)) return e;
  if (i >= n) return "coset representative out of range";
  if (coset_of(i, n, q).size() != k) {
    return "coset of " + std::to_string(i) + " does not have size " + std::to_string(k);
  }
  return std::nullopt;
}

uint64_t ord_q(uint64_t q, uint64_t n) { return mult_order(static_cast<int64_t>(q % n), n); }

// gcd(q^g - 1, (q^k-1)/(q-1), i(q^k-1)/n)
BigInt g_term(uint64_t q, uint64_t n, uint64_t i, uint64_t k, uint64_t g) {
  const BigInt Q = qm1(q, k);
  return gcd_all({qm1(q, g), exact_div(Q, big(q - 1), "A"), exact_div(big(i) * Q, big(n), "B")});
}

}  // namespace

std::string to_string(const BoundValue& v) {
  if (applicable(v)) return value_of(v).str();
  return "n/a (" + std::get<NotApplicable>(v).reason + ")";
}

BoundValue thm31_irreducible(uint64_t q, uint64_t n, uint64_t i, uint64_t k) {
  if (auto e = check_coset(q, n, i, k)) return NotApplicable{*e};
  BigInt sum = 0;
  for (uint64_t r : divisors(k)) sum += big(euler_phi(k / r)) * g_term(q, n, i, k, r);
  const BigInt v = exact_div(sum, big(k), "thm31");
  const BoundValue lit = thm31_literal(q, n, i, k);
  if (!applicable(lit) || value_of(lit) != v) throw BugTrap("thm31 totient and literal forms disagree");
  return v;
}

BoundValue thm31_literal(uint64_t q, uint64_t n, uint64_t i, uint64_t k) {
  if (auto e = check_coset(q, n, i, k)) return NotApplicable{*e};
  const uint64_t m = ord_q(q, n);
  BigInt sum = 0;
  for (uint64_t r = 0; r < m; ++r) sum += g_term(q, n, i, k, std::gcd(k, r));
  return exact_div(sum, big(m), "thm31 literal");
}

BoundValue rho_sigma_irreducible(uint64_t q, uint64_t n, uint64_t i, uint64_t k) {
  if (auto e = check_coset(q, n, i, k)) return NotApplicable{*e};
  const BigInt Q = qm1(q, k);
  return gcd2(exact_div(Q, big(q - 1), "A"), exact_div(big(i) * Q, big(n), "B"));
}

bool mu_q_strictly_fewer(uint64_t q, uint64_t n, uint64_t i, uint64_t k) {
  if (auto e = check_coset(q, n, i, k)) throw PreconditionError(*e);
  if (k <= 1) return false;
  return g_term(q, n, i, k, 1) < value_of(rho_sigma_irreducible(q, n, i, k));
}

BigRational thm32_subset_term(uint64_t q, uint64_t n, const std::vector<uint64_t>& reps) {
  const uint64_t m = ord_q(q, n);
  const size_t u = reps.size();
  std::vector<uint64_t> ks(u);
  for (size_t j = 0; j < u; ++j) ks[j] = coset_of(reps[j], n, q).size();
  const BigInt I = big(q - 1);
  BigInt sum = 0;
  std::vector<BigInt> Ij(u);
  for (uint64_t r = 0; r < m; ++r) {
    BigInt prod = 1;
    BigInt gI = I;
    for (size_t j = 0; j < u; ++j) {
      const uint64_t g = std::gcd(ks[j], r);
      Ij[j] = exact_div(qm1(q, ks[j]), qm1(q, g), "I_t");
      prod *= qm1(q, g);
      gI = gcd2(gI, Ij[j]);
    }
    BigInt d = big(n);
    for (size_t j = 0; j < u; ++j) d = gcd2(d, big(reps[j]) * I * Ij[j] / gcd2(I, Ij[j]));
    for (size_t a = 0; a < u; ++a) {
      for (size_t b = a + 1; b < u; ++b) {
        const BigInt diff = BigInt(reps[b]) - BigInt(reps[a]);
        d = gcd2(d, diff * Ij[a] * Ij[b] / gcd2(Ij[a], Ij[b]));
      }
    }
    sum += d * gI * prod;
  }
  return BigRational(sum, big(m) * big(n) * I);
}

BoundValue thm32_general(uint64_t q, uint64_t n, const std::vector<uint64_t>& reps) {
  if (auto e = check_basic(q, n)) return NotApplicable{*e};
  if (reps.empty()) return NotApplicable{"no cosets"};
  if (reps.size() > 12) return NotApplicable{"more than 12 cosets"};
  BigRational total = 0;
  const size_t v = reps.size();
  for (uint32_t mask = 1; mask < (1u << v); ++mask) {
    std::vector<uint64_t> sub;
    for (size_t j = 0; j < v; ++j) {
      if (mask >> j & 1) sub.push_back(reps[j]);
    }
    total += thm32_subset_term(q, n, sub);
  }
  return to_integer(total, "thm32 total");
}

BoundValue thm33_two_cosets(uint64_t q, uint64_t n, uint64_t i1, uint64_t k1, uint64_t i2,
                            uint64_t k2) {
  if (auto e = check_coset(q, n, i1, k1)) return NotApplicable{*e};
  if (auto e = check_coset(q, n, i2, k2)) return NotApplicable{*e};
  if (coset_of(i1, n, q).rep == coset_of(i2, n, q).rep) return NotApplicable{"cosets must be distinct"};
  if (k2 % k1 != 0) return NotApplicable{"k1 does not divide k2"};
  const BigInt s1 = value_of(thm31_irreducible(q, n, i1, k1));
  const BigInt s2 = value_of(thm31_irreducible(q, n, i2, k2));
  const uint64_t m = ord_q(q, n);
  const BigInt Q1 = qm1(q, k1), Q2 = qm1(q, k2);
  const BigInt cross = exact_div((BigInt(i2) - BigInt(i1)) * Q1 * Q2, big(n) * (q - 1), "thm33 cross");
  BigInt sum = 0;
  for (uint64_t r = 0; r < m; ++r) {
    const BigInt G1 = qm1(q, std::gcd(k1, r));
    const BigInt G2 = qm1(q, std::gcd(k2, r));
    const BigInt inner = gcd_all({G2, exact_div(Q1 * G2, big(q - 1) * G1, "thm33 a"),
                                  exact_div(big(i1) * Q1 * G2, big(n) * G1, "thm33 b"),
                                  exact_div(big(i2) * Q2, big(n), "thm33 c")});
    sum += gcd2(G1 * inner, cross);
  }
  return s1 + s2 + exact_div(sum, big(m), "thm33 s12");
}

BoundValue cor33(uint64_t q, uint64_t n, uint64_t i1, uint64_t i2, uint64_t k) {
  if (auto e = check_coset(q, n, i1, 1)) return NotApplicable{*e};
  if (auto e = check_coset(q, n, i2, k)) return NotApplicable{*e};
  if (coset_of(i1, n, q).rep == coset_of(i2, n, q).rep) return NotApplicable{"cosets must be distinct"};
  const BigInt Q = qm1(q, k);
  const BigInt A = exact_div(Q, big(q - 1), "A");
  const BigInt B2 = exact_div(big(i2) * Q, big(n), "B2");
  const BigInt D = exact_div((BigInt(i2) - BigInt(i1)) * Q, big(n), "cor33 diff");
  BigInt sum = 0;
  for (uint64_t r : divisors(k)) {
    const BigInt G = qm1(q, r);
    sum += big(euler_phi(k / r)) * (gcd_all({G, A, B2}) + gcd2(G, D));
  }
  return 1 + exact_div(sum, big(k), "cor33");
}

BoundValue cor34(uint64_t q, uint64_t n, uint64_t i1, uint64_t i2, uint64_t k) {
  if (auto e = check_coset(q, n, i1, k)) return NotApplicable{*e};
  if (auto e = check_coset(q, n, i2, k)) return NotApplicable{*e};
  if (coset_of(i1, n, q).rep == coset_of(i2, n, q).rep) return NotApplicable{"cosets must be distinct"};
  const BigInt Q = qm1(q, k);
  const BigInt A = exact_div(Q, big(q - 1), "A");
  const BigInt B1 = exact_div(big(i1) * Q, big(n), "B1");
  const BigInt B2 = exact_div(big(i2) * Q, big(n), "B2");
  const BigInt cross = exact_div((BigInt(i2) - BigInt(i1)) * Q * Q, big(n) * (q - 1), "cor34 cross");
  BigInt sum = 0;
  for (uint64_t r : divisors(k)) {
    const BigInt G = qm1(q, r);
    sum += big(euler_phi(k / r)) *
           (gcd_all({G, A, B1}) + gcd_all({G, A, B2}) + gcd2(G * gcd_all({G, A, B1, B2}), cross));
  }
  return exact_div(sum, big(k), "cor34");
}

bool is_negation_pair(uint64_t q, uint64_t n, uint64_t i1, uint64_t i2) {
  return coset_of(mod_n(-static_cast<int64_t>(i1), n), n, q).contains(i2);
}

namespace {

std::optional<std::string> check_negation(uint64_t q, uint64_t n, uint64_t i, uint64_t k) {
  if (auto e = check_coset(q, n, i, k)) return e;
  if (coset_of(i, n, q).contains(mod_n(-static_cast<int64_t>(i), n))) return "-i lies in the coset of i";
  return std::nullopt;
}

}  // namespace

BoundValue thm34(uint64_t q, uint64_t n, uint64_t i, uint64_t k) {
  if (auto e = check_negation(q, n, i, k)) return NotApplicable{*e};
  const int64_t qs = static_cast<int64_t>(q % n);
  if (!in_cyclic_subgroup(-1, -qs, n)) return NotApplicable{"-1 is not in <-q>"};
  const BigInt Q = qm1(q, k);
  const BigInt A = exact_div(Q, big(q - 1), "A");
  const BigInt B = exact_div(big(i) * Q, big(n), "B");
  const BigInt last = exact_div(2 * big(i) * Q * Q, big(n) * (q - 1), "thm34 last");
  BigInt sum = 0;
  for (uint64_t r : divisors(k)) {
    const BigInt G = qm1(q, r);
    const BigInt g = gcd_all({G, A, B});
    sum += big(euler_phi(k / r)) * (2 * g + gcd2(G, 2 * A) + gcd2(G * g, last));
  }
  return exact_div(sum, 2 * big(k), "thm34");
}

BoundValue thm35(uint64_t q, uint64_t n, uint64_t i, uint64_t k) {
  if (auto e = check_negation(q, n, i, k)) return NotApplicable{*e};
  const int64_t qs = static_cast<int64_t>(q % n);
  if (in_cyclic_subgroup(-1, -qs, n)) return NotApplicable{"-1 is in <-q>"};
  const uint64_t m = ord_q(q, n);
  const BigInt Q = qm1(q, k);
  const BigInt A = exact_div(Q, big(q - 1), "A");
  const BigInt B = exact_div(big(i) * Q, big(n), "B");
  const BigInt last = exact_div(2 * big(i) * Q * Q, big(n) * (q - 1), "thm35 last");
  BigInt sum = 0;
  for (uint64_t r = 0; r < m; ++r) {
    const BigInt G = qm1(q, std::gcd(k, r));
    const BigInt g = gcd_all({G, A, B});
    const BigInt mid = gcd_all({qm1(q, std::gcd(k, 2 * r)), 2 * A, qm1(q, r) * B});
    sum += 2 * g + mid + gcd2(G * g, last);
  }
  return exact_div(sum, 2 * big(m), "thm35");
}

namespace {

// (-1)^l0 p^{e/2} mod n
uint64_t pe2_multiplier(const PrimePower& pp, uint64_t n, int l0) {
  uint64_t h = 1 % n;
  for (uint32_t j = 0; j < pp.e / 2; ++j) h = h * pp.p % n;
  return l0 ? mod_n(-static_cast<int64_t>(h), n) : h;
}

}  // namespace

std::optional<int> pe2_pairing(const PrimePower& pp, uint64_t n, uint64_t i1, uint64_t i2) {
  if (pp.e % 2 != 0 || std::gcd(n, pp.q) != 1) return std::nullopt;
  for (int l0 = 0; l0 < 2; ++l0) {
    const uint64_t ainv = inverse_mod(static_cast<int64_t>(pe2_multiplier(pp, n, l0)), n);
    const uint64_t img = ainv * (i1 % n) % n;
    if (coset_of(img, n, pp.q).contains(i2) && !coset_of(i1, n, pp.q).contains(i2)) return l0;
  }
  return std::nullopt;
}

BoundValue thm36(const PrimePower& pp, uint64_t n, uint64_t i, uint64_t k, int l0) {
  const uint64_t q = pp.q;
  if (pp.e % 2 != 0) return NotApplicable{"e is odd"};
  if (l0 != 0 && l0 != 1) return NotApplicable{"l0 must be 0 or 1"};
  if (auto e = check_coset(q, n, i, k)) return NotApplicable{*e};
  // u = (-1)^l0 p^{-e/2} mod n, as a representative in 0..n-1
  const uint64_t u = inverse_mod(static_cast<int64_t>(pe2_multiplier(pp, n, l0)), n);
  if (coset_of(i, n, q).contains(u * i % n)) return NotApplicable{"(-1)^l0 p^(-e/2) i lies in the coset of i"};
  const uint64_t m = ord_q(q, n);
  const BigInt Q = qm1(q, k);
  const BigInt A = exact_div(Q, big(q - 1), "A");
  const BigInt B = exact_div(big(i) * Q, big(n), "B");
  const BigInt last = (BigInt(u) - 1) * B * A;
  BigInt sum = 0;
  for (uint64_t r = 0; r < m; ++r) {
    const BigInt G = qm1(q, std::gcd(k, r));
    const BigInt g = gcd_all({G, A, B});
    const BigInt mid = gcd_all({qm1(q, std::gcd(k, 2 * r + 1)), 2 * A, (BigInt(u) + pw(q, r)) * B});
    sum += 2 * g + mid + gcd2(G * g, last);
  }
  return exact_div(sum, 2 * big(m), "thm36");
}

BigRational cz_published_subset_term(uint64_t q, uint64_t n, const std::vector<uint64_t>& reps) {
  BigInt g1 = big(n);
  BigInt g2 = big(q - 1);
  BigInt prod = 1;
  for (uint64_t i : reps) {
    g1 = gcd2(g1, big(i));
    g2 = gcd2(g2, big(n / std::gcd(n, i)));
    prod *= qm1(q, coset_of(i, n, q).size());
  }
  return BigRational(g1 * g2 * prod, big(n) * (q - 1));
}

BigRational cz_corrected_subset_term(uint64_t q, uint64_t n, const std::vector<uint64_t>& reps) {
  BigInt g = big(n);
  BigInt prod = 1;
  for (size_t a = 0; a < reps.size(); ++a) {
    g = gcd2(g, big(reps[a]) * (q - 1));
    for (size_t b = a + 1; b < reps.size(); ++b) g = gcd2(g, BigInt(reps[b]) - BigInt(reps[a]));
    prod *= qm1(q, coset_of(reps[a], n, q).size());
  }
  return BigRational(g * prod, big(n) * (q - 1));
}

namespace {

template <typename Term>
BoundValue subset_sum(uint64_t q, uint64_t n, const std::vector<uint64_t>& reps, Term term,
                      const char* what) {
  if (auto e = check_basic(q, n)) return NotApplicable{*e};
  if (reps.empty()) return NotApplicable{"no cosets"};
  if (reps.size() > 20) return NotApplicable{"too many cosets"};
  BigRational total = 0;
  for (uint32_t mask = 1; mask < (1u << reps.size()); ++mask) {
    std::vector<uint64_t> sub;
    for (size_t j = 0; j < reps.size(); ++j) {
      if (mask >> j & 1) sub.push_back(reps[j]);
    }
    total += term(q, n, sub);
  }
  if (boost::multiprecision::denominator(total) != 1) {
    return NotApplicable{std::string(what) + " evaluates to the non-integer " + total.str()};
  }
  return boost::multiprecision::numerator(total);
}

}  // namespace

BoundValue cz_published(uint64_t q, uint64_t n, const std::vector<uint64_t>& reps) {
  return subset_sum(q, n, reps, cz_published_subset_term, "published formula");
}

BoundValue cz_corrected(uint64_t q, uint64_t n, const std::vector<uint64_t>& reps) {
  const BoundValue v = subset_sum(q, n, reps, cz_corrected_subset_term, "corrected formula");
  if (!applicable(v) && std::get<NotApplicable>(v).reason.find("non-integer") != std::string::npos) {
    throw BugTrap(std::get<NotApplicable>(v).reason);
  }
  return v;
}

std::optional<Cor31Witness> predicate_cor31(uint64_t q, uint64_t n, uint64_t i) {
  if (n == 0 || std::gcd(n, q) != 1) return std::nullopt;
  // q = 2^m with m > 1
  if (q < 4 || (q & (q - 1)) != 0) return std::nullopt;
  if (std::gcd(q - 1, uint64_t{3}) != 1 || (q + 1) % 3 != 0) return std::nullopt;
  const BigInt num = big(q) * big(q) - 1;
  const BigInt den = 3 * big(n);
  if (num % den != 0) return std::nullopt;
  const BigInt N = num / den;
  if (big(q - 1) % N != 0) return std::nullopt;
  if (std::gcd(i, (q + 1) / 3) != 1) return std::nullopt;
  return Cor31Witness{static_cast<uint64_t>(N)};
}

std::optional<Cor32Witness> predicate_cor32(uint64_t q, uint64_t n, uint64_t i) {
  if (n == 0 || std::gcd(n, q) != 1) return std::nullopt;
  // n (2k+1) N = q^k - 1 with N <= q - 1 bounds k.
  for (uint64_t k = 3;; k += 2) {
    const BigInt Q = qm1(q, k);
    if (Q > big(n) * (2 * k + 1) * (q - 1)) break;
    if (!is_prime(k) || !is_prime(2 * k + 1)) continue;
    if (q == 2 && k == 3) continue;
    if (std::gcd(q - 1, k) != 1 || std::gcd(q - 1, 2 * k + 1) != 1) continue;
    if (Q % (2 * k + 1) != 0) continue;
    const BigInt den = big(n) * (2 * k + 1);
    if (Q % den != 0) continue;
    const BigInt N = Q / den;
    if (big(q - 1) % N != 0) continue;
    const BigInt l = Q / (big(2 * k + 1) * (q - 1));
    if (gcd2(big(i), l) != 1) continue;
    return Cor32Witness{k, static_cast<uint64_t>(N)};
  }
  return std::nullopt;
}

std::optional<std::pair<std::string, BigInt>> BoundReport::best() const {
  std::optional<std::pair<std::string, BigInt>> out;
  for (const auto& name : method_names()) {
    if (name == "cz_published") continue;
    auto it = entries.find(name);
    if (it == entries.end() || !applicable(it->second)) continue;
    if (!out || value_of(it->second) < out->second) out = std::make_pair(name, value_of(it->second));
  }
  return out;
}

namespace {

nlohmann::ordered_json big_json(const BigInt& v) {
  if (v >= 0 && v <= BigInt(std::numeric_limits<uint64_t>::max())) {
    return static_cast<uint64_t>(v);
  }
  return v.str();
}

}  // namespace

std::string BoundReport::to_json() const {
  nlohmann::ordered_json j;
  j["q"] = pp.q;
  j["n"] = n;
  j["cosets"] = reps;
  nlohmann::ordered_json methods = nlohmann::ordered_json::object();
  for (const auto& name : method_names()) {
    auto it = entries.find(name);
    if (it == entries.end()) continue;
    nlohmann::ordered_json e;
    e["applicable"] = applicable(it->second);
    if (applicable(it->second)) {
      e["value"] = big_json(value_of(it->second));
    } else {
      e["reason"] = std::get<NotApplicable>(it->second).reason;
    }
    if (name == "thm36_l0" && thm36_l0) e["l0"] = *thm36_l0;
    methods[name] = e;
  }
  j["methods"] = methods;
  if (auto b = best()) {
    j["best"] = {{"method", b->first}, {"value", big_json(b->second)}};
  }
  return j.dump();
}

BoundReport bound_report(const PrimePower& pp, uint64_t n, const std::vector<uint64_t>& reps_in) {
  BoundReport rep;
  rep.pp = pp;
  rep.n = n;
  rep.reps = reps_in;
  std::sort(rep.reps.begin(), rep.reps.end());
  const uint64_t q = pp.q;
  auto& E = rep.entries;
  const std::vector<uint64_t>& R = rep.reps;
  const NotApplicable single{"needs exactly one coset"};
  const NotApplicable pair{"needs exactly two cosets"};
  for (const auto& name : method_names()) E[name] = NotApplicable{"not evaluated"};

  if (auto e = check_basic(q, n)) {
    for (const auto& name : method_names()) E[name] = NotApplicable{*e};
    return rep;
  }
  std::vector<uint64_t> ks;
  for (uint64_t r : R) ks.push_back(coset_of(r, n, q).size());

  E["thm32"] = thm32_general(q, n, R);
  E["cz_published"] = cz_published(q, n, R);
  E["cz_corrected"] = cz_corrected(q, n, R);

  if (R.size() == 1) {
    E["thm31"] = thm31_irreducible(q, n, R[0], ks[0]);
    E["rho_sigma_irreducible"] = rho_sigma_irreducible(q, n, R[0], ks[0]);
  } else {
    E["thm31"] = single;
    E["rho_sigma_irreducible"] = single;
  }
  for (const char* name : {"thm33", "cor33", "cor34", "thm34", "thm35", "thm36_l0"}) E[name] = pair;
  if (R.size() != 2) return rep;

  const uint64_t i1 = R[0], i2 = R[1], k1 = ks[0], k2 = ks[1];
  if (k2 % k1 == 0) {
    E["thm33"] = thm33_two_cosets(q, n, i1, k1, i2, k2);
  } else if (k1 % k2 == 0) {
    E["thm33"] = thm33_two_cosets(q, n, i2, k2, i1, k1);
  } else {
    E["thm33"] = NotApplicable{"coset sizes do not divide one another"};
  }
  if (k1 == 1) {
    E["cor33"] = cor33(q, n, i1, i2, k2);
  } else if (k2 == 1) {
    E["cor33"] = cor33(q, n, i2, i1, k1);
  } else {
    E["cor33"] = NotApplicable{"neither coset has size 1"};
  }
  E["cor34"] = k1 == k2 ? cor34(q, n, i1, i2, k1) : BoundValue{NotApplicable{"coset sizes differ"}};
  if (is_negation_pair(q, n, i1, i2)) {
    E["thm34"] = thm34(q, n, i1, k1);
    E["thm35"] = thm35(q, n, i1, k1);
  } else {
    E["thm34"] = NotApplicable{"cosets are not negatives of each other"};
    E["thm35"] = E["thm34"];
  }
  if (pp.e % 2 != 0) {
    E["thm36_l0"] = NotApplicable{"e is odd"};
  } else if (auto l0 = pe2_pairing(pp, n, i1, i2)) {
    E["thm36_l0"] = thm36(pp, n, i1, k1, *l0);
    rep.thm36_l0 = *l0;
  } else {
    E["thm36_l0"] = NotApplicable{"cosets are not related by (-1)^l0 p^(e/2)"};
  }
  return rep;
}

}  // namespace cwb
