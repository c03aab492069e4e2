#include "cwb/orbit.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "cwb/error.hpp"

namespace cwb {

std::string ActionGenerator::name() const {
  switch (kind) {
    case Kind::Shift:
      return "rho";
    case Kind::Scalar:
      return "sigma";
    case Kind::Multiplier:
      return "mu(" + std::to_string(a) + ")";
  }
  return "?";
}

Word apply_generator(const CyclicCode& code, const ActionGenerator& g, const Word& c) {
  const uint64_t n = code.n();
  if (c.size() != n) throw PreconditionError("codeword length mismatch");
  Word out(n);
  switch (g.kind) {
    case ActionGenerator::Kind::Shift:
      for (uint64_t i = 0; i < n; ++i) out[(i + 1) % n] = c[i];
      break;
    case ActionGenerator::Kind::Scalar: {
      const uint8_t* row = code.ctx().mul_row(code.ctx().xi());
      for (uint64_t i = 0; i < n; ++i) out[i] = row[c[i]];
      break;
    }
    case ActionGenerator::Kind::Multiplier: {
      const uint64_t a = mod_n(g.a, n);
      if (std::gcd(a, n) != 1 && n != 1) {
        throw PreconditionError("multiplier " + std::to_string(g.a) + " is not a unit mod n");
      }
      for (uint64_t i = 0; i < n; ++i) out[(a * i) % n] = c[i];
      break;
    }
  }
  return out;
}

bool preserves_code(const CyclicCode& code, const ActionGenerator& g) {
  for (const Word& row : code.generator_matrix()) {
    if (!code.contains(apply_generator(code, g, row))) return false;
  }
  return true;
}

std::vector<uint64_t> OrbitPartition::sizes() const {
  std::vector<uint64_t> s;
  for (const auto& o : orbits) s.push_back(o.size);
  std::sort(s.begin(), s.end());
  return s;
}

std::string OrbitPartition::to_json() const {
  static const char* hex = "0123456789abcdef";
  std::ostringstream os;
  os << "{\"count\":" << count() << ",\"sizes\":[";
  const auto s = sizes();
  for (size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << "],\"orbits\":[";
  for (size_t i = 0; i < orbits.size(); ++i) {
    os << (i ? "," : "") << "{\"rep\":\"";
    for (uint8_t c : orbits[i].rep) os << hex[c >> 4] << hex[c & 15];
    os << "\",\"size\":" << orbits[i].size << ",\"weight\":" << orbits[i].weight << '}';
  }
  os << "]}";
  return os.str();
}

namespace {

void check_generators(const CyclicCode& code, const std::vector<ActionGenerator>& gens) {
  for (const auto& g : gens) {
    if (!preserves_code(code, g)) {
      throw PreconditionError("generator " + g.name() + " does not preserve the code");
    }
  }
}

}  // namespace

namespace {

// Indices are coordinate vectors in the systematic basis, digit i <-> sys[i].
class IndexSpace {
 public:
  explicit IndexSpace(const CyclicCode& code)
      : code_(code), q_(code.q()), k_(code.k()), total_(code.size()),
        xor_add_(code.spec().pp.p == 2) {
    for (uint32_t j = 0, p = 1; j < k_; ++j, p *= static_cast<uint32_t>(q_)) pw_.push_back(p);
  }

  uint64_t total() const { return total_; }

  uint32_t add(uint32_t a, uint32_t b) const {
    if (xor_add_) return a ^ b;
    uint32_t r = 0;
    for (uint32_t j = 0; j < k_; ++j, a /= q_, b /= q_) {
      r += code_.ctx().add(static_cast<uint8_t>(a % q_), static_cast<uint8_t>(b % q_)) * pw_[j];
    }
    return r;
  }

  // perm[idx] = index of g(codeword(idx)), built from the images of the basis by linearity.
  std::vector<uint32_t> permutation(const ActionGenerator& g) const {
    std::vector<uint32_t> img(k_);
    for (uint32_t j = 0; j < k_; ++j) {
      const Word w = apply_generator(code_, g, code_.systematic_basis()[j]);
      img[j] = static_cast<uint32_t>(code_.index_of(w.data()));
    }
    // scaled[j*q + c] = index of c * g(sys[j])
    std::vector<uint32_t> scaled(k_ * q_);
    for (uint32_t j = 0; j < k_; ++j) {
      for (uint32_t c = 0; c < q_; ++c) scaled[j * q_ + c] = scale(img[j], static_cast<uint8_t>(c));
    }
    std::vector<uint32_t> perm(total_);
    perm[0] = 0;
    const bool pow2 = (q_ & (q_ - 1)) == 0;
    const int lg = std::countr_zero(q_);
    for (uint64_t idx = 1; idx < total_; ++idx) {
      uint32_t j = 0, d = 0;
      if (pow2) {
        j = static_cast<uint32_t>(std::countr_zero(idx) / lg);
        d = static_cast<uint32_t>((idx >> (j * lg)) & (q_ - 1));
      } else {
        while ((idx / pw_[j]) % q_ == 0) ++j;
        d = static_cast<uint32_t>((idx / pw_[j]) % q_);
      }
      perm[idx] = add(perm[idx - d * pw_[j]], scaled[j * q_ + d]);
    }
    return perm;
  }

  uint32_t scale(uint32_t a, uint8_t c) const {
    uint32_t r = 0;
    for (uint32_t j = 0; j < k_; ++j, a /= q_) {
      r += code_.ctx().mul(c, static_cast<uint8_t>(a % q_)) * pw_[j];
    }
    return r;
  }

  // Calls f(idx, word) for every codeword in index order, updating one running word.
  template <class F>
  void for_each_word(F&& f) const {
    const auto& ctx = code_.ctx();
    const auto& sys = code_.systematic_basis();
    const uint64_t n = code_.n();
    Word w(n, 0);
    std::vector<uint8_t> digit(k_, 0);
    f(uint64_t{0}, w);
    for (uint64_t idx = 1; idx < total_; ++idx) {
      for (uint32_t j = 0;; ++j) {
        const uint8_t old = digit[j];
        const uint8_t now = static_cast<uint8_t>(old + 1u == q_ ? 0 : old + 1);
        digit[j] = now;
        const uint8_t* mrow = ctx.mul_row(ctx.add(now, ctx.neg(old)));
        for (uint64_t i = 0; i < n; ++i) w[i] = ctx.add(w[i], mrow[sys[j][i]]);
        if (now != 0) break;
      }
      f(idx, w);
    }
  }

 private:
  const CyclicCode& code_;
  uint64_t q_;
  uint32_t k_;
  uint64_t total_;
  bool xor_add_;
  std::vector<uint32_t> pw_;
};

}  // namespace

OrbitPartition orbit_count(const CyclicCode& code, const std::vector<ActionGenerator>& gens,
                           uint64_t cap) {
  const uint64_t total = code.size();
  if (total > cap) {
    throw CapExceeded("q^k = " + std::to_string(total) + " exceeds orbit cap " +
                      std::to_string(cap));
  }
  check_generators(code, gens);
  const IndexSpace space(code);
  std::vector<std::vector<uint32_t>> perms;
  for (const auto& g : gens) perms.push_back(space.permutation(g));

  constexpr uint32_t kNone = UINT32_MAX;
  std::vector<uint32_t> orbit_of(total, kNone);
  std::vector<uint64_t> sizes;
  std::vector<uint32_t> stack;
  for (uint64_t idx = 1; idx < total; ++idx) {
    if (orbit_of[idx] != kNone) continue;
    const uint32_t id = static_cast<uint32_t>(sizes.size());
    uint64_t size = 0;
    orbit_of[idx] = id;
    stack.push_back(static_cast<uint32_t>(idx));
    while (!stack.empty()) {
      const uint32_t x = stack.back();
      stack.pop_back();
      ++size;
      for (const auto& p : perms) {
        const uint32_t y = p[x];
        if (orbit_of[y] != kNone) continue;
        orbit_of[y] = id;
        stack.push_back(y);
      }
    }
    sizes.push_back(size);
  }

  OrbitPartition part;
  part.orbits.resize(sizes.size());
  std::vector<bool> seen(sizes.size(), false);
  space.for_each_word([&](uint64_t idx, const Word& w) {
    if (idx == 0) {
      if (hamming_weight(w) != 0) throw BugTrap("index 0 is not the zero word");
      return;
    }
    Orbit& o = part.orbits[orbit_of[idx]];
    const uint32_t wt = hamming_weight(w);
    if (!seen[orbit_of[idx]]) {
      seen[orbit_of[idx]] = true;
      o.rep = w;
      o.weight = wt;
      o.size = sizes[orbit_of[idx]];
      return;
    }
    if (wt != o.weight) throw BugTrap("orbit is not weight-homogeneous");
    if (w < o.rep) o.rep = w;
  });
  std::sort(part.orbits.begin(), part.orbits.end(),
            [](const Orbit& a, const Orbit& b) { return a.rep < b.rep; });
  uint64_t sum = 0;
  for (const auto& o : part.orbits) sum += o.size;
  if (sum != total - 1) throw BugTrap("orbit sizes do not sum to q^k - 1");
  return part;
}

std::vector<GroupElement> enumerate_group(const CyclicCode& code,
                                          const std::vector<ActionGenerator>& gens) {
  const uint64_t n = code.n();
  const uint64_t q = code.q();
  bool has_shift = false, has_scalar = false;
  std::vector<uint64_t> mults;
  for (const auto& g : gens) {
    switch (g.kind) {
      case ActionGenerator::Kind::Shift:
        has_shift = true;
        break;
      case ActionGenerator::Kind::Scalar:
        has_scalar = true;
        break;
      case ActionGenerator::Kind::Multiplier:
        mults.push_back(mod_n(g.a, n));
        break;
    }
  }
  // Exponent tuples over the multiplier generators; products collected as a set so that a
  // non-unique factorization cannot double count.
  std::set<uint64_t> H{1 % n};
  for (uint64_t a : mults) {
    const uint64_t ord = mult_order(static_cast<int64_t>(a), n);
    std::set<uint64_t> next;
    for (uint64_t h : H) {
      uint64_t x = h;
      for (uint64_t r = 0; r < ord; ++r) {
        next.insert(x);
        x = x * a % n;
      }
    }
    H = std::move(next);
  }
  // The multiplicative closure of several generators may need more than one pass.
  for (bool grown = true; grown;) {
    grown = false;
    for (uint64_t a : mults) {
      for (uint64_t h : std::vector<uint64_t>(H.begin(), H.end())) {
        grown |= H.insert(h * a % n).second;
      }
    }
  }
  const uint64_t nr = has_shift ? n : 1;
  const uint64_t ns = has_scalar ? q - 1 : 1;
  std::vector<GroupElement> out;
  out.reserve(H.size() * nr * ns);
  for (uint64_t b : H) {
    for (uint64_t r = 0; r < nr; ++r) {
      for (uint64_t s = 0; s < ns; ++s) out.push_back({b, r, s});
    }
  }
  return out;
}

uint64_t group_order(const CyclicCode& code, const std::vector<ActionGenerator>& gens) {
  return enumerate_group(code, gens).size();
}

namespace {

// image[b*(i+r)] = xi^s * w[i]
struct ComposedMap {
  std::vector<uint32_t> perm;
  const uint8_t* scale;
};

ComposedMap compose(const CyclicCode& code, const GroupElement& g) {
  const uint64_t n = code.n();
  ComposedMap m;
  m.perm.resize(n);
  for (uint64_t i = 0; i < n; ++i) m.perm[i] = static_cast<uint32_t>(g.b * ((i + g.r) % n) % n);
  const uint8_t xs = code.q() == 2 ? 1 : static_cast<uint8_t>(code.ctx().base().antilog(g.s));
  m.scale = code.ctx().mul_row(xs);
  return m;
}

uint32_t rank_gf(const CyclicCode& code, std::vector<Word> rows) {
  const auto& ctx = code.ctx();
  const size_t n = rows.empty() ? 0 : rows[0].size();
  uint32_t rank = 0;
  for (size_t col = 0; col < n && rank < rows.size(); ++col) {
    size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const uint8_t* norm = ctx.mul_row(static_cast<uint8_t>(ctx.base().inv(rows[rank][col])));
    for (size_t j = 0; j < n; ++j) rows[rank][j] = norm[rows[rank][j]];
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const uint8_t* mrow = ctx.mul_row(ctx.neg(rows[r][col]));
      for (size_t j = 0; j < n; ++j) rows[r][j] = ctx.add(rows[r][j], mrow[rows[rank][j]]);
    }
    ++rank;
  }
  return rank;
}

uint64_t ipow(uint64_t b, uint64_t e) {
  uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

constexpr uint64_t kScanBudget = uint64_t{1} << 24;

}  // namespace

uint64_t fixed_nonzero(const CyclicCode& code, const GroupElement& g, FixMode mode) {
  const uint64_t n = code.n();
  const ComposedMap m = compose(code, g);
  if (mode == FixMode::Rank) {
    // Row j: top-k coordinates of g(sys[j]) - sys[j], i.e. the matrix of g - id on C.
    const uint32_t k = code.k();
    std::vector<uint32_t> src(k);  // source coordinate landing on position n-k+t
    for (uint64_t i = 0; i < n; ++i) {
      const uint64_t t = m.perm[i];
      if (t >= n - k) src[t - (n - k)] = static_cast<uint32_t>(i);
    }
    std::vector<Word> diff;
    for (uint32_t j = 0; j < k; ++j) {
      const Word& u = code.systematic_basis()[j];
      Word row(k);
      for (uint32_t t = 0; t < k; ++t) {
        row[t] = code.ctx().add(m.scale[u[src[t]]], code.ctx().neg(t == j ? 1 : 0));
      }
      diff.push_back(std::move(row));
    }
    return ipow(code.q(), k - rank_gf(code, std::move(diff))) - 1;
  }
  uint64_t fixed = 0;
  const uint64_t total = code.size();
  for (uint64_t idx = 1; idx < total; ++idx) {
    const Word c = code.codeword(idx);
    bool ok = true;
    for (uint64_t i = 0; i < n && ok; ++i) ok = c[m.perm[i]] == m.scale[c[i]];
    fixed += ok ? 1 : 0;
  }
  return fixed;
}

uint64_t burnside_count(const CyclicCode& code, const std::vector<ActionGenerator>& gens,
                        FixMode mode, unsigned threads) {
  check_generators(code, gens);
  const auto elems = enumerate_group(code, gens);
  if (mode == FixMode::Auto) {
    const uint64_t size = code.size();
    mode = (size <= kScanBudget / elems.size()) ? FixMode::Scan : FixMode::Rank;
  }
  const uint64_t total = code.size();
  std::vector<uint64_t> fix(elems.size(), 0);
  if (mode == FixMode::Scan) {
    if (total > kOrbitCap) throw CapExceeded("codeword scan beyond orbit cap");
    // Materialize all codewords once; the map is still applied per codeword.
    const uint64_t n = code.n();
    std::vector<uint8_t> words(total * n);
    IndexSpace(code).for_each_word(
        [&](uint64_t idx, const Word& c) { std::copy(c.begin(), c.end(), words.begin() + idx * n); });
    auto work = [&](size_t e) {
      const ComposedMap m = compose(code, elems[e]);
      uint64_t cnt = 0;
      for (uint64_t idx = 1; idx < total; ++idx) {
        const uint8_t* c = &words[idx * n];
        uint64_t i = 0;
        while (i < n && c[m.perm[i]] == m.scale[c[i]]) ++i;
        cnt += i == n ? 1 : 0;
      }
      fix[e] = cnt;
    };
    threads = std::max(1u, threads);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (size_t e = t; e < elems.size(); e += threads) work(e);
      });
    }
    for (auto& th : pool) th.join();
  } else {
    for (size_t e = 0; e < elems.size(); ++e) fix[e] = fixed_nonzero(code, elems[e], FixMode::Rank);
  }
  uint64_t sum = 0;
  for (uint64_t f : fix) sum += f;
  if (sum % elems.size() != 0) {
    throw BugTrap("Burnside average " + std::to_string(sum) + "/" + std::to_string(elems.size()) +
                  " is not an integer");
  }
  return sum / elems.size();
}

bool same_weight_same_orbit(const CyclicCode& code, const OrbitPartition& partition) {
  (void)code;
  std::map<uint32_t, int> per_weight;
  for (const auto& o : partition.orbits) ++per_weight[o.weight];
  for (const auto& [w, c] : per_weight) {
    if (c != 1) return false;
  }
  return true;
}

std::string group_kind_name(GroupKind k) {
  switch (k) {
    case GroupKind::RhoSigma:
      return "rho_sigma";
    case GroupKind::MuQ:
      return "mu_q";
    case GroupKind::MuNegQ:
      return "mu_negq";
    case GroupKind::MuPe2:
      return "mu_pe2";
  }
  return "?";
}

std::vector<ActionGenerator> group_generators(GroupKind kind, const PrimePower& pp, uint64_t n,
                                              int l0) {
  const int64_t q = static_cast<int64_t>(pp.q % n);
  std::vector<ActionGenerator> g;
  switch (kind) {
    case GroupKind::RhoSigma:
      break;
    case GroupKind::MuQ:
      g.push_back(ActionGenerator::multiplier(q));
      break;
    case GroupKind::MuNegQ:
      if (!in_cyclic_subgroup(-1, -q, n)) g.push_back(ActionGenerator::multiplier(-1));
      g.push_back(ActionGenerator::multiplier(-q));
      break;
    case GroupKind::MuPe2: {
      if (pp.e % 2 != 0) throw PreconditionError("mu_pe2 needs an even exponent e");
      int64_t h = 1;
      for (uint32_t i = 0; i < pp.e / 2; ++i) h = h * pp.p % static_cast<int64_t>(n);
      g.push_back(ActionGenerator::multiplier(l0 ? -h : h));
      break;
    }
  }
  g.push_back(ActionGenerator::shift());
  g.push_back(ActionGenerator::scalar());
  return g;
}

GroupChoice auto_group(const CyclicCode& code) {
  std::vector<GroupChoice> cands;
  const auto& pp = code.spec().pp;
  if (pp.e % 2 == 0) {
    for (int l0 = 0; l0 < 2; ++l0) {
      cands.push_back({GroupKind::MuPe2, l0, group_generators(GroupKind::MuPe2, pp, code.n(), l0)});
    }
  }
  cands.push_back({GroupKind::MuNegQ, 0, group_generators(GroupKind::MuNegQ, pp, code.n())});
  cands.push_back({GroupKind::MuQ, 0, group_generators(GroupKind::MuQ, pp, code.n())});
  cands.push_back({GroupKind::RhoSigma, 0, group_generators(GroupKind::RhoSigma, pp, code.n())});
  std::optional<GroupChoice> best;
  uint64_t best_order = 0;
  for (auto& c : cands) {
    bool ok = true;
    for (const auto& g : c.gens) ok = ok && preserves_code(code, g);
    if (!ok) continue;
    const uint64_t ord = group_order(code, c.gens);
    if (ord > best_order) {
      best_order = ord;
      best = c;
    }
  }
  if (!best) throw BugTrap("no preset group preserves the code");
  return *best;
}

}  // namespace cwb
