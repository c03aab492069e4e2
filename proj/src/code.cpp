#include "cwb/code.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "cwb/error.hpp"

namespace cwb {

uint64_t cap_from_env(uint64_t fallback) {
  if (const char* s = std::getenv("CWB_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s, &end, 10);
    if (end != s && *end == '\0' && v > 0) return v;
  }
  return fallback;
}

void validate_spec(const CodeSpec& spec) {
  if (spec.n == 0) throw PreconditionError("n must be positive");
  if (std::gcd(spec.n, spec.pp.q) != 1) {
    throw PreconditionError("gcd(n, q) != 1: repeated-root codes are not supported");
  }
  if (spec.reps.empty()) throw PreconditionError("at least one coset is required");
  std::set<uint64_t> seen;
  for (uint64_t r : spec.reps) {
    if (r >= spec.n) throw PreconditionError("coset representative out of range");
    if (coset_of(r, spec.n, spec.pp.q).rep != r) {
      throw PreconditionError(std::to_string(r) + " is not the smallest element of its coset");
    }
    if (!seen.insert(r).second) throw PreconditionError("duplicate coset " + std::to_string(r));
  }
}

// ---- SplittingContext ----

SplittingContext::SplittingContext(const PrimePower& pp, uint64_t n,
                                   const std::vector<uint64_t>& reps)
    : pp_(pp), n_(n) {
  if (pp.q > 256) throw CapExceeded("codes over GF(q) need q <= 256");
  uint64_t L = 1;
  d_ = n;
  for (uint64_t r : reps) {
    L = lcm_u(L, coset_of(r, n, pp.q).size());
    d_ = std::gcd(d_, r);
  }
  if (reps.empty()) d_ = 1;
  n_eff_ = n / d_;
  if (L > 64) throw CapExceeded("splitting field degree too large");
  base_ = shared_field(pp, 1);
  ext_ = shared_field(pp, static_cast<uint32_t>(L));
  zeta_ = nth_root_of_unity(*ext_, n_eff_);
  embed_ = subfield_isomorphism(*base_, *ext_);
  qi_ = static_cast<uint32_t>(pp.q);
  for (uint32_t a = 0; a < qi_; ++a) unembed_.emplace_back(embed_[a], static_cast<uint8_t>(a));
  std::sort(unembed_.begin(), unembed_.end());
  add_.resize(qi_ * qi_);
  mul_.resize(qi_ * qi_);
  neg_.resize(qi_);
  for (uint32_t a = 0; a < qi_; ++a) {
    neg_[a] = static_cast<uint8_t>(base_->neg(a));
    for (uint32_t b = 0; b < qi_; ++b) {
      add_[a * qi_ + b] = static_cast<uint8_t>(base_->add(a, b));
      mul_[a * qi_ + b] = static_cast<uint8_t>(base_->mul(a, b));
    }
  }
}

Elem SplittingContext::zeta_pow(int64_t j) const {
  const uint64_t r = mod_n(j, n_);
  if (r % d_ != 0) {
    throw PreconditionError("zeta^" + std::to_string(j) + " is outside the splitting field");
  }
  return ext_->pow(zeta_, r / d_);
}

uint8_t SplittingContext::to_base(Elem x) const {
  auto it = std::lower_bound(unembed_.begin(), unembed_.end(), std::make_pair(x, uint8_t{0}));
  if (it == unembed_.end() || it->first != x) {
    throw BugTrap("element " + std::to_string(x) + " does not lie in GF(" +
                  std::to_string(pp_.q) + ")");
  }
  return it->second;
}

// ---- polynomials over GF(q) via the context ----

Poly minimal_polynomial(const SplittingContext& ctx, const CyclotomicCoset& coset) {
  const FieldTable& F = ctx.ext();
  Poly acc{1};
  for (uint64_t j : coset.elements) {
    acc = poly_mul(F, acc, Poly{F.neg(ctx.zeta_pow(static_cast<int64_t>(j))), 1});
  }
  Poly out(acc.size());
  for (size_t i = 0; i < acc.size(); ++i) out[i] = ctx.to_base(acc[i]);
  return out;
}

Word primitive_idempotent(const SplittingContext& ctx, const CyclotomicCoset& coset) {
  const FieldTable& F = ctx.ext();
  const uint64_t n = ctx.n();
  Elem n_elem = 0;
  for (uint64_t i = 0; i < n % F.characteristic(); ++i) n_elem = F.add(n_elem, 1);
  const Elem n_inv = F.inv(n_elem);
  Word out(n);
  for (uint64_t j = 0; j < n; ++j) {
    Elem s = 0;
    for (uint64_t i : coset.elements) {
      s = F.add(s, ctx.zeta_pow(-static_cast<int64_t>((i * j) % n)));
    }
    out[j] = ctx.to_base(F.mul(s, n_inv));
  }
  return out;
}

Word ring_mul(const SplittingContext& ctx, const Word& a, const Word& b) {
  const uint64_t n = ctx.n();
  Word r(n, 0);
  for (uint64_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    const uint8_t* row = ctx.mul_row(a[i]);
    for (uint64_t j = 0; j < n; ++j) {
      const uint64_t t = (i + j) % n;
      r[t] = ctx.add(r[t], row[b[j]]);
    }
  }
  return r;
}

// ---- CyclicCode ----

CyclicCode::CyclicCode(const CodeSpec& spec) : spec_(spec) {
  validate_spec(spec_);
  std::sort(spec_.reps.begin(), spec_.reps.end());
  ctx_ = std::make_shared<const SplittingContext>(spec_.pp, spec_.n, spec_.reps);
  const FieldTable& B = ctx_->base();
  const uint64_t n = spec_.n;

  h_ = Poly{1};
  for (uint64_t r : spec_.reps) {
    cosets_.push_back(coset_of(r, n, spec_.pp.q));
    h_ = poly_mul(B, h_, minimal_polynomial(*ctx_, cosets_.back()));
    k_ += static_cast<uint32_t>(cosets_.back().size());
  }
  Poly xn(n + 1, 0);
  xn[0] = B.neg(1);
  xn[n] = 1;
  auto [g, rem] = poly_divmod(B, xn, h_);
  if (!rem.empty()) throw BugTrap("check polynomial does not divide x^n - 1");
  g_ = g;
  if (g_.size() != n - k_ + 1) throw BugTrap("generator polynomial has wrong degree");

  rows_.assign(k_, Word(n, 0));
  for (uint32_t i = 0; i < k_; ++i) {
    for (size_t j = 0; j < g_.size(); ++j) rows_[i][i + j] = static_cast<uint8_t>(g_[j]);
  }

  // Row i of rows_ has its last nonzero at n-k+i with value 1 (g is monic), so reduce
  // top-down to the identity on the last k coordinates.
  sys_ = rows_;
  for (uint32_t i = k_; i-- > 0;) {
    const uint64_t col = n - k_ + i;
    for (uint32_t r = i + 1; r < k_; ++r) {
      const uint8_t c = sys_[r][col];
      if (c == 0) continue;
      const uint8_t* mrow = ctx_->mul_row(ctx_->neg(c));
      for (uint64_t j = 0; j < n; ++j) sys_[r][j] = ctx_->add(sys_[r][j], mrow[sys_[i][j]]);
    }
  }
  for (uint32_t i = 0; i < k_; ++i) {
    for (uint32_t r = 0; r < k_; ++r) {
      if (sys_[i][n - k_ + r] != (i == r ? 1 : 0)) throw BugTrap("systematic reduction failed");
    }
  }
}

bool CyclicCode::contains(const Word& w) const {
  if (w.size() != spec_.n) return false;
  Poly a(w.begin(), w.end());
  auto [quot, rem] = poly_divmod(ctx_->base(), a, g_);
  return rem.empty();
}

Word CyclicCode::encode(const std::vector<uint8_t>& msg) const {
  if (msg.size() != k_) throw PreconditionError("message length must equal k");
  Word w(spec_.n, 0);
  for (uint32_t i = 0; i < k_; ++i) {
    if (msg[i] == 0) continue;
    const uint8_t* mrow = ctx_->mul_row(msg[i]);
    for (uint64_t j = 0; j < spec_.n; ++j) w[j] = ctx_->add(w[j], mrow[rows_[i][j]]);
  }
  return w;
}

uint64_t CyclicCode::index_of(const uint8_t* w) const {
  uint64_t v = 0;
  for (uint32_t i = k_; i-- > 0;) v = v * spec_.pp.q + w[spec_.n - k_ + i];
  return v;
}

Word CyclicCode::codeword(uint64_t index) const {
  Word w(spec_.n, 0);
  for (uint32_t i = 0; i < k_; ++i, index /= spec_.pp.q) {
    const uint8_t c = static_cast<uint8_t>(index % spec_.pp.q);
    if (c == 0) continue;
    const uint8_t* mrow = ctx_->mul_row(c);
    for (uint64_t j = 0; j < spec_.n; ++j) w[j] = ctx_->add(w[j], mrow[sys_[i][j]]);
  }
  return w;
}

uint64_t CyclicCode::size() const {
  uint64_t s = 1;
  for (uint32_t i = 0; i < k_; ++i) {
    if (s > (uint64_t{1} << 62) / spec_.pp.q) return UINT64_MAX;
    s *= spec_.pp.q;
  }
  return s;
}

CyclicCode build_code(const CodeSpec& spec) { return CyclicCode(spec); }

// ---- weight distribution ----

uint32_t hamming_weight(const Word& w) {
  return static_cast<uint32_t>(std::count_if(w.begin(), w.end(), [](uint8_t c) { return c != 0; }));
}

uint64_t WeightDistribution::total() const {
  return std::accumulate(counts.begin(), counts.end(), uint64_t{0});
}

std::string WeightDistribution::to_csv() const {
  std::ostringstream os;
  os << "weight,count\n";
  for (size_t w = 0; w < counts.size(); ++w) {
    if (counts[w]) os << w << ',' << counts[w] << '\n';
  }
  return os.str();
}

std::string WeightDistribution::to_json() const {
  std::ostringstream os;
  os << "{\"weights\":{";
  bool first = true;
  for (size_t w = 0; w < counts.size(); ++w) {
    if (!counts[w]) continue;
    os << (first ? "" : ",") << '"' << w << "\":" << counts[w];
    first = false;
  }
  os << "}}";
  return os.str();
}

std::string WeightDistribution::to_polynomial() const {
  std::ostringstream os;
  bool first = true;
  for (size_t w = 0; w < counts.size(); ++w) {
    if (!counts[w]) continue;
    if (!first) os << '+';
    first = false;
    if (w == 0) {
      os << counts[w];
    } else {
      if (counts[w] != 1) os << counts[w];
      os << 'x';
      if (w != 1) os << '^' << w;
    }
  }
  return os.str();
}

uint64_t num_nonzero_weights(const WeightDistribution& dist) {
  uint64_t l = 0;
  for (size_t w = 1; w < dist.counts.size(); ++w) l += dist.counts[w] ? 1 : 0;
  return l;
}

namespace {

unsigned resolve_threads(unsigned threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  return threads;
}

// Runs job(c) for c in [0, chunks) on a small pool; each job writes its own histogram.
template <typename Job>
std::vector<uint64_t> run_chunks(uint64_t chunks, unsigned threads, size_t hist_size, Job job) {
  threads = static_cast<unsigned>(std::min<uint64_t>(threads, chunks));
  std::vector<std::vector<uint64_t>> hist(threads, std::vector<uint64_t>(hist_size, 0));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (uint64_t c = t; c < chunks; c += threads) job(c, hist[t]);
    });
  }
  for (auto& th : pool) th.join();
  std::vector<uint64_t> out(hist_size, 0);
  for (const auto& h : hist) {
    for (size_t i = 0; i < hist_size; ++i) out[i] += h[i];
  }
  return out;
}

// Characteristic 2, n <= 64: each GF(2^e) coordinate bit lives in its own 64-bit plane and
// addition is XOR. Messages are walked in Gray-code order over the GF(2)-basis
// {x^s * row_i}.
WeightDistribution weights_char2(const CyclicCode& code, unsigned threads) {
  const auto& ctx = code.ctx();
  const uint32_t e = code.spec().pp.e;
  const uint64_t n = code.n();
  const uint32_t nb = e * code.k();
  std::vector<std::array<uint64_t, 8>> basis;
  for (const Word& row : code.generator_matrix()) {
    for (uint32_t s = 0; s < e; ++s) {
      std::array<uint64_t, 8> v{};
      for (uint64_t j = 0; j < n; ++j) {
        const uint8_t c = ctx.mul(static_cast<uint8_t>(1u << s), row[j]);
        for (uint32_t b = 0; b < e; ++b) {
          if (c >> b & 1) v[b] |= uint64_t{1} << j;
        }
      }
      basis.push_back(v);
    }
  }
  const uint32_t top = std::min<uint32_t>(nb, 6);
  const uint32_t low = nb - top;
  auto job = [&](uint64_t c, std::vector<uint64_t>& hist) {
    std::array<uint64_t, 8> cw{};
    for (uint32_t t = 0; t < top; ++t) {
      if (c >> t & 1) {
        for (uint32_t b = 0; b < e; ++b) cw[b] ^= basis[low + t][b];
      }
    }
    auto weigh = [&] {
      uint64_t any = 0;
      for (uint32_t b = 0; b < e; ++b) any |= cw[b];
      ++hist[std::popcount(any)];
    };
    weigh();
    const uint64_t steps = uint64_t{1} << low;
    for (uint64_t s = 1; s < steps; ++s) {
      const auto& v = basis[std::countr_zero(s)];
      for (uint32_t b = 0; b < e; ++b) cw[b] ^= v[b];
      weigh();
    }
  };
  WeightDistribution d;
  d.n = n;
  d.counts = run_chunks(uint64_t{1} << top, threads, n + 1, job);
  return d;
}

WeightDistribution weights_generic(const CyclicCode& code, unsigned threads) {
  const auto& ctx = code.ctx();
  const uint64_t n = code.n();
  const uint32_t k = code.k();
  const uint32_t q = static_cast<uint32_t>(code.q());
  const auto& rows = code.generator_matrix();
  uint32_t top = 0;
  uint64_t chunks = 1;
  while (top < k && chunks * q <= 256) {
    chunks *= q;
    ++top;
  }
  const uint32_t low = k - top;
  auto job = [&](uint64_t c, std::vector<uint64_t>& hist) {
    // buf[i]: fixed top rows plus a choice for rows i..low-1
    std::vector<Word> buf(low + 1, Word(n, 0));
    Word& base = buf[low];
    for (uint32_t t = 0; t < top; ++t, c /= q) {
      const uint8_t a = static_cast<uint8_t>(c % q);
      if (a == 0) continue;
      const uint8_t* mrow = ctx.mul_row(a);
      for (uint64_t j = 0; j < n; ++j) base[j] = ctx.add(base[j], mrow[rows[low + t][j]]);
    }
    struct Walker {
      const SplittingContext& ctx;
      const std::vector<Word>& rows;
      std::vector<Word>& buf;
      std::vector<uint64_t>& hist;
      uint32_t q;
      void run(uint32_t lvl) {
        if (lvl == 0) {
          ++hist[hamming_weight(buf[0])];
          return;
        }
        const Word& src = buf[lvl];
        Word& dst = buf[lvl - 1];
        const Word& row = rows[lvl - 1];
        for (uint32_t a = 0; a < q; ++a) {
          const uint8_t* mrow = ctx.mul_row(static_cast<uint8_t>(a));
          for (size_t j = 0; j < src.size(); ++j) dst[j] = ctx.add(src[j], mrow[row[j]]);
          run(lvl - 1);
        }
      }
    };
    Walker{ctx, rows, buf, hist, q}.run(low);
  };
  WeightDistribution d;
  d.n = n;
  d.counts = run_chunks(chunks, threads, n + 1, job);
  return d;
}

}  // namespace

WeightDistribution weight_distribution(const CyclicCode& code, unsigned threads, uint64_t cap) {
  const uint64_t size = code.size();
  if (size > cap) {
    throw CapExceeded("q^k = " + std::to_string(size) + " exceeds enumeration cap " +
                      std::to_string(cap));
  }
  threads = resolve_threads(threads);
  WeightDistribution d = (code.spec().pp.p == 2 && code.n() <= 64) ? weights_char2(code, threads)
                                                                     : weights_generic(code, threads);
  if (d.total() != size || d.counts[0] != 1) throw BugTrap("weight distribution does not sum to q^k");
  return d;
}

}  // namespace cwb
