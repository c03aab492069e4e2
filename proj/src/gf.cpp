#include "cwb/gf.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <string>

#include "cwb/error.hpp"

namespace cwb {

namespace {

constexpr uint32_t kNoLog = std::numeric_limits<uint32_t>::max();

uint64_t ipow(uint64_t b, uint32_t e) {
  uint64_t r = 1;
  for (uint32_t i = 0; i < e; ++i) r *= b;
  return r;
}

std::vector<uint64_t> prime_factors(uint64_t x) {
  std::vector<uint64_t> out;
  for (uint64_t d = 2; d * d <= x; ++d) {
    if (x % d == 0) {
      out.push_back(d);
      while (x % d == 0) x /= d;
    }
  }
  if (x > 1) out.push_back(x);
  return out;
}

// ---- polynomials over GF(p), p small prime ----

uint32_t inv_mod_p(uint32_t a, uint32_t p) {
  uint64_t r = 1, b = a % p;
  for (uint32_t e = p - 2; e; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<uint32_t>(r);
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly pmod(Poly a, const Poly& f, uint32_t p) {
  trim(a);
  const size_t df = f.size() - 1;
  const uint32_t lead_inv = inv_mod_p(f.back(), p);
  while (a.size() > df) {
    const uint32_t c = static_cast<uint32_t>(uint64_t{a.back()} * lead_inv % p);
    const size_t shift = a.size() - 1 - df;
    for (size_t j = 0; j <= df; ++j) {
      a[shift + j] = static_cast<uint32_t>((a[shift + j] + uint64_t{p - c} * f[j]) % p);
    }
    trim(a);
  }
  return a;
}

Poly pmulmod(const Poly& a, const Poly& b, const Poly& f, uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<uint32_t>((r[i + j] + uint64_t{a[i]} * b[j]) % p);
    }
  }
  return pmod(std::move(r), f, p);
}

Poly ppowmod(Poly base, uint64_t e, const Poly& f, uint32_t p) {
  Poly r{1};
  base = pmod(std::move(base), f, p);
  while (e) {
    if (e & 1) r = pmulmod(r, base, f, p);
    e >>= 1;
    if (e) base = pmulmod(base, base, f, p);
  }
  return r;
}

Poly pgcd(Poly a, Poly b, uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = pmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool is_irreducible(const Poly& f, uint32_t p) {
  const size_t d = f.size() - 1;
  if (d == 1) return true;
  Poly h{0, 1};
  for (size_t i = 1; i <= d / 2; ++i) {
    h = ppowmod(h, p, f, p);
    Poly t = h;
    if (t.size() < 2) t.resize(2, 0);
    t[1] = (t[1] + p - 1) % p;
    if (pgcd(f, t, p).size() != 1) return false;
  }
  return true;
}

// ---- element <-> digit vector ----

Poly to_digits(Elem v, uint32_t p, uint32_t d) {
  Poly out(d, 0);
  for (uint32_t i = 0; i < d; ++i) {
    out[i] = v % p;
    v /= p;
  }
  return out;
}

Elem from_digits(const Poly& digits, uint32_t p) {
  uint64_t v = 0;
  for (size_t i = digits.size(); i-- > 0;) v = v * p + digits[i];
  return static_cast<Elem>(v);
}

}  // namespace

bool is_prime(uint64_t x) {
  if (x < 2) return false;
  for (uint64_t d = 2; d * d <= x; ++d) {
    if (x % d == 0) return false;
  }
  return true;
}

PrimePower::PrimePower(uint32_t p_, uint32_t e_) : p(p_), e(e_) {
  if (!is_prime(p)) throw PreconditionError("p = " + std::to_string(p) + " is not prime");
  if (e == 0) throw PreconditionError("exponent e must be positive");
  q = 1;
  for (uint32_t i = 0; i < e; ++i) {
    if (q > (uint64_t{1} << 40)) throw PreconditionError("prime power too large");
    q *= p;
  }
}

PrimePower PrimePower::from_order(uint64_t q) {
  if (q < 2) throw PreconditionError("field order must be at least 2");
  const auto fs = prime_factors(q);
  if (fs.size() != 1) throw PreconditionError(std::to_string(q) + " is not a prime power");
  uint32_t e = 0;
  for (uint64_t x = q; x > 1; x /= fs[0]) ++e;
  return PrimePower(static_cast<uint32_t>(fs[0]), e);
}

Poly find_irreducible(const PrimePower& pp, uint32_t d) {
  if (d == 0) throw PreconditionError("degree must be positive");
  const uint32_t p = pp.p;
  const uint64_t span = ipow(p, d);
  if (span > kFieldTableCap) throw CapExceeded("irreducible search beyond table cap");
  for (uint64_t c = 0; c < span; ++c) {
    Poly f = to_digits(static_cast<Elem>(c), p, d);
    f.push_back(1);
    if (d > 1 && f[0] == 0) continue;  // divisible by x
    if (is_irreducible(f, p)) return f;
  }
  throw BugTrap("no irreducible polynomial found");
}

FieldTable::FieldTable(uint32_t p, Poly modulus) : p_(p), modulus_(std::move(modulus)) {
  trim(modulus_);
  if (modulus_.size() < 2 || modulus_.back() != 1) {
    throw PreconditionError("field modulus must be monic of positive degree");
  }
  deg_ = static_cast<uint32_t>(modulus_.size() - 1);
  const uint64_t order = ipow(p, deg_);
  if (order > kFieldTableCap) {
    throw CapExceeded("field of order " + std::to_string(order) + " exceeds table cap 2^24");
  }
  order_ = static_cast<uint32_t>(order);
  const uint32_t nz = order_ - 1;

  auto slow_mul = [&](Elem a, Elem b) {
    return from_digits(pmulmod(to_digits(a, p, deg_), to_digits(b, p, deg_), modulus_, p), p);
  };
  auto slow_pow = [&](Elem a, uint64_t k) {
    Elem r = 1;
    while (k) {
      if (k & 1) r = slow_mul(r, a);
      k >>= 1;
      if (k) a = slow_mul(a, a);
    }
    return r;
  };
  const auto factors = prime_factors(nz);
  auto is_primitive = [&](Elem g) {
    if (g == 0) return false;
    for (uint64_t r : factors) {
      if (slow_pow(g, nz / r) == 1) return false;
    }
    return true;
  };

  // Prefer the class of x; otherwise the smallest primitive index.
  const Elem x = deg_ >= 2 ? p : from_digits({(p - modulus_[0]) % p}, p);
  if (nz == 1) {
    theta_ = 1;
  } else if (is_primitive(x)) {
    theta_ = x;
  } else {
    theta_ = 0;
    for (Elem g = 1; g < order_; ++g) {
      if (is_primitive(g)) {
        theta_ = g;
        break;
      }
    }
    if (theta_ == 0) throw BugTrap("no primitive element found");
  }

  // Multiplication by theta as a GF(p)-linear map on digit vectors.
  std::vector<Poly> images(deg_);
  for (uint32_t j = 0; j < deg_; ++j) {
    Poly xj(j + 1, 0);
    xj[j] = 1;
    images[j] = to_digits(slow_mul(from_digits(pmod(xj, modulus_, p), p), theta_), p, deg_);
  }
  std::vector<Elem> image_elems(deg_);
  for (uint32_t j = 0; j < deg_; ++j) image_elems[j] = from_digits(images[j], p);

  exp_.assign(nz, 0);
  log_.assign(order_, kNoLog);
  Elem cur = 1;
  Poly acc(deg_);
  for (uint32_t i = 0; i < nz; ++i) {
    if (log_[cur] != kNoLog) throw BugTrap("primitive element has short order");
    exp_[i] = cur;
    log_[cur] = i;
    if (p == 2) {
      Elem next = 0;
      for (uint32_t j = 0, v = cur; v; ++j, v >>= 1) {
        if (v & 1) next ^= image_elems[j];
      }
      cur = next;
    } else {
      std::fill(acc.begin(), acc.end(), 0);
      Elem v = cur;
      for (uint32_t j = 0; j < deg_ && v; ++j, v /= p) {
        const uint32_t c = v % p;
        if (c == 0) continue;
        for (uint32_t t = 0; t < deg_; ++t) acc[t] = (acc[t] + c * images[j][t]) % p;
      }
      cur = from_digits(acc, p);
    }
  }
  if (cur != 1) throw BugTrap("theta^(order-1) != 1");

  if (p != 2) {
    zech_.assign(nz, kNoLog);
    for (uint32_t k = 0; k < nz; ++k) {
      const Elem v = exp_[k];
      const uint32_t d0 = v % p;
      const Elem w = v - d0 + (d0 + 1) % p;
      zech_[k] = w == 0 ? kNoLog : log_[w];
    }
  }
}

Elem FieldTable::add(Elem a, Elem b) const {
  if (p_ == 2) return a ^ b;
  if (a == 0) return b;
  if (b == 0) return a;
  const uint32_t nz = order_ - 1;
  const uint32_t la = log_[a];
  const uint32_t lb = log_[b];
  const uint32_t diff = lb >= la ? lb - la : lb + nz - la;
  const uint32_t z = zech_[diff];
  if (z == kNoLog) return 0;
  const uint64_t s = uint64_t{la} + z;
  return exp_[s % nz];
}

Elem FieldTable::neg(Elem a) const {
  if (p_ == 2 || a == 0) return a;
  return exp_[(uint64_t{log_[a]} + (order_ - 1) / 2) % (order_ - 1)];
}

Elem FieldTable::inv(Elem a) const {
  if (a == 0) throw PreconditionError("inverse of zero");
  const uint32_t l = log_[a];
  return exp_[l == 0 ? 0 : (order_ - 1) - l];
}

Elem FieldTable::pow(Elem a, uint64_t k) const {
  if (k == 0) return 1;
  if (a == 0) return 0;
  return exp_[(uint64_t{log_[a]} * (k % (order_ - 1))) % (order_ - 1)];
}

uint32_t FieldTable::log(Elem a) const {
  if (a == 0 || a >= order_) throw PreconditionError("log of zero or out-of-range element");
  return log_[a];
}

FieldTable build_field(const PrimePower& pp, uint32_t m) {
  if (m == 0) throw PreconditionError("extension degree must be positive");
  const uint64_t d = uint64_t{pp.e} * m;
  if (d > 64 || ipow(pp.p, static_cast<uint32_t>(d)) > kFieldTableCap) {
    throw CapExceeded("GF(" + std::to_string(pp.p) + "^" + std::to_string(d) +
                      ") exceeds table cap 2^24");
  }
  return FieldTable(pp.p, find_irreducible(PrimePower(pp.p, 1), static_cast<uint32_t>(d)));
}

std::shared_ptr<const FieldTable> shared_field(const PrimePower& pp, uint32_t m) {
  static std::mutex mu;
  static std::map<std::pair<uint64_t, uint64_t>, std::shared_ptr<const FieldTable>> cache;
  const std::pair<uint64_t, uint64_t> key{pp.p, uint64_t{pp.e} * m};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto f = std::make_shared<const FieldTable>(build_field(pp, m));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(f)).first->second;
}

Elem nth_root_of_unity(const FieldTable& f, uint64_t n) {
  const uint64_t nz = f.order() - 1;
  if (n == 0 || nz % n != 0) {
    throw PreconditionError(std::to_string(n) + " does not divide |F|-1 = " + std::to_string(nz));
  }
  return f.antilog(nz / n);
}

std::vector<Elem> subfield_embed(const FieldTable& big, uint64_t q_sub) {
  const uint64_t nz = big.order() - 1;
  if (q_sub < 2 || nz % (q_sub - 1) != 0) {
    throw PreconditionError("GF(" + std::to_string(q_sub) + ") is not a subfield of GF(" +
                            std::to_string(big.order()) + ")");
  }
  uint64_t x = q_sub;
  while (x % big.characteristic() == 0) x /= big.characteristic();
  if (x != 1) throw PreconditionError("subfield characteristic mismatch");
  // q_sub = p^s is a subfield order iff s | deg, which is equivalent to (q_sub-1) | (|F|-1).
  std::vector<Elem> out(q_sub);
  out[0] = 0;
  const uint64_t step = nz / (q_sub - 1);
  for (uint64_t j = 1; j < q_sub; ++j) out[j] = big.antilog((j - 1) * step);
  return out;
}

std::vector<Elem> subfield_isomorphism(const FieldTable& small, const FieldTable& big) {
  const uint32_t p = small.characteristic();
  if (big.characteristic() != p || big.degree() % small.degree() != 0) {
    throw PreconditionError("not a subfield");
  }
  const Poly& f = small.modulus();
  // Evaluate f (coefficients in GF(p) = indices 0..p-1 of big) at elements of big.
  Elem root = 0;
  bool found = false;
  for (const Elem cand : subfield_embed(big, small.order())) {
    if (poly_eval(big, f, cand) == 0) {
      if (!found || cand < root) root = cand;
      found = true;
    }
  }
  if (!found) throw BugTrap("modulus has no root in extension field");
  std::vector<Elem> out(small.order());
  for (Elem a = 0; a < small.order(); ++a) {
    Elem acc = 0;
    Elem pw = 1;
    for (uint32_t i = 0, v = a; i < small.degree(); ++i, v /= p) {
      for (uint32_t c = v % p; c > 0; --c) acc = big.add(acc, pw);
      pw = big.mul(pw, root);
    }
    out[a] = acc;
  }
  return out;
}

void poly_trim(Poly& a) { trim(a); }

Poly poly_mul(const FieldTable& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

std::pair<Poly, Poly> poly_divmod(const FieldTable& f, const Poly& a, const Poly& b) {
  Poly bb = b;
  trim(bb);
  if (bb.empty()) throw PreconditionError("polynomial division by zero");
  Poly r = a;
  trim(r);
  if (r.size() < bb.size()) return {Poly{}, r};
  Poly quot(r.size() - bb.size() + 1, 0);
  const Elem lead_inv = f.inv(bb.back());
  while (r.size() >= bb.size()) {
    const Elem c = f.mul(r.back(), lead_inv);
    const size_t shift = r.size() - bb.size();
    quot[shift] = c;
    for (size_t j = 0; j < bb.size(); ++j) r[shift + j] = f.sub(r[shift + j], f.mul(c, bb[j]));
    trim(r);
  }
  trim(quot);
  return {quot, r};
}

Elem poly_eval(const FieldTable& f, const Poly& a, Elem x) {
  Elem acc = 0;
  for (size_t i = a.size(); i-- > 0;) acc = f.add(f.mul(acc, x), a[i]);
  return acc;
}

}  // namespace cwb
