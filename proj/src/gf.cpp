#include "gagc/gf.hpp"

#include <algorithm>
#include <numeric>

namespace gagc {
namespace {

// Dense polynomials over GF(p), little-endian coefficients, no leading zeros.
using Poly = std::vector<std::uint32_t>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + (std::uint64_t)a[i] * b[j]) % p;
  }
  // f is monic; classic long division, keeping only the remainder.
  std::size_t df = f.size() - 1;
  for (std::size_t i = r.size(); i-- > df;) {
    std::uint32_t c = r[i];
    if (!c) continue;
    r[i] = 0;
    for (std::size_t j = 0; j < df; ++j)
      r[i - df + j] = (r[i - df + j] + (std::uint64_t)(p - 1) * c % p * f[j]) % p;
  }
  r.resize(df);
  trim(r);
  return r;
}

Poly powmod(Poly base, std::uint64_t n, const Poly& f, std::uint32_t p) {
  Poly r{1};
  while (n) {
    if (n & 1) r = mulmod(r, base, f, p);
    base = mulmod(base, base, f, p);
    n >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  auto inv_mod_p = [p](std::uint32_t x) {
    std::uint32_t r = 1, e = p - 2, base = x;
    while (e) {
      if (e & 1) r = (std::uint64_t)r * base % p;
      base = (std::uint64_t)base * base % p;
      e >>= 1;
    }
    return r;
  };
  while (!b.empty()) {
    // a mod b
    std::uint32_t lead_inv = inv_mod_p(b.back());
    while (a.size() >= b.size() && !a.empty()) {
      std::uint32_t c = (std::uint64_t)a.back() * lead_inv % p;
      if (c) {
        std::size_t off = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j)
          a[off + j] = (a[off + j] + (std::uint64_t)(p - 1) * c % p * b[j]) % p;
      }
      a.pop_back();
      trim(a);
      if (a.size() < b.size()) break;
    }
    trim(a);
    std::swap(a, b);
  }
  return a;
}

std::vector<std::uint32_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d == 0) {
      out.push_back((std::uint32_t)d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back((std::uint32_t)n);
  return out;
}

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// x^{p^k} mod f by k successive p-th powers.
Poly frob_power(const Poly& f, std::uint32_t p, std::uint32_t k) {
  Poly t{0, 1};
  for (std::uint32_t i = 0; i < k; ++i) t = powmod(t, p, f, p);
  return t;
}

bool is_irreducible(const Poly& f, std::uint32_t p, std::uint32_t h) {
  if (h == 1) return true;
  Poly xq = frob_power(f, p, h);
  if (xq != Poly{0, 1}) return false;
  for (std::uint32_t ell : prime_factors(h)) {
    Poly t = frob_power(f, p, h / ell);
    // gcd(x^{p^{h/ell}} - x, f) must be constant
    Poly diff = t;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    Poly g = poly_gcd(diff, f, p);
    if (g.size() > 1) return false;
  }
  return true;
}

bool has_full_order(const Poly& a, const Poly& f, std::uint32_t p,
                    std::uint64_t q1,
                    const std::vector<std::uint32_t>& q1_primes) {
  if (a.empty()) return false;
  if (q1 == 1) return true;
  for (std::uint32_t r : q1_primes)
    if (powmod(a, q1 / r, f, p) == Poly{1}) return false;
  return true;
}

std::uint64_t egcd(std::uint64_t a, std::uint64_t b, std::int64_t& x,
                   std::int64_t& y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return a;
  }
  std::int64_t x1, y1;
  std::uint64_t g = egcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (std::int64_t)(a / b) * y1;
  return g;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m) {
  std::int64_t x, y;
  std::uint64_t g = egcd(a % m, m, x, y);
  if (g != 1) throw std::logic_error("gf: non-invertible residue");
  std::int64_t r = x % (std::int64_t)m;
  if (r < 0) r += (std::int64_t)m;
  return (std::uint64_t)r;
}

}  // namespace

Fe FieldCtx::add_slow(Fe a, Fe b) const {
  Fe out = 0, mult = 1;
  for (std::uint32_t i = 0; i < h; ++i) {
    out += (a % p + b % p) % p * mult;
    a /= p;
    b /= p;
    mult *= p;
  }
  return out;
}

void FieldCtx::build_tables() {
  auto decode = [this](Fe v) {
    Poly c;
    while (v) {
      c.push_back(v % p);
      v /= p;
    }
    return c;
  };
  auto encode = [this](const Poly& c) {
    Fe v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * p + c[i];
    return v;
  };

  Poly f(modulus.begin(), modulus.end());
  Poly g = decode(primitive);

  exp_.assign(2 * (std::size_t)(q - 1), 0);
  log_.assign(q, kNoLog);
  Poly cur{1};
  bool gen_is_x = (g == Poly{0, 1});
  for (std::uint32_t i = 0; i < q - 1; ++i) {
    Fe v = encode(cur);
    exp_[i] = v;
    exp_[i + q - 1] = v;
    if (log_[v] != kNoLog)
      throw std::logic_error("gf: generator is not primitive");
    log_[v] = i;
    if (gen_is_x) {
      // multiply by x: shift up one degree, reduce by the monic modulus
      cur.insert(cur.begin(), 0);
      if (cur.size() == f.size()) {
        std::uint32_t c = cur.back();
        cur.pop_back();
        if (c)
          for (std::uint32_t j = 0; j < h; ++j)
            cur[j] = (cur[j] + (std::uint64_t)(p - 1) * c % p * f[j]) % p;
        trim(cur);
      }
    } else {
      cur = mulmod(cur, g, f, p);
    }
  }

  if (p != 2) {
    neg_.assign(q, 0);
    for (Fe v = 0; v < q; ++v) {
      Fe a = v, out = 0, mult = 1;
      for (std::uint32_t i = 0; i < h; ++i) {
        out += (p - a % p) % p * mult;
        a /= p;
        mult *= p;
      }
      neg_[v] = out;
    }
    std::uint32_t hl = (h + 1) / 2;
    std::uint64_t lo = 1, hi = 1;
    for (std::uint32_t i = 0; i < hl; ++i) lo *= p;
    for (std::uint32_t i = 0; i < h - hl; ++i) hi *= p;
    if (lo <= 512 && hi <= 512) {
      lo_size_ = (std::uint32_t)lo;
      hi_size_ = (std::uint32_t)hi;
      auto build = [this](std::uint32_t n, std::vector<Fe>& t) {
        t.assign((std::size_t)n * n, 0);
        for (std::uint32_t a = 0; a < n; ++a)
          for (std::uint32_t b = 0; b < n; ++b)
            t[(std::size_t)a * n + b] = add_slow(a, b);
      };
      build(lo_size_, add_lo_);
      build(hi_size_, add_hi_);
    }
  }
}

Fe FieldCtx::frobenius(Fe a, std::uint32_t e) const {
  if (a == 0) return 0;
  e %= h;
  std::uint64_t m = pe(e) % (q - 1);
  return exp_[(std::uint64_t)log_[a] * m % (q - 1)];
}

Fe FieldCtx::trace_to_prime(Fe a) const {
  Fe acc = 0, t = a;
  for (std::uint32_t i = 0; i < h; ++i) {
    acc = add(acc, t);
    t = frobenius(t, 1);
  }
  if (acc >= p) throw std::logic_error("gf: trace left the prime subfield");
  return acc;
}

Fe FieldCtx::relative_trace(Fe a, std::uint32_t e) const {
  if (e == 0 || h % e != 0)
    throw std::invalid_argument("gf: relative trace requires e | h");
  Fe acc = 0, t = a;
  for (std::uint32_t i = 0; i < h / e; ++i) {
    acc = add(acc, t);
    t = frobenius(t, e);
  }
  return acc;
}

Fe FieldCtx::relative_norm(Fe a, std::uint32_t e) const {
  std::uint64_t d = pe(e) - 1;
  if (e == 0 || (q - 1) % d != 0)
    throw std::invalid_argument("gf: norm requires (p^e - 1) | (q - 1)");
  if (a == 0) return 0;
  return pow(a, (q - 1) / d);
}

bool FieldCtx::is_power_residue(Fe a, std::uint32_t e) const {
  if (a == 0)
    throw std::invalid_argument("gf: power residue test requires a != 0");
  std::uint64_t g = std::gcd(pe(e) + 1, (std::uint64_t)q - 1);
  return log_[a] % g == 0;
}

Fe FieldCtx::root_pe1(Fe a, std::uint32_t e) const {
  if (a == 0) throw std::invalid_argument("gf: root of zero");
  std::uint64_t c = pe(e) + 1, m = q - 1, d = log_[a];
  std::uint64_t g = std::gcd(c, m);
  if (d % g != 0)
    throw std::invalid_argument("gf: element has no (p^e+1)-th root");
  std::uint64_t m1 = m / g;
  std::uint64_t s = (d / g) % m1 * mod_inverse((c / g) % m1, m1) % m1;
  return exp_[s];
}

std::uint64_t FieldCtx::pe(std::uint32_t e) const {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < e; ++i) r *= p;
  return r;
}

std::vector<Fe> FieldCtx::subfield_elements(std::uint32_t e) const {
  if (e == 0 || h % e != 0)
    throw std::invalid_argument("gf: subfield requires e | h");
  std::vector<Fe> out{0};
  std::uint64_t step = (q - 1) / (pe(e) - 1);
  for (std::uint64_t j = 0; j * step < q - 1; ++j) out.push_back(exp_[j * step]);
  std::sort(out.begin(), out.end());
  return out;
}

FieldPtr make_field(std::uint32_t p, std::uint32_t h) {
  if (!is_prime(p)) throw std::invalid_argument("gf: p must be prime");
  if (h == 0) throw std::invalid_argument("gf: h must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < h; ++i) {
    q *= p;
    if (q > kFieldSizeCap)
      throw std::invalid_argument("gf: p^h exceeds the 2^24 table cap");
  }

  auto ctx = std::make_shared<FieldCtx>();
  ctx->p = p;
  ctx->h = h;
  ctx->q = (std::uint32_t)q;
  ctx->q1_primes = prime_factors(q - 1);

  // Lexicographic scan: digits (c0, c1, ..., c_{h-1}) with c0 most significant
  // in the scan counter, so smaller c0 comes first.
  Poly first_irreducible;
  bool found = false;
  for (std::uint64_t j = 0; j < q && !found; ++j) {
    Poly f(h + 1, 0);
    f[h] = 1;
    std::uint64_t t = j;
    for (std::uint32_t i = h; i-- > 0;) {  // c_{h-1} varies fastest
      f[i] = t % p;
      t /= p;
    }
    if (!is_irreducible(f, p, h)) continue;
    if (first_irreducible.empty()) first_irreducible = f;
    Poly xres = h == 1 ? (f[0] ? Poly{(p - f[0]) % p} : Poly{}) : Poly{0, 1};
    if (has_full_order(xres, f, p, q - 1, ctx->q1_primes)) {
      ctx->modulus.assign(f.begin(), f.end());
      ctx->primitive = h == 1 ? xres[0] : p;  // the residue class of x
      found = true;
    }
  }
  if (!found) {
    if (first_irreducible.empty())
      throw std::logic_error("gf: no irreducible modulus found");
    ctx->modulus.assign(first_irreducible.begin(), first_irreducible.end());
    Poly f = first_irreducible;
    for (Fe cand = 1; cand < q; ++cand) {
      Poly a;
      Fe v = cand;
      while (v) {
        a.push_back(v % p);
        v /= p;
      }
      if (has_full_order(a, f, p, q - 1, ctx->q1_primes)) {
        ctx->primitive = cand;
        break;
      }
    }
    if (ctx->primitive == 0)
      throw std::logic_error("gf: no primitive element found");
  }

  ctx->build_tables();
  return ctx;
}

}  // namespace gagc
