/*
 * Table-backed arithmetic for GF(p^h), p prime, p^h <= 2^24.
 *
 * Elements are encoded as integers in [0, q): the value c0 + c1*p + ... +
 * c_{h-1}*p^{h-1} packs the coordinates of the element in the polynomial
 * basis {1, x, ..., x^{h-1}} little-endian.  The prime subfield therefore
 * occupies values 0..p-1 and encodings are comparable as plain integers.
 *
 * make_field(p, h) is deterministic: the modulus is the lexicographically
 * smallest monic irreducible of degree h (coefficients compared from the
 * constant term upward) whose residue class x is primitive.  Such a modulus
 * exists for every (p, h); if enumeration ever exhausts without one, the
 * smallest irreducible is kept and the primitive element is the smallest
 * element of full multiplicative order.
 */
#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace gagc {

using Fe = std::uint32_t;

inline constexpr Fe kNoLog = 0xFFFFFFFFu;           // dlog sentinel for 0
inline constexpr std::uint64_t kFieldSizeCap = 1u << 24;

class FieldCtx {
 public:
  std::uint32_t p = 0;
  std::uint32_t h = 0;
  std::uint32_t q = 0;                 // p^h
  std::vector<std::uint32_t> modulus;  // c0..c_h, monic (c_h == 1)
  Fe primitive = 0;                    // generator of the unit group
  std::vector<std::uint32_t> q1_primes;  // distinct prime factors of q-1

  Fe add(Fe a, Fe b) const {
    if (p == 2) return a ^ b;
    if (!add_lo_.empty())
      return add_lo_[(a % lo_size_) * lo_size_ + b % lo_size_] +
             lo_size_ * add_hi_[(a / lo_size_) * hi_size_ + b / lo_size_];
    return add_slow(a, b);
  }
  Fe neg(Fe a) const { return p == 2 ? a : neg_[a]; }
  Fe sub(Fe a, Fe b) const { return p == 2 ? a ^ b : add(a, neg_[b]); }

  Fe mul(Fe a, Fe b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Fe inv(Fe a) const {
    if (a == 0) throw std::invalid_argument("gf: inverse of zero");
    return exp_[q - 1 - log_[a]];
  }
  Fe div(Fe a, Fe b) const { return mul(a, inv(b)); }

  // w^s for any s >= 0 (reduced mod q-1).
  Fe exp(std::uint64_t s) const { return exp_[s % (q - 1)]; }

  std::uint32_t dlog(Fe a) const {
    if (a == 0) throw std::invalid_argument("gf: dlog of zero");
    return log_[a];
  }
  // Raw table access for hot loops: log_raw(0) == kNoLog.
  std::uint32_t log_raw(Fe a) const { return log_[a]; }
  // Valid for arguments < 2(q-1); used with sums of two dlogs.
  Fe exp_raw(std::uint64_t s) const { return exp_[s]; }

  Fe pow(Fe a, std::uint64_t m) const {
    if (a == 0) return m == 0 ? 1 : 0;
    return exp_[(std::uint64_t)log_[a] * (m % (q - 1)) % (q - 1)];
  }

  // a^{p^e}; e is reduced mod h since Frobenius has order h.
  Fe frobenius(Fe a, std::uint32_t e) const;

  // Trace onto GF(p): sum of a^{p^i}, 0 <= i < h.  Lands in values 0..p-1.
  Fe trace_to_prime(Fe a) const;

  // Trace onto the subfield GF(p^e): sum of a^{p^{e*i}}, 0 <= i < h/e.
  // Requires e >= 1 and e | h.
  Fe relative_trace(Fe a, std::uint32_t e) const;

  // Norm onto GF(p^e): a^{(q-1)/(p^e-1)}.  Requires (p^e - 1) | (q - 1).
  Fe relative_norm(Fe a, std::uint32_t e) const;

  // Membership in E = { x^{p^e + 1} : x in GF(q)^* }.  Requires a != 0.
  bool is_power_residue(Fe a, std::uint32_t e) const;

  // Canonical (p^e+1)-th root: the solution b of b^{p^e+1} = a with the
  // smallest dlog.  Throws if a is 0 or no root exists.
  Fe root_pe1(Fe a, std::uint32_t e) const;

  // p^e as a 64-bit integer (no reduction).
  std::uint64_t pe(std::uint32_t e) const;

  // The elements of the subfield GF(p^e), ascending by encoding.
  // Requires e >= 1 and e | h.
  std::vector<Fe> subfield_elements(std::uint32_t e) const;

  bool same_field(const FieldCtx& o) const {
    return p == o.p && h == o.h && modulus == o.modulus;
  }

 private:
  friend std::shared_ptr<const FieldCtx> make_field(std::uint32_t,
                                                    std::uint32_t);
  Fe add_slow(Fe a, Fe b) const;
  void build_tables();

  std::vector<Fe> exp_;   // size 2(q-1): w^i, doubled to skip a reduction
  std::vector<Fe> log_;   // size q, log_[0] == kNoLog
  std::vector<Fe> neg_;   // size q (empty for p == 2)
  std::vector<Fe> add_lo_, add_hi_;  // split digit-sum tables (may be empty)
  std::uint32_t lo_size_ = 0, hi_size_ = 0;
};

using FieldPtr = std::shared_ptr<const FieldCtx>;

FieldPtr make_field(std::uint32_t p, std::uint32_t h);

}  // namespace gagc
