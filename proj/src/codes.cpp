#include "gagc/codes.hpp"

#include <algorithm>
#include <stdexcept>

namespace gagc {
namespace {

// Power sums m_s = sum_t c_t * alpha_t^s for s = 0..smax.
std::vector<Fe> power_sums(const FieldCtx& F, const std::vector<Fe>& alpha,
                           const std::vector<Fe>& coeff, std::size_t smax) {
  std::vector<Fe> m(smax + 1, 0);
  for (std::size_t t = 0; t < alpha.size(); ++t) {
    Fe w = coeff[t];
    for (std::size_t s = 0; s <= smax; ++s) {
      m[s] = F.add(m[s], w);
      if (w == 0) break;  // alpha_t = 0 contributes only at s = 0
      w = F.mul(w, alpha[t]);
    }
  }
  return m;
}

// Vandermonde-with-multipliers minor on the given nodes: full structured
// column minors are prod v * prod_{a<b} (alpha_b - alpha_a).
Fe structured_minor(const FieldCtx& F, const GrsSpec& g,
                    const std::vector<std::size_t>& cols) {
  Fe det = 1;
  for (std::size_t a = 0; a < cols.size(); ++a) {
    det = F.mul(det, g.v[cols[a]]);
    for (std::size_t b = a + 1; b < cols.size(); ++b)
      det = F.mul(det, F.sub(g.alpha[cols[b]], g.alpha[cols[a]]));
  }
  return det;
}

}  // namespace

Fe galois_ip(const FieldCtx& F, const std::vector<Fe>& x,
             const std::vector<Fe>& y, std::uint32_t e) {
  if (x.size() != y.size())
    throw std::invalid_argument("codes: inner product length mismatch");
  if (e >= F.h)
    throw std::invalid_argument("codes: e must satisfy 0 <= e <= h-1");
  Fe acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    acc = F.add(acc, F.mul(x[i], F.frobenius(y[i], e)));
  return acc;
}

GfMatrix galois_gram(const LinearCode& c, std::uint32_t e) {
  return mat_mul(c.gen, transpose(frobenius_entrywise(c.gen, e)));
}

bool grs_form_validates(const LinearCode& c) {
  if (!c.grs || !c.ctx) return false;
  const GrsSpec& g = *c.grs;
  const FieldCtx& F = *c.ctx;
  const std::size_t n = g.alpha.size();
  if (g.v.size() != n || g.k == 0 || g.k > n) return false;
  if (c.gen.rows != g.k || c.gen.cols != n + (c.ext_gamma ? 1 : 0))
    return false;
  std::vector<Fe> sorted = g.alpha;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return false;
  for (Fe x : g.v)
    if (x == 0 || x >= F.q) return false;
  for (Fe x : g.alpha)
    if (x >= F.q) return false;
  for (std::size_t t = 0; t < n; ++t) {
    if (c.gen.at(0, t) != g.v[t]) return false;
    for (std::size_t i = 1; i < g.k; ++i)
      if (c.gen.at(i, t) != F.mul(c.gen.at(i - 1, t), g.alpha[t]))
        return false;
  }
  if (c.ext_gamma) {
    if (*c.ext_gamma == 0 || *c.ext_gamma >= F.q) return false;
    for (std::size_t i = 0; i + 1 < g.k; ++i)
      if (c.gen.at(i, n) != 0) return false;
    if (c.gen.at(g.k - 1, n) != *c.ext_gamma) return false;
  }
  return true;
}

bool is_galois_so(const LinearCode& c, std::uint32_t e) {
  if (!c.ctx) throw std::invalid_argument("codes: missing field context");
  const FieldCtx& F = *c.ctx;
  if (e >= F.h) throw std::invalid_argument("codes: e must satisfy e <= h-1");
  if (c.gen.rows == 0) return true;
  if (grs_form_validates(c)) {
    const GrsSpec& g = *c.grs;
    const std::uint64_t pe = F.pe(e);
    const std::size_t k = g.k;
    const std::size_t smax = (std::size_t)((k - 1) * (pe + 1));
    std::vector<Fe> coeff(g.v.size());
    for (std::size_t t = 0; t < g.v.size(); ++t)
      coeff[t] = F.mul(g.v[t], F.frobenius(g.v[t], e));
    std::vector<Fe> m = power_sums(F, g.alpha, coeff, smax);
    Fe corner = 0;  // extension column contributes only at i = j = k-1
    if (c.ext_gamma) corner = F.mul(*c.ext_gamma, F.frobenius(*c.ext_gamma, e));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        Fe val = m[i + (std::size_t)(j * pe)];
        if (c.ext_gamma && i == k - 1 && j == k - 1) val = F.add(val, corner);
        if (val != 0) return false;
      }
    return true;
  }
  return is_zero(galois_gram(c, e));
}

LinearCode galois_dual(const LinearCode& c, std::uint32_t e) {
  if (!c.ctx) throw std::invalid_argument("codes: missing field context");
  const FieldCtx& F = *c.ctx;
  if (e >= F.h) throw std::invalid_argument("codes: e must satisfy e <= h-1");
  GfMatrix image = frobenius_entrywise(c.gen, (F.h - e) % F.h);
  return LinearCode{c.ctx, null_space(image), std::nullopt, std::nullopt};
}

LinearCode grs_encode(FieldPtr F, const GrsSpec& spec) {
  if (!F) throw std::invalid_argument("codes: missing field context");
  const std::size_t n = spec.alpha.size();
  if (spec.v.size() != n)
    throw std::invalid_argument("codes: nodes/multipliers length mismatch");
  if (spec.k == 0 || spec.k > n)
    throw std::invalid_argument("codes: dimension must satisfy 1 <= k <= n");
  std::vector<Fe> sorted = spec.alpha;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("codes: repeated evaluation nodes");
  for (Fe x : spec.v)
    if (x == 0) throw std::invalid_argument("codes: zero multiplier");
  GfMatrix gen(F, spec.k, n);
  for (std::size_t t = 0; t < n; ++t) {
    gen.at(0, t) = spec.v[t];
    for (std::size_t i = 1; i < spec.k; ++i)
      gen.at(i, t) = F->mul(gen.at(i - 1, t), spec.alpha[t]);
  }
  return LinearCode{std::move(F), std::move(gen), spec, std::nullopt};
}

std::vector<Fe> grs_dual_multiplier(const FieldCtx& F,
                                    const std::vector<Fe>& alpha) {
  const std::size_t n = alpha.size();
  std::vector<Fe> u(n);
  for (std::size_t i = 0; i < n; ++i) {
    Fe prod = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      Fe d = F.sub(alpha[i], alpha[j]);
      if (d == 0)
        throw std::invalid_argument("codes: repeated evaluation nodes");
      prod = F.mul(prod, d);
    }
    u[i] = F.inv(prod);
  }
  return u;
}

std::size_t code_rank(const LinearCode& c) {
  if (grs_form_validates(c)) {
    // Leading k columns form a Vandermonde-with-multipliers minor on
    // distinct nodes; a nonzero product certifies rank = k exactly.
    const FieldCtx& F = *c.ctx;
    std::vector<std::size_t> lead(c.grs->k);
    for (std::size_t i = 0; i < lead.size(); ++i) lead[i] = i;
    if (structured_minor(F, *c.grs, lead) != 0) return c.grs->k;
  }
  return rank_of(c.gen);
}

DistanceResult min_distance(const LinearCode& c, const DistanceMode& mode) {
  if (!c.ctx) throw std::invalid_argument("codes: missing field context");
  const FieldCtx& F = *c.ctx;
  const std::size_t k = c.gen.rows, n = c.gen.cols;
  if (k == 0) throw std::invalid_argument("codes: distance of the zero code");
  DistanceResult out;
  out.d = n + 1;  // above any achievable weight

  auto weight = [](const std::vector<Fe>& w) {
    std::size_t cnt = 0;
    for (Fe x : w)
      if (x != 0) ++cnt;
    return cnt;
  };

  if (mode.kind == DistanceMode::Exhaustive) {
    // (q^k-1)/(q-1) normalized messages, counted as total_k = total_{k-1}*q+1
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < k; ++i) {
      total = total * F.q + 1;
      if (total > kCodewordBudget)
        throw std::invalid_argument(
            "codes: exhaustive distance exceeds the 10^7 message budget");
    }
    // Normalized messages: first nonzero symbol is 1 at position f, the
    // k-f-1 following symbols sweep all values with the last varying fastest.
    for (std::size_t f = 0; f < k; ++f) {
      const std::size_t free = k - f - 1;
      std::vector<Fe> digits(free, 0);
      std::vector<std::vector<Fe>> partial(
          free + 1, std::vector<Fe>(n, 0));
      for (std::size_t t = 0; t < n; ++t) partial[0][t] = c.gen.at(f, t);
      for (std::size_t lvl = 1; lvl <= free; ++lvl) partial[lvl] = partial[0];
      for (;;) {
        ++out.enumerated;
        std::size_t w = weight(partial[free]);
        if (w > 0) out.d = std::min(out.d, w);
        std::size_t i = free;
        while (i-- > 0 && digits[i] == F.q - 1) digits[i] = 0;
        if (i == (std::size_t)-1) break;
        ++digits[i];
        for (std::size_t lvl = i + 1; lvl <= free; ++lvl) {
          Fe d = digits[lvl - 1];
          for (std::size_t t = 0; t < n; ++t)
            partial[lvl][t] =
                F.add(partial[lvl - 1][t], F.mul(d, c.gen.at(f + lvl, t)));
        }
      }
    }
    out.exact = true;
    if (out.d > n) out.d = 0;  // no nonzero codeword (zero row space)
    out.bound_ok = out.d >= mode.bound;
    return out;
  }

  Rng rng(mode.seed);
  out.bound_ok = true;
  std::vector<Fe> msg(k), cw(n);
  for (std::size_t s = 0; s < mode.samples; ++s) {
    bool nonzero = false;
    while (!nonzero) {
      for (Fe& x : msg) {
        x = (Fe)rng.below(F.q);
        nonzero |= x != 0;
      }
    }
    std::fill(cw.begin(), cw.end(), 0);
    for (std::size_t i = 0; i < k; ++i) {
      if (msg[i] == 0) continue;
      for (std::size_t t = 0; t < n; ++t)
        cw[t] = F.add(cw[t], F.mul(msg[i], c.gen.at(i, t)));
    }
    std::size_t w = weight(cw);
    ++out.enumerated;
    if (w == 0) continue;  // rank-deficient: message hit the kernel
    out.d = std::min(out.d, w);
    if (w < mode.bound) {
      out.bound_ok = false;
      return out;
    }
  }
  if (out.d > n) out.d = 0;
  return out;
}

MdsResult is_mds(const LinearCode& c, const MdsMode& mode) {
  if (!c.ctx) throw std::invalid_argument("codes: missing field context");
  const FieldCtx& F = *c.ctx;
  const std::size_t k = c.gen.rows, n = c.gen.cols;
  if (k == 0 || k > n)
    throw std::invalid_argument("codes: MDS check needs 1 <= k <= n");

  const bool subsets_feasible = binomial_capped(n, k, kSubsetBudget) <=
                                kSubsetBudget;
  std::uint64_t total = 0;
  bool distance_feasible = true;
  for (std::size_t i = 0; i < k && distance_feasible; ++i) {
    total = total * F.q + 1;
    if (total > kCodewordBudget) distance_feasible = false;
  }

  MdsResult out;
  auto run_exhaustive = [&]() {
    if (subsets_feasible) {
      auto v = all_k_subsets_nonsingular(c.gen, SubsetMode::exhaustive());
      out.ok = v.ok;
      out.mode_used = "exhaustive-subsets";
      out.checked = v.checked;
    } else if (distance_feasible) {
      auto d = min_distance(c, DistanceMode::exhaustive());
      out.ok = d.d == n - k + 1;
      out.mode_used = "exhaustive-distance";
      out.checked = d.enumerated;
    } else {
      throw std::invalid_argument(
          "codes: exhaustive MDS check exceeds both budgets");
    }
  };

  switch (mode.kind) {
    case MdsMode::Exhaustive:
      run_exhaustive();
      break;
    case MdsMode::Auto:
      if (subsets_feasible || distance_feasible) {
        run_exhaustive();
        break;
      }
      [[fallthrough]];
    case MdsMode::Sampled: {
      out.mode_used = "sampled-subsets";
      if (grs_form_validates(c)) {
        const GrsSpec& g = *c.grs;
        Rng rng(mode.seed);
        for (std::size_t s = 0; s < mode.count; ++s) {
          std::vector<std::size_t> idx = rng.subset(n, k);
          ++out.checked;
          Fe det;
          if (c.ext_gamma && idx.back() == n - 1) {
            idx.pop_back();  // expansion along the extension column
            det = F.mul(*c.ext_gamma, structured_minor(F, g, idx));
          } else {
            det = structured_minor(F, g, idx);
          }
          if (det == 0) return out;
        }
        out.ok = true;
      } else {
        auto v = all_k_subsets_nonsingular(
            c.gen, SubsetMode::sampled(mode.count, mode.seed));
        out.ok = v.ok;
        out.checked = v.checked;
      }
      break;
    }
  }
  return out;
}

}  // namespace gagc
