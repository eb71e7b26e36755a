#include "gagc/constructions.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <stdexcept>

namespace gagc {

namespace {

constexpr std::size_t kRepSearchBudget = 10'000;

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               start)
      .count();
}

// Integer scalar as a prime-subfield element; v must be coprime to p when a
// nonzero scalar is expected.
Fe int_scalar(const FieldCtx& F, std::uint64_t v) {
  return static_cast<Fe>(v % F.p);
}

void check_sorted_distinct(const std::vector<Fe>& elems,
                           const std::string& who) {
  require(!elems.empty(), who + ": empty element list");
  require(std::is_sorted(elems.begin(), elems.end()) &&
              std::adjacent_find(elems.begin(), elems.end()) == elems.end(),
          who + ": elements must be distinct and ascending");
}

// Lexicographic size-k index subsets of [0, n); idx starts as {0..k-1}.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  std::size_t k = idx.size(), i = k;
  while (i-- > 0) {
    if (idx[i] != i + n - k) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::uint64_t> divisors_of(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d * d <= v; ++d) {
    if (v % d) continue;
    out.push_back(d);
    if (d != v / d) out.push_back(v / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

KWindow k_window(const FieldCtx& F, std::size_t n_len, std::uint32_t genus,
                 std::uint32_t e) {
  KWindow w;
  w.k_min = 2 * static_cast<std::size_t>(genus) + 1;
  std::uint64_t pe = F.pe(e);
  w.k_max = static_cast<std::size_t>((n_len + pe + 2 * genus - 1) / (pe + 1));
  w.nonempty = w.k_max >= w.k_min;
  return w;
}

bool criterion_check(const FieldCtx& F, std::size_t deg_g,
                     std::int64_t h_coeff, std::uint32_t e, std::uint32_t genus,
                     std::size_t k, std::size_t n_points) {
  std::int64_t scaled = static_cast<std::int64_t>(F.pe(e)) *
                        static_cast<std::int64_t>(deg_g);
  if (scaled > h_coeff) return false;
  std::int64_t lo = 2 * static_cast<std::int64_t>(genus) - 2;
  if (!(lo < static_cast<std::int64_t>(deg_g) && deg_g < n_points))
    return false;
  return k >= 2 * static_cast<std::size_t>(genus) + 1;
}

std::vector<Fe> derivative_values(const FieldCtx& F,
                                  const std::vector<Fe>& elems) {
  check_sorted_distinct(elems, "derivative_values");
  const std::size_t n = elems.size();
  std::vector<Fe> out(n, 1);
  for (std::size_t j = 0; j < n; ++j) {
    Fe acc = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == j) continue;
      acc = F.mul(acc, F.sub(elems[j], elems[i]));
    }
    out[j] = acc;
  }
  return out;
}

std::vector<Fe> multipliers_from_derivatives(const FieldCtx& F,
                                             const std::vector<Fe>& hp,
                                             std::uint32_t e) {
  std::vector<Fe> v(hp.size());
  for (std::size_t j = 0; j < hp.size(); ++j) {
    require(hp[j] != 0, "multipliers: zero derivative value");
    if (!F.is_power_residue(hp[j], e))
      throw std::invalid_argument(
          "h'(u) = " + std::to_string(hp[j]) + " at index " +
          std::to_string(j) + " is not a (p^e+1)-st power residue");
    v[j] = F.inv(F.root_pe1(hp[j], e));
  }
  return v;
}

bool ConstructionReport::all_pass() const {
  for (const CheckOutcome& c : checks)
    if (c.verdict == "fail") return false;
  return true;
}

const CheckOutcome* ConstructionReport::find(const std::string& name) const {
  for (const CheckOutcome& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

ConstructionReport verify_code(const LinearCode& c, std::uint32_t e,
                               std::size_t expected_dim,
                               std::size_t design_distance, bool mds_expected,
                               const VerifyOptions& opt, std::string theorem,
                               std::string params, CheckOutcome criterion) {
  require(opt.mds_mode == "auto" || opt.mds_mode == "exhaustive" ||
              opt.mds_mode == "sampled" || opt.mds_mode == "none",
          "verify: unknown mds mode " + opt.mds_mode);
  const FieldCtx& F = *c.ctx;
  ConstructionReport rep;
  rep.theorem = std::move(theorem);
  rep.params = std::move(params);
  rep.p = F.p;
  rep.h = F.h;
  rep.e = e;
  rep.length = c.length();
  rep.design_distance = design_distance;
  rep.seed = opt.seed;
  rep.checks.push_back(std::move(criterion));

  {
    auto t0 = Clock::now();
    bool so = is_galois_so(c, e);
    rep.checks.push_back({"galois_so", so ? "pass" : "fail",
                          grs_form_validates(c) ? "power-sum" : "dense-gram",
                          ms_since(t0)});
  }
  {
    auto t0 = Clock::now();
    std::size_t rk = code_rank(c);
    rep.dimension = rk;
    rep.checks.push_back(
        {"dimension", rk == expected_dim ? "pass" : "fail", "rank",
         ms_since(t0)});
  }
  if (opt.mds_mode == "none") {
    rep.checks.push_back({"mds", "skipped", "none", 0});
  } else if (mds_expected) {
    MdsMode mode;
    mode.kind = opt.mds_mode == "exhaustive" ? MdsMode::Exhaustive
                : opt.mds_mode == "sampled"  ? MdsMode::Sampled
                                             : MdsMode::Auto;
    mode.count = opt.samples;
    mode.seed = opt.seed;
    auto t0 = Clock::now();
    MdsResult r = is_mds(c, mode);
    std::string verdict = !r.ok                  ? "fail"
                          : r.mode_used.rfind("exhaustive", 0) == 0 ? "pass"
                                                                    : "certificate";
    rep.checks.push_back({"mds", verdict, r.mode_used, ms_since(t0)});
  } else {
    // Minimum-distance bound check, exhaustive when the normalized message
    // count fits the budget and sampled otherwise.
    bool feasible = true;
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < c.dim_rows(); ++i) {
      total = total * F.q + 1;
      if (total > kCodewordBudget) {
        feasible = false;
        break;
      }
    }
    auto t0 = Clock::now();
    if (feasible && opt.mds_mode != "sampled") {
      DistanceResult dr = min_distance(c, DistanceMode::exhaustive());
      rep.checks.push_back({"mds",
                            dr.d >= design_distance ? "pass" : "fail",
                            "exhaustive-distance", ms_since(t0)});
    } else {
      require(opt.mds_mode != "exhaustive",
              "verify: exhaustive distance enumeration exceeds the budget");
      DistanceResult dr = min_distance(
          c, DistanceMode::bound_check(design_distance, opt.samples, opt.seed));
      rep.checks.push_back({"mds", dr.bound_ok ? "certificate" : "fail",
                            "sampled-distance", ms_since(t0)});
    }
  }
  return rep;
}

// ---- Projective line --------------------------------------------------------

EvalSet eval_set_t3(FieldPtr F, std::uint32_t e, std::uint32_t t) {
  require(F != nullptr, "eval_set_t3: null field");
  const FieldCtx& f = *F;
  require(f.p != 2, "t3 needs odd characteristic");
  require(e >= 1 && e < f.h && f.h % (2 * e) == 0, "t3 needs 2e | h");
  std::uint64_t pe = f.pe(e), q1 = f.q - 1;
  require(q1 % (pe + 1) == 0, "t3 needs (p^e + 1) | (q - 1)");
  std::uint64_t N = q1 / (pe + 1);
  std::uint64_t p2e = f.pe(2 * e);
  require(N % (p2e - 1) == 0, "t3 needs (p^{2e} - 1) | (q - 1)/(p^e + 1)");
  require(t <= pe, "t3 needs t <= p^e");

  std::vector<Fe> el;
  el.reserve((t + 1) * N + 1);
  el.push_back(0);
  for (std::uint64_t j = 0; j <= t; ++j)
    for (std::uint64_t s = 0; s < N; ++s) el.push_back(f.exp(j + s * (pe + 1)));
  std::sort(el.begin(), el.end());
  require(std::adjacent_find(el.begin(), el.end()) == el.end(),
          "t3: coset leaders collide");
  return {F, e, std::move(el), "t3", "t=" + std::to_string(t)};
}

Construction construct_line(const EvalSet& U, std::size_t k,
                            const VerifyOptions& opt) {
  require(U.ctx != nullptr, "construct_line: null field");
  const FieldCtx& F = *U.ctx;
  check_sorted_distinct(U.elements, "construct_line");
  const std::size_t n = U.elements.size();
  KWindow win = k_window(F, n, 0, U.e);
  require(win.nonempty && k >= win.k_min && k <= win.k_max,
          "k=" + std::to_string(k) + " outside the admissible window [" +
              std::to_string(win.k_min) + ", " + std::to_string(win.k_max) +
              "]");

  auto t0 = Clock::now();
  bool crit = criterion_check(F, k - 1,
                              static_cast<std::int64_t>(n) -
                                  static_cast<std::int64_t>(k) - 1,
                              U.e, 0, k, n);
  if (!crit) throw std::logic_error("construct_line: window/criterion mismatch");
  std::vector<Fe> hp = derivative_values(F, U.elements);
  std::vector<Fe> v = multipliers_from_derivatives(F, hp, U.e);
  LinearCode code = grs_encode(U.ctx, GrsSpec{U.elements, std::move(v), k});
  CheckOutcome crit_out{"criterion", "pass", "window", ms_since(t0)};

  ConstructionReport rep =
      verify_code(code, U.e, k, n - k + 1, /*mds_expected=*/true, opt,
                  U.theorem, U.params, std::move(crit_out));
  return {std::move(code), std::move(rep)};
}

EmbedOutcome embed(const LinearCode& c, std::uint32_t e,
                   const VerifyOptions& opt) {
  require(c.ctx != nullptr, "embed: null field");
  const FieldCtx& F = *c.ctx;
  require(F.p != 2, "embed needs odd characteristic");
  require(e < F.h, "embed: e out of range");
  require(c.grs.has_value() && !c.ext_gamma.has_value() &&
              grs_form_validates(c),
          "embed needs a clean node-multiplier generator");
  const std::size_t n = c.length(), k = c.grs->k;
  const std::uint64_t pe = F.pe(e);
  require(k * (pe + 1) <= n + pe - 1,
          "embed: k above floor((n + p^e - 1)/(p^e + 1))");

  auto t0 = Clock::now();
  std::vector<Fe> hp = derivative_values(F, c.grs->alpha);
  for (std::size_t i = 0; i < n; ++i)
    require(F.mul(F.pow(c.grs->v[i], pe + 1), hp[i]) == 1,
            "embed: multipliers do not match the vanishing-polynomial "
            "residues at index " +
                std::to_string(i));
  require(is_galois_so(c, e), "embed: input code is not self-orthogonal");

  int path;
  if (k * (pe + 1) == n - 1) {
    path = 1;
  } else if (k * (pe + 1) < n - 1) {
    path = 2;
  } else {
    require((F.q - 1) % (n - 1) == 0,
            "embed: the high-degree path needs (n - 1) | (q - 1)");
    path = 3;
  }

  LinearCode out;
  out.ctx = c.ctx;
  out.grs = c.grs;
  out.grs->k = k + 1;
  if (path == 1) {
    Fe gamma;
    try {
      gamma = F.root_pe1(F.neg(1), e);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument(
          "embed: no gamma with gamma^{p^e+1} = -1 exists");
    }
    out.ext_gamma = gamma;
    out.gen = GfMatrix(c.ctx, k + 1, n + 1);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t t = 0; t < n; ++t) out.gen.at(i, t) = c.gen.at(i, t);
    for (std::size_t t = 0; t < n; ++t)
      out.gen.at(k, t) = F.mul(c.gen.at(k - 1, t), c.grs->alpha[t]);
    out.gen.at(k, n) = gamma;
  } else {
    out.gen = GfMatrix(c.ctx, k + 1, n);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t t = 0; t < n; ++t) out.gen.at(i, t) = c.gen.at(i, t);
    for (std::size_t t = 0; t < n; ++t)
      out.gen.at(k, t) = F.mul(c.gen.at(k - 1, t), c.grs->alpha[t]);
  }
  CheckOutcome crit_out{"criterion", "pass", "embed-window", ms_since(t0)};

  std::size_t design = out.length() - (k + 1) + 1;
  ConstructionReport rep = verify_code(
      out, e, k + 1, design, /*mds_expected=*/true, opt, "embed",
      "path=" + std::to_string(path) + " k=" + std::to_string(k + 1),
      std::move(crit_out));
  return {std::move(out), path, std::move(rep)};
}

// ---- Elliptic ---------------------------------------------------------------

EvalSet eval_set_t5(FieldPtr F, std::uint32_t e, int variant) {
  require(F != nullptr, "eval_set_t5: null field");
  const FieldCtx& f = *F;
  require(f.p == 2, "t5 needs characteristic 2");
  require(variant == 1 || variant == 2, "t5 variant must be 1 or 2");
  require(e < f.h && (e == 0 || f.h % (2 * e) == 0), "t5 needs 2e | h");
  std::vector<Fe> el;
  for (Fe x = 1; x < f.q; ++x) {
    if (!f.is_power_residue(x, e)) continue;  // x must lie in E
    Fe x3 = f.mul(f.mul(x, x), x);
    Fe arg = variant == 1 ? x3 : f.add(x3, x);
    if (f.trace_to_prime(arg) == 0) el.push_back(x);
  }
  return {F, e, std::move(el), "t5", "U" + std::to_string(variant)};
}

Construction construct_elliptic(FieldPtr F, std::uint32_t e, int variant,
                                std::size_t n, std::size_t k,
                                const VerifyOptions& opt) {
  EvalSet U = eval_set_t5(F, e, variant);
  require(n >= 1 && n <= U.elements.size(),
          "n=" + std::to_string(n) + " exceeds the evaluation set (size " +
              std::to_string(U.elements.size()) + ")");
  U.elements.resize(n);
  U.params += " n=" + std::to_string(n);
  const FieldCtx& f = *F;
  KWindow win = k_window(f, 2 * n, 1, e);
  require(win.nonempty && k >= win.k_min && k <= win.k_max,
          "k=" + std::to_string(k) + " outside the admissible window [" +
              std::to_string(win.k_min) + ", " + std::to_string(win.k_max) +
              "]");

  auto t0 = Clock::now();
  std::vector<Fe> hp = derivative_values(f, U.elements);
  std::vector<Fe> v = multipliers_from_derivatives(f, hp, e);
  CurveModel curve = enumerate_points(
      CurveFamily::Elliptic, F,
      EllipticParams{1, static_cast<Fe>(variant == 2 ? 1 : 0), 0});
  std::vector<CurvePoint> pts;
  std::vector<Fe> vv;
  for (std::size_t t = 0; t < n; ++t) {
    auto lo = std::lower_bound(curve.points.begin(), curve.points.end(),
                               CurvePoint{U.elements[t], 0});
    std::size_t cnt = 0;
    for (auto it = lo; it != curve.points.end() && it->x == U.elements[t];
         ++it, ++cnt) {
      pts.push_back(*it);
      vv.push_back(v[t]);
    }
    if (cnt != 2)
      throw std::logic_error("construct_elliptic: fiber is not a double point");
  }
  if (!criterion_check(f, k - 1, static_cast<std::int64_t>(2 * n) -
                                     static_cast<std::int64_t>(k) + 1,
                       e, 1, k, 2 * n))
    throw std::logic_error("construct_elliptic: window/criterion mismatch");
  CheckOutcome crit_out{"criterion", "pass", "window", ms_since(t0)};

  EvaluatedCode ec =
      evaluate_code(curve, pts, static_cast<std::uint32_t>(k - 1), vv);
  if (!ec.dim_window_ok)
    throw std::logic_error("construct_elliptic: degree left the window");
  ConstructionReport rep =
      verify_code(ec.code, e, k - 1, 2 * n - k + 1, /*mds_expected=*/false,
                  opt, U.theorem, U.params, std::move(crit_out));
  return {std::move(ec.code), std::move(rep)};
}

// ---- Hyper-elliptic ---------------------------------------------------------

Construction construct_hyper_elliptic(FieldPtr F, std::uint32_t e,
                                      std::size_t n, std::size_t k,
                                      const VerifyOptions& opt) {
  require(F != nullptr, "construct_hyper_elliptic: null field");
  const FieldCtx& f = *F;
  require(f.p == 2 && f.h % 2 == 0 && f.q >= 4,
          "t6 needs characteristic 2 and square field order >= 4");
  require(e < f.h, "t6: e out of range");
  require(n >= 2 && n <= f.q && (f.q - 1) % (n - 1) == 0,
          "t6 needs (n - 1) | (q - 1) and n <= q");
  const std::uint32_t s = static_cast<std::uint32_t>(f.pe(f.h / 2));
  const std::uint32_t g = s / 2;
  KWindow win = k_window(f, 2 * n, g, e);
  require(win.nonempty && k >= win.k_min && k <= win.k_max,
          "k=" + std::to_string(k) + " outside the admissible window [" +
              std::to_string(win.k_min) + ", " + std::to_string(win.k_max) +
              "]");

  auto t0 = Clock::now();
  std::vector<Fe> el;
  el.reserve(n);
  el.push_back(0);
  for (std::uint64_t i = 0; i + 1 < n; ++i)
    el.push_back(f.exp(i * ((f.q - 1) / (n - 1))));
  std::sort(el.begin(), el.end());
  require(std::adjacent_find(el.begin(), el.end()) == el.end(),
          "t6: evaluation set collision");
  std::vector<Fe> hp = derivative_values(f, el);
  for (Fe d : hp)
    if (d != 1)
      throw std::logic_error("construct_hyper_elliptic: h' is not 1");
  std::vector<Fe> v = multipliers_from_derivatives(f, hp, e);

  CurveModel curve = enumerate_points(CurveFamily::HyperElliptic, F);
  std::vector<CurvePoint> pts;
  std::vector<Fe> vv;
  for (std::size_t t = 0; t < n; ++t) {
    auto lo = std::lower_bound(curve.points.begin(), curve.points.end(),
                               CurvePoint{el[t], 0});
    for (auto it = lo; it != curve.points.end() && it->x == el[t]; ++it) {
      pts.push_back(*it);
      vv.push_back(v[t]);
    }
  }
  if (pts.size() != 2 * n)
    throw std::logic_error("construct_hyper_elliptic: fiber count mismatch");
  if (!criterion_check(f, k - 1, static_cast<std::int64_t>(2 * n) + s -
                                     static_cast<std::int64_t>(k) - 1,
                       e, g, k, 2 * n))
    throw std::logic_error("construct_hyper_elliptic: criterion mismatch");
  CheckOutcome crit_out{"criterion", "pass", "window", ms_since(t0)};

  EvaluatedCode ec =
      evaluate_code(curve, pts, static_cast<std::uint32_t>(k - 1), vv);
  if (!ec.dim_window_ok)
    throw std::logic_error("construct_hyper_elliptic: degree left the window");
  ConstructionReport rep = verify_code(
      ec.code, e, k - g, 2 * n - k + 1, /*mds_expected=*/false, opt, "t6",
      "n=" + std::to_string(n), std::move(crit_out));
  return {std::move(ec.code), std::move(rep)};
}

// ---- Hermitian --------------------------------------------------------------

namespace {

// Shapes whose vanishing polynomial is x^a * prod_i (x^M - d_i) with the d_i
// distinct M-th powers: h' is constant on each coset when 0 is adjoined and
// varies by alpha^{-1} otherwise, so membership of h' in E can be screened
// from the d_i alone before any set is materialized.
struct CosetFamily {
  std::uint64_t M = 1;
  std::vector<Fe> d;
  bool with_zero = false;
};

Fe coset_constant(const FieldCtx& F, const CosetFamily& cf, std::size_t j) {
  Fe c = F.mul(int_scalar(F, cf.M), cf.d[j]);
  for (std::size_t i = 0; i < cf.d.size(); ++i) {
    if (i == j) continue;
    c = F.mul(c, F.sub(cf.d[j], cf.d[i]));
  }
  return c;
}

bool coset_family_feasible(const FieldCtx& F, const CosetFamily& cf,
                           std::uint32_t e) {
  const std::uint64_t q1 = F.q - 1;
  const std::uint64_t gam = std::gcd(F.pe(e) + 1, q1);
  for (std::size_t j = 0; j < cf.d.size(); ++j) {
    for (std::size_t i = j + 1; i < cf.d.size(); ++i)
      if (cf.d[i] == cf.d[j]) return false;
    Fe c = coset_constant(F, cf, j);
    if (c == 0) return false;
    if (cf.with_zero) {
      if (!F.is_power_residue(c, e)) return false;
    } else {
      // h'(alpha) = c / alpha over the whole coset: E must absorb the coset
      // of M-th roots of unity and one representative quotient.
      if ((q1 / cf.M) % gam != 0) return false;
      std::uint64_t dl = F.dlog(cf.d[j]);
      if (dl % cf.M != 0) return false;  // d_j must be an M-th power
      Fe rep = F.exp(dl / cf.M);
      if (!F.is_power_residue(F.div(c, rep), e)) return false;
    }
  }
  if (cf.with_zero) {
    Fe z = cf.d.size() % 2 == 1 ? F.neg(1) : 1;
    for (Fe d : cf.d) z = F.mul(z, d);
    if (!F.is_power_residue(z, e)) return false;
  }
  return true;
}

std::vector<Fe> coset_family_elements(const FieldCtx& F,
                                      const CosetFamily& cf) {
  std::vector<Fe> el;
  if (cf.with_zero) el.push_back(0);
  const std::uint64_t q1 = F.q - 1, step = q1 / cf.M;
  for (Fe d : cf.d) {
    std::uint64_t dl = F.dlog(d);
    if (dl % cf.M != 0)
      throw std::logic_error("coset root: target is not an M-th power");
    for (std::uint64_t i = 0; i < cf.M; ++i)
      el.push_back(F.exp(dl / cf.M + i * step));
  }
  std::sort(el.begin(), el.end());
  if (std::adjacent_find(el.begin(), el.end()) != el.end())
    throw std::logic_error("coset union: elements collide");
  return el;
}

EvalSet t7_case1(FieldPtr F, std::uint32_t e, std::uint32_t a,
                 std::uint32_t wdim, std::uint32_t t) {
  const FieldCtx& f = *F;
  require(a >= 1 && f.h % a == 0, "case 1 needs a | h");
  require(e == 0 || e % a == 0, "case 1 needs a | e");
  require(wdim >= 1 && wdim <= f.h / a - 1, "case 1 needs 1 <= w <= h/a - 1");
  require(t >= 1 && t <= f.pe(a), "case 1 needs 1 <= t <= p^a");
  std::vector<Fe> sub = f.subfield_elements(a);

  // K = the F_{p^a}-span of {1, w, ..., w^{wdim-1}}.
  std::vector<Fe> kvec{0};
  for (std::uint32_t b = 0; b < wdim; ++b) {
    Fe basis = f.exp(b);
    std::vector<Fe> next;
    next.reserve(kvec.size() * sub.size());
    for (Fe c : sub)
      for (Fe prev : kvec) next.push_back(f.add(prev, f.mul(c, basis)));
    kvec = std::move(next);
  }
  std::sort(kvec.begin(), kvec.end());
  require(std::adjacent_find(kvec.begin(), kvec.end()) == kvec.end() &&
              kvec.size() == static_cast<std::size_t>(f.pe(a * wdim)),
          "case 1: subspace basis is dependent");
  std::vector<char> in_k(f.q, 0);
  for (Fe x : kvec) in_k[x] = 1;

  Fe l0 = 1;  // derivative of the subspace polynomial at 0
  for (Fe x : kvec)
    if (x != 0) l0 = f.mul(l0, f.neg(x));

  std::vector<Fe> betas(sub.begin(), sub.begin() + t);
  std::size_t tried = 0;
  for (std::uint64_t dl = 0; dl < f.q - 1 && tried < kRepSearchBudget; ++dl) {
    Fe eta = f.exp(dl);
    if (in_k[eta]) continue;
    ++tried;
    // L_K is F_{p^a}-linear, so L_K(beta * eta) = beta * L_K(eta).
    Fe leta = 1;
    for (Fe x : kvec) leta = f.mul(leta, f.sub(eta, x));
    std::vector<Fe> c(t);
    for (std::uint32_t j = 0; j < t; ++j) c[j] = f.mul(betas[j], leta);
    bool ok = true;
    for (std::uint32_t j = 0; j < t && ok; ++j) {
      Fe cj = l0;
      for (std::uint32_t i = 0; i < t; ++i)
        if (i != j) cj = f.mul(cj, f.sub(c[j], c[i]));
      ok = cj != 0 && f.is_power_residue(cj, e);
    }
    if (!ok) continue;
    std::vector<Fe> el;
    el.reserve(static_cast<std::size_t>(t) * kvec.size());
    for (std::uint32_t j = 0; j < t; ++j) {
      Fe shift = f.mul(betas[j], eta);
      for (Fe x : kvec) el.push_back(f.add(x, shift));
    }
    std::sort(el.begin(), el.end());
    if (std::adjacent_find(el.begin(), el.end()) != el.end())
      throw std::logic_error("case 1: cosets collide");
    return {F, e, std::move(el), "t7",
            "case=1 a=" + std::to_string(a) + " w=" + std::to_string(wdim) +
                " t=" + std::to_string(t)};
  }
  throw std::invalid_argument(
      "case 1: no admissible eta keeps h' inside E (tried " +
      std::to_string(tried) + ")");
}

EvalSet t7_case2(FieldPtr F, std::uint32_t e, std::uint32_t t) {
  const FieldCtx& f = *F;
  require(e >= 1, "case 2 needs e >= 1");
  require(t >= 1 && t <= f.pe(e), "case 2 needs 1 <= t <= p^e");
  std::vector<Fe> pool = f.subfield_elements(e);
  std::vector<std::size_t> idx(t);
  for (std::size_t i = 0; i < t; ++i) idx[i] = i;
  std::size_t tried = 0;
  do {
    if (++tried > kRepSearchBudget) break;
    std::vector<Fe> b(t);
    for (std::size_t i = 0; i < t; ++i) b[i] = pool[idx[i]];
    bool ok = true;
    for (std::size_t j = 0; j < t && ok; ++j) {
      Fe cj = 1;
      for (std::size_t i = 0; i < t; ++i)
        if (i != j) cj = f.mul(cj, f.sub(b[j], b[i]));
      ok = f.is_power_residue(cj, e);
    }
    if (!ok) continue;
    std::vector<Fe> el;
    for (Fe x = 0; x < f.q; ++x) {
      Fe tr = f.relative_trace(x, e);
      if (std::find(b.begin(), b.end(), tr) != b.end()) el.push_back(x);
    }
    if (el.size() != t * f.pe(f.h - e))
      throw std::logic_error("case 2: fiber sizes are off");
    return {F, e, std::move(el), "t7", "case=2 t=" + std::to_string(t)};
  } while (next_combination(idx, pool.size()));
  throw std::invalid_argument(
      "case 2: no target combination keeps h' inside E (tried " +
      std::to_string(tried) + ")");
}

EvalSet t7_case4(FieldPtr F, std::uint32_t e, std::uint32_t t, bool zero) {
  const FieldCtx& f = *F;
  require(e >= 1, "case 4 needs e >= 1");
  const std::uint64_t pe = f.pe(e);
  require(t >= 1 && t + 1 <= pe, "case 4 needs 1 <= t <= p^e - 1");
  const std::uint64_t M = (f.q - 1) / (pe - 1);
  std::vector<Fe> pool = f.subfield_elements(e);
  pool.erase(pool.begin());  // norm targets are nonzero
  std::vector<std::size_t> idx(t);
  for (std::size_t i = 0; i < t; ++i) idx[i] = i;
  std::size_t tried = 0;
  do {
    if (++tried > kRepSearchBudget) break;
    CosetFamily cf;
    cf.M = M;
    cf.with_zero = zero;
    for (std::size_t i = 0; i < t; ++i) cf.d.push_back(pool[idx[i]]);
    if (!coset_family_feasible(f, cf, e)) continue;
    std::vector<Fe> el = coset_family_elements(f, cf);
    return {F, e, std::move(el), "t7",
            "case=4 t=" + std::to_string(t) +
                " zero=" + std::to_string(zero ? 1 : 0)};
  } while (next_combination(idx, pool.size()));
  throw std::invalid_argument(
      "case 4: no norm-target combination keeps h' inside E (tried " +
      std::to_string(tried) + ")");
}

EvalSet t7_case5(FieldPtr F, std::uint32_t e, std::uint64_t x1,
                 std::uint64_t x2, std::uint32_t r, bool zero) {
  const FieldCtx& f = *F;
  const std::uint64_t q1 = f.q - 1;
  require(x1 >= 1 && x1 <= q1 && x2 >= 1 && x2 <= q1,
          "case 5 needs 1 <= x1, x2 <= q - 1");
  require(std::lcm(x1, x2) % q1 == 0, "case 5 needs (q-1) | lcm(x1, x2)");
  const std::uint64_t d2 = std::gcd(x2, q1);
  require((x1 * (f.pe(e) - 1)) % d2 == 0,
          "case 5 needs gcd(x2, q-1) | x1 (p^e - 1)");
  require(r >= 1 && r <= q1 / std::gcd(x1, q1),
          "case 5 needs 1 <= r <= (q-1)/gcd(x1, q-1)");
  require(r <= d2 / std::gcd(d2, x1),
          "case 5: the cosets xi1^i <xi2> repeat before i = r");
  const std::uint64_t r2 = q1 / d2;  // coset size
  CosetFamily cf;
  cf.M = r2;
  cf.with_zero = zero;
  for (std::uint32_t i = 1; i <= r; ++i)
    cf.d.push_back(f.exp((x1 * i) % q1 * r2));
  if (!coset_family_feasible(f, cf, e))
    throw std::invalid_argument("case 5: h' leaves E for these x1, x2, r");
  std::vector<Fe> el = coset_family_elements(f, cf);
  return {F, e, std::move(el), "t7",
          "case=5 x1=" + std::to_string(x1) + " x2=" + std::to_string(x2) +
              " r=" + std::to_string(r) +
              " zero=" + std::to_string(zero ? 1 : 0)};
}

EvalSet t7_case6(FieldPtr F, std::uint32_t e, std::uint64_t m, std::uint32_t r,
                 bool zero) {
  const FieldCtx& f = *F;
  require(e >= 1, "case 6 needs e >= 1");
  const std::uint64_t q1 = f.q - 1;
  require(m >= 1 && q1 % m == 0, "case 6 needs m | (q - 1)");
  const std::uint64_t y = q1 / (f.pe(e) - 1);
  const std::uint64_t m2 = std::gcd(m, y), m1 = m / m2;
  require((f.pe(e) - 1) % m1 == 0 && r >= 1 && r <= (f.pe(e) - 1) / m1,
          "case 6 needs 1 <= r <= (p^e - 1)/m1");
  const std::uint64_t dv = y / m2;      // dlog step of <theta2>
  const std::uint64_t hd = q1 / m;      // dlog step of mu_m
  if (hd % dv != 0)
    throw std::logic_error("case 6: mu_m is not inside <theta2>");
  // Coset representatives of <theta2>/mu_m, smallest dlog first.
  std::map<std::uint64_t, std::uint64_t> reps;  // dlog mod hd -> smallest dlog
  for (std::uint64_t s = 0; s < q1 / dv; ++s) {
    std::uint64_t dl = dv * s;
    reps.emplace(dl % hd, dl);  // s ascending, so first hit is smallest
  }
  std::vector<std::uint64_t> rep_dl;
  for (auto& kv : reps) rep_dl.push_back(kv.second);
  std::sort(rep_dl.begin(), rep_dl.end());
  if (rep_dl.size() != (f.pe(e) - 1) / m1)
    throw std::logic_error("case 6: coset count is off");

  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  std::size_t tried = 0;
  do {
    if (++tried > kRepSearchBudget) break;
    CosetFamily cf;
    cf.M = m;
    cf.with_zero = zero;
    for (std::size_t i = 0; i < r; ++i)
      cf.d.push_back(f.exp(rep_dl[idx[i]] * m % q1));
    if (!coset_family_feasible(f, cf, e)) continue;
    std::vector<Fe> el = coset_family_elements(f, cf);
    return {F, e, std::move(el), "t7",
            "case=6 m=" + std::to_string(m) + " r=" + std::to_string(r) +
                " zero=" + std::to_string(zero ? 1 : 0)};
  } while (next_combination(idx, rep_dl.size()));
  throw std::invalid_argument(
      "case 6: no coset combination keeps h' inside E (tried " +
      std::to_string(tried) + ")");
}

}  // namespace

EvalSet eval_set_t7(FieldPtr F, std::uint32_t e, const T7Params& prm) {
  require(F != nullptr, "eval_set_t7: null field");
  const FieldCtx& f = *F;
  require(f.p != 2, "t7 needs odd characteristic");
  require(f.h % 2 == 0, "t7 needs square field order");
  require(e < f.h && (e == 0 || f.h % (2 * e) == 0), "t7 needs 2e | h");
  switch (prm.case_id) {
    case 1:
      return t7_case1(F, e, prm.sub_a, prm.sub_w, prm.t);
    case 2:
      return t7_case2(F, e, prm.t);
    case 3: {
      require(prm.t >= 1, "case 3 needs t >= 1");
      EvalSet s = eval_set_t3(F, e, prm.t);
      s.theorem = "t7";
      s.params = "case=3 t=" + std::to_string(prm.t);
      return s;
    }
    case 4:
      return t7_case4(F, e, prm.t, prm.add_zero != 0);
    case 5:
      return t7_case5(F, e, prm.x1, prm.x2, prm.r, prm.add_zero != 0);
    case 6:
      return t7_case6(F, e, prm.m, prm.r, prm.add_zero != 0);
    default:
      throw std::invalid_argument("t7 case must be 1..6");
  }
}

Construction construct_hermitian(FieldPtr F, std::uint32_t e, const EvalSet& U,
                                 std::size_t k, const VerifyOptions& opt) {
  require(F != nullptr && U.ctx != nullptr && F->same_field(*U.ctx),
          "construct_hermitian: field mismatch");
  const FieldCtx& f = *F;
  require(f.p != 2 && f.h % 2 == 0, "t7 needs odd p and square field order");
  require(e < f.h && (e == 0 || f.h % (2 * e) == 0), "t7 needs 2e | h");
  check_sorted_distinct(U.elements, "construct_hermitian");
  const std::uint32_t s = static_cast<std::uint32_t>(f.pe(f.h / 2));
  const std::uint32_t g = (f.q - s) / 2;
  const std::size_t n = U.elements.size(), n_len = s * n;
  KWindow win = k_window(f, n_len, g, e);
  require(win.nonempty && k >= win.k_min && k <= win.k_max,
          "k=" + std::to_string(k) + " outside the admissible window [" +
              std::to_string(win.k_min) + ", " + std::to_string(win.k_max) +
              "]");

  auto t0 = Clock::now();
  std::vector<Fe> hp = derivative_values(f, U.elements);
  std::vector<Fe> v = multipliers_from_derivatives(f, hp, e);
  CurveModel curve = enumerate_points(CurveFamily::Hermitian, F);
  std::vector<CurvePoint> pts;
  std::vector<Fe> vv;
  pts.reserve(n_len);
  vv.reserve(n_len);
  for (std::size_t t = 0; t < n; ++t) {
    auto lo = std::lower_bound(curve.points.begin(), curve.points.end(),
                               CurvePoint{U.elements[t], 0});
    std::size_t cnt = 0;
    for (auto it = lo; it != curve.points.end() && it->x == U.elements[t];
         ++it, ++cnt) {
      pts.push_back(*it);
      vv.push_back(v[t]);
    }
    if (cnt != s)
      throw std::logic_error("construct_hermitian: fiber size mismatch");
  }
  if (!criterion_check(f, k - 1,
                       static_cast<std::int64_t>(n_len) + f.q - s -
                           static_cast<std::int64_t>(k) - 1,
                       e, g, k, n_len))
    throw std::logic_error("construct_hermitian: criterion mismatch");
  CheckOutcome crit_out{"criterion", "pass", "window", ms_since(t0)};

  EvaluatedCode ec =
      evaluate_code(curve, pts, static_cast<std::uint32_t>(k - 1), vv);
  if (!ec.dim_window_ok)
    throw std::logic_error("construct_hermitian: degree left the window");
  ConstructionReport rep =
      verify_code(ec.code, e, k - g, n_len - k + 1, /*mds_expected=*/false,
                  opt, U.theorem, U.params, std::move(crit_out));
  return {std::move(ec.code), std::move(rep)};
}

// ---- Parameter search -------------------------------------------------------

std::vector<ParamRow> search_params(FieldPtr F, std::uint32_t e,
                                    const std::string& family) {
  require(F != nullptr, "search_params: null field");
  require(family == "all" || family == "t3" || family == "t5" ||
              family == "t6" || family == "t7",
          "search_params: unknown family " + family);
  const FieldCtx& f = *F;
  require(e < f.h, "search_params: e out of range");
  std::vector<ParamRow> rows;
  auto add = [&](const std::string& theorem, const std::string& params,
                 std::size_t n_points, std::size_t n_len, std::uint32_t genus) {
    KWindow w = k_window(f, n_len, genus, e);
    if (w.nonempty)
      rows.push_back({theorem, params, n_points, n_len, w.k_min, w.k_max});
  };
  auto want = [&](const char* fam) { return family == "all" || family == fam; };
  const std::uint64_t q1 = f.q - 1;

  if (want("t3") && f.p != 2 && e >= 1 && f.h % (2 * e) == 0) {
    const std::uint64_t pe = f.pe(e);
    if (q1 % (pe + 1) == 0) {
      const std::uint64_t N = q1 / (pe + 1);
      if (N % (f.pe(2 * e) - 1) == 0)
        for (std::uint64_t t = 0; t <= pe; ++t) {
          std::size_t n = static_cast<std::size_t>((t + 1) * N + 1);
          add("t3", "t=" + std::to_string(t), n, n, 0);
        }
    }
  }

  if (want("t5") && f.p == 2 && (e == 0 || f.h % (2 * e) == 0)) {
    for (int variant : {1, 2}) {
      EvalSet u = eval_set_t5(F, e, variant);
      std::size_t n = u.elements.size();
      if (n >= 1)
        add("t5", "U" + std::to_string(variant) + " n=" + std::to_string(n), n,
            2 * n, 1);
    }
  }

  if (want("t6") && f.p == 2 && f.h % 2 == 0 && f.q >= 4) {
    const std::uint32_t g = static_cast<std::uint32_t>(f.pe(f.h / 2)) / 2;
    for (std::uint64_t dd : divisors_of(q1)) {
      std::size_t n = static_cast<std::size_t>(dd + 1);
      add("t6", "n=" + std::to_string(n), n, 2 * n, g);
    }
  }

  if (want("t7") && f.p != 2 && f.h % 2 == 0 &&
      (e == 0 || f.h % (2 * e) == 0)) {
    const std::uint32_t s = static_cast<std::uint32_t>(f.pe(f.h / 2));
    const std::uint32_t g = (f.q - s) / 2;
    const std::uint64_t pe = f.pe(e);
    // case 1: t translated copies of a w-dimensional F_{p^a}-subspace
    for (std::uint32_t a = 1; a + a <= f.h; ++a) {
      if (f.h % a || (e >= 1 && e % a)) continue;
      for (std::uint32_t w = 1; w <= f.h / a - 1; ++w)
        for (std::uint64_t t = 1; t <= f.pe(a); ++t) {
          std::uint64_t n = t * f.pe(a * w);
          if (n > f.q) continue;
          add("t7",
              "case=1 a=" + std::to_string(a) + " w=" + std::to_string(w) +
                  " t=" + std::to_string(t),
              static_cast<std::size_t>(n), static_cast<std::size_t>(s * n), g);
        }
    }
    // case 2: trace fibers
    if (e >= 1)
      for (std::uint64_t t = 1; t <= pe; ++t) {
        std::uint64_t n = t * f.pe(f.h - e);
        add("t7", "case=2 t=" + std::to_string(t), static_cast<std::size_t>(n),
            static_cast<std::size_t>(s * n), g);
      }
    // case 3: the t3 set on the Hermitian curve
    if (e >= 1 && q1 % (pe + 1) == 0) {
      const std::uint64_t N = q1 / (pe + 1);
      if (N % (f.pe(2 * e) - 1) == 0)
        for (std::uint64_t t = 1; t <= pe; ++t) {
          std::uint64_t n = (t + 1) * N + 1;
          if (n > f.q) continue;
          add("t7", "case=3 t=" + std::to_string(t),
              static_cast<std::size_t>(n), static_cast<std::size_t>(s * n), g);
        }
    }
    // case 4: norm fibers
    if (e >= 1 && pe >= 2) {
      const std::uint64_t M = q1 / (pe - 1);
      for (std::uint64_t t = 1; t + 1 <= pe; ++t)
        for (std::uint32_t zero : {0u, 1u}) {
          std::uint64_t n = t * M + zero;
          if (n > f.q) continue;
          add("t7",
              "case=4 t=" + std::to_string(t) + " zero=" + std::to_string(zero),
              static_cast<std::size_t>(n), static_cast<std::size_t>(s * n), g);
        }
    }
    // case 5: canonical divisor pairs x1 = d1, x2 = d2
    {
      std::vector<std::uint64_t> divs = divisors_of(q1);
      for (std::uint64_t d1 : divs)
        for (std::uint64_t d2 : divs) {
          if (std::lcm(d1, d2) != q1) continue;
          if ((d1 * (pe - 1)) % d2 != 0) continue;
          std::uint64_t rmax = std::min(q1 / d1, d2 / std::gcd(d2, d1));
          for (std::uint64_t r = 1; r <= rmax; ++r)
            for (std::uint32_t zero : {0u, 1u}) {
              std::uint64_t n = r * (q1 / d2) + zero;
              if (n > f.q) continue;
              add("t7",
                  "case=5 x1=" + std::to_string(d1) +
                      " x2=" + std::to_string(d2) + " r=" + std::to_string(r) +
                      " zero=" + std::to_string(zero),
                  static_cast<std::size_t>(n), static_cast<std::size_t>(s * n),
                  g);
            }
        }
    }
    // case 6: r cosets of mu_m inside <theta2>
    if (e >= 1 && pe >= 2)
      for (std::uint64_t m : divisors_of(q1)) {
        const std::uint64_t y = q1 / (pe - 1);
        const std::uint64_t m1 = m / std::gcd(m, y);
        if ((pe - 1) % m1 != 0) continue;
        for (std::uint64_t r = 1; r <= (pe - 1) / m1; ++r)
          for (std::uint32_t zero : {0u, 1u}) {
            std::uint64_t n = r * m + zero;
            if (n > f.q) continue;
            add("t7",
                "case=6 m=" + std::to_string(m) + " r=" + std::to_string(r) +
                    " zero=" + std::to_string(zero),
                static_cast<std::size_t>(n), static_cast<std::size_t>(s * n),
                g);
          }
      }
  }
  return rows;
}

std::string format_param_rows(const std::vector<ParamRow>& rows) {
  std::string out;
  for (const ParamRow& r : rows) {
    out += r.theorem + " " + r.params + " length=" + std::to_string(r.length) +
           " k=" + std::to_string(r.k_min) + ".." + std::to_string(r.k_max) +
           "\n";
  }
  return out;
}

}  // namespace gagc
