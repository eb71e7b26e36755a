#include "gagc/curves.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace gagc {

namespace {

// Left-hand side of the defining equation, as a function of y alone.
Fe lhs_of_y(const CurveModel& m, Fe y) {
  const FieldCtx& F = *m.ctx;
  switch (m.family) {
    case CurveFamily::Line:
      return y;  // the line carries y = 0 formally
    case CurveFamily::Elliptic:
      return F.add(F.mul(y, y), F.mul(m.ell->a, y));
    case CurveFamily::HyperElliptic:
      return F.add(F.mul(y, y), y);
    case CurveFamily::Hermitian: {
      const std::uint32_t half = m.pole_x;  // sqrt(q)
      return F.add(F.pow(y, half), y);
    }
  }
  throw std::logic_error("unknown curve family");
}

// Right-hand side of the defining equation, as a function of x alone.
Fe rhs_of_x(const CurveModel& m, Fe x) {
  const FieldCtx& F = *m.ctx;
  switch (m.family) {
    case CurveFamily::Line:
      return 0;
    case CurveFamily::Elliptic: {
      Fe x3 = F.mul(F.mul(x, x), x);
      return F.add(F.add(x3, F.mul(m.ell->b, x)), m.ell->c);
    }
    case CurveFamily::HyperElliptic:
    case CurveFamily::Hermitian: {
      const std::uint32_t half = m.pole_x == 2 ? m.pole_y - 1 : m.pole_x;
      return F.pow(x, half + 1);  // x^{sqrt(q)+1}
    }
  }
  throw std::logic_error("unknown curve family");
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

CurveModel enumerate_points(CurveFamily family, FieldPtr F,
                            std::optional<EllipticParams> params) {
  if (!F) throw std::invalid_argument("enumerate_points: null field");
  CurveModel m;
  m.family = family;
  m.ctx = F;
  std::uint32_t half = 0;
  if (family == CurveFamily::HyperElliptic || family == CurveFamily::Hermitian) {
    require(F->h % 2 == 0, "curve needs a field of square order");
    half = static_cast<std::uint32_t>(F->pe(F->h / 2));
  }
  switch (family) {
    case CurveFamily::Line:
      m.genus = 0;
      m.pole_x = 1;
      m.pole_y = 0;
      m.y_degree = 1;
      break;
    case CurveFamily::Elliptic:
      require(F->p == 2, "elliptic model requires characteristic 2");
      require(params.has_value(), "elliptic model requires coefficients");
      m.genus = 1;
      m.pole_x = 2;
      m.pole_y = 3;
      m.y_degree = 2;
      m.ell = params;
      break;
    case CurveFamily::HyperElliptic:
      require(F->p == 2, "hyper-elliptic model requires characteristic 2");
      require(F->q >= 4, "hyper-elliptic model requires q >= 4");
      m.genus = half / 2;
      m.pole_x = 2;
      m.pole_y = half + 1;
      m.y_degree = 2;
      break;
    case CurveFamily::Hermitian:
      m.genus = static_cast<std::uint32_t>((F->q - half) / 2);
      m.pole_x = half;
      m.pole_y = half + 1;
      m.y_degree = half;
      break;
  }

  if (family == CurveFamily::Line) {
    m.points.reserve(F->q);
    for (Fe x = 0; x < F->q; ++x) m.points.push_back({x, 0});
    return m;
  }

  // Bucket the y-side values once, then read each x-fiber off the bucket.
  std::map<Fe, std::vector<Fe>> fiber;  // lhs value -> ascending roots y
  for (Fe y = 0; y < F->q; ++y) fiber[lhs_of_y(m, y)].push_back(y);
  for (Fe x = 0; x < F->q; ++x) {
    auto it = fiber.find(rhs_of_x(m, x));
    if (it == fiber.end()) continue;
    for (Fe y : it->second) m.points.push_back({x, y});
  }

  // Invariants: every point satisfies the equation; fiber sizes match the
  // Artin-Schreier count (0 or 2) resp. the full sqrt(q) for Hermitian.
  std::map<Fe, std::size_t> per_x;
  for (const CurvePoint& pt : m.points) {
    if (lhs_of_y(m, pt.y) != rhs_of_x(m, pt.x))
      throw std::logic_error("enumerated point fails the curve equation");
    ++per_x[pt.x];
  }
  for (Fe x = 0; x < F->q; ++x) {
    std::size_t cnt = per_x.count(x) ? per_x[x] : 0;
    bool ok = true;
    if (family == CurveFamily::Hermitian) ok = (cnt == half);
    else if (family == CurveFamily::HyperElliptic) ok = (cnt == 2);
    else if (m.ell->a != 0) ok = (cnt == 0 || cnt == 2);
    if (!ok) throw std::logic_error("fiber size violates the point count");
  }
  if (!std::is_sorted(m.points.begin(), m.points.end()))
    throw std::logic_error("points not sorted");
  return m;
}

std::vector<Monomial> rr_basis(const CurveModel& model, std::uint32_t m) {
  std::vector<Monomial> out;
  for (std::uint32_t j = 0; j < model.y_degree; ++j) {
    std::uint64_t base = static_cast<std::uint64_t>(j) * model.pole_y;
    if (base > m) continue;
    for (std::uint32_t i = 0; base + static_cast<std::uint64_t>(i) * model.pole_x <= m; ++i)
      out.push_back({i, j});
  }
  std::sort(out.begin(), out.end(), [&](Monomial a, Monomial b) {
    std::uint64_t pa = static_cast<std::uint64_t>(a.i) * model.pole_x +
                       static_cast<std::uint64_t>(a.j) * model.pole_y;
    std::uint64_t pb = static_cast<std::uint64_t>(b.i) * model.pole_x +
                       static_cast<std::uint64_t>(b.j) * model.pole_y;
    return pa != pb ? pa < pb : a.j < b.j;
  });
  return out;
}

EvaluatedCode evaluate_code(const CurveModel& model,
                            const std::vector<CurvePoint>& pts,
                            std::uint32_t m, const std::vector<Fe>& v) {
  const FieldCtx& F = *model.ctx;
  const std::size_t n = pts.size();
  require(n > 0, "evaluate_code: empty point list");
  require(v.size() == n, "evaluate_code: multiplier count mismatch");
  for (Fe mult : v) require(mult != 0, "evaluate_code: zero multiplier");
  {
    std::vector<CurvePoint> sorted = pts;
    std::sort(sorted.begin(), sorted.end());
    require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
            "evaluate_code: duplicate evaluation points");
    for (const CurvePoint& pt : sorted)
      require(std::binary_search(model.points.begin(), model.points.end(), pt),
              "evaluate_code: point not on the curve");
  }

  std::vector<Monomial> basis = rr_basis(model, m);
  GfMatrix gen(model.ctx, basis.size(), n);
  std::uint32_t max_i = 0, max_j = 0;
  for (Monomial mon : basis) {
    max_i = std::max(max_i, mon.i);
    max_j = std::max(max_j, mon.j);
  }
  std::vector<Fe> xp(max_i + 1), yp(max_j + 1);
  for (std::size_t t = 0; t < n; ++t) {
    xp[0] = 1;
    for (std::uint32_t i = 1; i <= max_i; ++i) xp[i] = F.mul(xp[i - 1], pts[t].x);
    yp[0] = 1;
    for (std::uint32_t j = 1; j <= max_j; ++j) yp[j] = F.mul(yp[j - 1], pts[t].y);
    for (std::size_t r = 0; r < basis.size(); ++r)
      gen.at(r, t) = F.mul(v[t], F.mul(xp[basis[r].i], yp[basis[r].j]));
  }

  EvaluatedCode out{LinearCode{model.ctx, std::move(gen), {}, {}}, false, 0, 0};
  std::int64_t lo = 2 * static_cast<std::int64_t>(model.genus) - 2;
  out.dim_window_ok = lo < static_cast<std::int64_t>(m) &&
                      static_cast<std::uint64_t>(m) < n;
  out.rank = rank_of(out.code.gen);
  out.expected_dim =
      out.dim_window_ok ? static_cast<std::size_t>(m + 1 - model.genus) : out.rank;
  return out;
}

}  // namespace gagc
