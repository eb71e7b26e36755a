#include "gagc/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace gagc {
namespace {

void require_ctx(const GfMatrix& m) {
  if (!m.ctx) throw std::invalid_argument("matrix: missing field context");
}

}  // namespace

RrefResult rref(const GfMatrix& m) {
  require_ctx(m);
  const FieldCtx& F = *m.ctx;
  RrefResult out{m, 0, {}};
  GfMatrix& r = out.m;
  std::size_t row = 0;
  for (std::size_t col = 0; col < r.cols && row < r.rows; ++col) {
    std::size_t piv = row;
    while (piv < r.rows && r.at(piv, col) == 0) ++piv;
    if (piv == r.rows) continue;
    if (piv != row)
      for (std::size_t c = 0; c < r.cols; ++c)
        std::swap(r.at(piv, c), r.at(row, c));
    Fe s = F.inv(r.at(row, col));
    if (s != 1)
      for (std::size_t c = col; c < r.cols; ++c)
        r.at(row, c) = F.mul(r.at(row, c), s);
    for (std::size_t i = 0; i < r.rows; ++i) {
      if (i == row) continue;
      Fe f = r.at(i, col);
      if (f == 0) continue;
      for (std::size_t c = col; c < r.cols; ++c)
        r.at(i, c) = F.sub(r.at(i, c), F.mul(f, r.at(row, c)));
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rank = row;
  return out;
}

std::size_t rank_of(const GfMatrix& m) { return rref(m).rank; }

GfMatrix null_space(const GfMatrix& m) {
  require_ctx(m);
  const FieldCtx& F = *m.ctx;
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (std::size_t c : r.pivots) is_pivot[c] = true;
  GfMatrix out(m.ctx, m.cols - r.rank, m.cols);
  std::size_t bi = 0;
  for (std::size_t f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    out.at(bi, f) = 1;
    for (std::size_t i = 0; i < r.rank; ++i)
      out.at(bi, r.pivots[i]) = F.neg(r.m.at(i, f));
    ++bi;
  }
  return out;
}

GfMatrix transpose(const GfMatrix& m) {
  GfMatrix out(m.ctx, m.cols, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) out.at(j, i) = m.at(i, j);
  return out;
}

GfMatrix mat_mul(const GfMatrix& a, const GfMatrix& b) {
  require_ctx(a);
  require_ctx(b);
  if (!a.ctx->same_field(*b.ctx) || a.cols != b.rows)
    throw std::invalid_argument("matrix: product shape/field mismatch");
  const FieldCtx& F = *a.ctx;
  GfMatrix out(a.ctx, a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t t = 0; t < a.cols; ++t) {
      Fe x = a.at(i, t);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j)
        out.at(i, j) = F.add(out.at(i, j), F.mul(x, b.at(t, j)));
    }
  return out;
}

GfMatrix vstack(const GfMatrix& a, const GfMatrix& b) {
  require_ctx(a);
  require_ctx(b);
  if (!a.ctx->same_field(*b.ctx) || a.cols != b.cols)
    throw std::invalid_argument("matrix: stack shape/field mismatch");
  GfMatrix out(a.ctx, a.rows + b.rows, a.cols);
  std::copy(a.a.begin(), a.a.end(), out.a.begin());
  std::copy(b.a.begin(), b.a.end(), out.a.begin() + (std::ptrdiff_t)a.a.size());
  return out;
}

GfMatrix frobenius_entrywise(const GfMatrix& m, std::uint32_t e) {
  require_ctx(m);
  GfMatrix out = m;
  for (Fe& x : out.a) x = m.ctx->frobenius(x, e);
  return out;
}

bool is_zero(const GfMatrix& m) {
  return std::all_of(m.a.begin(), m.a.end(), [](Fe x) { return x == 0; });
}

bool row_space_equal(const GfMatrix& a, const GfMatrix& b) {
  require_ctx(a);
  require_ctx(b);
  if (!a.ctx->same_field(*b.ctx) || a.cols != b.cols)
    throw std::invalid_argument("matrix: row-space comparison shape mismatch");
  RrefResult ra = rref(a), rb = rref(b);
  if (ra.rank != rb.rank) return false;
  for (std::size_t i = 0; i < ra.rank; ++i)
    for (std::size_t c = 0; c < a.cols; ++c)
      if (ra.m.at(i, c) != rb.m.at(i, c)) return false;
  return true;
}

bool row_space_contains(const GfMatrix& outer, const GfMatrix& inner) {
  return rank_of(outer) == rank_of(vstack(outer, inner));
}

Fe determinant(GfMatrix m) {
  require_ctx(m);
  if (m.rows != m.cols)
    throw std::invalid_argument("matrix: determinant of non-square matrix");
  const FieldCtx& F = *m.ctx;
  Fe det = 1;
  for (std::size_t col = 0; col < m.cols; ++col) {
    std::size_t piv = col;
    while (piv < m.rows && m.at(piv, col) == 0) ++piv;
    if (piv == m.rows) return 0;
    if (piv != col) {
      for (std::size_t c = col; c < m.cols; ++c)
        std::swap(m.at(piv, c), m.at(col, c));
      det = F.neg(det);
    }
    Fe d = m.at(col, col);
    det = F.mul(det, d);
    Fe s = F.inv(d);
    for (std::size_t i = col + 1; i < m.rows; ++i) {
      Fe f = F.mul(m.at(i, col), s);
      if (f == 0) continue;
      for (std::size_t c = col; c < m.cols; ++c)
        m.at(i, c) = F.sub(m.at(i, c), F.mul(f, m.at(col, c)));
    }
  }
  return det;
}

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k,
                              std::uint64_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r <= cap here and n fits in 32 bits, so r*(n-k+i) cannot overflow;
    // C(n-k+i, i) = C(n-k+i-1, i-1)*(n-k+i)/i keeps the division exact.
    r = r * (n - k + i) / i;
    if (r > cap) return cap + 1;
  }
  return r;
}

namespace {

Fe column_minor(const GfMatrix& m, const std::vector<std::size_t>& cols) {
  GfMatrix sub(m.ctx, m.rows, cols.size());
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      sub.at(i, j) = m.at(i, cols[j]);
  return determinant(std::move(sub));
}

}  // namespace

SubsetVerdict all_k_subsets_nonsingular(const GfMatrix& m,
                                        const SubsetMode& mode) {
  require_ctx(m);
  const std::size_t k = m.rows, n = m.cols;
  if (k == 0 || k > n)
    throw std::invalid_argument("matrix: subset scan needs 1 <= rows <= cols");
  SubsetVerdict v;
  if (mode.kind == SubsetMode::Exhaustive) {
    if (binomial_capped(n, k, kSubsetBudget) > kSubsetBudget)
      throw std::invalid_argument(
          "matrix: exhaustive subset scan exceeds the 10^6 budget");
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
      ++v.checked;
      if (column_minor(m, idx) == 0) {
        v.witness = idx;
        return v;
      }
      // next lexicographic combination
      std::size_t i = k;
      while (i-- > 0 && idx[i] == n - k + i) {
      }
      if (i == (std::size_t)-1) break;
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  } else {
    Rng rng(mode.seed);
    for (std::size_t s = 0; s < mode.count; ++s) {
      std::vector<std::size_t> idx = rng.subset(n, k);
      ++v.checked;
      if (column_minor(m, idx) == 0) {
        v.witness = idx;
        return v;
      }
    }
  }
  v.ok = true;
  return v;
}

}  // namespace gagc
