/*
 * Dense exact linear algebra over GF(q): reduced echelon form, null spaces,
 * row-space comparison, determinants, and the k-column nonsingularity scans
 * behind MDS certification. Matrices are immutable values; every operation
 * returns a fresh result.
 */
#pragma once

#include <cstddef>
#include <vector>

#include "gagc/gf.hpp"
#include "gagc/rng.hpp"

namespace gagc {

struct GfMatrix {
  FieldPtr ctx;
  std::size_t rows = 0, cols = 0;
  std::vector<Fe> a;  // row-major, rows*cols entries

  GfMatrix() = default;
  GfMatrix(FieldPtr c, std::size_t r, std::size_t n)
      : ctx(std::move(c)), rows(r), cols(n), a(r * n, 0) {}

  Fe& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  Fe at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

struct RrefResult {
  GfMatrix m;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const GfMatrix& m);
std::size_t rank_of(const GfMatrix& m);

// Basis (as rows) of {x : m xT = 0}; cols - rank rows.
GfMatrix null_space(const GfMatrix& m);

GfMatrix transpose(const GfMatrix& m);
GfMatrix mat_mul(const GfMatrix& a, const GfMatrix& b);
GfMatrix vstack(const GfMatrix& a, const GfMatrix& b);

// Entrywise a -> a^{p^e}; applied row by row.
GfMatrix frobenius_entrywise(const GfMatrix& m, std::uint32_t e);

bool is_zero(const GfMatrix& m);
bool row_space_equal(const GfMatrix& a, const GfMatrix& b);
// True iff every row of inner lies in the row space of outer.
bool row_space_contains(const GfMatrix& outer, const GfMatrix& inner);

Fe determinant(GfMatrix m);  // square input; Gaussian elimination

inline constexpr std::uint64_t kSubsetBudget = 1'000'000;

struct SubsetMode {
  enum Kind { Exhaustive, Sampled } kind = Exhaustive;
  std::size_t count = 1000;       // sampled only
  std::uint64_t seed = kDefaultSeed;
  static SubsetMode exhaustive() { return {}; }
  static SubsetMode sampled(std::size_t count, std::uint64_t seed) {
    return {Sampled, count, seed};
  }
};

struct SubsetVerdict {
  bool ok = false;
  std::uint64_t checked = 0;
  std::vector<std::size_t> witness;  // first singular column subset, if any
};

// Tests k x k column minors of a k x n matrix for nonsingularity.
// Exhaustive mode requires C(n,k) <= kSubsetBudget (else invalid_argument);
// sampled mode draws seeded subsets and is a one-sided certificate.
SubsetVerdict all_k_subsets_nonsingular(const GfMatrix& m,
                                        const SubsetMode& mode);

// C(n,k) saturating at cap+1 (overflow-safe budget comparisons).
std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k,
                              std::uint64_t cap);

}  // namespace gagc
