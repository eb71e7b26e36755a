/*
 * Linear-code semantics over GF(q): e-Galois inner products and duals,
 * self-orthogonality, GRS encoding, minimum distance, and MDS verification.
 *
 * Codes carrying a GrsSpec (generator rows v_t * alpha_t^i, optionally
 * extended by one column that is zero except for a gamma in the last row)
 * get structured exact routes for the Gram zero test, the rank certificate,
 * and column-minor evaluation: the generator is first re-validated entry by
 * entry against the declared nodes/multipliers, after which Gram entries
 * collapse to power sums m_s = sum_t v_t^{p^e+1} alpha_t^s and minors to
 * Vandermonde products. If re-validation fails (e.g. a corrupted matrix),
 * every operation falls back to the generic dense route, so verdicts never
 * depend on unverified structure.
 */
#pragma once

#include <optional>
#include <string>

#include "gagc/matrix.hpp"

namespace gagc {

struct GrsSpec {
  std::vector<Fe> alpha;  // distinct evaluation nodes
  std::vector<Fe> v;      // nonzero column multipliers
  std::size_t k = 0;      // polynomial degrees 0..k-1 (generator row count)
};

struct LinearCode {
  FieldPtr ctx;
  GfMatrix gen;
  std::optional<GrsSpec> grs;
  std::optional<Fe> ext_gamma;  // last column = (0,...,0,gamma) when present

  std::size_t length() const { return gen.cols; }
  std::size_t dim_rows() const { return gen.rows; }
};

// sum_i x_i * y_i^{p^e}; e = 0 is Euclidean, e = h/2 (h even) Hermitian.
Fe galois_ip(const FieldCtx& F, const std::vector<Fe>& x,
             const std::vector<Fe>& y, std::uint32_t e);

// Generic k x k Gram matrix gen * transpose(gen^{(p^e)}).
GfMatrix galois_gram(const LinearCode& c, std::uint32_t e);

// True iff the Gram matrix is exactly zero (C is e-Galois self-orthogonal).
bool is_galois_so(const LinearCode& c, std::uint32_t e);

// The [n, n-k] dual: Euclidean null space of the entrywise p^{h-e} image.
LinearCode galois_dual(const LinearCode& c, std::uint32_t e);

LinearCode grs_encode(FieldPtr F, const GrsSpec& spec);

// u_i = (prod_{j != i} (alpha_i - alpha_j))^{-1}: Euclidean dual multipliers,
// GRS_k(alpha, v)^perp = GRS_{n-k}(alpha, u per-entry-divided by v).
std::vector<Fe> grs_dual_multiplier(const FieldCtx& F,
                                    const std::vector<Fe>& alpha);

// Entrywise check that gen matches the declared GRS(+extension) shape.
bool grs_form_validates(const LinearCode& c);

// rank(gen): leading-minor certificate on validated GRS form, else echelon.
std::size_t code_rank(const LinearCode& c);

inline constexpr std::uint64_t kCodewordBudget = 10'000'000;

struct DistanceMode {
  enum Kind { Exhaustive, BoundCheck } kind = Exhaustive;
  std::size_t bound = 0;     // weight floor verified in BoundCheck mode
  std::size_t samples = 1000;
  std::uint64_t seed = kDefaultSeed;
  static DistanceMode exhaustive() { return {}; }
  static DistanceMode bound_check(std::size_t bound, std::size_t samples,
                                  std::uint64_t seed) {
    return {BoundCheck, bound, samples, seed};
  }
};

struct DistanceResult {
  bool exact = false;       // exhaustive enumeration completed
  std::size_t d = 0;        // exact distance, or smallest weight observed
  bool bound_ok = false;    // all inspected weights >= bound (BoundCheck)
  std::uint64_t enumerated = 0;
};

// Exhaustive mode enumerates (q^k-1)/(q-1) normalized messages (first
// nonzero symbol 1; weight is scaling-invariant) and requires that count
// to fit kCodewordBudget. Zero codewords (rank-deficient inputs) are skipped.
DistanceResult min_distance(const LinearCode& c, const DistanceMode& mode);

struct MdsMode {
  enum Kind { Auto, Exhaustive, Sampled } kind = Auto;
  std::size_t count = 1000;
  std::uint64_t seed = kDefaultSeed;
};

struct MdsResult {
  bool ok = false;
  std::string mode_used;  // exhaustive-subsets | exhaustive-distance | sampled-subsets
  std::uint64_t checked = 0;
};

// d = n-k+1, verified exhaustively when C(n,k) or q^k budgets allow,
// otherwise by the seeded subset certificate (one-sided).
MdsResult is_mds(const LinearCode& c, const MdsMode& mode = {});

}  // namespace gagc
