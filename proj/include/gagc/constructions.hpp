/*
 * Families of e-Galois self-orthogonal evaluation codes. Each family picks an
 * evaluation set U inside F_q whose vanishing polynomial h(x) = prod (x - u)
 * has every derivative value h'(u) inside E = { x^{p^e+1} : x != 0 }. The
 * multipliers v_u are then inverse (p^e+1)-st roots of h'(u), which makes the
 * evaluation code of any admissible degree self-orthogonal under
 *   <x, y>_e = sum_i x_i y_i^{p^e}.
 *
 * Interface tokens: the CLI selects families by the identifiers t3 (projective
 * line), t5 (elliptic), t6 (hyper-elliptic) and t7 (Hermitian); embed is the
 * one-step dimension raise for line codes.
 *
 * Every constructor re-verifies its output from scratch: exact Galois
 * self-orthogonality, rank, and an MDS or minimum-distance check, reported
 * per check with verdict pass / fail / certificate (sampled evidence).
 */
#pragma once

#include <string>

#include "gagc/curves.hpp"

namespace gagc {

// Shared dimension window [2g+1, floor((n_len + p^e + 2g - 1) / (p^e + 1))].
struct KWindow {
  std::size_t k_min = 0, k_max = 0;
  bool nonempty = false;
};
KWindow k_window(const FieldCtx& F, std::size_t n_len, std::uint32_t genus,
                 std::uint32_t e);

// The divisor-degree criterion behind every family:
//   p^e * deg_g <= h_coeff,  2g-2 < deg_g < n_points,  k >= 2g+1.
bool criterion_check(const FieldCtx& F, std::size_t deg_g,
                     std::int64_t h_coeff, std::uint32_t e, std::uint32_t genus,
                     std::size_t k, std::size_t n_points);

struct EvalSet {
  FieldPtr ctx;
  std::uint32_t e = 0;
  std::vector<Fe> elements;  // distinct, ascending by value encoding
  std::string theorem;       // interface token: t3 / t5 / t6 / t7
  std::string params;        // e.g. "t=2", "U1", "case=4 t=1 zero=1"
};

// h'(u) for the vanishing polynomial of elems, as the direct pairwise
// product prod_{i != j} (u_j - u_i). Quadratic and exact; the closed forms
// the families predict are cross-checked against this in the tests.
std::vector<Fe> derivative_values(const FieldCtx& F,
                                  const std::vector<Fe>& elems);

// v_u = beta^{-1} with beta^{p^e+1} = h'(u); throws when some h'(u) is not a
// (p^e+1)-st power, naming the offending element.
std::vector<Fe> multipliers_from_derivatives(const FieldCtx& F,
                                             const std::vector<Fe>& hp,
                                             std::uint32_t e);

struct CheckOutcome {
  std::string name;     // galois_so / dimension / mds / criterion
  std::string verdict;  // pass / fail / certificate / skipped
  std::string mode;     // how the check ran
  std::int64_t millis = 0;
};

struct ConstructionReport {
  std::string theorem, params;
  std::uint32_t p = 0, h = 0, e = 0;
  std::size_t length = 0, dimension = 0, design_distance = 0;
  std::vector<CheckOutcome> checks;
  std::uint64_t seed = kDefaultSeed;
  bool all_pass() const;
  const CheckOutcome* find(const std::string& name) const;
};

struct VerifyOptions {
  std::string mds_mode = "auto";  // auto | exhaustive | sampled | none
  std::size_t samples = 1000;
  std::uint64_t seed = kDefaultSeed;
};

// Runs the verification battery on an arbitrary code: exact Galois
// self-orthogonality, rank against expected_dim, and either an MDS check
// (mds_expected) or an exhaustive/sampled minimum-distance bound check
// against design_distance. The criterion outcome is supplied by the caller
// (families evaluate it before building; standalone verification skips it).
ConstructionReport verify_code(const LinearCode& c, std::uint32_t e,
                               std::size_t expected_dim,
                               std::size_t design_distance, bool mds_expected,
                               const VerifyOptions& opt, std::string theorem,
                               std::string params, CheckOutcome criterion);

struct Construction {
  LinearCode code;
  ConstructionReport report;
};

// ---- Projective line (token t3) --------------------------------------------
// U = {0} union mu_N union w mu_N ... union w^t mu_N with N = (q-1)/(p^e+1);
// needs p odd, 2e | h, (p^{2e}-1) | N, 0 <= t <= p^e. Codes are
// [(t+1)N+1, k, n-k+1] MDS for k up to floor((n + p^e - 1)/(p^e + 1)).
EvalSet eval_set_t3(FieldPtr F, std::uint32_t e, std::uint32_t t);
Construction construct_line(const EvalSet& U, std::size_t k,
                            const VerifyOptions& opt = {});

// One-step dimension raise for a self-orthogonal node-multiplier code whose
// multipliers satisfy v_u^{p^e+1} = 1/h'(u). Path 1 (k = (n-1)/(p^e+1))
// appends the degree-k row extended by gamma with gamma^{p^e+1} = -1 and
// lengthens the code by one; paths 2 (k below the split) and 3 (k above it,
// needs (n-1) | (q-1)) append the degree-k row at the same length. The
// output is re-verified; a failed verdict is reported, not masked.
struct EmbedOutcome {
  LinearCode code;
  int path = 0;  // 1, 2 or 3
  ConstructionReport report;
};
EmbedOutcome embed(const LinearCode& c, std::uint32_t e,
                   const VerifyOptions& opt = {});

// ---- Elliptic curves over F_{2^h} (token t5) --------------------------------
// variant 1: y^2 + y = x^3       with U = {a in E : Tr(a^3) = 0},
// variant 2: y^2 + y = x^3 + x   with U = {a in E : Tr(a^3 + a) = 0}.
// The first n elements of U (value order) are lifted to both points above
// them; k runs in [3, floor((2n + p^e + 1)/(p^e + 1))] and the code is
// [2n, k-1, >= 2n-k+1]. h'(a) in E is verified per instance.
EvalSet eval_set_t5(FieldPtr F, std::uint32_t e, int variant);
Construction construct_elliptic(FieldPtr F, std::uint32_t e, int variant,
                                std::size_t n, std::size_t k,
                                const VerifyOptions& opt = {});

// ---- Hyper-elliptic y^2 + y = x^{s+1}, s = sqrt(q) (token t6) ---------------
// U = roots of x^n - x with (n-1) | (q-1); h' is identically 1, multipliers
// all ones; k runs in [s+1, floor((2n + p^e + s - 1)/(p^e + 1))] and the
// code is [2n, k - s/2, >= 2n-k+1].
Construction construct_hyper_elliptic(FieldPtr F, std::uint32_t e,
                                      std::size_t n, std::size_t k,
                                      const VerifyOptions& opt = {});

// ---- Hermitian y^s + y = x^{s+1}, s = sqrt(q) (token t7) --------------------
// Six shapes of evaluation set, all with per-instance h' in E verification:
//   case 1: t cosets of a w-dimensional F_{p^a}-subspace (a | e, a | h)
//   case 2: t fibers of the trace onto F_{p^e}
//   case 3: the t3 set reused on the Hermitian curve
//   case 4: t fibers of the norm onto F_{p^e}, optionally with 0
//   case 5: r cosets xi1^i <xi2>, xi_j = w^{x_j}, optionally with 0
//   case 6: r cosets eta_i mu_m picked from <theta2>/mu_m, optionally with 0
// Representative choices (eta, b_i, coset picks) are searched in canonical
// ascending-dlog order under a fixed budget; infeasible parameter sets throw.
struct T7Params {
  int case_id = 0;
  std::uint32_t t = 0;         // cases 1-4
  std::uint32_t sub_a = 0;     // case 1
  std::uint32_t sub_w = 0;     // case 1
  std::uint32_t add_zero = 0;  // cases 4, 5, 6
  std::uint64_t x1 = 0, x2 = 0;  // case 5
  std::uint32_t r = 0;         // cases 5, 6
  std::uint64_t m = 0;         // case 6
};
EvalSet eval_set_t7(FieldPtr F, std::uint32_t e, const T7Params& prm);
Construction construct_hermitian(FieldPtr F, std::uint32_t e, const EvalSet& U,
                                 std::size_t k, const VerifyOptions& opt = {});

// ---- Parameter search -------------------------------------------------------
// All parameter rows of one family (or "all") whose arithmetic preconditions
// hold and whose k-window is nonempty, in deterministic order.
struct ParamRow {
  std::string theorem, params;
  std::size_t n_points = 0, length = 0, k_min = 0, k_max = 0;
};
std::vector<ParamRow> search_params(FieldPtr F, std::uint32_t e,
                                    const std::string& family);
// One line per row: "<theorem> <params> length=<L> k=<min>..<max>".
std::string format_param_rows(const std::vector<ParamRow>& rows);

}  // namespace gagc
