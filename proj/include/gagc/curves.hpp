/*
 * The four curve families behind the constructions, in Weierstrass form with
 * a single point at infinity: the projective line, elliptic curves
 * y^2 + ay = x^3 + bx + c over even-characteristic fields, the hyper-elliptic
 * curve y^2 + y = x^{sqrt(q)+1}, and the Hermitian curve
 * y^{sqrt(q)} + y = x^{sqrt(q)+1}. Provides rational-point enumeration, the
 * monomial basis of L(m * Pinf) from the Weierstrass pole orders, and the
 * evaluation map that turns a basis and a multiplier vector into a code.
 */
#pragma once

#include <optional>

#include "gagc/codes.hpp"

namespace gagc {

enum class CurveFamily { Line, Elliptic, HyperElliptic, Hermitian };

struct CurvePoint {
  Fe x = 0, y = 0;
  friend bool operator==(CurvePoint a, CurvePoint b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator<(CurvePoint a, CurvePoint b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  }
};

struct EllipticParams {
  Fe a = 0, b = 0, c = 0;  // y^2 + a y = x^3 + b x + c
};

struct CurveModel {
  CurveFamily family = CurveFamily::Line;
  FieldPtr ctx;
  std::uint32_t genus = 0;
  std::uint32_t pole_x = 1;   // pole order of x at Pinf
  std::uint32_t pole_y = 0;   // pole order of y at Pinf (unused on the line)
  std::uint32_t y_degree = 1; // monomials keep the y-exponent below this
  std::optional<EllipticParams> ell;
  std::vector<CurvePoint> points;  // affine points, sorted by (x, y) encoding
};

// Enumerates all affine rational points (Pinf excluded) and re-verifies the
// curve equation and the fiber counts. Elliptic requires params and p = 2;
// hyper-elliptic requires p = 2 and even h; Hermitian requires even h.
CurveModel enumerate_points(CurveFamily family, FieldPtr F,
                            std::optional<EllipticParams> params = {});

struct Monomial {
  std::uint32_t i = 0, j = 0;  // x^i y^j
  friend bool operator==(Monomial a, Monomial b) {
    return a.i == b.i && a.j == b.j;
  }
};

// All x^i y^j with j < y_degree and i*pole_x + j*pole_y <= m, ordered by
// pole order then by j. For m >= 2g-1 the count is m+1-g.
std::vector<Monomial> rr_basis(const CurveModel& model, std::uint32_t m);

struct EvaluatedCode {
  LinearCode code;
  bool dim_window_ok = false;   // 2g-2 < m < n, so dim = m+1-g applies
  std::size_t expected_dim = 0; // m+1-g in window, recomputed rank otherwise
  std::size_t rank = 0;
};

// Generator rows (v_t * x_t^i * y_t^j)_t over rr_basis(m). Points must be
// distinct members of model.points and multipliers nonzero.
EvaluatedCode evaluate_code(const CurveModel& model,
                            const std::vector<CurvePoint>& pts,
                            std::uint32_t m, const std::vector<Fe>& v);

}  // namespace gagc
