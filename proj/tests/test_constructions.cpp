#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "doctest.h"
#include "gagc/constructions.hpp"

using namespace gagc;

namespace {

FieldPtr f9() {
  static FieldPtr f = make_field(3, 2);
  return f;
}
FieldPtr f16() {
  static FieldPtr f = make_field(2, 4);
  return f;
}
FieldPtr f25() {
  static FieldPtr f = make_field(5, 2);
  return f;
}
FieldPtr f64() {
  static FieldPtr f = make_field(2, 6);
  return f;
}
FieldPtr f729() {
  static FieldPtr f = make_field(3, 6);
  return f;
}
FieldPtr f6561() {
  static FieldPtr f = make_field(3, 8);
  return f;
}

// The full field as a custom evaluation set: h'(u) = -1 for every u.
EvalSet full_field_set(FieldPtr F, std::uint32_t e) {
  std::vector<Fe> el(F->q);
  for (Fe x = 0; x < F->q; ++x) el[x] = x;
  return {F, e, std::move(el), "t3", "custom"};
}

EvalSet zero_and_roots(FieldPtr F, std::uint32_t e, std::uint64_t n1) {
  std::vector<Fe> el{0};
  for (std::uint64_t i = 0; i < n1; ++i)
    el.push_back(F->exp(i * ((F->q - 1) / n1)));
  std::sort(el.begin(), el.end());
  return {F, e, std::move(el), "t3", "custom"};
}

bool throws_with(const std::function<void()>& fn, const std::string& what) {
  try {
    fn();
  } catch (const std::invalid_argument& ex) {
    return std::string(ex.what()).find(what) != std::string::npos;
  }
  return false;
}

}  // namespace

TEST_CASE("admissible k windows") {
  FieldPtr F = f6561();
  // genus 0, e = 1: k_max = floor((n + 2)/4)
  std::size_t kmax[] = {410, 820, 1230, 1640};
  for (std::uint32_t t = 0; t < 4; ++t) {
    KWindow w = k_window(*F, (t + 1) * 1640 + 1, 0, 1);
    CHECK(w.nonempty);
    CHECK(w.k_min == 1);
    CHECK(w.k_max == kmax[t]);
  }
  // Hermitian window at q = 9: genus 3, n_len = 27
  KWindow h = k_window(*f9(), 27, 3, 1);
  CHECK(h.k_min == 7);
  CHECK(h.k_max == 8);
  CHECK(h.nonempty);
  // empty when the genus floor exceeds the degree cap
  CHECK_FALSE(k_window(*f9(), 9, 3, 1).nonempty);

  // dual-degree criterion at the Hermitian q = 9 instance
  CHECK(criterion_check(*f9(), 6, 25, 1, 3, 7, 27));
  CHECK_FALSE(criterion_check(*f9(), 6, 25, 1, 3, 6, 27));   // k below 2g+1
  CHECK_FALSE(criterion_check(*f9(), 28, 99, 1, 3, 7, 27));  // deg >= n
  CHECK_FALSE(criterion_check(*f9(), 6, 17, 1, 3, 7, 27));   // p^e deg > coeff
}

TEST_CASE("multiplier derivation guards") {
  FieldPtr F = f9();
  CHECK_THROWS_AS(derivative_values(*F, {3, 1}), std::invalid_argument);
  CHECK_THROWS_AS(derivative_values(*F, {1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(derivative_values(*F, {}), std::invalid_argument);
  // h'(u) = -1 = 2 on the full field; 2 = w^4 is a 4th power, root w, v = w^7
  std::vector<Fe> hp = derivative_values(*F, full_field_set(F, 1).elements);
  for (Fe d : hp) CHECK(d == 2);
  std::vector<Fe> v = multipliers_from_derivatives(*F, hp, 1);
  for (Fe m : v) CHECK(m == 4);  // w^7 encodes as 4
  // w itself is not a 4th power at e = 1
  CHECK(throws_with([&] { multipliers_from_derivatives(*F, {3}, 1); },
                    "power residue"));
}

TEST_CASE("coset evaluation sets and closed-form derivatives") {
  FieldPtr F = f6561();
  const std::uint64_t q1 = F->q - 1, N = q1 / 4;
  for (std::uint32_t t = 0; t <= 3; ++t) {
    EvalSet U = eval_set_t3(F, 1, t);
    REQUIRE(U.elements.size() == (t + 1) * N + 1);
    CHECK(U.theorem == "t3");
    CHECK(U.params == "t=" + std::to_string(t));
    std::vector<Fe> hp = derivative_values(*F, U.elements);
    // closed forms: on the coset w^j mu_N the derivative is
    // N * A_j * prod_{i != j} (A_j - A_i) with A_i = w^{iN}; at zero it is
    // (-1)^{t+1} prod A_i.
    std::vector<Fe> A(t + 1);
    for (std::uint32_t j = 0; j <= t; ++j) A[j] = F->exp(j * N);
    Fe at_zero = t % 2 == 0 ? F->neg(1) : 1;
    for (Fe a : A) at_zero = F->mul(at_zero, a);
    const Fe Nmod = static_cast<Fe>(N % 3);
    for (std::size_t i = 0; i < U.elements.size(); ++i) {
      Fe u = U.elements[i];
      if (u == 0) {
        CHECK(hp[i] == at_zero);
        continue;
      }
      std::uint32_t j = F->dlog(u) % 4;
      REQUIRE(j <= t);
      Fe want = F->mul(Nmod, A[j]);
      for (std::uint32_t l = 0; l <= t; ++l)
        if (l != j) want = F->mul(want, F->sub(A[j], A[l]));
      CHECK(hp[i] == want);
    }
    if (t == 0)
      for (Fe d : hp) CHECK(d == 2);  // 1640 = 2 and -1 = 2 mod 3
  }
  // arithmetic preconditions
  CHECK_THROWS_AS(eval_set_t3(f9(), 1, 0), std::invalid_argument);   // 8 | 2
  CHECK_THROWS_AS(eval_set_t3(f16(), 1, 0), std::invalid_argument);  // p = 2
  CHECK_THROWS_AS(eval_set_t3(f6561(), 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(eval_set_t3(f6561(), 1, 4), std::invalid_argument);
}

TEST_CASE("node-multiplier constructions verify end to end") {
  FieldPtr F9 = f9();
  EvalSet U9 = full_field_set(F9, 1);
  Construction c = construct_line(U9, 2);
  CHECK(c.report.all_pass());
  CHECK(c.code.length() == 9);
  CHECK(c.report.dimension == 2);
  CHECK(c.report.design_distance == 8);
  CHECK(c.report.find("galois_so")->mode == "power-sum");
  CHECK(c.report.find("mds")->verdict == "pass");  // C(9,2) subsets fit
  CHECK(c.code.grs->v == std::vector<Fe>(9, 4));
  CHECK_THROWS_AS(construct_line(U9, 3), std::invalid_argument);
  CHECK_THROWS_AS(construct_line(U9, 0), std::invalid_argument);

  FieldPtr F = f6561();
  EvalSet U = eval_set_t3(F, 1, 0);
  Construction c1 = construct_line(U, 1);
  CHECK(c1.report.all_pass());
  CHECK(c1.report.length == 1641);
  CHECK(c1.report.find("mds")->verdict == "pass");  // 1641 one-point subsets
  Construction c5 = construct_line(U, 5);
  CHECK(c5.report.all_pass());
  CHECK(c5.report.dimension == 5);
  CHECK(c5.report.design_distance == 1637);
  CHECK(c5.report.find("mds")->verdict == "certificate");
  CHECK(c5.report.find("mds")->mode == "sampled-subsets");
}

TEST_CASE("dimension raise: split path and low path") {
  FieldPtr F = f9();
  EvalSet U9 = full_field_set(F, 1);
  LinearCode base = construct_line(U9, 2).code;

  EmbedOutcome one = embed(base, 1);
  CHECK(one.path == 1);  // k (p^e + 1) = 8 = n - 1
  CHECK(one.code.length() == 10);
  CHECK(one.code.ext_gamma.has_value());
  CHECK(*one.code.ext_gamma == 3);  // gamma = w, the least root of x^4 = -1
  CHECK(one.report.all_pass());
  CHECK(one.report.dimension == 3);
  CHECK(one.report.design_distance == 8);
  CHECK(one.report.find("mds")->verdict == "pass");
  CHECK(one.report.params == "path=1 k=3");
  // the lengthened code is no longer plain node-multiplier form: reject
  CHECK_THROWS_AS(embed(one.code, 1), std::invalid_argument);

  LinearCode low = construct_line(U9, 1).code;
  EmbedOutcome two = embed(low, 1);
  CHECK(two.path == 2);
  CHECK(two.code.length() == 9);
  CHECK(two.report.dimension == 2);
  CHECK(two.report.design_distance == 8);
  CHECK(two.report.all_pass());

  // residue mismatch: rescale one multiplier by a non-residue
  GrsSpec bad = *base.grs;
  bad.v[0] = F->mul(bad.v[0], 3);
  LinearCode bad_code = grs_encode(F, bad);
  CHECK(throws_with([&] { embed(bad_code, 1); }, "residues"));
}

TEST_CASE("dimension raise: high path, honest verdicts") {
  // (q-1) | 24 with n - 1 = 8: the raise stays self-orthogonal
  FieldPtr F25 = f25();
  EvalSet U = zero_and_roots(F25, 1, 8);
  Construction base = construct_line(U, 2);
  CHECK(base.report.all_pass());
  EmbedOutcome up = embed(base.code, 1);
  CHECK(up.path == 3);
  CHECK(up.code.length() == 9);
  CHECK(up.report.dimension == 3);
  CHECK(up.report.design_distance == 7);
  CHECK(up.report.all_pass());
  CHECK(up.report.find("mds")->verdict == "pass");

  // same shape over GF(729) with n - 1 = 13: the added row breaks
  // self-orthogonality (the 13th power sum over mu_13 is 13 = 1, not 0);
  // the verdict reports it instead of masking it.
  FieldPtr F729 = f729();
  EvalSet U13 = zero_and_roots(F729, 1, 13);
  Construction b13 = construct_line(U13, 4);
  CHECK(b13.report.all_pass());
  EmbedOutcome raise = embed(b13.code, 1);
  CHECK(raise.path == 3);
  CHECK(raise.report.find("galois_so")->verdict == "fail");
  CHECK_FALSE(raise.report.all_pass());

  CHECK_THROWS_AS(embed(construct_line(full_field_set(f16(), 1), 2).code, 1),
                  std::invalid_argument);  // even characteristic
}

TEST_CASE("elliptic evaluation sets and constructions") {
  FieldPtr F16 = f16();
  CHECK(eval_set_t5(F16, 1, 1).elements == std::vector<Fe>{1});
  CHECK(eval_set_t5(F16, 1, 2).elements == std::vector<Fe>{1, 3, 5, 8, 15});
  // n = 4 prefix of U2: h'(1) = w^7 is not a cube, so no multipliers exist
  CHECK(throws_with([&] { construct_elliptic(F16, 1, 2, 4, 3); },
                    "power residue"));
  // U1 has one element: every k window over 2 symbols is empty
  CHECK(throws_with([&] { construct_elliptic(F16, 1, 1, 1, 3); }, "window"));
  CHECK_THROWS_AS(eval_set_t5(f9(), 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(eval_set_t5(F16, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(eval_set_t5(f64(), 2, 1), std::invalid_argument);  // 4 | 6

  FieldPtr F64 = f64();
  EvalSet u1 = eval_set_t5(F64, 1, 1);
  REQUIRE(u1.elements.size() == 21);  // all of E: traces of cubes vanish
  Construction small = construct_elliptic(F64, 1, 1, 21, 3);
  CHECK(small.report.all_pass());
  CHECK(small.code.length() == 42);
  CHECK(small.report.dimension == 2);
  CHECK(small.report.design_distance == 40);
  CHECK(small.report.find("mds")->mode == "exhaustive-distance");
  CHECK(small.report.find("mds")->verdict == "pass");
  CHECK(small.report.params == "U1 n=21");
  Construction big = construct_elliptic(F64, 1, 1, 21, 15);
  CHECK(big.report.all_pass());
  CHECK(big.report.dimension == 14);
  CHECK(big.report.design_distance == 28);
  CHECK(big.report.find("mds")->mode == "sampled-distance");
  CHECK(big.report.find("mds")->verdict == "certificate");
  VerifyOptions ex;
  ex.mds_mode = "exhaustive";
  CHECK(throws_with([&] { construct_elliptic(F64, 1, 1, 21, 15, ex); },
                    "budget"));
}

TEST_CASE("double-cover constructions") {
  FieldPtr F16 = f16();
  Construction c = construct_hyper_elliptic(F16, 1, 16, 5);
  CHECK(c.report.all_pass());
  CHECK(c.code.length() == 32);
  CHECK(c.report.dimension == 3);
  CHECK(c.report.design_distance == 28);
  CHECK(c.report.find("mds")->mode == "exhaustive-distance");
  CHECK(c.report.find("mds")->verdict == "pass");
  CHECK(c.report.theorem == "t6");
  CHECK(c.report.params == "n=16");
  Construction c6 = construct_hyper_elliptic(F16, 1, 6, 5);
  CHECK(c6.report.all_pass());
  CHECK(c6.code.length() == 12);
  CHECK(c6.report.dimension == 3);
  CHECK(c6.report.design_distance == 8);

  CHECK_THROWS_AS(construct_hyper_elliptic(F16, 1, 7, 5),
                  std::invalid_argument);  // 6 does not divide 15
  CHECK_THROWS_AS(construct_hyper_elliptic(F16, 1, 16, 4),
                  std::invalid_argument);  // below the genus floor
  CHECK_THROWS_AS(construct_hyper_elliptic(f9(), 1, 9, 5),
                  std::invalid_argument);  // odd characteristic
}

TEST_CASE("hermitian evaluation sets: subspace cosets and trace fibers") {
  FieldPtr F = f9();
  T7Params p;
  p.case_id = 1;
  p.sub_a = 1;
  p.sub_w = 1;
  p.t = 1;
  CHECK(eval_set_t7(F, 1, p).elements == std::vector<Fe>{0, 1, 2});
  p.t = 2;  // both candidate derivatives land outside E for every eta
  CHECK_THROWS_AS(eval_set_t7(F, 1, p), std::invalid_argument);
  p.t = 3;
  EvalSet full = eval_set_t7(F, 1, p);
  CHECK(full.elements.size() == 9);
  CHECK(full.params == "case=1 a=1 w=1 t=3");

  T7Params tr;
  tr.case_id = 2;
  tr.t = 1;
  EvalSet f1 = eval_set_t7(F, 1, tr);
  REQUIRE(f1.elements.size() == 3);
  for (Fe x : f1.elements) CHECK(F->relative_trace(x, 1) == 0);
  tr.t = 2;
  EvalSet f2 = eval_set_t7(F, 1, tr);
  REQUIRE(f2.elements.size() == 6);
  for (Fe x : f2.elements) CHECK(F->relative_trace(x, 1) <= 1);
  tr.t = 3;
  CHECK(eval_set_t7(F, 1, tr).elements.size() == 9);

  T7Params c3;
  c3.case_id = 3;
  c3.t = 1;
  CHECK_THROWS_AS(eval_set_t7(F, 1, c3), std::invalid_argument);  // 8 | 2
  EvalSet via3 = eval_set_t7(f6561(), 1, c3);
  CHECK(via3.theorem == "t7");
  CHECK(via3.params == "case=3 t=1");
  CHECK(via3.elements.size() == 2 * 1640 + 1);

  CHECK_THROWS_AS(eval_set_t7(f16(), 1, tr), std::invalid_argument);
  CHECK_THROWS_AS(eval_set_t7(make_field(3, 3), 1, tr),
                  std::invalid_argument);  // h odd
  T7Params bogus;
  bogus.case_id = 7;
  CHECK_THROWS_AS(eval_set_t7(F, 1, bogus), std::invalid_argument);
}

TEST_CASE("hermitian evaluation sets: norm fibers and root cosets") {
  FieldPtr F = f9();
  T7Params nf;
  nf.case_id = 4;
  nf.t = 1;
  nf.add_zero = 1;
  CHECK(eval_set_t7(F, 1, nf).elements == std::vector<Fe>{0, 1, 2, 5, 7});
  nf.t = 2;
  CHECK(eval_set_t7(F, 1, nf).elements.size() == 9);
  nf.add_zero = 0;  // h' picks up 1/alpha, whose exponent leaves E
  CHECK_THROWS_AS(eval_set_t7(F, 1, nf), std::invalid_argument);
  nf.t = 1;
  CHECK_THROWS_AS(eval_set_t7(F, 1, nf), std::invalid_argument);

  T7Params pc;
  pc.case_id = 5;
  pc.x1 = 8;
  pc.x2 = 1;
  pc.r = 1;
  pc.add_zero = 1;
  CHECK(eval_set_t7(F, 1, pc).elements.size() == 9);
  pc.add_zero = 0;
  CHECK_THROWS_AS(eval_set_t7(F, 1, pc), std::invalid_argument);
  pc.x2 = 8;
  pc.add_zero = 1;
  CHECK(eval_set_t7(F, 1, pc).elements == std::vector<Fe>{0, 1});
  pc.r = 2;  // the cosets xi1^i <xi2> already repeat at i = 2
  CHECK_THROWS_AS(eval_set_t7(F, 1, pc), std::invalid_argument);

  T7Params rc;
  rc.case_id = 6;
  rc.m = 2;
  rc.r = 1;
  CHECK(eval_set_t7(F, 1, rc).elements == std::vector<Fe>{1, 2});
  rc.r = 2;  // h' = alpha^3 sweeps dlogs 2 and 6, outside E
  CHECK_THROWS_AS(eval_set_t7(F, 1, rc), std::invalid_argument);
  rc.m = 8;
  rc.r = 1;
  rc.add_zero = 1;
  CHECK(eval_set_t7(F, 1, rc).elements.size() == 9);
}

TEST_CASE("hermitian constructions verify (q = 9 and q = 81)") {
  FieldPtr F = f9();
  T7Params tr;
  tr.case_id = 2;
  tr.t = 3;
  EvalSet U = eval_set_t7(F, 1, tr);
  Construction c7 = construct_hermitian(F, 1, U, 7);
  CHECK(c7.report.all_pass());
  CHECK(c7.code.length() == 27);
  CHECK(c7.report.dimension == 4);
  CHECK(c7.report.design_distance == 21);
  CHECK(c7.report.find("mds")->mode == "exhaustive-distance");
  CHECK(c7.report.find("mds")->verdict == "pass");
  CHECK(c7.report.theorem == "t7");
  CHECK(c7.report.params == "case=2 t=3");
  Construction c8 = construct_hermitian(F, 1, U, 8);
  CHECK(c8.report.all_pass());
  CHECK(c8.report.dimension == 5);
  CHECK(c8.report.design_distance == 20);
  CHECK_THROWS_AS(construct_hermitian(F, 1, U, 6), std::invalid_argument);
  CHECK_THROWS_AS(construct_hermitian(F, 1, U, 9), std::invalid_argument);
  CHECK_THROWS_AS(construct_hermitian(f25(), 1, U, 7), std::invalid_argument);

  T7Params nf;
  nf.case_id = 4;
  nf.t = 2;
  nf.add_zero = 1;
  Construction c4 = construct_hermitian(F, 1, eval_set_t7(F, 1, nf), 7);
  CHECK(c4.report.all_pass());
  CHECK(c4.report.params == "case=4 t=2 zero=1");

  // a larger instance: full-field trace fibers over GF(81)
  FieldPtr F81 = make_field(3, 4);
  T7Params big;
  big.case_id = 2;
  big.t = 3;
  EvalSet U81 = eval_set_t7(F81, 1, big);
  REQUIRE(U81.elements.size() == 81);
  Construction c81 = construct_hermitian(F81, 1, U81, 73);
  CHECK(c81.report.all_pass());
  CHECK(c81.code.length() == 729);
  CHECK(c81.report.dimension == 37);
  CHECK(c81.report.design_distance == 657);
  CHECK(c81.report.find("mds")->mode == "sampled-distance");
  CHECK(c81.report.find("mds")->verdict == "certificate");
}

TEST_CASE("verification battery: modes and skip paths") {
  FieldPtr F = f9();
  EvalSet U9 = full_field_set(F, 1);
  VerifyOptions none;
  none.mds_mode = "none";
  Construction c = construct_line(U9, 2, none);
  CHECK(c.report.find("mds")->verdict == "skipped");
  CHECK(c.report.all_pass());  // skipped does not fail the battery
  VerifyOptions bogus;
  bogus.mds_mode = "fastest";
  CHECK_THROWS_AS(construct_line(U9, 2, bogus), std::invalid_argument);

  // corrupting one generator entry must flip the orthogonality verdict
  LinearCode broken = c.code;
  broken.grs.reset();  // entries no longer follow the row recurrence
  broken.gen.at(0, 0) = F->add(broken.gen.at(0, 0), 1);
  ConstructionReport rep =
      verify_code(broken, 1, 2, 8, false, none, "t3", "tampered",
                  {"criterion", "skipped", "not-applicable", 0});
  CHECK(rep.find("galois_so")->verdict == "fail");
  CHECK(rep.find("galois_so")->mode == "dense-gram");
  CHECK_FALSE(rep.all_pass());
}

TEST_CASE("parameter search enumerations") {
  // projective-line rows over GF(3^8)
  std::vector<ParamRow> t3 = search_params(f6561(), 1, "t3");
  CHECK(format_param_rows(t3) ==
        "t3 t=0 length=1641 k=1..410\n"
        "t3 t=1 length=3281 k=1..820\n"
        "t3 t=2 length=4921 k=1..1230\n"
        "t3 t=3 length=6561 k=1..1640\n");
  CHECK(search_params(f6561(), 2, "t3").empty());
  CHECK(search_params(f6561(), 4, "t3").empty());

  // double-cover rows over GF(16)
  CHECK(format_param_rows(search_params(f16(), 1, "t6")) ==
        "t6 n=6 length=12 k=5..5\n"
        "t6 n=16 length=32 k=5..12\n");

  // elliptic windows over GF(4) are all empty
  CHECK(search_params(make_field(2, 2), 1, "t5").empty());
  // over GF(64) the first curve uses its full 21-element set; the second
  // keeps the subset of E with vanishing trace, whatever its size
  std::size_t u2n = eval_set_t5(f64(), 1, 2).elements.size();
  REQUIRE(u2n >= 2);
  KWindow w2 = k_window(*f64(), 2 * u2n, 1, 1);
  std::string t5rows = "t5 U1 n=21 length=42 k=3..15\n";
  if (w2.nonempty)
    t5rows += "t5 U2 n=" + std::to_string(u2n) +
              " length=" + std::to_string(2 * u2n) +
              " k=" + std::to_string(w2.k_min) + ".." +
              std::to_string(w2.k_max) + "\n";
  CHECK(format_param_rows(search_params(f64(), 1, "t5")) == t5rows);

  // Hermitian rows over GF(9): every case with a nonempty window
  CHECK(format_param_rows(search_params(f9(), 1, "t7")) ==
        "t7 case=1 a=1 w=1 t=3 length=27 k=7..8\n"
        "t7 case=2 t=3 length=27 k=7..8\n"
        "t7 case=4 t=2 zero=0 length=24 k=7..8\n"
        "t7 case=4 t=2 zero=1 length=27 k=7..8\n"
        "t7 case=5 x1=8 x2=1 r=1 zero=0 length=24 k=7..8\n"
        "t7 case=5 x1=8 x2=1 r=1 zero=1 length=27 k=7..8\n"
        "t7 case=6 m=4 r=2 zero=0 length=24 k=7..8\n"
        "t7 case=6 m=4 r=2 zero=1 length=27 k=7..8\n"
        "t7 case=6 m=8 r=1 zero=0 length=24 k=7..8\n"
        "t7 case=6 m=8 r=1 zero=1 length=27 k=7..8\n");
  // "all" at GF(9) picks up exactly the odd-characteristic families
  CHECK(format_param_rows(search_params(f9(), 1, "all")) ==
        format_param_rows(search_params(f9(), 1, "t7")));
  CHECK_THROWS_AS(search_params(f9(), 1, "bogus"), std::invalid_argument);
}
