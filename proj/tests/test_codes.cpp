#include "doctest.h"
#include "gagc/codes.hpp"

using namespace gagc;

namespace {

LinearCode random_code(FieldPtr F, std::size_t k, std::size_t n, Rng& rng) {
  GfMatrix gen(F, k, n);
  for (Fe& x : gen.a) x = (Fe)rng.below(F->q);
  return LinearCode{F, std::move(gen), std::nullopt, std::nullopt};
}

GrsSpec spec_first_n(const FieldCtx&, std::size_t n, std::size_t k) {
  GrsSpec s;
  for (Fe x = 0; x < n; ++x) {
    s.alpha.push_back(x);
    s.v.push_back(1);
  }
  s.k = k;
  return s;
}

}  // namespace

TEST_CASE("galois inner product") {
  auto F4 = make_field(2, 2);
  CHECK(galois_ip(*F4, {1, 1}, {1, 1}, 1) == 0);
  CHECK_THROWS_AS((void)galois_ip(*F4, {1}, {1, 1}, 1), std::invalid_argument);
  CHECK_THROWS_AS((void)galois_ip(*F4, {1}, {1}, 2), std::invalid_argument);

  auto F9 = make_field(3, 2);
  Rng rng(kDefaultSeed);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Fe> x(5), y(5);
    for (auto* vec : {&x, &y})
      for (Fe& t : *vec) t = (Fe)rng.below(9);
    Fe euclid = 0;
    for (int i = 0; i < 5; ++i) euclid = F9->add(euclid, F9->mul(x[i], y[i]));
    CHECK(galois_ip(*F9, x, y, 0) == euclid);
    // semilinearity in the second slot: <x, w y> = w^{p^e} <x, y>
    std::vector<Fe> wy = y;
    for (Fe& t : wy) t = F9->mul(3, t);
    CHECK(galois_ip(*F9, x, wy, 1) ==
          F9->mul(F9->frobenius(3, 1), galois_ip(*F9, x, y, 1)));
  }
}

TEST_CASE("self-orthogonality verdicts on hand instances") {
  auto F4 = make_field(2, 2);
  GfMatrix g1(F4, 1, 3);
  g1.at(0, 0) = g1.at(0, 1) = g1.at(0, 2) = 1;
  LinearCode c1{F4, g1, std::nullopt, std::nullopt};
  CHECK_FALSE(is_galois_so(c1, 1));  // <g,g>_1 = 3*1 = 1 in GF(4)

  auto F9 = make_field(3, 2);
  GfMatrix g2(F9, 1, 3);
  g2.at(0, 0) = g2.at(0, 1) = g2.at(0, 2) = 1;
  LinearCode c2{F9, g2, std::nullopt, std::nullopt};
  CHECK(is_galois_so(c2, 1));  // three norms 1 sum to 0 mod 3

  LinearCode zero{F9, GfMatrix(F9, 0, 4), std::nullopt, std::nullopt};
  CHECK(is_galois_so(zero, 1));
}

TEST_CASE("galois dual: dimensions, orthogonality, Frobenius identity") {
  auto F9 = make_field(3, 2);
  GfMatrix id(F9, 3, 3);
  for (int i = 0; i < 3; ++i) id.at(i, i) = 1;
  LinearCode full{F9, id, std::nullopt, std::nullopt};
  for (std::uint32_t e : {0u, 1u}) CHECK(galois_dual(full, e).dim_rows() == 0);

  Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    LinearCode c = random_code(F9, 1 + rng.below(4), 2 + rng.below(6), rng);
    for (std::uint32_t e : {0u, 1u}) {
      LinearCode d = galois_dual(c, e);
      CHECK(d.dim_rows() + rank_of(c.gen) == c.length());
      for (std::size_t i = 0; i < c.dim_rows(); ++i)
        for (std::size_t j = 0; j < d.dim_rows(); ++j) {
          std::vector<Fe> x(c.gen.a.begin() + i * c.length(),
                            c.gen.a.begin() + (i + 1) * c.length());
          std::vector<Fe> y(d.gen.a.begin() + j * d.length(),
                            d.gen.a.begin() + (j + 1) * d.length());
          CHECK(galois_ip(*F9, x, y, e) == 0);
        }
    }
    // dual(C, e) equals the p^{h-e} Frobenius image of the Euclidean dual
    LinearCode d1 = galois_dual(c, 1);
    GfMatrix d0img = frobenius_entrywise(galois_dual(c, 0).gen, 1);
    CHECK(row_space_equal(d1.gen, d0img));
  }
}

TEST_CASE("SO check agrees with C subseteq dual and with the generic Gram") {
  auto F9 = make_field(3, 2);
  Rng rng(23);
  int so_seen = 0;
  for (int trial = 0; trial < 200; ++trial) {
    LinearCode c = random_code(F9, 1 + rng.below(3), 2 + rng.below(5), rng);
    for (std::uint32_t e : {0u, 1u}) {
      bool gram = is_galois_so(c, e);
      bool contain = row_space_contains(galois_dual(c, e).gen, c.gen);
      CHECK(gram == contain);
      CHECK(gram == is_zero(galois_gram(c, e)));
      so_seen += gram;
    }
  }
  CHECK(so_seen > 0);  // the sweep actually exercised both verdicts
}

TEST_CASE("GRS encoding, duals, validation") {
  auto F4 = make_field(2, 2);
  GrsSpec s{{0, 1, 2}, {1, 1, 1}, 2};
  LinearCode c = grs_encode(F4, s);
  CHECK(c.gen.at(0, 2) == 1);
  CHECK(c.gen.at(1, 2) == 2);
  CHECK(grs_form_validates(c));
  CHECK(code_rank(c) == 2);

  auto d = min_distance(c, DistanceMode::exhaustive());
  CHECK(d.exact);
  CHECK(d.d == 2);
  CHECK(d.enumerated == 5);  // (16-1)/3 normalized messages

  LinearCode broken = c;
  broken.gen.at(1, 1) = 2;
  CHECK_FALSE(grs_form_validates(broken));
  CHECK(is_galois_so(broken, 1) == is_zero(galois_gram(broken, 1)));

  CHECK_THROWS_AS((void)grs_encode(F4, GrsSpec{{0, 0, 1}, {1, 1, 1}, 2}),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)grs_encode(F4, GrsSpec{{0, 1, 2}, {1, 0, 1}, 2}),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)grs_encode(F4, GrsSpec{{0, 1, 2}, {1, 1, 1}, 4}),
                  std::invalid_argument);

  auto F3 = make_field(3, 1);
  CHECK(grs_dual_multiplier(*F3, {0, 1, 2}) == std::vector<Fe>{2, 2, 2});
  CHECK(grs_dual_multiplier(*F3, {0, 1}) == std::vector<Fe>{2, 1});

  // Euclidean dual of GRS_k(alpha, v) is GRS_{n-k}(alpha, u/v)
  auto F9 = make_field(3, 2);
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::size_t> pick = rng.subset(9, 5);
    GrsSpec sp;
    for (std::size_t i : pick) {
      sp.alpha.push_back((Fe)i);
      sp.v.push_back(1 + (Fe)rng.below(8));
    }
    sp.k = 1 + rng.below(4);
    LinearCode code = grs_encode(F9, sp);
    std::vector<Fe> u = grs_dual_multiplier(*F9, sp.alpha);
    GrsSpec dual_spec;
    dual_spec.alpha = sp.alpha;
    for (std::size_t i = 0; i < 5; ++i)
      dual_spec.v.push_back(F9->div(u[i], sp.v[i]));
    dual_spec.k = 5 - sp.k;
    CHECK(row_space_equal(grs_encode(F9, dual_spec).gen,
                          galois_dual(code, 0).gen));
  }
}

TEST_CASE("structured SO route matches the generic Gram on GRS forms") {
  auto F9 = make_field(3, 2);
  Rng rng(29);
  int disagree = 0, so_structured = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 4 + rng.below(6);
    std::vector<std::size_t> pick = rng.subset(9, n);
    GrsSpec sp;
    for (std::size_t i : pick) {
      sp.alpha.push_back((Fe)i);
      sp.v.push_back(1 + (Fe)rng.below(8));
    }
    sp.k = 1 + rng.below(3);
    LinearCode code = grs_encode(F9, sp);
    LinearCode stripped = code;
    stripped.grs.reset();  // forces the generic route
    for (std::uint32_t e : {0u, 1u}) {
      bool fast = is_galois_so(code, e);
      bool slow = is_galois_so(stripped, e);
      disagree += fast != slow;
      so_structured += fast;
    }
  }
  CHECK(disagree == 0);
  CHECK(so_structured > 0);
}

TEST_CASE("extension-column codes: structured routes match generic ones") {
  auto F9 = make_field(3, 2);
  // degree rows 0..2 on all nine nodes, then an extension column
  GrsSpec sp = spec_first_n(*F9, 9, 3);
  for (Fe gamma : {1u, 3u, 7u}) {
    LinearCode base = grs_encode(F9, sp);
    GfMatrix gen(F9, 3, 10);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t t = 0; t < 9; ++t) gen.at(i, t) = base.gen.at(i, t);
    gen.at(2, 9) = gamma;
    LinearCode ext{F9, gen, sp, gamma};
    CHECK(grs_form_validates(ext));
    CHECK(code_rank(ext) == 3);

    LinearCode generic = ext;
    generic.grs.reset();
    generic.ext_gamma.reset();
    for (std::uint32_t e : {0u, 1u})
      CHECK(is_galois_so(ext, e) == is_galois_so(generic, e));

    auto fast = is_mds(ext, MdsMode{MdsMode::Sampled, 100, 99});
    auto slow = all_k_subsets_nonsingular(generic.gen,
                                          SubsetMode::sampled(100, 99));
    CHECK(fast.ok == slow.ok);
    auto exhaustive = is_mds(generic, MdsMode{MdsMode::Exhaustive, 0, 0});
    CHECK(exhaustive.ok);  // gamma-extended Vandermonde stays MDS
    CHECK(fast.ok);
  }
}

TEST_CASE("minimum distance and MDS verdicts") {
  auto F4 = make_field(2, 2);
  LinearCode rep = grs_encode(F4, GrsSpec{{0, 1, 2}, {1, 1, 1}, 1});
  auto d = min_distance(rep, DistanceMode::exhaustive());
  CHECK(d.d == 3);
  CHECK(d.exact);

  auto bc = min_distance(rep, DistanceMode::bound_check(3, 50, 7));
  CHECK(bc.bound_ok);
  CHECK(bc.d == 3);
  CHECK_FALSE(min_distance(rep, DistanceMode::bound_check(4, 50, 7)).bound_ok);

  auto F9 = make_field(3, 2);
  GfMatrix big(F9, 9, 9);
  for (int i = 0; i < 9; ++i) big.at(i, i) = 1;
  LinearCode idc{F9, big, std::nullopt, std::nullopt};
  CHECK_THROWS_AS(
      (void)min_distance(idc, DistanceMode::exhaustive()),
      std::invalid_argument);  // (9^9-1)/8 blows the message budget

  auto mds = is_mds(grs_encode(F4, GrsSpec{{0, 1, 2}, {1, 1, 1}, 2}));
  CHECK(mds.ok);
  CHECK(mds.mode_used == "exhaustive-subsets");

  GfMatrix zc(F4, 2, 3);
  zc.at(0, 0) = 1;
  zc.at(1, 2) = 1;  // column 1 is identically zero
  LinearCode zcol{F4, zc, std::nullopt, std::nullopt};
  CHECK_FALSE(is_mds(zcol, MdsMode{MdsMode::Exhaustive, 0, 0}).ok);

  auto F16 = make_field(2, 4);
  for (std::size_t n = 2; n <= 12; n += 5)
    for (std::size_t k = 1; k <= n; k += 2) {
      LinearCode g = grs_encode(F16, spec_first_n(*F16, n, k));
      CHECK(is_mds(g, MdsMode{MdsMode::Exhaustive, 0, 0}).ok);
    }
}

TEST_CASE("code nesting: consecutive GRS dimensions are nested") {
  auto F16 = make_field(2, 4);
  for (std::size_t k = 1; k < 6; ++k) {
    LinearCode small = grs_encode(F16, spec_first_n(*F16, 9, k));
    LinearCode large = grs_encode(F16, spec_first_n(*F16, 9, k + 1));
    CHECK(row_space_contains(large.gen, small.gen));
    CHECK_FALSE(row_space_contains(small.gen, large.gen));
  }
}
