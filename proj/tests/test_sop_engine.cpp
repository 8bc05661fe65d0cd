#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "sopkit/randgen.hpp"
#include "sopkit/verifier.hpp"

using namespace sopkit;
using sopkit::testing::member_bounded;

namespace {

const Corpus& corpus() {
  static Corpus c = Corpus::standard();
  return c;
}

const RingPresentation& ring(const char* name) { return *corpus().find(name); }

Sop variable_sop(const RingPresentation& R) {
  std::vector<Polynomial> xs;
  for (std::size_t i = 0; i < R.ambient()->nvars(); ++i)
    xs.push_back(Polynomial::variable(R.ambient(), i));
  return Sop(R, std::move(xs));
}

}  // namespace

TEST_CASE("presentations compute dimension and reject bad input") {
  CHECK(ring("regular2").dim() == 2);
  CHECK(ring("nonCM1").dim() == 1);
  CHECK(ring("two_planes").dim() == 2);

  RingPtr S = Ring::make(Field::gf(kDefaultPrime), {"x", "y"});
  CHECK_THROWS_WITH_AS(
      RingPresentation::make(S, parse_ideal("(x^2 + y)", S), "bad"),
      doctest::Contains("inhomogeneous"), Error);
  CHECK_THROWS_AS(RingPresentation::make(S, parse_ideal("(x, 5)", S), "unit"), Error);
}

TEST_CASE("is_sop examples") {
  const RingPresentation& r2 = ring("regular2");
  auto S2 = r2.ambient();
  std::vector<Polynomial> xy{parse_poly("x", S2), parse_poly("y", S2)};
  CHECK(is_sop(r2, xy));

  const RingPresentation& tp = ring("two_planes");
  auto S4 = tp.ambient();
  std::vector<Polynomial> diag{parse_poly("x + u", S4), parse_poly("y + v", S4)};
  std::vector<Polynomial> plane{parse_poly("x", S4), parse_poly("y", S4)};
  CHECK(is_sop(tp, diag));
  CHECK(!is_sop(tp, plane));

  std::vector<Polynomial> short_list{parse_poly("x", S4)};
  CHECK_THROWS_AS(is_sop(tp, short_list), Error);
  std::vector<Polynomial> inhomog{parse_poly("x + u^2", S4), parse_poly("y + v", S4)};
  CHECK_THROWS_AS(is_sop(tp, inhomog), Error);
}

TEST_CASE("lambda sets") {
  auto l1 = lambda_set(1, 4);
  REQUIRE(l1.size() == 1);
  CHECK(l1[0].parts == std::vector<std::uint32_t>{4});

  auto l22 = lambda_set(2, 2);
  REQUIRE(l22.size() == 2);
  CHECK(l22[0].parts == std::vector<std::uint32_t>{1, 2});
  CHECK(l22[1].parts == std::vector<std::uint32_t>{2, 1});

  auto l32 = lambda_set(3, 2);
  REQUIRE(l32.size() == 3);
  CHECK(l32[0].parts == std::vector<std::uint32_t>{1, 1, 2});
  CHECK(l32[1].parts == std::vector<std::uint32_t>{1, 2, 1});
  CHECK(l32[2].parts == std::vector<std::uint32_t>{2, 1, 1});

  // |Lambda_{s,n}| = C(n+s-2, s-1), every part positive, sums right
  auto binom = [](std::uint32_t n, std::uint32_t k) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
  };
  for (std::uint32_t s = 1; s <= 4; ++s)
    for (std::uint32_t n = 1; n <= 5; ++n) {
      auto lam = lambda_set(s, n);
      CHECK(lam.size() == binom(n + s - 2, s - 1));
      for (const MultiIndex& a : lam) {
        CHECK(a.parts.size() == s);
        CHECK(a.sum() == s + n - 1);
        for (std::uint32_t p : a.parts) CHECK(p >= 1);
      }
    }
}

TEST_CASE("parametric intersection") {
  const RingPresentation& r2 = ring("regular2");
  Sop xy = variable_sop(r2);

  // s = 1: the singleton Lambda gives I_R + (x^n)
  CHECK(equal(parametric_intersection(xy, 1, 3), parse_ideal("(x^3)", r2.ambient())));
  // n = 1: Lambda = {(1,...,1)} gives Q_s
  CHECK(equal(parametric_intersection(xy, 2, 1), xy.prefix(2)));
  // regular sequence: equality with Q^n
  CHECK(equal(parametric_intersection(xy, 2, 2), parse_ideal("(x^2, x*y, y^2)", r2.ambient())));
  CHECK_THROWS_AS(parametric_intersection(xy, 3, 1), Error);
}

TEST_CASE("power colon") {
  const RingPresentation& r2 = ring("regular2");
  Sop xy = variable_sop(r2);
  for (std::uint32_t s = 0; s < 2; ++s)
    for (std::uint32_t n = 1; n <= 3; ++n)
      CHECK(equal(power_colon(xy, s, n), xy.prefix_power(s, n)));  // regular sequence adds nothing

  const RingPresentation& ncm = ring("nonCM1");
  Sop ys(ncm, {parse_poly("y", ncm.ambient())});
  Ideal zero_colon = power_colon(ys, 0, 1);
  CHECK(equal(zero_colon, parse_ideal("(x)", ncm.ambient())));
  // maximality: x*y lands in the defining ideal, y*y does not
  CHECK(member_bounded(parse_poly("x*y", ncm.ambient()), ncm.defining_ideal(), 3));
  CHECK(!member_bounded(parse_poly("y^2", ncm.ambient()), ncm.defining_ideal(), 4));

  const RingPresentation& tp = ring("two_planes");
  Sop diag(tp, {parse_poly("x + u", tp.ambient()), parse_poly("y + v", tp.ambient())});
  Ideal pc = power_colon(diag, 1, 1);
  CHECK(contains(pc, diag.prefix(1)));
  CHECK(!contains(diag.prefix(1), pc));  // strict on the non-CM ring
}

TEST_CASE("limit closure") {
  const RingPresentation& r2 = ring("regular2");
  Sop xy = variable_sop(r2);
  LimitClosureResult lc = limit_closure(xy, 2);
  CHECK(equal(lc.value, parse_ideal("(x, y)", r2.ambient())));
  CHECK(lc.stabilized_at == 1);
  CHECK(!lc.capped);

  const RingPresentation& ncm = ring("nonCM1");
  Sop ys(ncm, {parse_poly("y", ncm.ambient())});
  LimitClosureResult lc2 = limit_closure(ys, 1);
  CHECK(equal(lc2.value, parse_ideal("(x, y)", ncm.ambient())));
  // 1 is outside: x*y^n is in the defining ideal but y^n never reaches it
  CHECK(!member_bounded(Polynomial::from_int(ncm.ambient(), 1), lc2.value, 4));

  for (const char* name : {"regular2", "regular3", "hypersurface", "nonCM1", "two_planes"}) {
    const RingPresentation& R = ring(name);
    for (const Sop& sop : sample_sops(R, 2, 11))
      for (std::uint32_t s = 1; s <= static_cast<std::uint32_t>(R.dim()); ++s) {
        LimitClosureResult r = limit_closure(sop, s);
        CHECK(!r.value.is_unit());
      }
  }
}

TEST_CASE("quotient annihilator") {
  auto S2 = ring("regular2").ambient();
  Ideal I = parse_ideal("(x^2, x*y)", S2);
  CHECK(quotient_annihilator(I, I).is_unit());
  CHECK(equal(quotient_annihilator(I, parse_ideal("(x)", S2)), parse_ideal("(x, y)", S2)));
  CHECK(quotient_annihilator(Ideal::zero(S2), Ideal::unit(S2)).is_zero());
  CHECK_THROWS_WITH_AS(quotient_annihilator(parse_ideal("(x)", S2), parse_ideal("(x^2)", S2)),
                       doctest::Contains("containment"), Error);
}

TEST_CASE("sop sampling") {
  const RingPresentation& tp = ring("two_planes");
  auto sample = sample_sops(tp, 5, 42);
  REQUIRE(sample.size() == 5);
  for (const Sop& sop : sample) CHECK(is_sop(tp, sop.elements()));

  auto replay = sample_sops(tp, 5, 42);
  for (std::size_t i = 0; i < 5; ++i) CHECK(sample[i].str() == replay[i].str());
  auto different = sample_sops(tp, 5, 43);
  bool all_same = true;
  for (std::size_t i = 0; i < 5; ++i)
    if (sample[i].str() != different[i].str()) all_same = false;
  CHECK(!all_same);

  for (const Sop& sop : sample_sops(ring("regular2"), 3, 9, SopStrategy::linear_plus_powers))
    CHECK(is_sop(ring("regular2"), sop.elements()));
}

TEST_CASE("sampled annihilators") {
  const RingPresentation& ncm = ring("nonCM1");
  auto sops = sample_sops(ncm, 4, 5);
  SampledAnnihilator b = sampled_annihilator(AnnihilatorKind::b, ncm, sops, 1);
  CHECK(equal(b.value, parse_ideal("(x, y)", ncm.ambient())));
  // cross-check each per-sop term
  for (const Sop& sop : sops) {
    Ideal q = sop.prefix(0);
    CHECK(equal(quotient_annihilator(q, colon(q, sop.element(0))),
                parse_ideal("(x, y)", ncm.ambient())));
  }

  // d-kind at s = 1 contributes nothing: Lambda_{1,n} is a singleton
  const RingPresentation& r2 = ring("regular2");
  auto rsops = sample_sops(r2, 3, 5);
  for (const Sop& sop : rsops)
    for (std::uint32_t n = 1; n <= 3; ++n)
      CHECK(equal(parametric_intersection(sop, 1, n), sop.prefix_power(1, n)));

  // Cohen-Macaulay rings: every kind collapses to the unit ideal
  for (const char* name : {"regular2", "regular3", "hypersurface"}) {
    const RingPresentation& R = ring(name);
    auto s = sample_sops(R, 3, 5);
    CHECK(sampled_annihilator(AnnihilatorKind::b, R, s, 2).value.is_unit());
    CHECK(sampled_annihilator(AnnihilatorKind::c, R, s, 2).value.is_unit());
    CHECK(sampled_annihilator(AnnihilatorKind::d, R, s, 2).value.is_unit());
  }
}

TEST_CASE("sampled annihilator is monotone in the sample") {
  const RingPresentation& tp = ring("two_planes");
  auto sops = sample_sops(tp, 4, 21);
  std::vector<Sop> small(sops.begin(), sops.begin() + 2);
  Ideal v_small = sampled_annihilator(AnnihilatorKind::c, tp, small, 2).value;
  Ideal v_full = sampled_annihilator(AnnihilatorKind::c, tp, sops, 2).value;
  CHECK(contains(v_small, v_full));

  // and in n_max
  Ideal v_deep = sampled_annihilator(AnnihilatorKind::c, tp, small, 3).value;
  CHECK(contains(v_small, v_deep));
}

TEST_CASE("telescoping identity sides") {
  auto S2 = ring("regular2").ambient();
  auto [lhs, rhs] = key_lemma_sides(parse_ideal("(y)", S2), parse_poly("x", S2), 2);
  // (x, y^2) cap (x^2, y) expands to the square of the maximal ideal
  Ideal expected = parse_ideal("(x^2, x*y, y^2)", S2);
  CHECK(equal(lhs, expected));
  CHECK(equal(rhs, expected));

  auto [lu, ru] = key_lemma_sides(Ideal::unit(S2), parse_poly("x", S2), 3);
  CHECK(lu.is_unit());
  CHECK(ru.is_unit());

  // n = 1: both sides are (x) + (I : x^inf) by construction
  Ideal I = parse_ideal("(x*y)", S2);
  auto [l1, r1] = key_lemma_sides(I, parse_poly("x", S2), 1);
  CHECK(equal(l1, r1));
  Ideal direct = ideal_sum(Ideal::principal(parse_poly("x", S2)), saturate(I, parse_poly("x", S2)));
  CHECK(equal(l1, direct));

  CHECK_THROWS_AS(key_lemma_sides(I, Polynomial::zero(S2), 2), Error);
}

TEST_CASE("telescoping identity on random instances") {
  RingPtr S3 = Ring::make(Field::gf(kDefaultPrime), {"x", "y", "z"});
  InstanceGen gen(S3, 60601);
  for (int iter = 0; iter < 40; ++iter) {
    Ideal I = gen.random_ideal(3, 3);
    Polynomial x = gen.random_variable();
    std::uint32_t n = 1 + static_cast<std::uint32_t>(gen.uniform(4));
    auto [lhs, rhs] = key_lemma_sides(I, x, n);
    CHECK(equal(lhs, rhs));
  }
}

TEST_CASE("parametric intersections contain the power ideal") {
  for (const char* name : {"regular2", "regular3", "hypersurface", "nonCM1", "two_planes"}) {
    const RingPresentation& R = ring(name);
    for (const Sop& sop : sample_sops(R, 2, 33))
      for (std::uint32_t s = 1; s <= static_cast<std::uint32_t>(R.dim()); ++s)
        for (std::uint32_t n = 1; n <= 3; ++n)
          CHECK(contains(parametric_intersection(sop, s, n), sop.prefix_power(s, n)));
  }
}
