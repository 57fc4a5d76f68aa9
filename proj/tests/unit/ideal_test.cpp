#include "frobtool/basis_cache.hpp"
#include "frobtool/errors.hpp"
#include "frobtool/gallery.hpp"
#include "frobtool/ideal.hpp"
#include "frobtool/parser.hpp"

#include "../support/properties.hpp"

#include <gtest/gtest.h>

using namespace frob;

namespace {

Ideal ideal(const Ring& r, std::initializer_list<const char*> src) {
  std::vector<Polynomial> out;
  for (const char* s : src) out.push_back(parse_polynomial(s, r));
  return Ideal(r, out);
}

}  // namespace

TEST(Ideal, MembershipAndEquality) {
  auto r = RingSpec::make(PrimeField(3), {"x", "y", "z"});
  auto I = ideal(r, {"x*y", "y*z"});
  EXPECT_TRUE(I.contains(parse_polynomial("x^2*y + y*z^3", r)));
  EXPECT_FALSE(I.contains(parse_polynomial("x*z", r)));
  EXPECT_TRUE(ideal_equal(I, ideal(r, {"x*y + y*z", "y*z"})));
  EXPECT_FALSE(ideal_equal(I, ideal(r, {"x*y"})));
  EXPECT_TRUE(Ideal::unit(r).is_unit());
  EXPECT_TRUE(Ideal::zero(r).is_zero());
  EXPECT_TRUE(Ideal(r, {Polynomial(r)}).is_zero());
}

TEST(Ideal, IntersectionAndColonExamples) {
  auto r = RingSpec::make(PrimeField(2), {"x", "y", "z"});
  EXPECT_TRUE(ideal_equal(intersect(ideal(r, {"x"}), ideal(r, {"y"})), ideal(r, {"x*y"})));
  EXPECT_TRUE(ideal_equal(colon(ideal(r, {"x^2*y^2", "y^2*z^2"}), ideal(r, {"x*y", "y*z"})),
                          ideal(r, {"x^2*y", "x*y*z", "y*z^2"})));
  auto I = ideal(r, {"x*y - z^2"});
  EXPECT_TRUE(colon(I, I).is_unit());
  EXPECT_TRUE(ideal_equal(colon(ideal(r, {"x^4"}), parse_polynomial("x", r)), ideal(r, {"x^3"})));
}

TEST(Ideal, PowersAndSums) {
  auto r = RingSpec::make(PrimeField(5), {"x", "y"});
  auto m = ideal(r, {"x", "y"});
  EXPECT_TRUE(ideal_equal(power(m, 2), ideal(r, {"x^2", "x*y", "y^2"})));
  EXPECT_TRUE(ideal_equal(power(m, 0), Ideal::unit(r)));
  EXPECT_TRUE(ideal_equal(ideal(r, {"x"}) + ideal(r, {"y"}), m));
  EXPECT_TRUE(ideal_equal(frobenius_power(m, 1), ideal(r, {"x^5", "y^5"})));
}

TEST(Ideal, MinimalGeneratorsModulo) {
  auto r = RingSpec::make(PrimeField(2), {"x", "y"});
  std::vector<Polynomial> gens;
  for (const char* s : {"x^2", "x*y", "x^2*y", "y^2", "x^2 + x*y"}) gens.push_back(parse_polynomial(s, r));
  EXPECT_EQ(minimal_generators_mod(gens, Ideal::zero(r)).size(), 3u);
  EXPECT_EQ(minimal_generators_mod(gens, ideal(r, {"y^2"})).size(), 2u);
  std::vector<Polynomial> bad{parse_polynomial("x + 1", r)};
  EXPECT_THROW(minimal_generators_mod(bad, Ideal::zero(r)), InvalidArgument);
}

TEST(Ideal, LiftThroughNonzerodivisor) {
  auto r = RingSpec::make(PrimeField(3), {"x", "y"});
  auto J = ideal(r, {"y^3"});
  auto g = parse_polynomial("x*y^2 + x^2", r);
  auto m = parse_polynomial("x", r);
  auto f = lift_by_nzd(g, m, J);
  EXPECT_TRUE(J.contains(m * f - g));
  EXPECT_THROW(lift_by_nzd(parse_polynomial("y", r), m, J), NoLiftError);
}

TEST(Ideal, CacheKeyIgnoresScalingAndOrder) {
  auto r = RingSpec::make(PrimeField(5), {"x", "y"});
  std::vector<Polynomial> a{parse_polynomial("2*x + y", r), parse_polynomial("y^2", r)};
  std::vector<Polynomial> b{parse_polynomial("3*y^2", r), parse_polynomial("x + 3*y", r)};
  EXPECT_EQ(BasisCache::key_for(*r, a), BasisCache::key_for(*r, b));
}

TEST(Ideal, GalleryBasesPassBuchbergerCriterion) {
  // Colons and Frobenius powers of the named ideals, checked with the naive reducer.
  for (const Ideal& I : {gallery::determinantal_ideal(2), gallery::katzman_ideal(2),
                         gallery::twisted_cubic_ideal(3)}) {
    for (unsigned e = 1; e <= 2; ++e) {
      auto Iq = frobenius_power(I, e);
      auto C = colon(Iq, I);
      EXPECT_TRUE(prop::naive_is_groebner(Iq.basis()));
      EXPECT_TRUE(prop::naive_is_groebner(C.basis()));
      EXPECT_TRUE(prop::naive_is_reduced(C.basis()));
    }
  }
}

TEST(IdealProperty, ColonCorrectness) {
  auto r = prop::prop_colon_correctness(0xc010, 60);
  EXPECT_GE(r.cases, 50u);
  EXPECT_TRUE(r.ok()) << r.failures << " failures, first: " << r.first_failure;
}

TEST(IdealProperty, FrobeniusPowerIgnoresGenerators) {
  auto r = prop::prop_frobenius_independence(0xf40b, 24);
  EXPECT_GE(r.cases, 20u);
  EXPECT_TRUE(r.ok()) << r.failures << " failures, first: " << r.first_failure;
}

TEST(IdealProperty, IntersectionIsCommonMembership) {
  prop::Gen g(0x1e7);
  for (int i = 0; i < 30; ++i) {
    auto ring = g.ring(i % 2 ? 3 : 2, 3);
    auto I = g.ideal(ring, 2, 2, 2), J = g.ideal(ring, 2, 2, 2);
    auto K = intersect(I, J);
    EXPECT_TRUE(I.contains(K) && J.contains(K));
    auto both = I.generators()[0] * J.generators()[1];
    EXPECT_TRUE(K.contains(both));
    auto f = g.nonzero_poly(ring, 3, 2);
    EXPECT_EQ(K.contains(f), I.contains(f) && J.contains(f));
  }
}
