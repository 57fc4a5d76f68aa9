#include "frobtool/errors.hpp"
#include "frobtool/frobenius_algebra.hpp"
#include "frobtool/gallery.hpp"
#include "frobtool/monomial_engine.hpp"
#include "frobtool/parser.hpp"

#include "../support/properties.hpp"

#include <gtest/gtest.h>

#include <array>
#include <set>

using namespace frob;

namespace {

Ring ring3(std::uint32_t p) { return RingSpec::make(PrimeField(p), {"x", "y", "z"}); }

Polynomial P(const Ring& r, std::string_view s) { return parse_polynomial(s, r); }

using Exp = std::array<long, 3>;

bool divides(const Exp& a, const Exp& b) {
  return a[0] <= b[0] && a[1] <= b[1] && a[2] <= b[2];
}

bool in_monomial_ideal(const Exp& m, const std::vector<Exp>& gens) {
  for (const auto& g : gens)
    if (divides(g, m)) return true;
  return false;
}

std::vector<Exp> minimal(std::vector<Exp> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  std::vector<Exp> out;
  for (const auto& m : v) {
    bool redundant = false;
    for (const auto& k : v) redundant = redundant || (k != m && divides(k, m));
    if (!redundant) out.push_back(m);
  }
  return out;
}

// Independent model of (xy, yz) in three variables: every ideal is monomial,
// so colons and products reduce to exponent arithmetic over a bounded box.
struct KatzmanOracle {
  unsigned p;
  std::vector<std::vector<Exp>> gens;  // minimal generators mod I^[q], by e

  std::vector<Exp> bracket(long q) const { return {{q, q, 0}, {0, q, q}}; }

  std::vector<Exp> component(unsigned e) const {
    const long q = static_cast<long>(prime_power(p, e));
    auto J = bracket(q);
    std::vector<Exp> colon;
    for (long a = 0; a <= q; ++a)
      for (long b = 0; b <= q; ++b)
        for (long c = 0; c <= q; ++c) {
          Exp m{a, b, c};
          if (in_monomial_ideal({a + 1, b + 1, c}, J) && in_monomial_ideal({a, b + 1, c + 1}, J))
            colon.push_back(m);
        }
    std::vector<Exp> out;
    for (const auto& m : minimal(colon))
      if (!in_monomial_ideal(m, J)) out.push_back(m);
    return out;
  }

  explicit KatzmanOracle(unsigned p_, unsigned emax) : p(p_) {
    gens.push_back({{0, 0, 0}});
    for (unsigned e = 1; e <= emax; ++e) gens.push_back(component(e));
  }

  std::size_t new_count(unsigned e) const {
    const long q = static_cast<long>(prime_power(p, e));
    std::vector<Exp> lower = bracket(q);
    for (unsigned e1 = 1; e1 < e; ++e1) {
      const long q1 = static_cast<long>(prime_power(p, e1));
      for (const auto& g : gens[e1])
        for (const auto& h : gens[e - e1])
          lower.push_back({g[0] + q1 * h[0], g[1] + q1 * h[1], g[2] + q1 * h[2]});
    }
    std::size_t n = 0;
    for (const auto& g : gens[e]) n += in_monomial_ideal(g, lower) ? 0 : 1;
    return n;
  }

  long max_degree(unsigned e) const {
    long d = 0;
    for (const auto& g : gens[e]) d = std::max(d, g[0] + g[1] + g[2]);
    return d;
  }
};

}  // namespace

TEST(FrobeniusComponent, HypersurfaceIsPrincipal) {
  auto r = ring3(3);
  Ideal I(r, {P(r, "x*y - z^2")});
  for (unsigned e = 1; e <= 2; ++e) {
    auto c = component(I, e);
    ASSERT_EQ(c.min_gens.size(), 1u);
    const unsigned q = static_cast<unsigned>(prime_power(3, e));
    EXPECT_TRUE(c.modulus.contains(c.min_gens[0] - P(r, "x*y - z^2").pow(q - 1)));
    EXPECT_EQ(c.max_gen_degree(), std::optional<long>(2 * (q - 1)));
  }
}

TEST(FrobeniusComponent, KatzmanDegreeOne) {
  auto c = component(gallery::katzman_ideal(2), 1);
  ASSERT_EQ(c.min_gens.size(), 3u);
  EXPECT_EQ(to_string(c.min_gens[0]), "y*z^2");
  EXPECT_EQ(to_string(c.min_gens[1]), "x*y*z");
  EXPECT_EQ(to_string(c.min_gens[2]), "x^2*y");
  EXPECT_EQ(c.degree.q, 2u);
  auto r = c.colon.ring();
  EXPECT_TRUE(c.modulus.contains(P(r, "x^2*y^2")));
  EXPECT_FALSE(c.modulus.contains(P(r, "x*y*z")));
}

TEST(FrobeniusComponent, RejectsUnsuitableIdeals) {
  auto r = ring3(2);
  EXPECT_THROW(component(Ideal(r, {P(r, "x + y^2")}), 1), InvalidArgument);
  EXPECT_THROW(component(Ideal::unit(r), 1), InvalidArgument);
}

TEST(FrobeniusComponent, DegreeZeroIsTheQuotientRing) {
  auto c = component(gallery::katzman_ideal(2), 0);
  ASSERT_EQ(c.min_gens.size(), 1u);
  EXPECT_EQ(to_string(c.min_gens[0]), "1");
}

TEST(TwistedMul, Examples) {
  auto r = ring3(2);
  EXPECT_EQ(twisted_mul_reps(P(r, "x"), 1, P(r, "y")), P(r, "x*y^2"));
  EXPECT_EQ(twisted_mul_reps(P(r, "x"), 2, P(r, "y + z")), P(r, "x*y^4 + x*z^4"));
  EXPECT_EQ(twisted_mul_reps(P(r, "x + y"), 0, P(r, "z")), P(r, "x*z + y*z"));
  auto r3 = ring3(3);
  EXPECT_EQ(twisted_mul_reps(P(r3, "y"), 1, P(r3, "x")), P(r3, "x^3*y"));
  // The ring is noncommutative: x * y and y * x differ in degree 1 + 1.
  EXPECT_NE(twisted_mul_reps(P(r3, "x"), 1, P(r3, "y")), twisted_mul_reps(P(r3, "y"), 1, P(r3, "x")));
}

TEST(TwistedMul, CheckedProductStaysInColon) {
  FrobeniusAlgebra alg(gallery::katzman_ideal(2));
  const auto& g = alg.component(1).min_gens;
  for (const auto& a : g)
    for (const auto& b : g) EXPECT_NO_THROW(alg.twisted_mul_checked(a, 1, b, 1));
  auto r = alg.ideal().ring();
  EXPECT_THROW(alg.twisted_mul_checked(P(r, "x"), 1, P(r, "x"), 1), AssertionFailure);
}

TEST(FrobeniusAlgebra, ProductComponentCounts) {
  FrobeniusAlgebra alg(gallery::katzman_ideal(2));
  EXPECT_EQ(alg.product_component(1, 1).size(), 9u);
  EXPECT_EQ(alg.product_component(1, 2).size(), 9u);
  for (const auto& f : alg.product_component(1, 1)) EXPECT_TRUE(alg.component(2).colon.contains(f));
}

TEST(FrobeniusAlgebra, BuildMatchesLazyComponents) {
  FrobeniusAlgebra eager(gallery::katzman_ideal(2)), lazy(gallery::katzman_ideal(2));
  eager.build(3);
  for (unsigned e = 1; e <= 3; ++e)
    EXPECT_EQ(eager.component(e).min_gens, lazy.component(e).min_gens);
}

TEST(FingenProbe, HypersurfaceIsGeneratedInDegreeOne) {
  auto r = ring3(2);
  FrobeniusAlgebra alg(Ideal(r, {P(r, "x^3 + y^3 + z^3")}));
  auto rep = alg.fingen_probe(3);
  ASSERT_EQ(rep.degrees.size(), 3u);
  for (const auto& d : rep.degrees) EXPECT_EQ(d.min_gen_count, 1u);
  EXPECT_FALSE(rep.first_failure().has_value());
  EXPECT_EQ(rep.summary(), "generated from lower degrees at e = 2..3");
}

TEST(FingenProbe, KatzmanAgainstBruteForce) {
  KatzmanOracle oracle(2, 3);
  // Frozen from the oracle above.
  const std::size_t counts[] = {3, 3, 3}, fresh[] = {3, 2, 2};
  const long degrees[] = {3, 9, 21};
  FrobeniusAlgebra alg(gallery::katzman_ideal(2));
  auto rep = alg.fingen_probe(3);
  ASSERT_EQ(rep.degrees.size(), 3u);
  for (unsigned e = 1; e <= 3; ++e) {
    const auto& d = rep.degrees[e - 1];
    EXPECT_EQ(oracle.gens[e].size(), counts[e - 1]);
    EXPECT_EQ(oracle.new_count(e), fresh[e - 1]);
    EXPECT_EQ(oracle.max_degree(e), degrees[e - 1]);
    EXPECT_EQ(d.min_gen_count, counts[e - 1]) << "e=" << e;
    EXPECT_EQ(d.new_gen_count, fresh[e - 1]) << "e=" << e;
    EXPECT_EQ(d.max_gen_degree, std::optional<long>(degrees[e - 1])) << "e=" << e;
    EXPECT_EQ(d.generated_from_lower, e > 1 && fresh[e - 1] == 0);
  }
  EXPECT_EQ(rep.first_failure(), std::optional<unsigned>(2));
  EXPECT_EQ(rep.summary(), "new generators required at e = 2, 3");
}

TEST(FingenProbe, KatzmanOddCharacteristicAgainstBruteForce) {
  KatzmanOracle oracle(3, 2);
  FrobeniusAlgebra alg(gallery::katzman_ideal(3));
  auto rep = alg.fingen_probe(2);
  for (unsigned e = 1; e <= 2; ++e) {
    EXPECT_EQ(rep.degrees[e - 1].min_gen_count, oracle.gens[e].size());
    EXPECT_EQ(rep.degrees[e - 1].new_gen_count, oracle.new_count(e));
    EXPECT_EQ(rep.degrees[e - 1].max_gen_degree, std::optional<long>(oracle.max_degree(e)));
  }
}

TEST(FingenProbe, DeterminantalDegreeTwoNeedsNewGenerator) {
  FrobeniusAlgebra alg(gallery::determinantal_ideal(2));
  auto rep = alg.fingen_probe(2);
  ASSERT_EQ(rep.degrees.size(), 2u);
  EXPECT_EQ(rep.degrees[0].min_gen_count, 3u);
  EXPECT_EQ(rep.degrees[1].min_gen_count, 10u);
  EXPECT_EQ(rep.degrees[1].new_gen_count, 1u);
  EXPECT_EQ(rep.degrees[0].max_gen_degree, std::optional<long>(4));
  EXPECT_EQ(rep.degrees[1].max_gen_degree, std::optional<long>(12));
}

TEST(DegreeGrowth, KatzmanRatios) {
  FrobeniusAlgebra alg(gallery::katzman_ideal(2));
  auto g = alg.degree_growth(3);
  ASSERT_EQ(g.size(), 3u);
  EXPECT_DOUBLE_EQ(g[0].ratio, 1.5);
  EXPECT_DOUBLE_EQ(g[1].ratio, 2.25);
  EXPECT_DOUBLE_EQ(g[2].ratio, 2.625);
  for (const auto& d : g) EXPECT_EQ(d.max_gen_degree, 3 * static_cast<long>(d.q) - 3);
}

TEST(QGorBound, Examples) {
  EXPECT_EQ(qgor_expected_bound(3, 2), std::optional<unsigned>(2));
  EXPECT_EQ(qgor_expected_bound(3, 7), std::optional<unsigned>(1));
  EXPECT_EQ(qgor_expected_bound(3, 5), std::optional<unsigned>(2));
  EXPECT_EQ(qgor_expected_bound(3, 3), std::nullopt);
  EXPECT_EQ(qgor_expected_bound(5, 2), std::optional<unsigned>(4));
  EXPECT_EQ(qgor_expected_bound(1, 2), std::optional<unsigned>(1));
}

TEST(VeroneseInvariants, ResidueOfPModThree) {
  // Lattice path for the cubic Veronese surface.
  auto probe = [](unsigned p, unsigned emax) {
    return mono::frac_fingen_probe(
        [p](unsigned e) { return mono::veronese_component(2, 3, p, e); }, p, emax);
  };
  for (unsigned p : {7u, 13u}) {
    auto rep = probe(p, 3);
    for (const auto& d : rep.degrees) EXPECT_EQ(d.min_gen_count, 1u) << "p=" << p;
    EXPECT_FALSE(rep.first_failure().has_value()) << "p=" << p;
  }
  for (unsigned p : {2u, 5u, 11u}) {
    auto rep = probe(p, 3);
    EXPECT_EQ(rep.first_failure(), std::optional<unsigned>(2)) << "p=" << p;
    if (p > 2) EXPECT_EQ(rep.degrees[2].new_gen_count, 0u) << "p=" << p;
  }
  auto rep3 = probe(3, 4);
  for (const auto& d : rep3.degrees) {
    EXPECT_EQ(d.min_gen_count, 2u);
    if (d.e > 1) EXPECT_GE(d.new_gen_count, 1u);
  }
}

TEST(TwistedLaws, RandomElements) {
  auto r = prop::prop_twisted_laws(0x7e15, 40);
  EXPECT_GE(r.cases, 100u);
  EXPECT_TRUE(r.ok()) << r.failures << " failures, first: " << r.first_failure;
}
