#pragma once

#include "frobtool/fingen_report.hpp"
#include "frobtool/ideal.hpp"
#include "frobtool/ring.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

/// Combinatorial paths for monomial ideals and for fractional monomial
/// modules over affine semigroup rings. No Groebner computation happens here,
/// which makes this an independent oracle for the Groebner engine.
namespace frob::mono {

/// A monomial ideal stored as an antichain of generators (none divides
/// another), sorted ascending in the ring order.
class MonomialIdeal {
 public:
  MonomialIdeal(Ring ring, std::vector<Monomial> generators);
  /// Requires every generator to be a single term.
  static MonomialIdeal from_ideal(const Ideal& ideal);

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<Monomial>& generators() const noexcept { return generators_; }
  bool contains(const Monomial& m) const;
  bool is_unit() const;
  Ideal to_ideal() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return same_ring(a.ring_, b.ring_) && a.generators_ == b.generators_;
  }

 private:
  Ring ring_;
  std::vector<Monomial> generators_;
};

MonomialIdeal mono_sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal mono_product(const MonomialIdeal& a, const MonomialIdeal& b);
/// Pairwise lcm of generators.
MonomialIdeal mono_intersect(const MonomialIdeal& a, const MonomialIdeal& b);
/// Intersection over generators n of J of the ideals (m / gcd(m, n) : m in I).
MonomialIdeal mono_colon(const MonomialIdeal& a, const MonomialIdeal& b);
/// Exponents scaled by p^e.
MonomialIdeal mono_frobenius_power(const MonomialIdeal& ideal, unsigned e);

/// All monomials of total degree n, in descending ring order. Requires the
/// standard grading. Their number is C(n + d - 1, d - 1).
std::vector<Monomial> graded_piece(const RingSpec& ring, long n);

/// Finite-generation probe on the monomial path: components are
/// (I^[q] : I) / I^[q] computed with mono_colon; products g * h^(q1).
FinGenReport mono_fingen_probe(const MonomialIdeal& ideal, unsigned emax);

using LatticePoint = std::vector<long>;

/// Linear constraint w . v = 0 (modulus 0) or w . v ≡ 0 mod m (modulus m > 0).
struct Congruence {
  std::vector<long> weights;
  long modulus = 0;
};

/// Affine semigroup given by sign and congruence data: v is admissible iff
/// every coordinate is non-negative and every congruence holds.
class SemigroupSpec {
 public:
  SemigroupSpec(std::size_t dimension, std::vector<Congruence> constraints);

  /// N^d.
  static SemigroupSpec orthant(std::size_t d);
  /// {0} inside Z^d: spans over it are plain vector spaces over the field.
  static SemigroupSpec trivial(std::size_t d);
  /// Exponents of the n-th Veronese subring: sum ≡ 0 mod n.
  static SemigroupSpec veronese(std::size_t d, long n);
  /// Segre product of N^a and N^b: the first-a sum equals the last-b sum.
  static SemigroupSpec segre(std::size_t a, std::size_t b);

  std::size_t dimension() const noexcept { return dimension_; }
  bool admits(std::span<const long> v) const;
  /// Closure under addition on sampled admissible pairs (deterministic seed).
  bool check_closure(std::size_t samples = 200) const;

 private:
  std::size_t dimension_;
  std::vector<Congruence> constraints_;
};

/// Module over the semigroup ring spanned by Laurent monomials; exponents
/// may be negative. v is a member iff v - g is admissible for a generator g.
class FracMonomialModule {
 public:
  FracMonomialModule(SemigroupSpec semigroup, std::vector<LatticePoint> generators);

  const SemigroupSpec& semigroup() const noexcept { return semigroup_; }
  const std::vector<LatticePoint>& generators() const noexcept { return generators_; }
  bool contains(std::span<const long> v) const;
  /// Drops duplicates and generators lying in the span of the others.
  FracMonomialModule minimalized() const;

 private:
  SemigroupSpec semigroup_;
  std::vector<LatticePoint> generators_;
};

bool frac_membership(std::span<const long> v, const FracMonomialModule& module);

/// Generators g_a + p^e1 * g_b over all pairs: the twisted product of a
/// degree-e1 component with any component.
FracMonomialModule frac_twisted_product(const FracMonomialModule& a, unsigned e1,
                                        const FracMonomialModule& b, unsigned p);

/// Minimal generators -alpha of the degree-e component for the n-th Veronese
/// subring of a d-variable polynomial ring: alpha_k <= p^e - 1 and
/// sum alpha ≡ 0 mod n. Only the minimal ones are returned.
FracMonomialModule veronese_component(std::size_t d, long n, unsigned p, unsigned e);

/// Degree-e component of the twisted ring over a polynomial ring in d
/// variables: all monomials of degree p^e - 1, spanning over the field.
FracMonomialModule polynomial_component(std::size_t d, unsigned p, unsigned e);

/// Generators of `target` that lie in none of `parts`.
std::vector<LatticePoint> generators_outside(const FracMonomialModule& target,
                                             std::span<const FracMonomialModule> parts);

/// Finite-generation probe for a family of lattice components: degree e is
/// compared against the union of twisted products of degrees (e1, e - e1).
template <typename ComponentFn>
FinGenReport frac_fingen_probe(ComponentFn&& component, unsigned p, unsigned emax);

std::string to_string(std::span<const long> v);

}  // namespace frob::mono

#include "frobtool/detail/frac_fingen.hpp"
