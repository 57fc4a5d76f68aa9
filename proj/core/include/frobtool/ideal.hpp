#pragma once

#include "frobtool/basis_cache.hpp"
#include "frobtool/groebner.hpp"
#include "frobtool/polynomial.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

namespace frob {

/// An ideal given by generators, with a lazily computed reduced Groebner
/// basis per monomial order. Copies share the basis memo, which is the one
/// mutable part and is guarded by a mutex.
class Ideal {
 public:
  Ideal(Ring ring, std::vector<Polynomial> generators);

  static Ideal zero(const Ring& ring) { return Ideal(ring, {}); }
  static Ideal unit(const Ring& ring) { return Ideal(ring, {Polynomial::constant(ring, 1)}); }
  /// Wraps polynomials already known to be a Groebner basis in `order`;
  /// only an interreduction pass is run to obtain the reduced basis.
  static Ideal from_groebner_basis(const Ring& ring, std::vector<Polynomial> basis,
                                   MonomialOrder order);
  /// Keeps `generators` as the generating set and records `known_basis`, a
  /// Groebner basis of the same ideal in `order`, as its basis.
  static Ideal with_known_basis(const Ring& ring, std::vector<Polynomial> generators,
                                const std::vector<Polynomial>& known_basis, MonomialOrder order);

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }

  /// Reduced Groebner basis in the ring's own order.
  const Basis& basis() const;
  /// Reduced Groebner basis in another order; polynomials live in
  /// `ring()->with_order(order)`.
  std::shared_ptr<const Basis> basis(MonomialOrder order) const;

  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }
  bool contains(const Ideal& other) const;
  bool is_zero() const;
  bool is_unit() const;
  bool is_homogeneous() const;

 private:
  struct Memo {
    std::mutex mutex;
    std::map<std::string, std::shared_ptr<const Basis>> by_order;
  };

  std::shared_ptr<const Basis> compute_basis(const Ring& ordered_ring) const;

  Ring ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Memo> memo_;
};

/// Reduced Groebner basis of I in the given order.
std::vector<Polynomial> groebner_basis(const Ideal& ideal, MonomialOrder order);
Polynomial normal_form(const Polynomial& f, const Ideal& ideal);

/// Equality via reduced bases in the ring's order.
bool ideal_equal(const Ideal& a, const Ideal& b);

Ideal operator+(const Ideal& a, const Ideal& b);
Ideal operator*(const Ideal& a, const Ideal& b);
Ideal power(const Ideal& ideal, unsigned n);

/// I ∩ J by elimination: adjoin an auxiliary variable t of weight 0, take
/// t*I + (1-t)*J under an order eliminating t and keep the t-free part.
Ideal intersect(const Ideal& a, const Ideal& b);
/// I : (f) = (I ∩ (f)) / f.
Ideal colon(const Ideal& a, const Polynomial& f);
/// I : J as the intersection of I : (f) over the generators f of J.
Ideal colon(const Ideal& a, const Ideal& b);

/// I^[p^e], generated by the p^e-th powers of the generators. Its reduced
/// basis is seeded with the p^e-th powers of the reduced basis of I, which is
/// again a reduced Groebner basis in characteristic p.
Ideal frobenius_power(const Ideal& ideal, unsigned e);

/// Greedy pruning of homogeneous generators modulo J in ascending weighted
/// degree (ties by the ring order): g is kept iff it is not in J plus the
/// generators kept before it. The number kept is the minimal number of
/// generators of ((G) + J) / J. Throws InvalidArgument on inhomogeneous input.
std::vector<Polynomial> minimal_generators_mod(std::span<const Polynomial> generators,
                                               const Ideal& modulus);

/// f with m*f = g modulo J, for m a nonzerodivisor modulo J (not checked).
/// Computed from K = (J + (g)) : m; the result is verified before returning.
/// Throws NoLiftError when g is not in J + (m) and AssertionFailure when no
/// generator of K passes verification.
Polynomial lift_by_nzd(const Polynomial& g, const Polynomial& m, const Ideal& modulus);

}  // namespace frob
