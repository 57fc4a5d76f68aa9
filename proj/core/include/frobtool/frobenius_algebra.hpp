#pragma once

#include "frobtool/fingen_report.hpp"
#include "frobtool/ideal.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace frob {

struct FrobeniusDegree {
  unsigned e = 0;
  std::uint64_t q = 1;

  static FrobeniusDegree of(std::uint32_t p, unsigned e) { return {e, prime_power(p, e)}; }
};

/// Degree-e piece (I^[q] : I) / I^[q].
struct FrobeniusComponent {
  FrobeniusDegree degree;
  Ideal colon;
  Ideal modulus;
  /// Normal forms modulo I^[q], ascending weighted degree, then ring order.
  std::vector<Polynomial> min_gens;

  std::optional<long> max_gen_degree() const;
};

/// Builds the degree-e component. Requires I proper and homogeneous.
FrobeniusComponent component(const Ideal& ideal, unsigned e);

/// a * b^(p^e1).
Polynomial twisted_mul_reps(const Polynomial& a, unsigned e1, const Polynomial& b);

struct DegreeGrowth {
  unsigned e = 0;
  std::uint64_t q = 1;
  long max_gen_degree = 0;
  double ratio = 0.0;
};

/// The ring of Frobenius operators of a homogeneous ideal, built lazily
/// degree by degree. Components are memoized and safe to request from
/// several threads.
class FrobeniusAlgebra {
 public:
  explicit FrobeniusAlgebra(Ideal ideal);

  const Ideal& ideal() const noexcept { return ideal_; }
  std::uint32_t characteristic() const noexcept { return ideal_.ring()->characteristic(); }

  const FrobeniusComponent& component(unsigned e) const;
  /// Builds components 1..emax, in parallel when FROBTOOL_THREADS allows.
  void build(unsigned emax) const;

  /// a * b with a taken in degree e1. The checked form also asserts that the
  /// result lies in the colon of degree e1 + e2.
  Polynomial twisted_mul(const Polynomial& a, unsigned e1, const Polynomial& b) const;
  Polynomial twisted_mul_checked(const Polynomial& a, unsigned e1, const Polynomial& b,
                                 unsigned e2) const;

  /// All products g * h over min_gens of degrees e1 and e2, unminimalized.
  std::vector<Polynomial> product_component(unsigned e1, unsigned e2) const;

  FinGenReport fingen_probe(unsigned emax) const;
  std::vector<DegreeGrowth> degree_growth(unsigned emax) const;

 private:
  Ideal ideal_;
  mutable std::mutex mutex_;
  mutable std::map<unsigned, std::shared_ptr<const FrobeniusComponent>> components_;
};

/// Least e0 >= 1 with p^e0 ≡ 1 mod m, or nothing when p divides m.
std::optional<unsigned> qgor_expected_bound(std::uint64_t m, std::uint32_t p);

}  // namespace frob
