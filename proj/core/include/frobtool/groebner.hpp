#pragma once

#include "frobtool/polynomial.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <vector>

namespace frob {

inline constexpr long kDefaultDegreeGuard = 120;

/// Process-wide default for the weighted-degree cap on new basis elements.
long default_degree_guard() noexcept;
void set_default_degree_guard(long guard) noexcept;

/// Sets the default guard for the lifetime of the object.
class ScopedDegreeGuard {
 public:
  explicit ScopedDegreeGuard(long guard) : saved_(default_degree_guard()) {
    set_default_degree_guard(guard);
  }
  ~ScopedDegreeGuard() { set_default_degree_guard(saved_); }
  ScopedDegreeGuard(const ScopedDegreeGuard&) = delete;
  ScopedDegreeGuard& operator=(const ScopedDegreeGuard&) = delete;

 private:
  long saved_;
};

struct GroebnerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t basis_insertions = 0;
};

/// Buchberger's algorithm with the Gebauer-Moeller installation of both
/// Buchberger criteria and the normal selection strategy (least lcm degree,
/// ties broken by the ring order of the lcm, then by insertion index).
///
/// Work can be interleaved with queries: `run(d)` completes every pair and
/// pending generator of weighted degree <= d. For homogeneous input the
/// current basis is then a d-truncated Groebner basis, and `reduce` gives
/// exact normal forms for polynomials of degree <= d.
class GroebnerEngine {
 public:
  GroebnerEngine(Ring ring, long degree_guard);

  const Ring& ring() const noexcept { return ring_; }

  /// Adds polynomials that already form a Groebner basis of the ideal they
  /// generate; pairs among them are never formed.
  void add_basis(std::span<const Polynomial> basis);
  void add_generator(const Polynomial& f);
  /// Processes queued work up to the given weighted degree (all if nullopt).
  void run(std::optional<long> up_to_degree = std::nullopt);

  /// Full normal form with respect to the current basis.
  Polynomial reduce(const Polynomial& f) const;
  /// Monic, interreduced basis sorted ascending by leading monomial.
  /// Requires that all queued work has been processed.
  std::vector<Polynomial> reduced_basis() const;

  bool finished() const noexcept { return pairs_.empty() && pending_.empty(); }
  const GroebnerStats& stats() const noexcept { return stats_; }

 private:
  struct Element {
    Polynomial poly;
    Monomial lead;
    std::uint64_t mask;
    bool active;
  };
  struct Pair {
    long degree;
    Monomial lcm;
    std::size_t i;
    std::size_t j;
  };
  struct PairLess {
    const RingSpec* spec;
    bool operator()(const Pair& a, const Pair& b) const;
  };

  void insert(Polynomial h);
  Polynomial reduce_terms(std::span<const Term> terms) const;
  Polynomial s_polynomial(std::size_t i, std::size_t j) const;
  long degree_of(const Monomial& m) const { return ring_->weighted_degree(m); }

  Ring ring_;
  long guard_;
  std::vector<Element> basis_;
  std::vector<std::size_t> active_;
  std::set<Pair, PairLess> pairs_;
  std::multiset<std::pair<long, std::size_t>> pending_;  // (degree, slot)
  std::vector<Polynomial> pending_polys_;
  GroebnerStats stats_;
};

/// Reduced Groebner basis of the ideal generated by `known` and `generators`
/// in the ring's order. `known` must itself be a Groebner basis.
std::vector<Polynomial> compute_reduced_basis(const Ring& ring,
                                              std::span<const Polynomial> generators,
                                              long degree_guard,
                                              std::span<const Polynomial> known = {});

/// Normal form of f with respect to a Groebner basis.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis);

/// S-polynomial of two nonzero polynomials.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// True iff every S-polynomial of the basis reduces to zero against it.
bool is_groebner_basis(std::span<const Polynomial> basis);

}  // namespace frob
