#include "frobtool/groebner.hpp"

#include "frobtool/errors.hpp"

#include <algorithm>
#include <atomic>
#include <queue>

namespace frob {

namespace {

std::atomic<long> g_default_guard{kDefaultDegreeGuard};

/// Heap-based full reduction: terms are popped in descending order, equal
/// monomials are combined, and each term is either cancelled by a reducer
/// or moved to the remainder.
template <typename FindReducer>
Polynomial heap_reduce(const Ring& ring, std::span<const Term> terms, FindReducer&& find) {
  const RingSpec& spec = *ring;
  const auto& field = spec.field();
  auto cmp = [&](const Term& a, const Term& b) { return spec.greater(b.monomial, a.monomial); };
  std::vector<Term> storage;
  storage.reserve(terms.size() * 2);
  std::priority_queue<Term, std::vector<Term>, decltype(cmp)> heap(cmp, std::move(storage));
  for (const auto& t : terms) heap.push(t);

  std::vector<Term> remainder;
  while (!heap.empty()) {
    Term top = heap.top();
    heap.pop();
    while (!heap.empty() && heap.top().monomial == top.monomial) {
      top.coef = field.add(top.coef, heap.top().coef);
      heap.pop();
    }
    if (top.coef == 0) continue;
    const Polynomial* reducer = find(top.monomial);
    if (reducer == nullptr) {
      remainder.push_back(top);
      continue;
    }
    // Reducers are monic.
    const Monomial shift = reducer->leading_monomial().quotient_of(top.monomial);
    const auto factor = field.neg(top.coef);
    const auto rterms = reducer->terms();
    for (std::size_t k = 1; k < rterms.size(); ++k) {
      heap.push({rterms[k].monomial * shift, field.mul(rterms[k].coef, factor)});
    }
  }
  // Popped in strictly descending order with distinct monomials.
  return Polynomial::from_terms(ring, std::move(remainder));
}

}  // namespace

long default_degree_guard() noexcept { return g_default_guard.load(); }
void set_default_degree_guard(long guard) noexcept { g_default_guard.store(guard); }

bool GroebnerEngine::PairLess::operator()(const Pair& a, const Pair& b) const {
  if (a.degree != b.degree) return a.degree < b.degree;
  auto c = spec->compare(a.lcm, b.lcm);
  if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
  if (a.j != b.j) return a.j < b.j;
  return a.i < b.i;
}

GroebnerEngine::GroebnerEngine(Ring ring, long degree_guard)
    : ring_(std::move(ring)), guard_(degree_guard), pairs_(PairLess{ring_.get()}) {}

void GroebnerEngine::add_basis(std::span<const Polynomial> basis) {
  for (const auto& g : basis) {
    if (!same_ring(g.ring(), ring_)) throw RingMismatch();
    if (g.is_zero()) continue;
    Polynomial h = g.monic();
    const Monomial lead = h.leading_monomial();
    // Keep the active set minimal; a dropped element is still implied by the
    // element that divides it because the input is a Groebner basis.
    bool redundant = false;
    for (auto idx : active_) {
      if (basis_[idx].lead.divides(lead)) {
        redundant = true;
        break;
      }
    }
    if (redundant) continue;
    std::erase_if(active_, [&](std::size_t idx) {
      if (lead.divides(basis_[idx].lead)) {
        basis_[idx].active = false;
        return true;
      }
      return false;
    });
    basis_.push_back({std::move(h), lead, lead.divmask(), true});
    active_.push_back(basis_.size() - 1);
  }
}

void GroebnerEngine::add_generator(const Polynomial& f) {
  if (!same_ring(f.ring(), ring_)) throw RingMismatch();
  if (f.is_zero()) return;
  pending_polys_.push_back(f);
  pending_.insert({*f.weighted_degree(), pending_polys_.size() - 1});
}

Polynomial GroebnerEngine::reduce_terms(std::span<const Term> terms) const {
  return heap_reduce(ring_, terms, [&](const Monomial& m) -> const Polynomial* {
    const auto mask = m.divmask();
    for (auto idx : active_) {
      const auto& e = basis_[idx];
      if ((e.mask & ~mask) == 0 && e.lead.divides(m)) return &e.poly;
    }
    return nullptr;
  });
}

Polynomial GroebnerEngine::reduce(const Polynomial& f) const {
  if (!same_ring(f.ring(), ring_)) throw RingMismatch();
  return reduce_terms(f.terms());
}

Polynomial GroebnerEngine::s_polynomial(std::size_t i, std::size_t j) const {
  return frob::s_polynomial(basis_[i].poly, basis_[j].poly);
}

void GroebnerEngine::insert(Polynomial h) {
  h = h.monic();
  const long degree = *h.weighted_degree();
  if (degree > guard_) throw DegreeGuardExceeded(degree, guard_);
  ++stats_.basis_insertions;

  const std::size_t hi = basis_.size();
  const Monomial hlead = h.leading_monomial();
  basis_.push_back({std::move(h), hlead, hlead.divmask(), true});

  // Gebauer-Moeller update.
  struct Candidate {
    std::size_t g;
    Monomial lcm;
    bool coprime;
  };
  std::vector<Candidate> fresh;
  fresh.reserve(active_.size());
  for (auto g : active_) {
    fresh.push_back({g, basis_[g].lead.lcm(hlead), basis_[g].lead.coprime(hlead)});
  }
  // Chain criterion among the new pairs: drop (h,g1) if some other new pair
  // (h,g2) has an lcm properly dividing lcm(h,g1); among equal lcms keep one,
  // preferring a coprime pair so that it is then discarded.
  std::vector<char> keep(fresh.size(), 1);
  for (std::size_t a = 0; a < fresh.size(); ++a) {
    for (std::size_t b = 0; b < fresh.size() && keep[a]; ++b) {
      if (a == b || !keep[b]) continue;
      if (!fresh[b].lcm.divides(fresh[a].lcm)) continue;
      if (fresh[b].lcm != fresh[a].lcm) {
        keep[a] = 0;
      } else if (fresh[b].coprime && !fresh[a].coprime) {
        keep[a] = 0;
      } else if (fresh[b].coprime == fresh[a].coprime && b < a) {
        keep[a] = 0;
      }
    }
  }

  // Old pairs (g1,g2) whose lcm is divisible by lead(h) with both lcm(g1,h)
  // and lcm(g2,h) different from lcm(g1,g2) are redundant.
  for (auto it = pairs_.begin(); it != pairs_.end();) {
    const Pair& p = *it;
    if (hlead.divides(p.lcm) && basis_[p.i].lead.lcm(hlead) != p.lcm &&
        basis_[p.j].lead.lcm(hlead) != p.lcm) {
      it = pairs_.erase(it);
    } else {
      ++it;
    }
  }

  for (std::size_t a = 0; a < fresh.size(); ++a) {
    if (!keep[a] || fresh[a].coprime) continue;  // first criterion
    pairs_.insert({degree_of(fresh[a].lcm), fresh[a].lcm, fresh[a].g, hi});
  }

  std::erase_if(active_, [&](std::size_t idx) {
    if (hlead.divides(basis_[idx].lead)) {
      basis_[idx].active = false;
      return true;
    }
    return false;
  });
  active_.push_back(hi);
}

void GroebnerEngine::run(std::optional<long> up_to_degree) {
  for (;;) {
    const bool have_pair = !pairs_.empty();
    const bool have_gen = !pending_.empty();
    if (!have_pair && !have_gen) return;
    const long pair_deg = have_pair ? pairs_.begin()->degree : 0;
    const long gen_deg = have_gen ? pending_.begin()->first : 0;
    const bool take_gen = have_gen && (!have_pair || gen_deg <= pair_deg);
    const long deg = take_gen ? gen_deg : pair_deg;
    if (up_to_degree && deg > *up_to_degree) return;

    if (take_gen) {
      auto slot = pending_.begin()->second;
      pending_.erase(pending_.begin());
      Polynomial h = reduce(pending_polys_[slot]);
      pending_polys_[slot] = Polynomial(ring_);
      if (!h.is_zero()) insert(std::move(h));
      continue;
    }
    Pair p = *pairs_.begin();
    pairs_.erase(pairs_.begin());
    ++stats_.pairs_considered;
    ++stats_.pairs_reduced;
    Polynomial s = s_polynomial(p.i, p.j);
    Polynomial h = reduce_terms(s.terms());
    if (h.is_zero()) {
      ++stats_.zero_reductions;
    } else {
      insert(std::move(h));
    }
  }
}

std::vector<Polynomial> GroebnerEngine::reduced_basis() const {
  if (!finished()) throw AssertionFailure("reduced_basis requested before completion");
  std::vector<Polynomial> out;
  out.reserve(active_.size());
  for (auto idx : active_) {
    const auto& poly = basis_[idx].poly;
    Polynomial tail = reduce_terms(poly.terms().subspan(1));
    out.push_back(Polynomial::term(ring_, poly.leading_monomial(), 1) + tail);
  }
  const RingSpec& spec = *ring_;
  std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
    return spec.compare(a.leading_monomial(), b.leading_monomial()) ==
           std::strong_ordering::less;
  });
  return out;
}

std::vector<Polynomial> compute_reduced_basis(const Ring& ring,
                                              std::span<const Polynomial> generators,
                                              long degree_guard,
                                              std::span<const Polynomial> known) {
  GroebnerEngine engine(ring, degree_guard);
  engine.add_basis(known);
  for (const auto& g : generators) engine.add_generator(g);
  engine.run();
  return engine.reduced_basis();
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis) {
  std::vector<std::pair<std::uint64_t, const Polynomial*>> reducers;
  reducers.reserve(basis.size());
  const auto& field = f.spec().field();
  std::vector<Polynomial> monic_copies;
  monic_copies.reserve(basis.size());
  for (const auto& g : basis) {
    if (!same_ring(g.ring(), f.ring())) throw RingMismatch();
    if (g.is_zero()) continue;
    if (g.leading_coefficient() != 1) {
      monic_copies.push_back(g.scaled(field.inv(g.leading_coefficient())));
    }
  }
  std::size_t copy = 0;
  for (const auto& g : basis) {
    if (g.is_zero()) continue;
    const Polynomial* ptr = g.leading_coefficient() == 1 ? &g : &monic_copies[copy++];
    reducers.push_back({ptr->leading_monomial().divmask(), ptr});
  }
  return heap_reduce(f.ring(), f.terms(), [&](const Monomial& m) -> const Polynomial* {
    const auto mask = m.divmask();
    for (const auto& [rmask, ptr] : reducers) {
      if ((rmask & ~mask) == 0 && ptr->leading_monomial().divides(m)) return ptr;
    }
    return nullptr;
  });
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  if (!same_ring(f.ring(), g.ring())) throw RingMismatch();
  const auto& field = f.spec().field();
  const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  Polynomial a = f.times_term(f.leading_monomial().quotient_of(l), field.inv(f.leading_coefficient()));
  Polynomial b = g.times_term(g.leading_monomial().quotient_of(l), field.inv(g.leading_coefficient()));
  return a - b;
}

bool is_groebner_basis(std::span<const Polynomial> basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (!normal_form(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace frob
