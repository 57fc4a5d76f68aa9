#include "frobtool/ideal.hpp"

#include "frobtool/errors.hpp"

#include <algorithm>
#include <chrono>
#include <limits>

namespace frob {

namespace {

/// Embeds a polynomial into the ring with an auxiliary front variable.
Polynomial shift_in(const Polynomial& f, const Ring& extended, unsigned t_power) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  const std::size_t n = f.spec().nvars();
  for (const auto& t : f.terms()) {
    Monomial m;
    m.set(0, t_power);
    for (std::size_t i = 0; i < n; ++i) m.set(i + 1, t.monomial[i]);
    terms.push_back({m, t.coef});
  }
  return Polynomial::from_terms(extended, std::move(terms));
}

/// Inverse of shift_in for polynomials free of the auxiliary variable.
Polynomial shift_out(const Polynomial& f, const Ring& base) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  const std::size_t n = base->nvars();
  for (const auto& t : f.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < n; ++i) m.set(i, t.monomial[i + 1]);
    terms.push_back({m, t.coef});
  }
  return Polynomial::from_terms(base, std::move(terms));
}

void require_same(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch();
}

}  // namespace

Ideal::Ideal(Ring ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), memo_(std::make_shared<Memo>()) {
  for (auto& g : generators) {
    if (!same_ring(g.ring(), ring_)) throw RingMismatch();
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

Ideal Ideal::from_groebner_basis(const Ring& ring, std::vector<Polynomial> basis,
                                 MonomialOrder order) {
  std::vector<Polynomial> gens;
  gens.reserve(basis.size());
  for (const auto& g : basis) gens.push_back(g.reordered(ring));
  return with_known_basis(ring, std::move(gens), basis, order);
}

Ideal Ideal::with_known_basis(const Ring& ring, std::vector<Polynomial> generators,
                              const std::vector<Polynomial>& known_basis, MonomialOrder order) {
  Ring ordered = ring->order() == order ? ring : ring->with_order(order);
  GroebnerEngine engine(ordered, std::numeric_limits<long>::max());
  std::vector<Polynomial> in_order;
  in_order.reserve(known_basis.size());
  for (const auto& g : known_basis) in_order.push_back(g.reordered(ordered));
  engine.add_basis(in_order);
  auto reduced = std::make_shared<const Basis>(engine.reduced_basis());

  Ideal result(ring, std::move(generators));
  result.memo_->by_order[order.tag()] = reduced;
  std::vector<Polynomial> gens_in_order;
  gens_in_order.reserve(result.generators_.size());
  for (const auto& g : result.generators_) gens_in_order.push_back(g.reordered(ordered));
  auto& cache = BasisCache::global();
  cache.insert(BasisCache::key_for(*ordered, gens_in_order), reduced);
  cache.insert(BasisCache::key_for(*ordered, *reduced), reduced);
  return result;
}

std::shared_ptr<const Basis> Ideal::compute_basis(const Ring& ordered_ring) const {
  std::vector<Polynomial> gens;
  gens.reserve(generators_.size());
  for (const auto& g : generators_) gens.push_back(g.reordered(ordered_ring));
  auto& cache = BasisCache::global();
  const std::string key = BasisCache::key_for(*ordered_ring, gens);
  if (auto hit = cache.find(key, ordered_ring)) return hit;

  const auto start = std::chrono::steady_clock::now();
  auto basis =
      std::make_shared<const Basis>(compute_reduced_basis(ordered_ring, gens, default_degree_guard()));
  cache.record_compute(
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  cache.insert(key, basis);
  // The reduced basis is canonical; index it under itself as well.
  cache.insert(BasisCache::key_for(*ordered_ring, *basis), basis);
  return basis;
}

std::shared_ptr<const Basis> Ideal::basis(MonomialOrder order) const {
  const std::string tag = order.tag();
  {
    std::lock_guard lock(memo_->mutex);
    auto it = memo_->by_order.find(tag);
    if (it != memo_->by_order.end()) return it->second;
  }
  Ring ordered = ring_->order() == order ? ring_ : ring_->with_order(order);
  auto computed = compute_basis(ordered);
  std::lock_guard lock(memo_->mutex);
  return memo_->by_order.try_emplace(tag, computed).first->second;
}

const Basis& Ideal::basis() const { return *basis(ring_->order()); }

Polynomial Ideal::normal_form(const Polynomial& f) const {
  if (!same_ring(f.ring(), ring_)) throw RingMismatch();
  return frob::normal_form(f, basis()).reordered(f.ring());
}

bool Ideal::contains(const Ideal& other) const {
  require_same(*this, other);
  return std::all_of(other.generators_.begin(), other.generators_.end(),
                     [&](const Polynomial& g) { return contains(g); });
}

bool Ideal::is_zero() const { return generators_.empty(); }

bool Ideal::is_unit() const {
  const auto& b = basis();
  return b.size() == 1 && b[0].is_constant() && !b[0].is_zero();
}

bool Ideal::is_homogeneous() const {
  return std::all_of(generators_.begin(), generators_.end(),
                     [](const Polynomial& g) { return g.is_homogeneous(); });
}

std::vector<Polynomial> groebner_basis(const Ideal& ideal, MonomialOrder order) {
  return *ideal.basis(order);
}

Polynomial normal_form(const Polynomial& f, const Ideal& ideal) { return ideal.normal_form(f); }

bool ideal_equal(const Ideal& a, const Ideal& b) {
  require_same(a, b);
  return a.basis() == b.basis();
}

Ideal operator+(const Ideal& a, const Ideal& b) {
  require_same(a, b);
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal operator*(const Ideal& a, const Ideal& b) {
  require_same(a, b);
  std::vector<Polynomial> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) gens.push_back(f * g);
  }
  return Ideal(a.ring(), std::move(gens));
}

Ideal power(const Ideal& ideal, unsigned n) {
  if (n == 0) return Ideal::unit(ideal.ring());
  // Products over multisets of generators avoid duplicate products.
  const auto& gens = ideal.generators();
  std::vector<std::pair<std::size_t, Polynomial>> layer;  // (last index used, product)
  for (std::size_t i = 0; i < gens.size(); ++i) layer.emplace_back(i, gens[i]);
  for (unsigned k = 1; k < n; ++k) {
    std::vector<std::pair<std::size_t, Polynomial>> next;
    for (const auto& [last, prod] : layer) {
      for (std::size_t i = last; i < gens.size(); ++i) next.emplace_back(i, prod * gens[i]);
    }
    layer = std::move(next);
  }
  std::vector<Polynomial> out;
  out.reserve(layer.size());
  for (auto& [_, prod] : layer) out.push_back(std::move(prod));
  return Ideal(ideal.ring(), std::move(out));
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  require_same(a, b);
  const Ring& ring = a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal::zero(ring);
  if (a.contains(b)) return b;
  if (b.contains(a)) return a;

  const Ring ext = ring->with_auxiliary_front("@t");
  const auto a_basis = a.basis(MonomialOrder::grevlex());
  const auto b_basis = b.basis(MonomialOrder::grevlex());

  // t * GB(I) is a Groebner basis for the elimination order because the
  // second block is graded reverse lex, so no pairs among it are needed.
  std::vector<Polynomial> known;
  known.reserve(a_basis->size());
  for (const auto& g : *a_basis) known.push_back(shift_in(g, ext, 1));
  std::vector<Polynomial> gens;
  gens.reserve(b_basis->size());
  for (const auto& g : *b_basis) gens.push_back(shift_in(g, ext, 0) - shift_in(g, ext, 1));

  const auto start = std::chrono::steady_clock::now();
  auto elim = compute_reduced_basis(ext, gens, default_degree_guard(), known);
  BasisCache::global().record_compute(
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());

  const Ring grevlex_ring = ring->order() == MonomialOrder::grevlex()
                                ? ring
                                : ring->with_order(MonomialOrder::grevlex());
  std::vector<Polynomial> kept;
  for (const auto& g : elim) {
    if (g.leading_monomial()[0] == 0) kept.push_back(shift_out(g, grevlex_ring));
  }
  return Ideal::from_groebner_basis(ring, std::move(kept), MonomialOrder::grevlex());
}

Ideal colon(const Ideal& a, const Polynomial& f) {
  if (!same_ring(a.ring(), f.ring())) throw RingMismatch();
  if (f.is_zero()) throw InvalidArgument("colon by the zero ideal");
  const Ring& ring = a.ring();
  if (a.contains(f)) return Ideal::unit(ring);
  Ideal meet = intersect(a, Ideal(ring, {f}));
  const auto meet_basis = meet.basis(MonomialOrder::grevlex());
  const Ring grevlex_ring = meet_basis->empty() ? ring : meet_basis->front().ring();
  const Polynomial divisor = f.reordered(grevlex_ring);
  std::vector<Polynomial> quotients;
  quotients.reserve(meet_basis->size());
  for (const auto& g : *meet_basis) {
    auto q = divide_exact(g, divisor);
    if (!q) throw AssertionFailure("intersection element not divisible by the colon divisor");
    quotients.push_back(std::move(*q));
  }
  // in(f * K) = lead(f) * in(K), so the quotients form a Groebner basis.
  return Ideal::from_groebner_basis(ring, std::move(quotients), MonomialOrder::grevlex());
}

Ideal colon(const Ideal& a, const Ideal& b) {
  require_same(a, b);
  if (b.is_zero()) throw InvalidArgument("colon by the zero ideal");
  if (a.contains(b)) return Ideal::unit(a.ring());
  std::optional<Ideal> acc;
  for (const auto& f : b.generators()) {
    Ideal piece = colon(a, f);
    acc = acc ? intersect(*acc, piece) : piece;
  }
  return *acc;
}

Ideal frobenius_power(const Ideal& ideal, unsigned e) {
  std::vector<Polynomial> gens;
  gens.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) gens.push_back(frobenius_pow(g, e));
  if (e == 0) return Ideal(ideal.ring(), std::move(gens));
  const MonomialOrder order = ideal.ring()->order();
  const auto basis = ideal.basis(order);
  std::vector<Polynomial> powered;
  powered.reserve(basis->size());
  for (const auto& g : *basis) powered.push_back(frobenius_pow(g, e));
  return Ideal::with_known_basis(ideal.ring(), std::move(gens), powered, order);
}

std::vector<Polynomial> minimal_generators_mod(std::span<const Polynomial> generators,
                                               const Ideal& modulus) {
  const Ring& ring = modulus.ring();
  if (!modulus.is_homogeneous()) {
    throw InvalidArgument("minimal generators need a homogeneous modulus");
  }
  std::vector<Polynomial> sorted;
  for (const auto& g : generators) {
    if (!same_ring(g.ring(), ring)) throw RingMismatch();
    if (!g.is_homogeneous()) throw InvalidArgument("minimal generators need homogeneous input");
    if (!g.is_zero()) sorted.push_back(g);
  }
  const RingSpec& spec = *ring;
  std::stable_sort(sorted.begin(), sorted.end(), [&](const Polynomial& a, const Polynomial& b) {
    const long da = *a.weighted_degree(), db = *b.weighted_degree();
    if (da != db) return da < db;
    return spec.compare(a.leading_monomial(), b.leading_monomial()) ==
           std::strong_ordering::less;
  });

  GroebnerEngine engine(ring, default_degree_guard());
  engine.add_basis(modulus.basis());
  std::vector<Polynomial> kept;
  for (const auto& g : sorted) {
    const long d = *g.weighted_degree();
    engine.run(d);
    if (engine.reduce(g).is_zero()) continue;
    kept.push_back(g);
    engine.add_generator(g);
  }
  return kept;
}

Polynomial lift_by_nzd(const Polynomial& g, const Polynomial& m, const Ideal& modulus) {
  const Ring& ring = modulus.ring();
  if (!same_ring(g.ring(), ring) || !same_ring(m.ring(), ring)) throw RingMismatch();
  if (m.is_zero()) throw NoLiftError("cannot lift through the zero polynomial");
  const auto& field = ring->field();
  if (modulus.contains(g)) return Polynomial(ring);
  if (m.is_constant()) {
    return modulus.normal_form(g.scaled(field.inv(m.leading_coefficient())));
  }
  Ideal with_m = modulus + Ideal(ring, {m});
  if (!with_m.contains(g)) throw NoLiftError("element is not in the modulus plus (m)");

  const Polynomial target = modulus.normal_form(g);
  Ideal lifted = colon(modulus + Ideal(ring, {g}), m);
  std::vector<Polynomial> candidates;
  if (modulus.is_homogeneous() && g.is_homogeneous() && m.is_homogeneous()) {
    candidates = minimal_generators_mod(lifted.basis(), modulus);
  } else {
    for (const auto& k : lifted.basis()) {
      if (!modulus.contains(k)) candidates.push_back(k);
    }
  }
  for (const auto& k : candidates) {
    const Polynomial image = modulus.normal_form(m * k);
    if (image.is_zero()) continue;
    // image = c * target for a scalar c when k is a unit multiple of the lift.
    const auto c = field.mul(image.leading_coefficient(), field.inv(target.leading_coefficient()));
    if (image != target.scaled(c)) continue;
    Polynomial f = modulus.normal_form(k.scaled(field.inv(c)));
    if (!modulus.contains(m * f - g)) continue;
    return f;
  }
  throw AssertionFailure("lift verification failed; m is probably a zero divisor modulo J");
}

}  // namespace frob
