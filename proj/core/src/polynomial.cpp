#include "frobtool/polynomial.hpp"

#include "frobtool/errors.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace frob {

Polynomial Polynomial::constant(const Ring& ring, std::int64_t c) {
  Polynomial r(ring);
  auto v = ring->field().reduce(c);
  if (v != 0) r.terms_.push_back({Monomial{}, v});
  return r;
}

Polynomial Polynomial::variable(const Ring& ring, std::size_t index) {
  if (index >= ring->nvars()) throw InvalidArgument("variable index out of range");
  Monomial m;
  m.set(index, 1);
  return term(ring, m, 1);
}

Polynomial Polynomial::variable(const Ring& ring, const std::string& name) {
  auto idx = ring->index_of(name);
  if (!idx) throw InvalidArgument("unknown variable '" + name + "'");
  return variable(ring, *idx);
}

Polynomial Polynomial::term(const Ring& ring, const Monomial& m, std::uint32_t coef) {
  Polynomial r(ring);
  coef %= ring->characteristic();
  if (coef != 0) r.terms_.push_back({m, coef});
  return r;
}

Polynomial Polynomial::from_terms(const Ring& ring, std::vector<Term> terms) {
  const RingSpec& spec = *ring;
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return spec.greater(a.monomial, b.monomial); });
  Polynomial r(ring);
  r.terms_.reserve(terms.size());
  const auto& field = spec.field();
  for (auto& t : terms) {
    t.coef %= spec.characteristic();
    if (!r.terms_.empty() && r.terms_.back().monomial == t.monomial) {
      r.terms_.back().coef = field.add(r.terms_.back().coef, t.coef);
      if (r.terms_.back().coef == 0) r.terms_.pop_back();
    } else if (t.coef != 0) {
      r.terms_.push_back(t);
    }
  }
  return r;
}

FieldElement Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_) {
    if (t.monomial == m) return FieldElement(spec().field(), t.coef);
  }
  return FieldElement(spec().field(), 0);
}

void Polynomial::require_same_ring(const Polynomial& other) const {
  if (!same_ring(ring_, other.ring_)) throw RingMismatch();
}

std::vector<Term> Polynomial::merge_add(const RingSpec& spec, std::span<const Term> a,
                                        std::span<const Term> b, std::uint32_t c) {
  const auto& field = spec.field();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    auto cmp = spec.compare(a[i].monomial, b[j].monomial);
    if (cmp == std::strong_ordering::greater) {
      out.push_back(a[i++]);
    } else if (cmp == std::strong_ordering::less) {
      out.push_back({b[j].monomial, field.mul(c, b[j].coef)});
      ++j;
    } else {
      auto s = field.add(a[i].coef, field.mul(c, b[j].coef));
      if (s != 0) out.push_back({a[i].monomial, s});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].monomial, field.mul(c, b[j].coef)});
  return out;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  require_same_ring(other);
  Polynomial r(ring_);
  r.terms_ = merge_add(spec(), terms_, other.terms_, 1);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  require_same_ring(other);
  Polynomial r(ring_);
  r.terms_ = merge_add(spec(), terms_, other.terms_, spec().characteristic() - 1);
  return r;
}

Polynomial Polynomial::operator-() const { return scaled(spec().characteristic() - 1); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
  require_same_ring(other);
  if (is_zero() || other.is_zero()) return Polynomial(ring_);
  if (size() == 1) return other.times_term(terms_[0].monomial, terms_[0].coef);
  if (other.size() == 1) return times_term(other.terms_[0].monomial, other.terms_[0].coef);
  const auto& field = spec().field();
  std::vector<Term> products;
  products.reserve(size() * other.size());
  for (const auto& s : terms_) {
    for (const auto& t : other.terms_) {
      products.push_back({s.monomial * t.monomial, field.mul(s.coef, t.coef)});
    }
  }
  return from_terms(ring_, std::move(products));
}

Polynomial Polynomial::scaled(std::uint32_t c) const {
  const auto& field = spec().field();
  c %= spec().characteristic();
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coef = field.mul(t.coef, c);
  return r;
}

Polynomial Polynomial::times_term(const Monomial& m, std::uint32_t c) const {
  const auto& field = spec().field();
  c %= spec().characteristic();
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  // Multiplication by a monomial preserves any monomial order.
  for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, field.mul(t.coef, c)});
  return r;
}

Polynomial Polynomial::pow(std::uint64_t n) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (n != 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n != 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coefficient() == 1) return *this;
  return scaled(spec().field().inv(leading_coefficient()));
}

std::optional<long> Polynomial::weighted_degree() const {
  if (is_zero()) return std::nullopt;
  long d = 0;
  for (const auto& t : terms_) d = std::max(d, spec().weighted_degree(t.monomial));
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.size() < 2) return true;
  const long d = spec().weighted_degree(terms_[0].monomial);
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return spec().weighted_degree(t.monomial) == d; });
}

Polynomial Polynomial::reordered(const Ring& target) const {
  if (same_ring(ring_, target)) {
    Polynomial r(target);
    r.terms_ = terms_;
    return r;
  }
  if (target->names() != spec().names() || target->weights() != spec().weights() ||
      !(target->field() == spec().field())) {
    throw RingMismatch();
  }
  return from_terms(target, terms_);
}

std::uint64_t prime_power(std::uint32_t p, unsigned e) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (q > std::numeric_limits<std::uint64_t>::max() / p) {
      throw InvalidArgument("prime power overflows 64 bits");
    }
    q *= p;
  }
  return q;
}

Polynomial frobenius_pow(const Polynomial& f, unsigned e) {
  if (e == 0 || f.is_zero()) return f;
  const auto q = prime_power(f.spec().characteristic(), e);
  if (q > std::numeric_limits<long>::max()) throw InvalidArgument("Frobenius exponent too large");
  std::vector<Term> terms;
  terms.reserve(f.size());
  // Coefficients lie in the prime field, so c^q = c; m -> m^q is strictly
  // monotone for every monomial order, so the term order is preserved.
  for (const auto& t : f.terms()) terms.push_back({t.monomial.pow(static_cast<long>(q)), t.coef});
  return Polynomial::from_terms(f.ring(), std::move(terms));
}

std::optional<Polynomial> divide_exact(const Polynomial& h, const Polynomial& f) {
  if (!same_ring(h.ring(), f.ring())) throw RingMismatch();
  if (f.is_zero()) throw InvalidArgument("division by the zero polynomial");
  const RingSpec& spec = h.spec();
  const auto& field = spec.field();
  const auto lead_inv = field.inv(f.leading_coefficient());
  const Monomial& lead = f.leading_monomial();

  auto cmp = [&](const Term& a, const Term& b) { return spec.greater(b.monomial, a.monomial); };
  std::priority_queue<Term, std::vector<Term>, decltype(cmp)> heap(cmp);
  for (const auto& t : h.terms()) heap.push(t);

  std::vector<Term> quotient;
  while (!heap.empty()) {
    Term top = heap.top();
    heap.pop();
    while (!heap.empty() && heap.top().monomial == top.monomial) {
      top.coef = field.add(top.coef, heap.top().coef);
      heap.pop();
    }
    if (top.coef == 0) continue;
    if (!lead.divides(top.monomial)) return std::nullopt;
    Term q{lead.quotient_of(top.monomial), field.mul(top.coef, lead_inv)};
    quotient.push_back(q);
    auto neg = field.neg(q.coef);
    for (std::size_t i = 1; i < f.size(); ++i) {
      const auto& t = f.terms()[i];
      heap.push({t.monomial * q.monomial, field.mul(t.coef, neg)});
    }
  }
  return Polynomial::from_terms(h.ring(), std::move(quotient));
}

std::string to_string(const Monomial& m, const RingSpec& spec) {
  std::string out;
  for (std::size_t i = 0; i < spec.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += spec.names()[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& t : f.terms()) {
    if (!out.empty()) out += " + ";
    if (t.monomial.is_one()) {
      out += std::to_string(t.coef);
    } else {
      if (t.coef != 1) out += std::to_string(t.coef) + '*';
      out += to_string(t.monomial, f.spec());
    }
  }
  return out;
}

}  // namespace frob
