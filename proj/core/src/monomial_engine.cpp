#include "frobtool/monomial_engine.hpp"

#include "frobtool/errors.hpp"
#include "frobtool/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace frob::mono {

namespace {

std::vector<Monomial> antichain(const RingSpec& spec, std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    return a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  for (const auto& g : gens) {
    bool redundant = std::any_of(kept.begin(), kept.end(),
                                 [&](const Monomial& k) { return k.divides(g); });
    if (!redundant) kept.push_back(g);
  }
  std::sort(kept.begin(), kept.end(),
            [&](const Monomial& a, const Monomial& b) { return spec.greater(b, a); });
  return kept;
}

void require_same(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch();
}

}  // namespace

MonomialIdeal::MonomialIdeal(Ring ring, std::vector<Monomial> generators)
    : ring_(std::move(ring)), generators_(antichain(*ring_, std::move(generators))) {}

MonomialIdeal MonomialIdeal::from_ideal(const Ideal& ideal) {
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) {
    if (g.size() != 1) throw InvalidArgument("not a monomial ideal: " + to_string(g));
    gens.push_back(g.leading_monomial());
  }
  return MonomialIdeal(ideal.ring(), std::move(gens));
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(generators_.begin(), generators_.end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::is_unit() const {
  return generators_.size() == 1 && generators_.front().is_one();
}

Ideal MonomialIdeal::to_ideal() const {
  std::vector<Polynomial> gens;
  gens.reserve(generators_.size());
  for (const auto& g : generators_) gens.push_back(Polynomial::term(ring_, g));
  return Ideal(ring_, std::move(gens));
}

MonomialIdeal mono_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same(a, b);
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal mono_product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same(a, b);
  std::vector<Monomial> gens;
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) gens.push_back(x * y);
  return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal mono_intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same(a, b);
  std::vector<Monomial> gens;
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) gens.push_back(x.lcm(y));
  return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal mono_colon(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same(a, b);
  MonomialIdeal result(a.ring(), {Monomial()});
  for (const auto& n : b.generators()) {
    std::vector<Monomial> part;
    for (const auto& m : a.generators()) part.push_back(m.gcd(n).quotient_of(m));
    result = mono_intersect(result, MonomialIdeal(a.ring(), std::move(part)));
  }
  return result;
}

MonomialIdeal mono_frobenius_power(const MonomialIdeal& ideal, unsigned e) {
  const long q = static_cast<long>(prime_power(ideal.ring()->characteristic(), e));
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.pow(q));
  return MonomialIdeal(ideal.ring(), std::move(gens));
}

std::vector<Monomial> graded_piece(const RingSpec& ring, long n) {
  if (!ring.standard_grading()) throw InvalidArgument("graded_piece needs standard weights");
  if (n < 0) return {};
  const std::size_t d = ring.nvars();
  std::vector<Monomial> out;
  std::vector<long> exps(d, 0);
  // Compositions of n into d parts, last slot takes the remainder.
  auto rec = [&](auto&& self, std::size_t i, long left) -> void {
    if (i + 1 == d) {
      exps[i] = left;
      out.emplace_back(exps);
      return;
    }
    for (long k = left; k >= 0; --k) {
      exps[i] = k;
      self(self, i + 1, left - k);
    }
  };
  if (d == 0) {
    if (n == 0) out.emplace_back();
  } else {
    rec(rec, 0, n);
  }
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return ring.greater(a, b); });
  return out;
}

FinGenReport mono_fingen_probe(const MonomialIdeal& ideal, unsigned emax) {
  const RingSpec& spec = *ideal.ring();
  const std::uint32_t p = spec.characteristic();
  FinGenReport report;
  std::vector<MonomialIdeal> colons;
  std::vector<MonomialIdeal> moduli;
  colons.push_back(mono_colon(ideal, ideal));
  moduli.push_back(ideal);
  for (unsigned e = 1; e <= emax; ++e) {
    moduli.push_back(mono_frobenius_power(ideal, e));
    colons.push_back(mono_colon(moduli[e], ideal));
  }
  auto outside = [](const MonomialIdeal& c, const MonomialIdeal& j) {
    std::vector<Monomial> out;
    for (const auto& g : c.generators())
      if (!j.contains(g)) out.push_back(g);
    return out;
  };
  for (unsigned e = 1; e <= emax; ++e) {
    DegreeRecord rec;
    rec.e = e;
    rec.q = prime_power(p, e);
    const auto gens = outside(colons[e], moduli[e]);
    rec.min_gen_count = gens.size();
    long maxdeg = 0;
    for (const auto& g : gens) {
      maxdeg = std::max(maxdeg, spec.weighted_degree(g));
      rec.generators.push_back(to_string(g, spec));
    }
    if (!gens.empty()) rec.max_gen_degree = maxdeg;
    if (e == 1) {
      rec.new_gen_count = rec.min_gen_count;
    } else {
      MonomialIdeal lower = moduli[e];
      for (unsigned e1 = 1; e1 < e; ++e1) {
        lower = mono_sum(lower, mono_product(colons[e1], mono_frobenius_power(colons[e - e1], e1)));
      }
      rec.new_gen_count = outside(colons[e], lower).size();
      rec.generated_from_lower = rec.new_gen_count == 0;
    }
    report.degrees.push_back(std::move(rec));
  }
  return report;
}

SemigroupSpec::SemigroupSpec(std::size_t dimension, std::vector<Congruence> constraints)
    : dimension_(dimension), constraints_(std::move(constraints)) {
  for (const auto& c : constraints_) {
    if (c.weights.size() != dimension_)
      throw InvalidArgument("congruence weight vector has the wrong length");
    if (c.modulus < 0) throw InvalidArgument("congruence modulus must be non-negative");
  }
  if (!check_closure()) throw InvalidArgument("semigroup is not closed under addition");
}

SemigroupSpec SemigroupSpec::orthant(std::size_t d) { return SemigroupSpec(d, {}); }

SemigroupSpec SemigroupSpec::trivial(std::size_t d) {
  return SemigroupSpec(d, {Congruence{std::vector<long>(d, 1), 0}});
}

SemigroupSpec SemigroupSpec::veronese(std::size_t d, long n) {
  if (n < 1) throw InvalidArgument("Veronese index must be positive");
  return SemigroupSpec(d, {Congruence{std::vector<long>(d, 1), n}});
}

SemigroupSpec SemigroupSpec::segre(std::size_t a, std::size_t b) {
  std::vector<long> w(a, 1);
  w.insert(w.end(), b, -1);
  return SemigroupSpec(a + b, {Congruence{std::move(w), 0}});
}

bool SemigroupSpec::admits(std::span<const long> v) const {
  if (v.size() != dimension_) return false;
  if (std::any_of(v.begin(), v.end(), [](long x) { return x < 0; })) return false;
  for (const auto& c : constraints_) {
    long dot = std::inner_product(v.begin(), v.end(), c.weights.begin(), 0L);
    if (c.modulus == 0 ? dot != 0 : dot % c.modulus != 0) return false;
  }
  return true;
}

bool SemigroupSpec::check_closure(std::size_t samples) const {
  if (dimension_ == 0) return true;
  // Admissible points in a small box, then random pairs among them.
  long bound = dimension_ <= 3 ? 6 : 3;
  std::vector<LatticePoint> pts;
  LatticePoint v(dimension_, 0);
  while (true) {
    if (admits(v)) pts.push_back(v);
    std::size_t i = 0;
    while (i < dimension_ && v[i] == bound) v[i++] = 0;
    if (i == dimension_) break;
    ++v[i];
  }
  if (pts.empty()) return true;
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
  LatticePoint sum(dimension_);
  for (std::size_t s = 0; s < samples; ++s) {
    const auto& a = pts[pick(rng)];
    const auto& b = pts[pick(rng)];
    for (std::size_t i = 0; i < dimension_; ++i) sum[i] = a[i] + b[i];
    if (!admits(sum)) return false;
  }
  return true;
}

FracMonomialModule::FracMonomialModule(SemigroupSpec semigroup,
                                       std::vector<LatticePoint> generators)
    : semigroup_(std::move(semigroup)), generators_(std::move(generators)) {
  for (const auto& g : generators_)
    if (g.size() != semigroup_.dimension())
      throw InvalidArgument("generator has the wrong dimension");
}

bool FracMonomialModule::contains(std::span<const long> v) const {
  if (v.size() != semigroup_.dimension()) return false;
  LatticePoint diff(v.size());
  for (const auto& g : generators_) {
    for (std::size_t i = 0; i < v.size(); ++i) diff[i] = v[i] - g[i];
    if (semigroup_.admits(diff)) return true;
  }
  return false;
}

FracMonomialModule FracMonomialModule::minimalized() const {
  auto gens = generators_;
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<LatticePoint> kept;
  LatticePoint diff(semigroup_.dimension());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
      if (i == j) continue;
      for (std::size_t k = 0; k < diff.size(); ++k) diff[k] = gens[i][k] - gens[j][k];
      redundant = semigroup_.admits(diff);
    }
    if (!redundant) kept.push_back(gens[i]);
  }
  return FracMonomialModule(semigroup_, std::move(kept));
}

bool frac_membership(std::span<const long> v, const FracMonomialModule& module) {
  return module.contains(v);
}

FracMonomialModule frac_twisted_product(const FracMonomialModule& a, unsigned e1,
                                        const FracMonomialModule& b, unsigned p) {
  if (a.semigroup().dimension() != b.semigroup().dimension())
    throw InvalidArgument("twisted product of modules over different semigroups");
  const long q1 = static_cast<long>(prime_power(p, e1));
  std::vector<LatticePoint> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const auto& ga : a.generators()) {
    for (const auto& gb : b.generators()) {
      LatticePoint v(ga.size());
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = ga[i] + q1 * gb[i];
      gens.push_back(std::move(v));
    }
  }
  return FracMonomialModule(a.semigroup(), std::move(gens));
}

FracMonomialModule veronese_component(std::size_t d, long n, unsigned p, unsigned e) {
  if (n < 1) throw InvalidArgument("Veronese index must be positive");
  if (d == 0) throw InvalidArgument("Veronese component needs at least one variable");
  const long q = static_cast<long>(prime_power(p, e));
  // Exponents below q - n only give multiples of vectors already listed, so
  // the box [q - n, q - 1]^d holds every minimal generator.
  const long lo = q - n;
  const long hi = q - 1;
  std::vector<LatticePoint> gens;
  LatticePoint alpha(d, lo);
  while (true) {
    long s = std::accumulate(alpha.begin(), alpha.end(), 0L);
    if (((s % n) + n) % n == 0) {
      LatticePoint g(d);
      for (std::size_t i = 0; i < d; ++i) g[i] = -alpha[i];
      gens.push_back(std::move(g));
    }
    std::size_t i = 0;
    while (i < d && alpha[i] == hi) alpha[i++] = lo;
    if (i == d) break;
    ++alpha[i];
  }
  return FracMonomialModule(SemigroupSpec::veronese(d, n), std::move(gens)).minimalized();
}

FracMonomialModule polynomial_component(std::size_t d, unsigned p, unsigned e) {
  const long q = static_cast<long>(prime_power(p, e));
  std::vector<LatticePoint> gens;
  LatticePoint v(d, 0);
  auto rec = [&](auto&& self, std::size_t i, long left) -> void {
    if (i + 1 == d) {
      v[i] = left;
      gens.push_back(v);
      return;
    }
    for (long k = left; k >= 0; --k) {
      v[i] = k;
      self(self, i + 1, left - k);
    }
  };
  if (d > 0) rec(rec, 0, q - 1);
  return FracMonomialModule(SemigroupSpec::trivial(d), std::move(gens));
}

std::vector<LatticePoint> generators_outside(const FracMonomialModule& target,
                                             std::span<const FracMonomialModule> parts) {
  std::vector<LatticePoint> out;
  for (const auto& g : target.generators()) {
    bool inside = std::any_of(parts.begin(), parts.end(),
                              [&](const FracMonomialModule& m) { return m.contains(g); });
    if (!inside) out.push_back(g);
  }
  return out;
}

std::string to_string(std::span<const long> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

}  // namespace frob::mono
