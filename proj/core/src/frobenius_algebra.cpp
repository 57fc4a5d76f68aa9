#include "frobtool/frobenius_algebra.hpp"

#include "frobtool/errors.hpp"
#include "frobtool/parallel.hpp"

#include <algorithm>
#include <sstream>

namespace frob {

std::optional<unsigned> FinGenReport::first_failure() const {
  for (const auto& d : degrees)
    if (d.e >= 2 && !d.generated_from_lower) return d.e;
  return std::nullopt;
}

std::string FinGenReport::summary() const {
  std::vector<unsigned> failing;
  unsigned top = 0;
  for (const auto& d : degrees) {
    top = std::max(top, d.e);
    if (d.e >= 2 && !d.generated_from_lower) failing.push_back(d.e);
  }
  std::ostringstream os;
  if (!failing.empty()) {
    os << "new generators required at e = ";
    for (std::size_t i = 0; i < failing.size(); ++i) os << (i ? ", " : "") << failing[i];
  } else if (top >= 2) {
    os << "generated from lower degrees at e = 2.." << top;
  } else {
    os << "no degrees above 1 probed";
  }
  return os.str();
}

std::optional<long> FrobeniusComponent::max_gen_degree() const {
  std::optional<long> best;
  for (const auto& g : min_gens) {
    if (auto d = g.weighted_degree()) best = std::max(best.value_or(*d), *d);
  }
  return best;
}

namespace {

void require_component_input(const Ideal& ideal) {
  if (!ideal.is_homogeneous())
    throw InvalidArgument("Frobenius components need a homogeneous ideal");
  if (ideal.is_unit()) throw InvalidArgument("Frobenius components need a proper ideal");
}

bool degree_then_order(const Polynomial& a, const Polynomial& b) {
  long da = a.weighted_degree().value_or(0);
  long db = b.weighted_degree().value_or(0);
  if (da != db) return da < db;
  return a.spec().greater(b.leading_monomial(), a.leading_monomial());
}

FrobeniusComponent build_component(const Ideal& ideal, unsigned e) {
  const Ring& ring = ideal.ring();
  const auto deg = FrobeniusDegree::of(ring->characteristic(), e);
  if (e == 0) {
    return {deg, Ideal::unit(ring), ideal, {Polynomial::constant(ring, 1)}};
  }
  Ideal modulus = frobenius_power(ideal, e);
  Ideal col = colon(modulus, ideal);
  auto kept = minimal_generators_mod(col.basis(), modulus);
  std::vector<Polynomial> reps;
  reps.reserve(kept.size());
  for (const auto& g : kept) reps.push_back(modulus.normal_form(g).monic());
  std::sort(reps.begin(), reps.end(), degree_then_order);
  return {deg, std::move(col), std::move(modulus), std::move(reps)};
}

}  // namespace

FrobeniusComponent component(const Ideal& ideal, unsigned e) {
  require_component_input(ideal);
  return build_component(ideal, e);
}

Polynomial twisted_mul_reps(const Polynomial& a, unsigned e1, const Polynomial& b) {
  return a * frobenius_pow(b, e1);
}

FrobeniusAlgebra::FrobeniusAlgebra(Ideal ideal) : ideal_(std::move(ideal)) {
  require_component_input(ideal_);
}

const FrobeniusComponent& FrobeniusAlgebra::component(unsigned e) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = components_.find(e); it != components_.end()) return *it->second;
  }
  // Built outside the lock so distinct degrees proceed in parallel; a racing
  // duplicate is identical and simply discarded.
  auto built = std::make_shared<const FrobeniusComponent>(build_component(ideal_, e));
  std::lock_guard lock(mutex_);
  auto [it, inserted] = components_.emplace(e, std::move(built));
  return *it->second;
}

void FrobeniusAlgebra::build(unsigned emax) const {
  // Largest degrees first: they dominate the running time.
  parallel_for(emax, [&](std::size_t i) { component(emax - static_cast<unsigned>(i)); });
}

Polynomial FrobeniusAlgebra::twisted_mul(const Polynomial& a, unsigned e1,
                                         const Polynomial& b) const {
  return twisted_mul_reps(a, e1, b);
}

Polynomial FrobeniusAlgebra::twisted_mul_checked(const Polynomial& a, unsigned e1,
                                                 const Polynomial& b, unsigned e2) const {
  Polynomial r = twisted_mul_reps(a, e1, b);
  if (!component(e1 + e2).colon.contains(r)) {
    throw AssertionFailure("twisted product left the colon of degree " +
                           std::to_string(e1 + e2));
  }
  return r;
}

std::vector<Polynomial> FrobeniusAlgebra::product_component(unsigned e1, unsigned e2) const {
  if (e1 == 0 || e2 == 0) throw InvalidArgument("product_component needs positive degrees");
  const auto& a = component(e1).min_gens;
  const auto& b = component(e2).min_gens;
  std::vector<Polynomial> lifted;
  lifted.reserve(b.size());
  for (const auto& h : b) lifted.push_back(frobenius_pow(h, e1));
  std::vector<Polynomial> out;
  out.reserve(a.size() * b.size());
  for (const auto& g : a)
    for (const auto& h : lifted) out.push_back(g * h);
  return out;
}

FinGenReport FrobeniusAlgebra::fingen_probe(unsigned emax) const {
  if (emax == 0) throw InvalidArgument("fingen_probe needs emax >= 1");
  build(emax);
  const Ring& ring = ideal_.ring();
  FinGenReport report;
  for (unsigned e = 1; e <= emax; ++e) {
    const auto& comp = component(e);
    DegreeRecord rec;
    rec.e = e;
    rec.q = comp.degree.q;
    rec.min_gen_count = comp.min_gens.size();
    rec.max_gen_degree = comp.max_gen_degree();
    for (const auto& g : comp.min_gens) rec.generators.push_back(to_string(g));
    if (e == 1) {
      rec.new_gen_count = rec.min_gen_count;
    } else {
      std::vector<Polynomial> gens = comp.modulus.generators();
      for (unsigned e1 = 1; e1 < e; ++e1) {
        auto part = product_component(e1, e - e1);
        gens.insert(gens.end(), part.begin(), part.end());
      }
      Ideal lower(ring, std::move(gens));
      rec.new_gen_count = minimal_generators_mod(comp.min_gens, lower).size();
      rec.generated_from_lower = ideal_equal(lower, comp.colon);
      if (rec.generated_from_lower != (rec.new_gen_count == 0)) {
        throw AssertionFailure("generation flag disagrees with the new generator count at e = " +
                               std::to_string(e));
      }
    }
    report.degrees.push_back(std::move(rec));
  }
  return report;
}

std::vector<DegreeGrowth> FrobeniusAlgebra::degree_growth(unsigned emax) const {
  build(emax);
  std::vector<DegreeGrowth> out;
  for (unsigned e = 1; e <= emax; ++e) {
    const auto& comp = component(e);
    DegreeGrowth g;
    g.e = e;
    g.q = comp.degree.q;
    g.max_gen_degree = comp.max_gen_degree().value_or(0);
    g.ratio = static_cast<double>(g.max_gen_degree) / static_cast<double>(g.q);
    out.push_back(g);
  }
  return out;
}

std::optional<unsigned> qgor_expected_bound(std::uint64_t m, std::uint32_t p) {
  if (m == 0) throw InvalidArgument("index must be positive");
  if (m % p == 0) return std::nullopt;
  std::uint64_t r = p % m;
  std::uint64_t acc = r;
  for (unsigned e = 1; e <= m; ++e) {
    if (acc % m == 1 % m) return e;
    acc = (acc * r) % m;
  }
  return std::nullopt;
}

}  // namespace frob
