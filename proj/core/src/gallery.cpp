#include "frobtool/gallery.hpp"

#include "frobtool/errors.hpp"
#include "frobtool/frobenius_algebra.hpp"
#include "frobtool/groebner.hpp"
#include "frobtool/monomial_engine.hpp"
#include "frobtool/parser.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

namespace frob::gallery {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::stated: return "stated";
    case Provenance::derived: return "derived";
    case Provenance::structural: return "structural";
  }
  return "derived";
}

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::info: return "info";
  }
  return "fail";
}

bool GalleryResult::all_passed() const {
  return std::none_of(expectations.begin(), expectations.end(),
                      [](const Expectation& x) { return x.status == Status::fail; });
}

void GalleryResult::expect(std::string n, bool ok, std::string measured, Provenance prov) {
  expectations.push_back({std::move(n), ok ? Status::pass : Status::fail, std::move(measured), prov});
}

void GalleryResult::inform(std::string n, std::string measured, Provenance prov) {
  expectations.push_back({std::move(n), Status::info, std::move(measured), prov});
}

namespace {

using mono::FracMonomialModule;
using mono::LatticePoint;
using mono::SemigroupSpec;

Ring ring_of(std::uint32_t p, std::vector<std::string> names) {
  return RingSpec::make(PrimeField(p), std::move(names));
}

Ideal ideal_of(const Ring& ring, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> out;
  for (const char* g : gens) out.push_back(parse_polynomial(g, ring));
  return Ideal(ring, std::move(out));
}

std::vector<std::string> printed(std::span<const Polynomial> polys) {
  std::vector<std::string> out;
  for (const auto& f : polys) out.push_back(to_string(f));
  return out;
}

std::string join(const std::vector<std::string>& parts, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string fmt_ratio(double r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", r);
  return buf;
}

std::string params(std::uint32_t p, const char* key, unsigned v) {
  return "p=" + std::to_string(p) + " " + key + "=" + std::to_string(v);
}

// Counts, new-generator counts and flags, degree by degree.
std::string shape(const FinGenReport& r) {
  std::vector<std::string> parts;
  for (const auto& d : r.degrees) {
    parts.push_back("e=" + std::to_string(d.e) + ":" + std::to_string(d.min_gen_count) + "/" +
                    std::to_string(d.new_gen_count) + (d.generated_from_lower ? "/gen" : "/new"));
  }
  return join(parts, " ");
}

bool same_shape(const FinGenReport& a, const FinGenReport& b, unsigned upto) {
  for (unsigned e = 1; e <= upto; ++e) {
    if (e > a.degrees.size() || e > b.degrees.size()) return false;
    const auto& x = a.degrees[e - 1];
    const auto& y = b.degrees[e - 1];
    if (x.min_gen_count != y.min_gen_count || x.new_gen_count != y.new_gen_count ||
        x.generated_from_lower != y.generated_from_lower)
      return false;
  }
  return true;
}

const DegreeRecord* at(const FinGenReport& r, unsigned e) {
  return e >= 1 && e <= r.degrees.size() ? &r.degrees[e - 1] : nullptr;
}

// Ratios max_gen_degree / q; the bound is checked against `limit`.
void expect_degree_growth(GalleryResult& out, const FrobeniusAlgebra& alg, unsigned emax,
                          double limit, const std::string& limit_text) {
  auto growth = alg.degree_growth(emax);
  std::vector<std::string> parts;
  bool bounded = true;
  double first = growth.empty() ? 0.0 : growth.front().ratio;
  bool band = true;
  for (const auto& g : growth) {
    parts.push_back("e=" + std::to_string(g.e) + ":" + std::to_string(g.max_gen_degree) + "/" +
                    std::to_string(g.q) + "=" + fmt_ratio(g.ratio));
    bounded = bounded && g.ratio <= limit;
    band = band && g.ratio <= 2.0 * first;
  }
  out.expect("max generator degree / q <= " + limit_text + " for e = 1.." + std::to_string(emax),
             bounded, join(parts), Provenance::derived);
  out.inform("degree growth ratios within twice the e=1 ratio",
             band ? "yes" : "no (reported only)", Provenance::structural);
}

// Evaluates f at polynomial images of the variables.
Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images,
                      const Ring& target) {
  Polynomial out(target);
  for (const auto& t : f.terms()) {
    Polynomial term = Polynomial::constant(target, t.coef);
    for (std::size_t i = 0; i < images.size(); ++i)
      if (t.monomial[i] > 0) term *= images[i].pow(t.monomial[i]);
    out += term;
  }
  return out;
}

bool same_module(const FracMonomialModule& a, const FracMonomialModule& b) {
  auto inside = [](const FracMonomialModule& x, const FracMonomialModule& y) {
    return std::all_of(x.generators().begin(), x.generators().end(),
                       [&](const LatticePoint& g) { return y.contains(g); });
  };
  return inside(a, b) && inside(b, a);
}

// Segre components: 1/((st)^(q-1) x^k y^l z^m), k + l + m = 2q - 2, each <= q - 1.
FracMonomialModule segre_component(std::uint32_t p, unsigned e) {
  const long q = static_cast<long>(prime_power(p, e));
  std::vector<LatticePoint> gens;
  for (long k = 0; k <= q - 1; ++k)
    for (long l = 0; l <= q - 1; ++l) {
      long m = 2 * q - 2 - k - l;
      if (m < 0 || m > q - 1) continue;
      gens.push_back({1 - q, 1 - q, -k, -l, -m});
    }
  return FracMonomialModule(SemigroupSpec::segre(2, 3), std::move(gens));
}

}  // namespace

Ideal determinantal_ideal(std::uint32_t p) {
  auto ring = ring_of(p, {"u", "v", "w", "x", "y", "z"});
  return ideal_of(ring, {"v*z - w*y", "w*x - u*z", "u*y - v*x"});
}

Ideal katzman_ideal(std::uint32_t p) {
  auto ring = ring_of(p, {"x", "y", "z"});
  return ideal_of(ring, {"x*y", "y*z"});
}

Ideal twisted_cubic_ideal(std::uint32_t p) {
  auto ring = ring_of(p, {"a", "b", "c", "d"});
  return ideal_of(ring, {"a*c - b^2", "b*d - c^2", "a*d - b*c"});
}

GalleryResult fedder_identity_check(std::uint32_t p) {
  GalleryResult out;
  out.name = "fedder";
  out.description = "gallery fedder p=" + std::to_string(p);
  const Ideal I = determinantal_ideal(p);
  const Ideal Ip = frobenius_power(I, 1);
  const Ideal lhs = colon(Ip, I);
  const Ideal rhs = power(I, 2 * p - 2) + Ip;
  const bool equal = ideal_equal(lhs, rhs);
  out.expect("I^[p] : I equals I^(2p-2) + I^[p]", equal,
             std::string(equal ? "equal" : "different") + "; reduced bases of sizes " +
                 std::to_string(lhs.basis().size()) + " and " +
                 std::to_string(rhs.basis().size()),
             Provenance::stated);
  out.listings.push_back({"I^[p] : I", printed(lhs.basis())});
  out.listings.push_back({"I^(2p-2) + I^[p]", printed(rhs.basis())});
  return out;
}

GalleryResult fedder_strictness(std::uint32_t p, unsigned e) {
  GalleryResult out;
  out.name = "fedder-strict";
  out.description = "gallery fedder-strict " + params(p, "e", e);
  const std::uint64_t q = prime_power(p, e);
  const Ideal I = determinantal_ideal(p);
  const Ideal Iq = frobenius_power(I, e);
  const Ideal lhs = colon(Iq, I);
  const Ideal rhs = power(I, static_cast<unsigned>(2 * q - 2)) + Iq;
  const bool contained = lhs.contains(rhs);
  std::optional<Polynomial> witness;
  for (const auto& g : lhs.basis()) {
    if (!rhs.contains(g)) {
      witness = g;
      break;
    }
  }
  out.expect("I^(2q-2) + I^[q] is contained in I^[q] : I", contained,
             contained ? "contained" : "not contained", Provenance::structural);
  out.expect("containment is strict", contained && witness.has_value(),
             witness ? "witness " + to_string(*witness) + " of degree " +
                           std::to_string(witness->weighted_degree().value_or(0))
                     : "ideals are equal",
             Provenance::stated);
  out.listings.push_back({"I^[q] : I", printed(lhs.basis())});
  out.listings.push_back({"I^(2q-2) + I^[q]", printed(rhs.basis())});
  return out;
}

GalleryResult prop51_check(std::uint32_t p, unsigned e) {
  GalleryResult out;
  out.name = "lift-family";
  out.description = "gallery lift-family " + params(p, "e", e);
  const std::uint64_t q = prime_power(p, e);
  const Ideal I = determinantal_ideal(p);
  const Ring& ring = I.ring();
  const Ideal Iq = frobenius_power(I, e);
  const Ideal col = colon(Iq, I);
  const Polynomial x = Polynomial::variable(ring, "x");
  const Polynomial y = Polynomial::variable(ring, "y");
  const Polynomial z = Polynomial::variable(ring, "z");
  const Polynomial base = (I.generators()[1] * I.generators()[2]).pow(q - 1);

  std::size_t members = 0, pairs = 0, in_colon = 0;
  std::vector<Polynomial> fs;
  Listing lifts{"f_{s,t}", {}};
  for (std::uint64_t s = 0; s < q; ++s) {
    for (std::uint64_t t = 0; s + t < q; ++t) {
      ++pairs;
      const Polynomial g = y.pow(s) * z.pow(t) * base;
      const Polynomial m = x.pow(s + t);
      if (!(Iq + Ideal(ring, {m})).contains(g)) continue;
      ++members;
      Polynomial f = Iq.normal_form(lift_by_nzd(g, m, Iq));
      if (col.contains(f)) ++in_colon;
      lifts.lines.push_back("f_{" + std::to_string(s) + "," + std::to_string(t) +
                            "} = " + to_string(f));
      fs.push_back(std::move(f));
    }
  }
  const std::string frac = [](std::size_t a, std::size_t b) {
    return std::to_string(a) + "/" + std::to_string(b);
  }(members, pairs);
  out.expect("y^s z^t (D2 D3)^(q-1) lies in I^[q] + (x^(s+t)) for all s + t <= q - 1",
             members == pairs, frac + " pairs", Provenance::stated);
  const bool f00 = !fs.empty() && Iq.contains(fs.front() - base);
  out.expect("f_{0,0} = (D2 D3)^(q-1) modulo I^[q]", f00, f00 ? "holds" : "differs",
             Provenance::structural);
  out.expect("every f_{s,t} lies in I^[q] : I", in_colon == pairs,
             std::to_string(in_colon) + "/" + std::to_string(pairs), Provenance::stated);
  std::vector<Polynomial> gens = Iq.generators();
  gens.insert(gens.end(), fs.begin(), fs.end());
  const bool equal = ideal_equal(col, Ideal(ring, gens));
  out.expect("I^[q] : I = I^[q] + (f_{s,t})", equal, equal ? "equal" : "different",
             e == 1 ? Provenance::stated : Provenance::derived);
  const auto minimal = minimal_generators_mod(fs, Iq).size();
  out.inform("minimal generator count of (I^[q] : I) / I^[q]",
             std::to_string(minimal) + " (family size q(q+1)/2 = " +
                 std::to_string(q * (q + 1) / 2) + ")",
             Provenance::derived);
  out.listings.push_back(std::move(lifts));
  return out;
}

GalleryResult katzman_case(std::uint32_t p, unsigned emax) {
  GalleryResult out;
  out.name = "katzman";
  out.description = "gallery katzman " + params(p, "emax", emax);
  const Ideal I = katzman_ideal(p);
  FrobeniusAlgebra alg(I);
  const auto groebner = alg.fingen_probe(emax);
  const auto monomial = mono::mono_fingen_probe(mono::MonomialIdeal::from_ideal(I), emax);
  out.reports["groebner"] = groebner;
  out.reports["monomial"] = monomial;

  if (p == 2) {
    const auto* d1 = at(groebner, 1);
    const bool ok = d1 && d1->min_gen_count == 3;
    out.expect("e=1 min_gen_count = 3", ok,
               d1 ? std::to_string(d1->min_gen_count) + " (" + join(d1->generators) + ")" : "-",
               Provenance::derived);
  }
  for (unsigned e = 2; e <= emax; ++e) {
    const auto* a = at(groebner, e);
    const auto* b = at(monomial, e);
    const bool ok = a && b && a->new_gen_count >= 1 && b->new_gen_count >= 1;
    out.expect("new generators required at e = " + std::to_string(e), ok,
               a ? std::to_string(a->new_gen_count) + " new of " +
                       std::to_string(a->min_gen_count)
                 : "-",
               Provenance::derived);
  }
  bool agree = same_shape(groebner, monomial, emax);
  for (unsigned e = 1; agree && e <= emax; ++e) {
    auto ga = groebner.degrees[e - 1].generators;
    auto gb = monomial.degrees[e - 1].generators;
    std::sort(ga.begin(), ga.end());
    std::sort(gb.begin(), gb.end());
    agree = ga == gb;
  }
  out.expect("Groebner and monomial paths agree", agree,
             "groebner " + shape(groebner) + "; monomial " + shape(monomial),
             Provenance::derived);
  expect_degree_growth(out, alg, emax, 3.0, "3");
  out.inform("probe summary", groebner.summary(), Provenance::derived);
  return out;
}

GalleryResult veronese_case(std::uint32_t p, unsigned emax) {
  GalleryResult out;
  out.name = "veronese";
  out.description = "gallery veronese " + params(p, "emax", emax);
  const Ideal I = twisted_cubic_ideal(p);

  // a, b, c, d -> x^3, x^2 y, x y^2, y^3 kills the presentation.
  const Ring plane = ring_of(p, {"x", "y"});
  std::vector<Polynomial> images;
  for (const char* s : {"x^3", "x^2*y", "x*y^2", "y^3"}) images.push_back(parse_polynomial(s, plane));
  bool kernel = true;
  for (const auto& g : I.generators()) kernel = kernel && substitute(g, images, plane).is_zero();
  out.expect("twisted cubic relations vanish under a,b,c,d -> x^3,x^2y,xy^2,y^3", kernel,
             kernel ? "all 3 vanish" : "nonzero image", Provenance::structural);

  FrobeniusAlgebra alg(I);
  const auto groebner = alg.fingen_probe(emax);
  const auto lattice = mono::frac_fingen_probe(
      [p](unsigned e) { return mono::veronese_component(2, 3, p, e); }, p, emax);
  out.reports["groebner"] = groebner;
  out.reports["monomial"] = lattice;
  out.expect("Groebner and lattice paths agree on counts and flags",
             same_shape(groebner, lattice, emax),
             "groebner " + shape(groebner) + "; lattice " + shape(lattice), Provenance::derived);

  const auto bound = qgor_expected_bound(3, p);
  auto counts = [&](const FinGenReport& r) {
    std::vector<std::string> c;
    for (const auto& d : r.degrees) c.push_back(std::to_string(d.min_gen_count));
    return join(c);
  };
  if (p % 3 == 1) {
    bool ones = std::all_of(groebner.degrees.begin(), groebner.degrees.end(),
                            [](const DegreeRecord& d) { return d.min_gen_count == 1; });
    out.expect("one generator at every degree", ones, counts(groebner), Provenance::stated);
    bool gen = !groebner.first_failure().has_value();
    out.expect("generated in degree 1", gen, groebner.summary(), Provenance::stated);
    out.expect("expected bound e0 = 1", bound == 1u,
               bound ? std::to_string(*bound) : "none", Provenance::stated);
  } else if (p % 3 == 2) {
    const auto* d1 = at(groebner, 1);
    out.expect("degree-1 count 3", d1 && d1->min_gen_count == 3, counts(groebner),
               Provenance::derived);
    if (const auto* d2 = at(groebner, 2)) {
      out.expect("degree 2 needs a new generator", d2->new_gen_count >= 1,
                 std::to_string(d2->new_gen_count) + " new", Provenance::derived);
    }
    bool later = true;
    for (unsigned e = 3; e <= emax; ++e) later = later && at(groebner, e)->generated_from_lower;
    if (emax >= 3) {
      out.expect("generated from degrees <= 2 at e = 3.." + std::to_string(emax), later,
                 groebner.summary(), Provenance::stated);
    }
    out.expect("expected bound e0 = 2", bound == 2u, bound ? std::to_string(*bound) : "none",
               Provenance::stated);
    if (p == 2) {
      out.inform("literature list of four generators in degrees <= 2",
                 "measured minimal counts " + counts(groebner), Provenance::stated);
    }
  } else {
    bool twos = std::all_of(groebner.degrees.begin(), groebner.degrees.end(),
                            [](const DegreeRecord& d) { return d.min_gen_count == 2; });
    out.expect("two generators at every degree", twos, counts(groebner), Provenance::stated);
    bool fresh = true;
    for (unsigned e = 2; e <= emax; ++e) fresh = fresh && at(groebner, e)->new_gen_count >= 1;
    out.expect("new generators at every e = 2.." + std::to_string(emax), fresh,
               groebner.summary(), Provenance::stated);
    out.expect("no expected bound since p divides 3", !bound.has_value(),
               bound ? std::to_string(*bound) : "none", Provenance::stated);
  }
  return out;
}

GalleryResult determinantal_case(std::uint32_t p, unsigned emax_groebner,
                                 unsigned emax_monomial) {
  GalleryResult out;
  out.name = "determinantal";
  out.description = "gallery determinantal p=" + std::to_string(p) +
                    " emax=" + std::to_string(emax_groebner) +
                    " emax-monomial=" + std::to_string(emax_monomial);

  // Lattice path on the Segre semigroup, coordinates (s, t, x, y, z).
  std::vector<FracMonomialModule> comps;
  for (unsigned e = 0; e <= emax_monomial; ++e) comps.push_back(segre_component(p, e));
  out.reports["monomial"] = mono::frac_fingen_probe(
      [&](unsigned e) { return comps[e]; }, p, emax_monomial);
  Listing log{"witness log", {}};
  for (unsigned e = 2; e <= emax_monomial; ++e) {
    const long q = static_cast<long>(prime_power(p, e));
    const long r = q / static_cast<long>(p);
    const LatticePoint w{1 - q, 1 - q, 2 - q, r - q, -r};
    const bool own = comps[e].contains(w);
    bool excluded = true;
    for (unsigned e1 = 1; e1 < e; ++e1) {
      const bool in = mono::frac_twisted_product(comps[e1], e1, comps[e - e1], p).contains(w);
      excluded = excluded && !in;
      log.lines.push_back("e=" + std::to_string(e) + " witness " + mono::to_string(w) +
                          " split (" + std::to_string(e1) + "," + std::to_string(e - e1) +
                          "): " + (in ? "member" : "excluded"));
    }
    out.expect("witness lies in the degree-" + std::to_string(e) + " component", own,
               mono::to_string(w), Provenance::structural);
    out.expect("witness excluded from every split product at e = " + std::to_string(e),
               excluded, std::to_string(e - 1) + " splits checked",
               e == 2 ? Provenance::stated : Provenance::derived);
  }
  out.listings.push_back(std::move(log));

  if (emax_groebner >= 1) {
    const Ideal I = determinantal_ideal(p);
    FrobeniusAlgebra alg(I);
    const auto groebner = alg.fingen_probe(emax_groebner);
    out.reports["groebner"] = groebner;
    if (p == 2) {
      const auto* d1 = at(groebner, 1);
      out.expect("e=1 min_gen_count = 3", d1 && d1->min_gen_count == 3,
                 d1 ? std::to_string(d1->min_gen_count) : "-", Provenance::derived);
    }
    if (const auto* d2 = at(groebner, 2)) {
      out.expect("new generators required at e = 2", d2->new_gen_count >= 1,
                 std::to_string(d2->new_gen_count) + " new of " +
                     std::to_string(d2->min_gen_count),
                 Provenance::derived);
      const std::uint64_t q = d2->q;
      out.inform("e=2 minimal generator count", std::to_string(d2->min_gen_count) +
                                                    " (family size q(q+1)/2 = " +
                                                    std::to_string(q * (q + 1) / 2) + ")",
                 Provenance::derived);
    }
    const unsigned shared = std::min(emax_groebner, emax_monomial);
    out.expect("Groebner and lattice paths agree on counts and flags",
               same_shape(groebner, out.reports["monomial"], shared),
               "groebner " + shape(groebner) + "; lattice " + shape(out.reports["monomial"]),
               Provenance::derived);
    expect_degree_growth(out, alg, emax_groebner, 4.0, "4");
  }
  return out;
}

GalleryResult poly_twisted_case(unsigned dim, std::uint32_t p, unsigned emax) {
  if (dim < 1) throw InvalidArgument("dimension must be positive");
  GalleryResult out;
  out.name = "poly-twisted";
  out.description = "gallery poly-twisted dim=" + std::to_string(dim) + " " +
                    params(p, "emax", emax);
  const unsigned top = dim == 1 ? 2 * emax : emax + 1;
  std::vector<FracMonomialModule> T;
  for (unsigned e = 0; e <= top; ++e) T.push_back(mono::polynomial_component(dim, p, e));
  out.reports["monomial"] =
      mono::frac_fingen_probe([&](unsigned e) { return T[e]; }, p, emax);

  if (dim == 1) {
    bool commutes = true;
    for (unsigned a = 1; a <= emax; ++a)
      for (unsigned b = 1; b <= emax; ++b) {
        auto ab = mono::frac_twisted_product(T[a], a, T[b], p);
        auto ba = mono::frac_twisted_product(T[b], b, T[a], p);
        commutes = commutes && same_module(ab, ba) && same_module(ab, T[a + b]);
      }
    out.expect("T_e * T_e' = T_e' * T_e = T_(e+e') for e, e' <= " + std::to_string(emax),
               commutes, commutes ? "holds" : "fails", Provenance::stated);
  }
  if (dim <= 2) {
    bool gen = true;
    for (unsigned e = 1; e + (dim == 1 ? 1 : 0) <= emax; ++e)
      gen = gen && same_module(T[e + 1], mono::frac_twisted_product(T[1], 1, T[e], p));
    const unsigned last = dim == 1 ? emax - 1 : emax;
    out.expect("T_(e+1) = T_1 * T_e for e <= " + std::to_string(last), gen,
               gen ? "holds" : "fails", Provenance::stated);
  }
  if (dim >= 2) {
    // x * y = x y^p and y * x = x^p y in degree 1.
    LatticePoint xy(dim, 0), yx(dim, 0);
    xy[0] = 1;
    xy[1] = p;
    yx[0] = p;
    yx[1] = 1;
    out.expect("x * y differs from y * x", xy != yx,
               "x*y -> " + mono::to_string(xy) + ", y*x -> " + mono::to_string(yx),
               Provenance::stated);
  }
  if (dim >= 3) {
    Listing log{"witness log", {}};
    bool all_excluded = true;
    for (unsigned e = 2; e <= emax; ++e) {
      const long q = static_cast<long>(prime_power(p, e));
      const long r = q / static_cast<long>(p);
      LatticePoint w(dim, 0);
      w[0] = 1;
      w[1] = r - 1;
      w[2] = q - r - 1;
      bool excluded = T[e].contains(w);
      for (unsigned e1 = 1; e1 < e; ++e1) {
        bool in = mono::frac_twisted_product(T[e1], e1, T[e - e1], p).contains(w);
        excluded = excluded && !in;
        log.lines.push_back("e=" + std::to_string(e) + " witness " + mono::to_string(w) +
                            " split (" + std::to_string(e1) + "," + std::to_string(e - e1) +
                            "): " + (in ? "member" : "excluded"));
      }
      all_excluded = all_excluded && excluded;
    }
    out.expect("witness x y^(q/p-1) z^(q-q/p-1) excluded from every split for e = 2.." +
                   std::to_string(emax),
               all_excluded, std::to_string(log.lines.size()) + " splits checked",
               Provenance::stated);
    out.listings.push_back(std::move(log));
  }
  return out;
}

const std::vector<std::string>& case_names() {
  static const std::vector<std::string> names{"fedder",   "fedder-strict", "lift-family",
                                              "katzman",  "veronese",      "determinantal",
                                              "poly-twisted"};
  return names;
}

namespace {

void budget(bool ok, bool deep, const std::string& what) {
  if (!ok && !deep) {
    throw InvalidArgument(what + " exceeds the default runtime budget; pass --deep to run it");
  }
}

}  // namespace

GalleryResult run_case(const std::string& name, const CaseParams& in) {
  const std::uint32_t p = in.p;
  std::optional<ScopedDegreeGuard> explicit_guard;
  if (in.degree_guard) explicit_guard.emplace(*in.degree_guard);
  if (!is_prime(p)) (void)PrimeField(p);  // throws the standard message
  if (name == "fedder") {
    budget(p <= 3, in.deep, "fedder with p > 3");
    return fedder_identity_check(p);
  }
  if (name == "fedder-strict") {
    const unsigned e = in.e ? in.e : 2;
    budget(prime_power(p, e) <= 4, in.deep, "fedder-strict with q > 4");
    return fedder_strictness(p, e);
  }
  if (name == "lift-family") {
    const unsigned e = in.e ? in.e : 2;
    budget(p == 2 && e <= 2, in.deep, "lift-family beyond p = 2, e <= 2");
    return prop51_check(p, e);
  }
  if (name == "katzman") {
    const unsigned emax = in.emax ? in.emax : 3;
    budget(prime_power(p, emax) <= 16, in.deep, "katzman with p^emax > 16");
    return katzman_case(p, emax);
  }
  if (name == "veronese") {
    const unsigned emax = in.emax ? in.emax : (p == 2 ? 4 : p <= 7 ? 3 : 2);
    budget(prime_power(p, emax) <= 343, in.deep, "veronese with p^emax > 343");
    const long need = 6 * static_cast<long>(prime_power(p, emax));
    ScopedDegreeGuard guard(in.degree_guard.value_or(std::max(default_degree_guard(), need)));
    return veronese_case(p, emax);
  }
  if (name == "determinantal") {
    const unsigned eg = in.emax ? in.emax : 2;
    const unsigned em = in.emax_monomial ? in.emax_monomial : 4;
    budget(prime_power(p, eg) <= 4 && prime_power(p, em) <= 16, in.deep,
           "determinantal with p^emax > 4 or p^emax-monomial > 16");
    return determinantal_case(p, eg, em);
  }
  if (name == "poly-twisted") {
    const unsigned dim = in.dim ? in.dim : 3;
    const unsigned emax = in.emax ? in.emax : (dim >= 3 ? 4 : 5);
    if (dim > 3) budget(false, in.deep, "poly-twisted with dim > 3");
    budget(prime_power(p, emax) <= (dim >= 3 ? 81u : 243u), in.deep,
           "poly-twisted beyond the default degree range");
    return poly_twisted_case(dim, p, emax);
  }
  throw InvalidArgument("unknown gallery case '" + name + "'");
}

}  // namespace frob::gallery
