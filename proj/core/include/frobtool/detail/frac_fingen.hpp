#pragma once

#include "frobtool/polynomial.hpp"

namespace frob::mono {

template <typename ComponentFn>
FinGenReport frac_fingen_probe(ComponentFn&& component, unsigned p, unsigned emax) {
  FinGenReport report;
  std::vector<FracMonomialModule> comps;
  comps.reserve(emax + 1);
  for (unsigned e = 0; e <= emax; ++e) comps.push_back(component(e).minimalized());
  for (unsigned e = 1; e <= emax; ++e) {
    DegreeRecord rec;
    rec.e = e;
    rec.q = prime_power(p, e);
    const auto& gens = comps[e].generators();
    rec.min_gen_count = gens.size();
    for (const auto& g : gens) rec.generators.push_back(to_string(g));
    if (e == 1) {
      rec.new_gen_count = rec.min_gen_count;
    } else {
      std::vector<FracMonomialModule> parts;
      for (unsigned e1 = 1; e1 < e; ++e1) {
        parts.push_back(frac_twisted_product(comps[e1], e1, comps[e - e1], p));
      }
      rec.new_gen_count = generators_outside(comps[e], parts).size();
      rec.generated_from_lower = rec.new_gen_count == 0;
    }
    report.degrees.push_back(std::move(rec));
  }
  return report;
}

}  // namespace frob::mono
