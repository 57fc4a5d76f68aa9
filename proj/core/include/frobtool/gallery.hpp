#pragma once

#include "frobtool/fingen_report.hpp"
#include "frobtool/ideal.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

/// Named models from the literature on Frobenius operators, each bundled
/// with executable expectations.
namespace frob::gallery {

/// Where an expected outcome comes from: stated in the source literature,
/// derived by an independent computation and frozen, or a structural
/// identity that holds by construction.
enum class Provenance { stated, derived, structural };

/// `info` expectations report a measurement without asserting it.
enum class Status { pass, fail, info };

std::string to_string(Provenance p);
std::string to_string(Status s);

struct Expectation {
  std::string name;
  Status status = Status::fail;
  std::string measured;
  Provenance provenance = Provenance::derived;
};

/// A printed list of polynomials or lattice vectors (a reduced basis, the
/// lifted f_{s,t}, a witness log).
struct Listing {
  std::string label;
  std::vector<std::string> lines;
};

struct GalleryResult {
  std::string name;
  /// Canonical text of the case and its parameters; feeds the input digest.
  std::string description;
  /// Finite-generation probes keyed by path ("groebner", "monomial", ...).
  std::map<std::string, FinGenReport> reports;
  std::vector<Listing> listings;
  std::vector<Expectation> expectations;

  bool all_passed() const;
  void expect(std::string name, bool ok, std::string measured, Provenance provenance);
  void inform(std::string name, std::string measured, Provenance provenance);
};

/// I = (vz - wy, wx - uz, uy - vx) in F_p[u,v,w,x,y,z].
Ideal determinantal_ideal(std::uint32_t p);
/// I = (xy, yz) in F_p[x,y,z].
Ideal katzman_ideal(std::uint32_t p);
/// Twisted cubic (ac - b^2, bd - c^2, ad - bc) in F_p[a,b,c,d].
Ideal twisted_cubic_ideal(std::uint32_t p);

GalleryResult fedder_identity_check(std::uint32_t p);
GalleryResult fedder_strictness(std::uint32_t p, unsigned e);
GalleryResult prop51_check(std::uint32_t p, unsigned e);
GalleryResult katzman_case(std::uint32_t p, unsigned emax);
GalleryResult veronese_case(std::uint32_t p, unsigned emax);
GalleryResult determinantal_case(std::uint32_t p, unsigned emax_groebner,
                                 unsigned emax_monomial);
GalleryResult poly_twisted_case(unsigned dim, std::uint32_t p, unsigned emax);

struct CaseParams {
  std::uint32_t p = 2;
  unsigned e = 0;          // 0 selects the case default
  unsigned emax = 0;       // 0 selects the case default
  unsigned emax_monomial = 0;
  unsigned dim = 0;
  bool deep = false;
  /// Explicit degree guard. When absent, a case whose colons are known to
  /// reach high degree (about 3q for the twisted cubic) runs with the guard
  /// raised to 6q, and otherwise with the process default.
  std::optional<long> degree_guard;
};

/// Case names accepted by run_case, in a fixed order.
const std::vector<std::string>& case_names();
/// Applies defaults and the runtime budget: parameters beyond the default
/// budget need `deep`, otherwise InvalidArgument is thrown.
GalleryResult run_case(const std::string& name, const CaseParams& params);

}  // namespace frob::gallery
