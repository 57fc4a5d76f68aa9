#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace frob {

/// One Frobenius degree of a finite-generation probe.
struct DegreeRecord {
  unsigned e = 0;
  std::uint64_t q = 1;
  std::size_t min_gen_count = 0;
  bool generated_from_lower = false;
  std::size_t new_gen_count = 0;
  /// Largest weighted degree among the minimal generators; absent for
  /// lattice-only computations.
  std::optional<long> max_gen_degree;
  /// Printed minimal generator representatives.
  std::vector<std::string> generators;
};

/// Per-degree evidence about whether degree e is spanned by products of
/// lower-degree pieces. Degree 1 is never "generated from lower".
struct FinGenReport {
  std::vector<DegreeRecord> degrees;

  /// First degree needing new generators beyond degree 1, if any. Flags at
  /// later degrees are relative to the full lower components.
  std::optional<unsigned> first_failure() const;
  /// Fixed wording: "new generators required at e = 2, 3" or
  /// "generated from lower degrees at e = 2..N".
  std::string summary() const;
};

}  // namespace frob
