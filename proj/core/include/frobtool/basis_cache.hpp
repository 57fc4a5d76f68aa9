#pragma once

#include "frobtool/polynomial.hpp"

#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace frob {

using Basis = std::vector<Polynomial>;

/// Persistent backing store for reduced bases. Implementations must tolerate
/// concurrent writers of the same key.
class BasisStore {
 public:
  virtual ~BasisStore() = default;
  /// Printed basis polynomials, or nullopt on a miss or a corrupt entry.
  virtual std::optional<std::vector<std::string>> load(const std::string& key) = 0;
  virtual void save(const std::string& key, const std::vector<std::string>& basis) = 0;
};

struct BasisCacheStats {
  std::size_t memory_hits = 0;
  std::size_t store_hits = 0;
  std::size_t misses = 0;
  double compute_seconds = 0.0;
};

/// Process-wide content-addressed memo of reduced Groebner bases. Keys are
/// built from the ring description, the order tag and the sorted monic
/// generators, so two generating sets that agree after that normalization
/// share an entry. Concurrent fills of one key are allowed; values for a key
/// are canonical, so whichever write lands is correct.
class BasisCache {
 public:
  static BasisCache& global();

  static std::string key_for(const RingSpec& ring, const std::vector<Polynomial>& generators);

  std::shared_ptr<const Basis> find(const std::string& key, const Ring& ring);
  void insert(const std::string& key, std::shared_ptr<const Basis> basis);
  void record_compute(double seconds);

  void set_store(std::shared_ptr<BasisStore> store);
  void clear();
  BasisCacheStats stats() const;
  void reset_stats();

 private:
  mutable std::mutex mutex_;
  std::map<std::string, std::shared_ptr<const Basis>> entries_;
  std::shared_ptr<BasisStore> store_;
  BasisCacheStats stats_;
};

}  // namespace frob
