#include "frobtool/basis_cache.hpp"

#include "frobtool/parser.hpp"

#include <algorithm>

namespace frob {

BasisCache& BasisCache::global() {
  static BasisCache cache;
  return cache;
}

std::string BasisCache::key_for(const RingSpec& ring, const std::vector<Polynomial>& generators) {
  std::vector<std::string> printed;
  printed.reserve(generators.size());
  for (const auto& g : generators) {
    if (!g.is_zero()) printed.push_back(to_string(g.monic()));
  }
  std::sort(printed.begin(), printed.end());
  printed.erase(std::unique(printed.begin(), printed.end()), printed.end());
  std::string key = ring.description();
  key += " | ";
  for (std::size_t i = 0; i < printed.size(); ++i) {
    if (i) key += ", ";
    key += printed[i];
  }
  return key;
}

std::shared_ptr<const Basis> BasisCache::find(const std::string& key, const Ring& ring) {
  std::shared_ptr<BasisStore> store;
  {
    std::lock_guard lock(mutex_);
    auto it = entries_.find(key);
    if (it != entries_.end()) {
      ++stats_.memory_hits;
      return it->second;
    }
    store = store_;
  }
  if (store) {
    if (auto printed = store->load(key)) {
      try {
        auto basis = std::make_shared<Basis>();
        for (const auto& s : *printed) basis->push_back(parse_polynomial(s, ring));
        std::lock_guard lock(mutex_);
        ++stats_.store_hits;
        entries_.emplace(key, basis);
        return basis;
      } catch (const std::exception&) {
        // Unparseable entry: treat as a miss and let the caller recompute.
      }
    }
  }
  std::lock_guard lock(mutex_);
  ++stats_.misses;
  return nullptr;
}

void BasisCache::insert(const std::string& key, std::shared_ptr<const Basis> basis) {
  std::shared_ptr<BasisStore> store;
  {
    std::lock_guard lock(mutex_);
    entries_[key] = basis;
    store = store_;
  }
  if (store) {
    std::vector<std::string> printed;
    printed.reserve(basis->size());
    for (const auto& g : *basis) printed.push_back(to_string(g));
    store->save(key, printed);
  }
}

void BasisCache::record_compute(double seconds) {
  std::lock_guard lock(mutex_);
  stats_.compute_seconds += seconds;
}

void BasisCache::set_store(std::shared_ptr<BasisStore> store) {
  std::lock_guard lock(mutex_);
  store_ = std::move(store);
}

void BasisCache::clear() {
  std::lock_guard lock(mutex_);
  entries_.clear();
}

BasisCacheStats BasisCache::stats() const {
  std::lock_guard lock(mutex_);
  return stats_;
}

void BasisCache::reset_stats() {
  std::lock_guard lock(mutex_);
  stats_ = {};
}

}  // namespace frob
