#pragma once

#include "frobtool/basis_cache.hpp"

#include <filesystem>
#include <functional>
#include <optional>
#include <string>

namespace frob::cli {

/// Content-addressed basis store: one JSON file per key, named by the
/// SHA-256 of the key and holding the key itself, which is compared on
/// load. Corrupt or mismatched entries are deleted and reported as misses.
/// I/O failures turn the store off with a warning instead of failing.
class DiskCache : public BasisStore {
 public:
  using Warn = std::function<void(const std::string&)>;

  DiskCache(std::filesystem::path dir, Warn warn);

  std::optional<std::vector<std::string>> load(const std::string& key) override;
  void save(const std::string& key, const std::vector<std::string>& basis) override;

  const std::filesystem::path& directory() const noexcept { return dir_; }
  bool enabled() const noexcept { return enabled_; }
  std::filesystem::path path_for(const std::string& key) const;

 private:
  void disable(const std::string& why);

  std::filesystem::path dir_;
  Warn warn_;
  bool enabled_ = true;
};

/// FROBTOOL_CACHE, else $XDG_CACHE_HOME/frobtool, else ~/.cache/frobtool.
std::optional<std::filesystem::path> default_cache_dir();

}  // namespace frob::cli
