#include "frobtool/cli/disk_cache.hpp"

#include "frobtool/cli/report.hpp"
#include "json.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>
#include <unistd.h>

namespace frob::cli {

namespace fs = std::filesystem;

DiskCache::DiskCache(fs::path dir, Warn warn) : dir_(std::move(dir)), warn_(std::move(warn)) {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) disable("cannot create cache directory " + dir_.string() + ": " + ec.message());
}

fs::path DiskCache::path_for(const std::string& key) const {
  return dir_ / (sha256_hex(key) + ".json");
}

void DiskCache::disable(const std::string& why) {
  if (!enabled_) return;
  enabled_ = false;
  if (warn_) warn_("warning: " + why + "; basis cache disabled");
}

std::optional<std::vector<std::string>> DiskCache::load(const std::string& key) {
  if (!enabled_) return std::nullopt;
  const fs::path path = path_for(key);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  in.close();
  try {
    auto doc = nlohmann::json::parse(buf.str());
    if (doc.at("key").get<std::string>() != key) throw std::runtime_error("key mismatch");
    return doc.at("basis").get<std::vector<std::string>>();
  } catch (const std::exception&) {
    if (warn_) warn_("warning: discarding corrupt cache entry " + path.string());
    std::error_code ec;
    fs::remove(path, ec);
    return std::nullopt;
  }
}

void DiskCache::save(const std::string& key, const std::vector<std::string>& basis) {
  if (!enabled_) return;
  static std::atomic<unsigned long> counter{0};
  const fs::path path = path_for(key);
  std::ostringstream tmpname;
  tmpname << path.filename().string() << ".tmp." << ::getpid() << '.'
          << std::hash<std::thread::id>{}(std::this_thread::get_id()) << '.' << counter++;
  const fs::path tmp = dir_ / tmpname.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      disable("cannot write cache entry in " + dir_.string());
      return;
    }
    out << nlohmann::json{{"key", key}, {"basis", basis}}.dump() << '\n';
    if (!out) {
      disable("write failed for " + tmp.string());
      return;
    }
  }
  // Same key means same canonical bytes, so last writer wins safely.
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    disable("cannot publish cache entry " + path.string());
  }
}

std::optional<fs::path> default_cache_dir() {
  if (const char* env = std::getenv("FROBTOOL_CACHE"); env && *env) return fs::path(env);
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
    return fs::path(xdg) / "frobtool";
  if (const char* home = std::getenv("HOME"); home && *home)
    return fs::path(home) / ".cache" / "frobtool";
  return std::nullopt;
}

}  // namespace frob::cli
