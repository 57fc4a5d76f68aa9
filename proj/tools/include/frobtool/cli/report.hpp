#pragma once

#include "frobtool/fingen_report.hpp"
#include "frobtool/gallery.hpp"

#include "json.hpp"

#include <string>
#include <string_view>

namespace frob::cli {

inline constexpr const char* kReportVersion = FROBTOOL_VERSION;

/// Machine-readable run record. Everything except `timing` is a function of
/// the input, the flags and the tool version.
struct Report {
  std::string command;
  std::string input_digest;
  nlohmann::json components = nlohmann::json::array();
  nlohmann::json expectations = nlohmann::json::array();
  nlohmann::json timing = nlohmann::json::object();

  void add_listing(const std::string& label, const std::vector<std::string>& lines);
  void add_fingen(const std::string& path, const FinGenReport& report);
  void add_expectation(const gallery::Expectation& x);
  void add_gallery(const gallery::GalleryResult& result);
  bool all_passed() const;

  nlohmann::json to_json() const;
  /// Sorted keys, two-space indent, trailing newline.
  std::string dump() const;
  /// Plain-text rendering for terminals.
  std::string to_text() const;
};

/// Lower-case hex SHA-256.
std::string sha256_hex(std::string_view data);

/// Removes the `timing` block; what golden files compare.
nlohmann::json comparable(nlohmann::json report);

}  // namespace frob::cli
