#include "frobtool/cli/report.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace frob::cli {

using nlohmann::json;

void Report::add_listing(const std::string& label, const std::vector<std::string>& lines) {
  components.push_back({{"label", label}, {"lines", lines}});
}

void Report::add_fingen(const std::string& path, const FinGenReport& report) {
  const auto failure = report.first_failure();
  json degrees = json::array();
  for (const auto& d : report.degrees) {
    json rec{{"e", d.e},
             {"q", d.q},
             {"min_gen_count", d.min_gen_count},
             {"new_gen_count", d.new_gen_count},
             {"generated_from_lower", d.generated_from_lower},
             {"max_gen_degree", d.max_gen_degree ? json(*d.max_gen_degree) : json(nullptr)},
             {"generators", d.generators}};
    if (failure && d.e > *failure) rec["note"] = "relative to full lower components";
    degrees.push_back(std::move(rec));
  }
  components.push_back({{"path", path}, {"summary", report.summary()}, {"degrees", degrees}});
}

void Report::add_expectation(const gallery::Expectation& x) {
  expectations.push_back({{"name", x.name},
                          {"status", gallery::to_string(x.status)},
                          {"measured", x.measured},
                          {"provenance", gallery::to_string(x.provenance)}});
}

void Report::add_gallery(const gallery::GalleryResult& result) {
  for (const auto& [path, rep] : result.reports) add_fingen(path, rep);
  for (const auto& l : result.listings) add_listing(l.label, l.lines);
  for (const auto& x : result.expectations) add_expectation(x);
}

bool Report::all_passed() const {
  return std::none_of(expectations.begin(), expectations.end(),
                      [](const json& x) { return x.at("status") == "fail"; });
}

json Report::to_json() const {
  return json{{"version", kReportVersion}, {"input_digest", input_digest},
              {"command", command},        {"components", components},
              {"expectations", expectations}, {"timing", timing}};
}

std::string Report::dump() const { return to_json().dump(2) + "\n"; }

std::string Report::to_text() const {
  std::ostringstream os;
  os << "frobtool " << kReportVersion << ": " << command << '\n';
  for (const auto& c : components) {
    if (c.contains("degrees")) {
      os << "\n[" << c.at("path").get<std::string>() << "] "
         << c.at("summary").get<std::string>() << '\n';
      for (const auto& d : c.at("degrees")) {
        os << "  e=" << d.at("e") << " q=" << d.at("q") << "  min_gens=" << d.at("min_gen_count")
           << " new=" << d.at("new_gen_count")
           << (d.at("generated_from_lower").get<bool>() ? "  generated" : "  not generated");
        if (!d.at("max_gen_degree").is_null()) os << "  max_degree=" << d.at("max_gen_degree");
        if (d.contains("note")) os << "  (" << d.at("note").get<std::string>() << ")";
        os << '\n';
      }
    } else {
      os << '\n' << c.at("label").get<std::string>() << ":\n";
      for (const auto& line : c.at("lines")) os << "  " << line.get<std::string>() << '\n';
    }
  }
  if (!expectations.empty()) os << '\n';
  for (const auto& x : expectations) {
    const auto status = x.at("status").get<std::string>();
    std::string tag = status == "pass" ? "PASS" : status == "fail" ? "FAIL" : "INFO";
    os << '[' << tag << "] " << x.at("name").get<std::string>() << ": "
       << x.at("measured").get<std::string>() << '\n';
  }
  return os.str();
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xf];
  }
  return out;
}

json comparable(json report) {
  report.erase("timing");
  return report;
}

}  // namespace frob::cli
