#include "frobtool/cli/commands.hpp"

#include "frobtool/cli/disk_cache.hpp"
#include "frobtool/cli/input_document.hpp"
#include "frobtool/cli/report.hpp"
#include "frobtool/errors.hpp"
#include "frobtool/frobenius_algebra.hpp"
#include "frobtool/gallery.hpp"
#include "frobtool/groebner.hpp"
#include "frobtool/parallel.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <optional>
#include <ostream>

namespace frob::cli {

namespace {

struct Options {
  std::string input;
  bool json = false;
  unsigned emax = 0;
  std::optional<long> degree_guard;
  bool no_cache = false;
  bool deep = false;
  std::string ideal = "I";
  std::string lhs;
  std::string rhs;
  std::string order;
  unsigned e = 0;
  std::uint32_t p = 2;
  unsigned dim = 0;
  unsigned emax_monomial = 0;
  std::string gallery_case;
};

void add_common(CLI::App* sub, Options& o, bool needs_input) {
  auto* in = sub->add_option("--input", o.input, "Input .frob file");
  if (needs_input) in->required()->check(CLI::ExistingFile);
  sub->add_flag("--json", o.json, "Emit the JSON report");
  sub->add_option("--emax", o.emax, "Largest Frobenius degree")->check(CLI::Range(1u, 64u));
  sub->add_option("--degree-guard", o.degree_guard, "Weighted-degree cap for Groebner bases")
      ->check(CLI::PositiveNumber);
  sub->add_flag("--no-cache", o.no_cache, "Do not read or write the on-disk basis cache");
  sub->add_flag("--deep", o.deep, "Allow computations beyond the default runtime budget");
}

// Installs the disk store for the duration of one command.
class CacheSession {
 public:
  CacheSession(bool disabled, std::ostream& err) {
    auto& cache = BasisCache::global();
    cache.reset_stats();
    if (disabled) return;
    if (auto dir = default_cache_dir()) {
      cache.set_store(std::make_shared<DiskCache>(
          *dir, [&err](const std::string& msg) { err << msg << '\n'; }));
    }
  }
  ~CacheSession() { BasisCache::global().set_store(nullptr); }
  CacheSession(const CacheSession&) = delete;
  CacheSession& operator=(const CacheSession&) = delete;
};

std::vector<std::string> printed(std::span<const Polynomial> polys) {
  std::vector<std::string> out;
  for (const auto& f : polys) out.push_back(to_string(f));
  return out;
}

gallery::Expectation structural(std::string name, bool ok, std::string measured) {
  return {std::move(name), ok ? gallery::Status::pass : gallery::Status::fail, std::move(measured),
          gallery::Provenance::structural};
}

void cmd_gb(const Options& o, const InputDocument& doc, Report& r) {
  Ideal I = doc.ideal(o.ideal);
  MonomialOrder order = doc.ring->order();
  if (o.order == "lex") order = MonomialOrder::lex();
  if (o.order == "grevlex") order = MonomialOrder::grevlex();
  const auto basis = groebner_basis(I, order);
  r.command = "gb ideal=" + o.ideal + " order=" + order.tag();
  r.add_listing("reduced basis of " + o.ideal, printed(basis));
  r.add_expectation(structural("every S-polynomial reduces to zero", is_groebner_basis(basis),
                               std::to_string(basis.size()) + " elements"));
}

void cmd_colon(const Options& o, const InputDocument& doc, Report& r) {
  if (o.lhs.empty() || o.rhs.empty()) throw InvalidArgument("colon needs --lhs and --rhs");
  Ideal J = doc.ideal(o.lhs);
  Ideal I = doc.ideal(o.rhs);
  Ideal C = colon(J, I);
  r.command = "colon lhs=" + o.lhs + " rhs=" + o.rhs;
  r.add_listing(o.lhs + " : " + o.rhs, printed(C.basis()));
  bool ok = true;
  for (const auto& g : C.basis())
    for (const auto& f : I.generators()) ok = ok && J.contains(g * f);
  r.add_expectation(structural("g * " + o.rhs + " lies in " + o.lhs + " for every basis element g",
                               ok, std::to_string(C.basis().size()) + " basis elements"));
}

void cmd_fpow(const Options& o, const InputDocument& doc, Report& r) {
  Ideal I = doc.ideal(o.ideal);
  const unsigned e = o.e ? o.e : 1;
  Ideal F = frobenius_power(I, e);
  std::vector<Polynomial> direct;
  for (const auto& g : I.generators()) direct.push_back(frobenius_pow(g, e));
  const bool same = ideal_equal(F, Ideal(I.ring(), direct));
  r.command = "fpow ideal=" + o.ideal + " e=" + std::to_string(e);
  r.add_listing(o.ideal + "^[" + std::to_string(prime_power(I.ring()->characteristic(), e)) + "]",
                printed(F.basis()));
  r.add_expectation(structural("powers of the input generators and of the reduced basis agree",
                               same, same ? "equal" : "different"));
}

void cmd_fops(const Options& o, const InputDocument& doc, Report& r) {
  const unsigned emax = o.emax ? o.emax : 3;
  FrobeniusAlgebra alg(doc.ideal(o.ideal));
  const auto report = alg.fingen_probe(emax);
  r.command = "fops ideal=" + o.ideal + " emax=" + std::to_string(emax);
  r.add_fingen("groebner", report);
  std::vector<std::string> growth;
  for (const auto& g : alg.degree_growth(emax)) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "e=%u max_gen_degree=%ld q=%llu ratio=%.4f", g.e,
                  g.max_gen_degree, static_cast<unsigned long long>(g.q), g.ratio);
    growth.emplace_back(buf);
  }
  r.add_listing("degree growth", growth);
  r.add_expectation({"probe summary", gallery::Status::info, report.summary(),
                     gallery::Provenance::derived});
}

void add_gallery(Report& r, const gallery::GalleryResult& g, bool prefix) {
  if (!prefix) {
    r.add_gallery(g);
    return;
  }
  gallery::GalleryResult copy = g;
  copy.reports.clear();
  for (const auto& [path, rep] : g.reports) copy.reports[g.name + "/" + path] = rep;
  for (auto& l : copy.listings) l.label = g.name + ": " + l.label;
  for (auto& x : copy.expectations) x.name = g.name + ": " + x.name;
  r.add_gallery(copy);
}

void cmd_gallery(const Options& o, Report& r, std::string& digest_source) {
  gallery::CaseParams params;
  params.p = o.p;
  params.e = o.e;
  params.emax = o.emax;
  params.emax_monomial = o.emax_monomial;
  params.dim = o.dim;
  params.deep = o.deep;
  params.degree_guard = o.degree_guard;
  if (o.gallery_case == "all") {
    r.command = "gallery all";
    for (const auto& name : gallery::case_names()) {
      gallery::CaseParams defaults;
      defaults.deep = o.deep;
      defaults.degree_guard = o.degree_guard;
      auto res = gallery::run_case(name, defaults);
      digest_source += res.description + "\n";
      add_gallery(r, res, true);
    }
    return;
  }
  auto res = gallery::run_case(o.gallery_case, params);
  r.command = res.description;
  digest_source = res.description;
  add_gallery(r, res, false);
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Frobenius operator computations over prime fields", "frobtool"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", std::string(kReportVersion));

  auto* gb = app.add_subcommand("gb", "Reduced Groebner basis of an ideal");
  add_common(gb, o, true);
  gb->add_option("--ideal", o.ideal, "Ideal name")->capture_default_str();
  gb->add_option("--order", o.order, "Override the monomial order")
      ->check(CLI::IsMember({"grevlex", "lex"}));

  auto* col = app.add_subcommand("colon", "Colon ideal LHS : RHS");
  add_common(col, o, true);
  col->add_option("--lhs", o.lhs, "Numerator ideal")->required();
  col->add_option("--rhs", o.rhs, "Denominator ideal")->required();

  auto* fpow = app.add_subcommand("fpow", "Frobenius power I^[p^e]");
  add_common(fpow, o, true);
  fpow->add_option("--ideal", o.ideal, "Ideal name")->capture_default_str();
  fpow->add_option("--e", o.e, "Frobenius exponent (default 1)")->check(CLI::Range(1u, 32u));

  auto* fops = app.add_subcommand("fops", "Finite-generation probe of the Frobenius operators");
  add_common(fops, o, true);
  fops->add_option("--ideal", o.ideal, "Ideal name")->capture_default_str();

  auto* tp = app.add_subcommand("twisted-poly", "Twisted ring of a polynomial ring");
  add_common(tp, o, false);
  tp->add_option("--dim", o.dim, "Number of variables (default 3)")->check(CLI::Range(1u, 16u));
  tp->add_option("--p", o.p, "Characteristic")->capture_default_str();

  auto* gal = app.add_subcommand("gallery", "Run a named example with its expectations");
  add_common(gal, o, false);
  std::vector<std::string> names = gallery::case_names();
  names.push_back("all");
  gal->add_option("case", o.gallery_case, "Case name")->required()->check(CLI::IsMember(names));
  gal->add_option("--p", o.p, "Characteristic")->capture_default_str();
  gal->add_option("--e", o.e, "Frobenius exponent for single-degree cases");
  gal->add_option("--dim", o.dim, "Dimension for poly-twisted");
  gal->add_option("--emax-monomial", o.emax_monomial, "Largest degree on the lattice path");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsageError;
  }

  const auto start = std::chrono::steady_clock::now();
  Report report;
  try {
    CacheSession session(o.no_cache, err);
    std::optional<InputDocument> doc;
    if (!o.input.empty()) doc = parse_input_file(o.input);
    std::optional<ScopedDegreeGuard> guard;
    if (o.degree_guard) {
      guard.emplace(*o.degree_guard);
    } else if (doc && doc->degree_guard) {
      guard.emplace(*doc->degree_guard);
    }

    std::string digest_source = doc ? print_input_document(*doc) : std::string();
    if (gb->parsed()) {
      cmd_gb(o, *doc, report);
    } else if (col->parsed()) {
      cmd_colon(o, *doc, report);
    } else if (fpow->parsed()) {
      cmd_fpow(o, *doc, report);
    } else if (fops->parsed()) {
      cmd_fops(o, *doc, report);
    } else if (tp->parsed()) {
      gallery::CaseParams params;
      params.p = o.p;
      params.dim = o.dim;
      params.emax = o.emax;
      params.deep = o.deep;
      auto res = gallery::run_case("poly-twisted", params);
      report.command = "twisted-poly" + res.description.substr(std::string("gallery poly-twisted").size());
      digest_source = res.description;
      report.add_gallery(res);
    } else {
      cmd_gallery(o, report, digest_source);
    }
    report.input_digest = sha256_hex(digest_source);

    const auto stats = BasisCache::global().stats();
    report.timing = {
        {"total_seconds",
         std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()},
        {"groebner_seconds", stats.compute_seconds},
        {"cache", {{"memory_hits", stats.memory_hits},
                   {"store_hits", stats.store_hits},
                   {"misses", stats.misses}}},
        {"threads", worker_count()}};
  } catch (const DegreeGuardExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kDegreeGuard;
  } catch (const AssertionFailure& e) {
    err << "error: " << e.what() << '\n';
    return kExpectationFailed;
  } catch (const NoLiftError& e) {
    err << "error: " << e.what() << '\n';
    return kExpectationFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  out << (o.json ? report.dump() : report.to_text());
  return report.all_passed() ? kOk : kExpectationFailed;
}

}  // namespace frob::cli
