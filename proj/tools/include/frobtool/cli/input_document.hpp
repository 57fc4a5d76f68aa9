#pragma once

#include "frobtool/errors.hpp"
#include "frobtool/ideal.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace frob::cli {

struct IdealDecl {
  std::string name;
  std::vector<Polynomial> generators;
};

/// A parsed `.frob` file:
///
///     char <prime>
///     vars <name> <name> ...
///     weights <int> ...            # optional, default all 1
///     order grevlex|lex            # optional, default grevlex
///     degree-guard <int>           # optional
///     ideal <Name> = <poly>, <poly>, ...
///
/// `#` starts a comment. Ring directives must precede the first ideal.
struct InputDocument {
  Ring ring;
  std::vector<IdealDecl> ideals;
  std::optional<long> degree_guard;

  const IdealDecl* find(std::string_view name) const;
  /// Throws UnknownIdeal when `name` is not declared.
  Ideal ideal(std::string_view name) const;

  friend bool operator==(const InputDocument& a, const InputDocument& b);
};

/// Raised for a missing ideal name on the command line.
class UnknownIdeal : public Error {
 public:
  explicit UnknownIdeal(std::string_view name)
      : Error("no ideal named '" + std::string(name) + "' in the input") {}
};

/// Throws ParseError (with file positions) and InvalidArgument for semantic
/// problems such as a non-prime characteristic.
InputDocument parse_input(std::string_view text);
/// As parse_input; throws Error when the file cannot be read.
InputDocument parse_input_file(const std::filesystem::path& path);

/// Canonical text: weights and order only when not the defaults, generators
/// in the canonical polynomial printing.
std::string print_input_document(const InputDocument& doc);

}  // namespace frob::cli
