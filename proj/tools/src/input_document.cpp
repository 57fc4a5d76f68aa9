#include "frobtool/cli/input_document.hpp"

#include "frobtool/errors.hpp"
#include "frobtool/parser.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace frob::cli {

const IdealDecl* InputDocument::find(std::string_view name) const {
  for (const auto& d : ideals)
    if (d.name == name) return &d;
  return nullptr;
}

Ideal InputDocument::ideal(std::string_view name) const {
  const IdealDecl* d = find(name);
  if (!d) throw UnknownIdeal(name);
  return Ideal(ring, d->generators);
}

bool operator==(const InputDocument& a, const InputDocument& b) {
  if (!same_ring(a.ring, b.ring) || a.degree_guard != b.degree_guard) return false;
  if (a.ideals.size() != b.ideals.size()) return false;
  for (std::size_t i = 0; i < a.ideals.size(); ++i) {
    if (a.ideals[i].name != b.ideals[i].name ||
        a.ideals[i].generators != b.ideals[i].generators)
      return false;
  }
  return true;
}

namespace {

struct Word {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Word> split_words(std::string_view line, std::size_t from = 0) {
  std::vector<Word> out;
  std::size_t i = from;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    out.push_back({line.substr(i, j - i), i + 1});
    i = j;
  }
  return out;
}

long parse_long(const Word& w, std::size_t line) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(w.text.data(), w.text.data() + w.text.size(), v);
  if (ec != std::errc() || ptr != w.text.data() + w.text.size()) {
    throw ParseError("expected an integer, got '" + std::string(w.text) + "'", line, w.column);
  }
  return v;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

class DocumentParser {
 public:
  InputDocument run(std::string_view text) {
    std::size_t lineno = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(start, end - start);
      ++lineno;
      if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      directive(line, lineno);
      if (end == text.size()) break;
      start = end + 1;
    }
    build_ring(lineno, 1);
    return std::move(doc_);
  }

 private:
  void directive(std::string_view line, std::size_t lineno) {
    auto words = split_words(line);
    if (words.empty()) return;
    const auto& head = words.front();
    auto args = std::vector<Word>(words.begin() + 1, words.end());
    auto once = [&](bool seen) {
      if (seen) throw ParseError("duplicate '" + std::string(head.text) + "'", lineno, head.column);
      if (doc_.ring)
        throw ParseError("'" + std::string(head.text) + "' must precede the first ideal", lineno,
                         head.column);
    };
    auto single = [&]() -> const Word& {
      if (args.size() != 1)
        throw ParseError("'" + std::string(head.text) + "' takes exactly one value", lineno,
                         head.column);
      return args.front();
    };
    if (head.text == "char") {
      once(characteristic_.has_value());
      const Word& w = single();
      long p = parse_long(w, lineno);
      if (p < 0 || p > 0xffffffffL) p = 0;
      try {
        field_.emplace(static_cast<std::uint32_t>(p));
      } catch (const InvalidArgument& e) {
        throw ParseError(e.what(), lineno, w.column);
      }
      characteristic_ = p;
    } else if (head.text == "vars") {
      once(!vars_.empty());
      if (args.empty()) throw ParseError("'vars' needs at least one name", lineno, head.column);
      for (const auto& w : args) {
        if (!is_identifier(w.text))
          throw ParseError("invalid variable name '" + std::string(w.text) + "'", lineno,
                           w.column);
        vars_.emplace_back(w.text);
      }
      vars_line_ = lineno;
    } else if (head.text == "weights") {
      once(!weights_.empty());
      if (args.empty()) throw ParseError("'weights' needs values", lineno, head.column);
      for (const auto& w : args) weights_.push_back(parse_long(w, lineno));
      weights_line_ = lineno;
    } else if (head.text == "order") {
      once(order_.has_value());
      const Word& w = single();
      if (w.text == "grevlex") {
        order_ = MonomialOrder::grevlex();
      } else if (w.text == "lex") {
        order_ = MonomialOrder::lex();
      } else {
        throw ParseError("unknown order '" + std::string(w.text) + "'", lineno, w.column);
      }
    } else if (head.text == "degree-guard") {
      if (doc_.degree_guard) throw ParseError("duplicate 'degree-guard'", lineno, head.column);
      const Word& w = single();
      long g = parse_long(w, lineno);
      if (g < 1) throw ParseError("degree guard must be positive", lineno, w.column);
      doc_.degree_guard = g;
    } else if (head.text == "ideal") {
      build_ring(lineno, head.column);
      ideal(line, lineno, head.column + head.text.size() - 1);
    } else {
      throw ParseError("unknown directive '" + std::string(head.text) + "'", lineno, head.column);
    }
  }

  void build_ring(std::size_t lineno, std::size_t column) {
    if (doc_.ring) return;
    if (!field_) throw ParseError("missing 'char' declaration", lineno, column);
    if (vars_.empty()) throw ParseError("missing 'vars' declaration", lineno, column);
    if (!weights_.empty() && weights_.size() != vars_.size()) {
      throw ParseError("expected " + std::to_string(vars_.size()) + " weights, got " +
                           std::to_string(weights_.size()),
                       weights_line_, 1);
    }
    try {
      doc_.ring = RingSpec::make(*field_, vars_, weights_,
                                 order_.value_or(MonomialOrder::grevlex()));
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what(), weights_.empty() ? vars_line_ : weights_line_, 1);
    }
  }

  // `ideal Name = f, g, ...`; `after` is the 0-based index just past "ideal".
  void ideal(std::string_view line, std::size_t lineno, std::size_t after) {
    std::size_t eq = line.find('=', after);
    if (eq == std::string_view::npos) throw ParseError("expected '='", lineno, line.size() + 1);
    auto names = split_words(line.substr(0, eq), after);
    if (names.size() != 1 || !is_identifier(names.front().text)) {
      throw ParseError("expected one ideal name before '='", lineno, after + 1);
    }
    const std::string name(names.front().text);
    if (doc_.find(name)) throw ParseError("duplicate ideal '" + name + "'", lineno, names.front().column);

    IdealDecl decl{name, {}};
    std::size_t piece_start = eq + 1;
    int depth = 0;
    for (std::size_t i = eq + 1; i <= line.size(); ++i) {
      const char c = i < line.size() ? line[i] : ',';
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (c != ',' || (depth > 0 && i < line.size())) continue;
      std::string_view piece = line.substr(piece_start, i - piece_start);
      std::size_t lead = 0;
      while (lead < piece.size() && std::isspace(static_cast<unsigned char>(piece[lead]))) ++lead;
      const std::size_t column = piece_start + lead + 1;
      if (lead == piece.size()) throw ParseError("empty generator", lineno, column);
      Polynomial f(doc_.ring);
      try {
        f = parse_polynomial(piece.substr(lead), doc_.ring);
      } catch (const ParseError& e) {
        throw ParseError(e.detail(), lineno, column + e.column() - 1);
      }
      if (f.is_zero()) throw ParseError("zero generator in ideal '" + name + "'", lineno, column);
      decl.generators.push_back(std::move(f));
      piece_start = i + 1;
    }
    doc_.ideals.push_back(std::move(decl));
  }

  InputDocument doc_;
  std::optional<long> characteristic_;
  std::optional<PrimeField> field_;
  std::vector<std::string> vars_;
  std::vector<long> weights_;
  std::optional<MonomialOrder> order_;
  std::size_t vars_line_ = 1;
  std::size_t weights_line_ = 1;
};

}  // namespace

InputDocument parse_input(std::string_view text) { return DocumentParser().run(text); }

InputDocument parse_input_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read input file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_input(buf.str());
}

std::string print_input_document(const InputDocument& doc) {
  const RingSpec& r = *doc.ring;
  std::ostringstream os;
  os << "char " << r.characteristic() << '\n';
  os << "vars";
  for (const auto& n : r.names()) os << ' ' << n;
  os << '\n';
  if (!r.standard_grading()) {
    os << "weights";
    for (long w : r.weights()) os << ' ' << w;
    os << '\n';
  }
  if (r.order().kind == OrderKind::lex) os << "order lex\n";
  if (doc.degree_guard) os << "degree-guard " << *doc.degree_guard << '\n';
  for (const auto& d : doc.ideals) {
    os << "ideal " << d.name << " =";
    for (std::size_t i = 0; i < d.generators.size(); ++i)
      os << (i ? ", " : " ") << to_string(d.generators[i]);
    os << '\n';
  }
  return os.str();
}

}  // namespace frob::cli
