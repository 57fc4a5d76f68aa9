#include "frobtool/parser.hpp"

#include "frobtool/errors.hpp"

#include <cctype>
#include <string>

namespace frob {

namespace {

enum class Tok { integer, name, plus, minus, star, caret, lparen, rparen, end };

struct Token {
  Tok kind;
  std::string_view text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_space();
    Token t{Tok::end, {}, line_, col_};
    if (pos_ >= src_.size()) return t;
    const char c = src_[pos_];
    const std::size_t start = pos_;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) advance();
      t.kind = Tok::integer;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                                    src_[pos_] == '_')) {
        advance();
      }
      t.kind = Tok::name;
    } else {
      switch (c) {
        case '+': t.kind = Tok::plus; break;
        case '-': t.kind = Tok::minus; break;
        case '*': t.kind = Tok::star; break;
        case '^': t.kind = Tok::caret; break;
        case '(': t.kind = Tok::lparen; break;
        case ')': t.kind = Tok::rparen; break;
        default:
          throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
      }
      advance();
    }
    t.text = src_.substr(start, pos_ - start);
    return t;
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) advance();
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
 public:
  Parser(std::string_view src, const Ring& ring) : lexer_(src), ring_(ring) { shift(); }

  Polynomial parse() {
    Polynomial result = expr();
    if (cur_.kind != Tok::end) fail("expected operator or end of input");
    return result;
  }

 private:
  void shift() { cur_ = lexer_.next(); }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, cur_.line, cur_.column);
  }

  Polynomial expr() {
    bool negate = false;
    if (cur_.kind == Tok::plus || cur_.kind == Tok::minus) {
      negate = cur_.kind == Tok::minus;
      shift();
    }
    Polynomial acc = term();
    if (negate) acc = -acc;
    while (cur_.kind == Tok::plus || cur_.kind == Tok::minus) {
      const bool minus = cur_.kind == Tok::minus;
      shift();
      Polynomial rhs = term();
      acc = minus ? acc - rhs : acc + rhs;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (cur_.kind == Tok::star) {
      shift();
      acc = acc * factor();
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (cur_.kind == Tok::caret) {
      shift();
      if (cur_.kind != Tok::integer) fail("expected non-negative integer exponent");
      if (cur_.text.size() > 18) fail("exponent too large");
      const auto n = std::stoull(std::string(cur_.text));
      shift();
      base = base.pow(n);
    }
    return base;
  }

  Polynomial atom() {
    switch (cur_.kind) {
      case Tok::integer: {
        const auto v = ring_->field().reduce_decimal(cur_.text);
        shift();
        return Polynomial::constant(ring_, v);
      }
      case Tok::name: {
        const std::string name(cur_.text);
        auto idx = ring_->index_of(name);
        if (!idx) fail("unknown variable '" + name + "'");
        shift();
        return Polynomial::variable(ring_, *idx);
      }
      case Tok::lparen: {
        shift();
        Polynomial inner = expr();
        if (cur_.kind != Tok::rparen) fail("expected ')'");
        shift();
        return inner;
      }
      case Tok::end:
        fail("unexpected end of input");
      default:
        fail("expected integer, variable or '('");
    }
  }

  Lexer lexer_;
  const Ring& ring_;
  Token cur_{Tok::end, {}, 1, 1};
};

}  // namespace

Polynomial parse_polynomial(std::string_view src, const Ring& ring) {
  return Parser(src, ring).parse();
}

}  // namespace frob
