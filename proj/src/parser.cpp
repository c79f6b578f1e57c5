// Recursive-descent parser for the monomial system DSL.
//
//   system     := field_decl var_decl relation*
//   field_decl := "field" "GF" "(" "q" "^" INT ")" ";"
//   var_decl   := "vars" IDENT ("," IDENT)* ";"
//   relation   := ("eq" | "neq") monomial "=" "1" ";"
//   monomial   := factor ("*" factor)*
//   factor     := IDENT "^" exponent
//   exponent   := "(" intpoly ")" | INT | "-" INT
//   intpoly    := ["-"] term (("+" | "-") term)*
//   term       := [INT "*"] "q" ["^" INT] | INT
//
// '#' starts a comment running to end of line. The final ';' may be omitted.

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <unordered_map>

#include "porc/errors.hpp"
#include "porc/monomial.hpp"

namespace porc {
namespace {

enum class Tok { ident, integer, lparen, rparen, caret, semicolon, comma, star, equals, plus, minus, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::end:
      return "end of input";
    case Tok::ident:
      return "identifier '" + t.text + "'";
    case Tok::integer:
      return "integer " + t.text;
    default:
      return "'" + t.text + "'";
  }
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_blank();
      const std::size_t line = line_, col = col_;
      if (pos_ >= src_.size()) {
        out.push_back({Tok::end, "", line, col});
        return out;
      }
      const char c = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string s;
        while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
          s += advance();
        out.push_back({Tok::ident, std::move(s), line, col});
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string s;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) s += advance();
        if (pos_ < src_.size() && (src_[pos_] == '.' || src_[pos_] == '/'))
          throw ParseError("non-integer coefficient", line, col);
        out.push_back({Tok::integer, std::move(s), line, col});
        continue;
      }
      Tok kind;
      switch (c) {
        case '(': kind = Tok::lparen; break;
        case ')': kind = Tok::rparen; break;
        case '^': kind = Tok::caret; break;
        case ';': kind = Tok::semicolon; break;
        case ',': kind = Tok::comma; break;
        case '*': kind = Tok::star; break;
        case '=': kind = Tok::equals; break;
        case '+': kind = Tok::plus; break;
        case '-': kind = Tok::minus; break;
        case '.': throw ParseError("non-integer coefficient", line, col);
        default:
          throw ParseError(std::string("unexpected character '") + c + "'", line, col);
      }
      out.push_back({kind, std::string(1, advance()), line, col});
    }
  }

 private:
  char advance() {
    const char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_blank() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(Lexer(src).run()) {}

  MonomialSystem system() {
    MonomialSystem sys;
    field_decl(sys);
    var_decl(sys);
    while (peek().kind != Tok::end) sys.relations.push_back(relation(sys));
    return sys;
  }

  // Standalone polynomial: the first identifier fixes the variable name.
  IntPolynomial polynomial() {
    IntPolynomial p = intpoly(std::nullopt);
    expect(Tok::end, "end of input");
    return p;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_ == toks_.size() - 1 ? pos_ : pos_++]; }

  [[noreturn]] void fail(const Token& at, const std::string& msg) const { throw ParseError(msg, at.line, at.column); }

  const Token& expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) fail(peek(), "expected " + what + ", found " + describe(peek()));
    return take();
  }

  void expect_keyword(const std::string& kw) {
    if (peek().kind != Tok::ident || peek().text != kw) fail(peek(), "expected '" + kw + "', found " + describe(peek()));
    take();
  }

  // Statements end in ';', optional before end of input.
  void terminator() {
    if (peek().kind == Tok::semicolon) {
      take();
      return;
    }
    if (peek().kind != Tok::end) fail(peek(), "expected ';', found " + describe(peek()));
  }

  BigInt integer(const Token& t) { return BigInt(t.text, 10); }

  void field_decl(MonomialSystem& sys) {
    expect_keyword("field");
    expect_keyword("GF");
    expect(Tok::lparen, "'('");
    expect_keyword("q");
    if (peek().kind != Tok::caret) fail(peek(), "extension degree missing: expected GF(q^n)");
    take();
    const Token& nt = peek();
    if (nt.kind != Tok::integer) fail(nt, "extension degree missing: expected an integer after 'q^'");
    take();
    const BigInt n = integer(nt);
    if (n < 1) fail(nt, "extension degree must be at least 1");
    if (!n.fits_uint_p() || n > 64) fail(nt, "extension degree " + nt.text + " is too large");
    sys.n = static_cast<unsigned>(n.get_ui());
    expect(Tok::rparen, "')'");
    terminator();
  }

  static bool reserved(const std::string& s) { return s == "field" || s == "vars" || s == "eq" || s == "neq"; }

  void var_decl(MonomialSystem& sys) {
    expect_keyword("vars");
    for (;;) {
      const Token& t = expect(Tok::ident, "variable name");
      if (reserved(t.text)) fail(t, "'" + t.text + "' is a keyword");
      if (index_.count(t.text)) fail(t, "duplicate variable '" + t.text + "'");
      index_[t.text] = sys.variables.size();
      sys.variables.push_back(t.text);
      if (peek().kind != Tok::comma) break;
      take();
    }
    sys.k = sys.variables.size();
    terminator();
  }

  MonomialRelation relation(const MonomialSystem& sys) {
    const Token& kw = peek();
    MonomialRelation rel;
    if (kw.kind == Tok::ident && kw.text == "eq")
      rel.kind = RelationKind::equation;
    else if (kw.kind == Tok::ident && kw.text == "neq")
      rel.kind = RelationKind::inequation;
    else
      fail(kw, "expected 'eq' or 'neq', found " + describe(kw));
    take();

    rel.exponents.assign(sys.k, IntPolynomial{});
    for (;;) {
      const Token& v = expect(Tok::ident, "variable name");
      const auto it = index_.find(v.text);
      if (it == index_.end()) fail(v, "unknown variable '" + v.text + "'");
      expect(Tok::caret, "'^'");
      rel.exponents[it->second] += exponent();
      if (peek().kind != Tok::star) break;
      take();
    }
    expect(Tok::equals, "'='");
    const Token& one = expect(Tok::integer, "'1'");
    if (one.text != "1") fail(one, "right-hand side must be 1");
    terminator();
    return rel;
  }

  IntPolynomial exponent() {
    const Token& t = peek();
    if (t.kind == Tok::lparen) {
      take();
      IntPolynomial p = intpoly(std::string("q"));
      expect(Tok::rparen, "')'");
      return p;
    }
    if (t.kind == Tok::integer) {
      take();
      return IntPolynomial{integer(t)};
    }
    if (t.kind == Tok::minus) {
      take();
      const Token& v = expect(Tok::integer, "integer after '-'");
      return IntPolynomial{BigInt(-integer(v))};
    }
    fail(t, "expected exponent '(...)' or integer, found " + describe(t));
  }

  IntPolynomial intpoly(std::optional<std::string> var) {
    IntPolynomial acc;
    bool negate = false;
    if (peek().kind == Tok::minus) {
      take();
      negate = true;
    }
    for (;;) {
      IntPolynomial t = term(var);
      acc += negate ? -t : t;
      if (peek().kind == Tok::plus)
        negate = false;
      else if (peek().kind == Tok::minus)
        negate = true;
      else
        break;
      take();
    }
    return acc;
  }

  IntPolynomial power(std::optional<std::string>& var) {
    const Token& v = expect(Tok::ident, "variable");
    if (!var) var = v.text;
    if (v.text != *var) fail(v, "expected '" + *var + "', found " + describe(v));
    std::size_t deg = 1;
    if (peek().kind == Tok::caret) {
      take();
      const Token& e = expect(Tok::integer, "integer exponent");
      const BigInt d = integer(e);
      if (!d.fits_uint_p() || d > 4096) fail(e, "exponent " + e.text + " is too large");
      deg = d.get_ui();
    }
    return IntPolynomial::monomial(BigInt(1), deg);
  }

  IntPolynomial term(std::optional<std::string>& var) {
    const Token& t = peek();
    if (t.kind == Tok::integer) {
      take();
      const BigInt c = integer(t);
      if (peek().kind == Tok::star) {
        take();
        return power(var) * c;
      }
      return IntPolynomial{c};
    }
    if (t.kind == Tok::ident) return power(var);
    fail(t, "expected term, found " + describe(t));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace

MonomialSystem parse_system(std::string_view text) { return Parser(text).system(); }

IntPolynomial parse_polynomial(std::string_view text) { return Parser(text).polynomial(); }

}  // namespace porc
