#include <cctype>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "rolecheck/formula.hpp"

namespace rolecheck {

namespace {

enum class Tok {
  End,
  Ident,   // also carries true/false/X/G/F/U; the parser decides by position
  Int,
  LParen,
  RParen,
  LAngle,  // < or << or unicode double angle
  RAngle,  // matching closer
  Not,
  And,
  Or,
  Arrow,
  Comma,
};

struct Token {
  Tok kind;
  std::string text;
  long long value = 0;
  bool double_angle = false;  // set on LAngle/RAngle for << >> forms
  int line = 1;
  int column = 1;
};

class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_space();
    Token t;
    t.line = line_;
    t.column = column_;
    if (pos_ >= text_.size()) {
      t.kind = Tok::End;
      return t;
    }
    unsigned char c = static_cast<unsigned char>(text_[pos_]);

    if (std::isalpha(c) || c == '_') {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        advance();
      t.kind = Tok::Ident;
      t.text = std::string(text_.substr(start, pos_ - start));
      return t;
    }
    if (std::isdigit(c)) {
      size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        advance();
      std::string_view digits = text_.substr(start, pos_ - start);
      long long v = 0;
      auto res = std::from_chars(digits.data(), digits.data() + digits.size(), v);
      if (res.ec != std::errc{})
        throw parse_error("integer too large", t.line, t.column);
      t.kind = Tok::Int;
      t.value = v;
      return t;
    }

    switch (c) {
      case '(': advance(); t.kind = Tok::LParen; return t;
      case ')': advance(); t.kind = Tok::RParen; return t;
      case '!': advance(); t.kind = Tok::Not; return t;
      case '&': advance(); t.kind = Tok::And; return t;
      case '|': advance(); t.kind = Tok::Or; return t;
      case ',': advance(); t.kind = Tok::Comma; return t;
      case '-':
        advance();
        if (pos_ < text_.size() && text_[pos_] == '>') {
          advance();
          t.kind = Tok::Arrow;
          return t;
        }
        throw parse_error("expected '->'", t.line, t.column);
      case '<':
        advance();
        t.kind = Tok::LAngle;
        if (pos_ < text_.size() && text_[pos_] == '<') {
          advance();
          t.double_angle = true;
        }
        return t;
      case '>':
        advance();
        t.kind = Tok::RAngle;
        if (pos_ < text_.size() && text_[pos_] == '>') {
          advance();
          t.double_angle = true;
        }
        return t;
      default: break;
    }

    // Unicode mathematical double angle brackets, one per side.
    if (consume_utf8("⟨⟨")) {
      t.kind = Tok::LAngle;
      t.double_angle = true;
      return t;
    }
    if (consume_utf8("⟩⟩")) {
      t.kind = Tok::RAngle;
      t.double_angle = true;
      return t;
    }
    throw parse_error("unexpected character", t.line, t.column);
  }

private:
  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r')
        advance();
      else if (c == '\n')
        advance();
      else
        break;
    }
  }

  // Advances one byte, counting columns per UTF-8 code point.
  void advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
      return;
    }
    if ((static_cast<unsigned char>(c) & 0xc0) != 0x80) ++column_;
  }

  bool consume_utf8(std::string_view s) {
    if (text_.substr(pos_).starts_with(s)) {
      for (size_t i = 0; i < s.size(); ++i) advance();
      return true;
    }
    return false;
  }

  std::string_view text_;
  size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

class Parser {
public:
  explicit Parser(std::string_view text) : lexer_(text) { shift(); }

  Formula parse() {
    Formula f = implies();
    expect(Tok::End, "unexpected trailing input");
    return f;
  }

private:
  void shift() { cur_ = lexer_.next(); }

  [[noreturn]] void fail(const std::string& msg) {
    throw parse_error(msg, cur_.line, cur_.column);
  }

  void expect(Tok kind, const std::string& msg) {
    if (cur_.kind != kind) fail(msg);
    shift();
  }

  Formula implies() {
    Formula left = disjunct();
    if (cur_.kind == Tok::Arrow) {
      shift();
      return Formula::implication(std::move(left), implies());
    }
    return left;
  }

  Formula disjunct() {
    Formula left = conjunct();
    while (cur_.kind == Tok::Or) {
      shift();
      left = Formula::disjunction(std::move(left), conjunct());
    }
    return left;
  }

  Formula conjunct() {
    Formula left = unary();
    while (cur_.kind == Tok::And) {
      shift();
      left = Formula::conjunction(std::move(left), unary());
    }
    return left;
  }

  Formula unary() {
    if (cur_.kind == Tok::Not) {
      shift();
      return Formula::negation(unary());
    }
    if (cur_.kind == Tok::LAngle) return strategic();
    return atom();
  }

  Formula strategic() {
    bool doubled = cur_.double_angle;
    shift();
    std::vector<Agent> agents;
    if (cur_.kind != Tok::RAngle) {
      for (;;) {
        if (cur_.kind != Tok::Int) fail("expected agent number in coalition");
        if (cur_.value < 1 || cur_.value > 1'000'000)
          fail("agent number out of range");
        agents.push_back(static_cast<Agent>(cur_.value));
        shift();
        if (cur_.kind == Tok::Comma) {
          shift();
          continue;
        }
        break;
      }
    }
    if (cur_.kind != Tok::RAngle) fail("expected '>' closing the coalition");
    if (cur_.double_angle != doubled)
      fail("mismatched coalition bracket style");
    shift();
    Coalition coal{std::move(agents)};

    if (cur_.kind == Tok::Ident && cur_.text.size() == 1) {
      char op = cur_.text[0];
      if (op == 'X' || op == 'G' || op == 'F') {
        shift();
        Formula body = unary();
        if (op == 'X') return Formula::next(std::move(coal), std::move(body));
        if (op == 'G') return Formula::globally(std::move(coal), std::move(body));
        return Formula::eventually(std::move(coal), std::move(body));
      }
    }
    if (cur_.kind == Tok::LParen) {
      shift();
      Formula lhs = implies();
      if (!(cur_.kind == Tok::Ident && cur_.text == "U"))
        fail("expected 'U' inside coalition parentheses");
      shift();
      Formula rhs = implies();
      expect(Tok::RParen, "expected ')' closing the until operator");
      return Formula::until(std::move(coal), std::move(lhs), std::move(rhs));
    }
    fail("expected X, G, F, or (.. U ..) after coalition");
  }

  Formula atom() {
    switch (cur_.kind) {
      case Tok::Ident: {
        std::string name = cur_.text;
        shift();
        if (name == "true") return Formula::make_true();
        if (name == "false") return Formula::make_false();
        return Formula::prop(std::move(name));
      }
      case Tok::LParen: {
        shift();
        Formula f = implies();
        expect(Tok::RParen, "expected ')'");
        return f;
      }
      default:
        fail("expected a formula");
    }
  }

  Lexer lexer_;
  Token cur_;
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).parse(); }

}  // namespace rolecheck
