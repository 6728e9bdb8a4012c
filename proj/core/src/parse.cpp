#include "nf/parse.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "nf/error.hpp"

namespace nf {
namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;  // 1-based
};

constexpr int kMaxExponent = 1000;

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    const std::size_t col = i + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Tok::Number, std::string(text.substr(i, j - i)), col});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
        ++j;
      }
      out.push_back({Tok::Ident, std::string(text.substr(i, j - i)), col});
      i = j;
    } else {
      Tok kind;
      switch (c) {
        case '+': kind = Tok::Plus; break;
        case '-': kind = Tok::Minus; break;
        case '*': kind = Tok::Star; break;
        case '/': kind = Tok::Slash; break;
        case '^': kind = Tok::Caret; break;
        case '(': kind = Tok::LParen; break;
        case ')': kind = Tok::RParen; break;
        default:
          throw ParseError(std::string("unexpected character '") + c + "'", col);
      }
      out.push_back({kind, std::string(1, c), col});
      ++i;
    }
  }
  out.push_back({Tok::End, "", text.size() + 1});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, const VarNames& names)
      : tokens_(std::move(tokens)), names_(names) {}

  BiPoly parse() {
    BiPoly result = expression(1);
    if (peek().kind != Tok::End) unexpected(peek());
    return result;
  }

 private:
  static int binary_precedence(Tok t) {
    switch (t) {
      case Tok::Plus:
      case Tok::Minus: return 1;
      case Tok::Star: return 2;
      default: return 0;
    }
  }

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  [[noreturn]] static void unexpected(const Token& t) {
    if (t.kind == Tok::End) throw ParseError("unexpected end of input", t.column);
    throw ParseError("unexpected '" + t.text + "'", t.column);
  }

  BiPoly expression(int min_precedence) {
    BiPoly lhs = unary();
    for (;;) {
      const Tok op = peek().kind;
      const int prec = binary_precedence(op);
      if (prec == 0 || prec < min_precedence) return lhs;
      next();
      BiPoly rhs = expression(prec + 1);
      switch (op) {
        case Tok::Plus: lhs += rhs; break;
        case Tok::Minus: lhs -= rhs; break;
        default: lhs *= rhs; break;
      }
    }
  }

  BiPoly unary() {
    if (peek().kind == Tok::Minus) {
      next();
      return -unary();
    }
    return power();
  }

  BiPoly power() {
    BiPoly base = primary();
    if (peek().kind != Tok::Caret) return base;
    next();
    const Token& e = next();
    if (e.kind != Tok::Number || peek().kind == Tok::Slash) {
      throw ParseError("exponent must be a nonnegative integer literal", e.column);
    }
    if (e.text.size() > 4 || std::stoi(e.text) > kMaxExponent) {
      throw ParseError("exponent exceeds " + std::to_string(kMaxExponent), e.column);
    }
    return pow(base, static_cast<unsigned>(std::stoi(e.text)));
  }

  BiPoly primary() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::Number: {
        Integer num(t.text);
        Integer den = 1;
        if (peek().kind == Tok::Slash) {
          next();
          const Token& d = next();
          if (d.kind != Tok::Number) unexpected(d);
          den = Integer(d.text);
          if (den == 0) throw ParseError("zero denominator", d.column);
        }
        Rational r(num, den);
        r.canonicalize();
        return BiPoly::constant(r);
      }
      case Tok::Ident:
        if (t.text == names_.x) return BiPoly::variable(Var::X);
        if (t.text == names_.y) return BiPoly::variable(Var::Y);
        throw ParseError("unknown variable '" + t.text + "'", t.column);
      case Tok::LParen: {
        BiPoly inner = expression(1);
        const Token& close = next();
        if (close.kind != Tok::RParen) {
          if (close.kind == Tok::End) throw ParseError("missing ')'", close.column);
          unexpected(close);
        }
        return inner;
      }
      default:
        unexpected(t);
    }
  }

  std::vector<Token> tokens_;
  const VarNames& names_;
  std::size_t pos_ = 0;
};

}  // namespace

BiPoly parse_polynomial(std::string_view text, const VarNames& names) {
  return Parser(tokenize(text), names).parse();
}

}  // namespace nf
