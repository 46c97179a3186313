#include "wt/parser.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace wt {

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message),
      position_(position) {}

UnknownSymbol::UnknownSymbol(std::size_t position, const std::string& name)
    : ParseError(position, "unknown symbol '" + name + "'"), name_(name) {}

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i < s.size() && s[i] == '/') {
        ++i;
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) {
          throw ParseError(i, "expected denominator after '/'");
        }
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      }
      out.push_back({Tok::Number, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Tok::Ident, std::string(s.substr(start, i - start)), start});
      continue;
    }
    Tok kind;
    switch (ch) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      default:
        throw ParseError(i, std::string("unexpected character '") + ch + "'");
    }
    out.push_back({kind, std::string(1, ch), start});
    ++i;
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

struct Symbol {
  std::optional<Basis> basis;  // nullopt for q, dq, i
  std::optional<Gen> gen;      // nullopt for i
};

std::optional<Symbol> lookup(const std::string& name) {
  if (name == "x") return Symbol{Basis::XY, Gen::P1};
  if (name == "y") return Symbol{Basis::XY, Gen::P2};
  if (name == "dx") return Symbol{Basis::XY, Gen::D1};
  if (name == "dy") return Symbol{Basis::XY, Gen::D2};
  if (name == "z") return Symbol{Basis::ZZBAR, Gen::P1};
  if (name == "zbar") return Symbol{Basis::ZZBAR, Gen::P2};
  if (name == "dz") return Symbol{Basis::ZZBAR, Gen::D1};
  if (name == "dzbar") return Symbol{Basis::ZZBAR, Gen::D2};
  if (name == "q") return Symbol{std::nullopt, Gen::Q};
  if (name == "dq") return Symbol{std::nullopt, Gen::DQ};
  if (name == "i") return Symbol{std::nullopt, std::nullopt};
  return std::nullopt;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, Basis basis) : toks_(std::move(tokens)), basis_(basis) {}

  WeylOperator parse() {
    WeylOperator e = expr();
    if (peek().kind != Tok::End) throw ParseError(peek().pos, "unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return toks_[at_]; }
  const Token& next() { return toks_[at_++]; }

  WeylOperator expr() {
    WeylOperator acc = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const bool minus = next().kind == Tok::Minus;
      WeylOperator rhs = term();
      acc = minus ? acc - rhs : acc + rhs;
    }
    return acc;
  }

  WeylOperator term() {
    WeylOperator acc = unary();
    while (true) {
      const Token& t = peek();
      if (t.kind == Tok::Star) {
        next();
        acc = compose(acc, unary());
      } else if (t.kind == Tok::Number || t.kind == Tok::Ident || t.kind == Tok::LParen) {
        throw ParseError(t.pos, "juxtaposition is not allowed; use '*'");
      } else {
        return acc;
      }
    }
  }

  WeylOperator unary() {
    if (peek().kind == Tok::Minus) {
      next();
      return -unary();
    }
    if (peek().kind == Tok::Plus) {
      next();
      return unary();
    }
    return power_expr();
  }

  WeylOperator power_expr() {
    WeylOperator base = primary();
    if (peek().kind != Tok::Caret) return base;
    next();
    const Token& exp = next();
    if (exp.kind != Tok::Number || exp.text.find('/') != std::string::npos) {
      throw ParseError(exp.pos, "exponent must be a non-negative integer");
    }
    if (exp.text.size() > 4) throw ParseError(exp.pos, "exponent too large");
    return power(base, static_cast<unsigned>(std::stoul(exp.text)));
  }

  WeylOperator primary() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::Number:
        try {
          return WeylOperator::constant(basis_, Scalar(Rational::parse(t.text)));
        } catch (const DivisionByZero&) {
          throw ParseError(t.pos, "zero denominator in '" + t.text + "'");
        }
      case Tok::Ident: {
        auto sym = lookup(t.text);
        if (!sym) throw UnknownSymbol(t.pos, t.text);
        if (!sym->gen) return WeylOperator::constant(basis_, Scalar::i());
        return WeylOperator::generator(basis_, *sym->gen);
      }
      case Tok::LParen: {
        WeylOperator e = expr();
        if (peek().kind != Tok::RParen) throw ParseError(peek().pos, "expected ')'");
        next();
        return e;
      }
      case Tok::End:
        throw ParseError(t.pos, "unexpected end of input");
      default:
        throw ParseError(t.pos, "unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> toks_;
  std::size_t at_ = 0;
  Basis basis_;
};

}  // namespace

WeylOperator parse_operator(std::string_view text, Basis default_basis) {
  std::vector<Token> tokens = tokenize(text);
  std::optional<Basis> basis;
  for (const Token& t : tokens) {
    if (t.kind != Tok::Ident) continue;
    auto sym = lookup(t.text);
    if (!sym) throw UnknownSymbol(t.pos, t.text);
    if (!sym->basis) continue;
    if (basis && *basis != *sym->basis) {
      throw ParseError(t.pos, "'" + t.text + "' mixes xy and zzbar coordinates");
    }
    basis = sym->basis;
  }
  return Parser(std::move(tokens), basis.value_or(default_basis)).parse();
}

}  // namespace wt

namespace wt {

Spinor parse_spinor(std::string_view text, Basis default_basis) {
  for (const Token& t : tokenize(text)) {
    if (t.kind == Tok::Ident && t.text.front() == 'd') {
      throw ParseError(t.pos, "derivative '" + t.text + "' in a spinor expression");
    }
  }
  const WeylOperator op = parse_operator(text, default_basis);
  return apply_unweighted(op, Spinor::term(op.basis(), 0, 0, QPoly(Scalar(1))));
}

}  // namespace wt
