#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "wt/weyl.hpp"

namespace wt {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message);
  [[nodiscard]] std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class UnknownSymbol : public ParseError {
 public:
  UnknownSymbol(std::size_t position, const std::string& name);
  [[nodiscard]] const std::string& name() const { return name_; }

 private:
  std::string name_;
};

/// Parses an operator expression.
///
/// Grammar (whitespace ignored between tokens):
///   expr    := term (('+' | '-') term)*
///   term    := unary ('*' unary)*
///   unary   := ('+' | '-') unary | power
///   power   := primary ('^' INTEGER)?
///   primary := NUMBER | IDENT | '(' expr ')'
///   NUMBER  := INTEGER ('/' INTEGER)?
/// Identifiers: x y q z zbar dx dy dq dz dzbar i. '*' is noncommutative
/// composition, left factor acting last. Juxtaposition is rejected.
///
/// The basis is inferred from the coordinate symbols used; expressions that
/// only involve q, dq, i and numbers get `default_basis`. Mixing xy and
/// zzbar symbols is a ParseError.
WeylOperator parse_operator(std::string_view text, Basis default_basis = Basis::XY);

}  // namespace wt

namespace wt {

/// Weight-stripped spinor from a polynomial expression in the coordinates
/// and q, e.g. "2/3*q^3*z + q*zbar". Derivative symbols are rejected.
Spinor parse_spinor(std::string_view text, Basis default_basis = Basis::XY);

}  // namespace wt
