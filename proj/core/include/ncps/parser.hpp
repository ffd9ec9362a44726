#pragma once

#include <string_view>

#include "ncps/ast.hpp"
#include "ncps/ncpoly.hpp"

namespace ncps {

/// Grammar:
///   expr    := term (("+" | "-") term)*
///   term    := unary ("*" unary | "/" unary)*
///   unary   := "-" unary | power
///   power   := atom ("^" INT)?
///   atom    := "x" | "p" | "i" | "hbar" | IDENT | NUMBER
///            | "(" expr ")" | "[" expr "," expr "]"
/// Multiplication is always explicit. Throws ParseError (with line, column
/// and the expected-token set) or ReservedName.
ExprAst parse(std::string_view src);

/// Evaluates the AST with the algebra operations. Division and negative
/// powers are restricted to single-term scalar denominators; violations
/// throw NotMonomialDivisor or DivisionByZero annotated with the offending
/// span's line and column.
NCPoly lower(const ExprAst& ast, std::string_view src = {});

NCPoly parse_poly(std::string_view src);

/// Upper bound on the total degree of any value produced while evaluating
/// the expression, e.g. 2 for "[x,p]" even though the result is a scalar.
/// Used to size the trusted block of numeric checks.
unsigned structural_degree(const ExprAst& ast);

/// 1-based line and column of a byte offset.
std::pair<std::size_t, std::size_t> line_col(std::string_view src,
                                             std::size_t offset);

}  // namespace ncps
