#pragma once

#include <string>
#include <vector>

#include "ncps/errors.hpp"
#include "ncps/rational.hpp"

namespace ncps {

enum class AstKind {
  Sum,         // children combined with ops '+'/'-'
  Product,     // children combined with ops '*'/'/'
  Power,       // children[0] ^ exponent
  Neg,         // -children[0]
  Commutator,  // [children[0], children[1]]
  GenX,
  GenP,
  ImagUnit,
  Param,        // name
  RationalLit,  // value (an unsigned integer literal)
  Paren,        // (children[0])
};

/// Parse tree of an operator expression. Value type; children owned inline.
struct ExprAst {
  AstKind kind = AstKind::RationalLit;
  SourceSpan span{};
  std::vector<ExprAst> children;
  /// Per-child combinator for Sum ('+'/'-') and Product ('*'/'/');
  /// ops[0] is always '+' resp. '*'.
  std::vector<char> ops;
  std::string name;    // Param
  Rational value = 0;  // RationalLit
  int exponent = 0;    // Power; negative only on scalar bases (see lower)
};

}  // namespace ncps
