#include "ncps/parser.hpp"

#include <cctype>
#include <utility>
#include <vector>

namespace ncps {

std::pair<std::size_t, std::size_t> line_col(std::string_view src,
                                             std::size_t offset) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t j = 0; j < offset && j < src.size(); ++j) {
    if (src[j] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  if (offset >= src.size())
    col += offset - src.size();  // errors at end-of-input
  return {line, col};
}

namespace {

enum class TokKind {
  GenX,
  GenP,
  ImagUnit,
  Hbar,
  Ident,
  Number,
  Plus,
  Minus,
  Star,
  Slash,
  Caret,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  End,
};

struct Token {
  TokKind kind;
  SourceSpan span;
  std::string text;
};

std::string to_lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> lex() {
    std::vector<Token> out;
    std::size_t j = 0;
    while (j < src_.size()) {
      char c = src_[j];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++j;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t start = j;
        while (j < src_.size() &&
               std::isdigit(static_cast<unsigned char>(src_[j])))
          ++j;
        out.push_back({TokKind::Number,
                       {start, j},
                       std::string(src_.substr(start, j - start))});
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t start = j;
        while (j < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[j])) ||
                src_[j] == '_'))
          ++j;
        std::string name(src_.substr(start, j - start));
        out.push_back(make_word(std::move(name), {start, j}));
        continue;
      }
      TokKind kind;
      switch (c) {
        case '+': kind = TokKind::Plus; break;
        case '-': kind = TokKind::Minus; break;
        case '*': kind = TokKind::Star; break;
        case '/': kind = TokKind::Slash; break;
        case '^': kind = TokKind::Caret; break;
        case '(': kind = TokKind::LParen; break;
        case ')': kind = TokKind::RParen; break;
        case '[': kind = TokKind::LBracket; break;
        case ']': kind = TokKind::RBracket; break;
        case ',': kind = TokKind::Comma; break;
        default: {
          auto [line, col] = line_col(src_, j);
          throw ParseError("unexpected character '" + std::string(1, c) + "'",
                           line, col);
        }
      }
      out.push_back({kind, {j, j + 1}, std::string(1, c)});
      ++j;
    }
    out.push_back({TokKind::End, {src_.size(), src_.size()}, ""});
    return out;
  }

 private:
  Token make_word(std::string name, SourceSpan span) {
    if (name == "x") return {TokKind::GenX, span, std::move(name)};
    if (name == "p") return {TokKind::GenP, span, std::move(name)};
    if (name == "i") return {TokKind::ImagUnit, span, std::move(name)};
    if (name == kHbarName) return {TokKind::Hbar, span, std::move(name)};
    auto [line, col] = line_col(src_, span.begin);
    if (name == "t")
      throw ReservedName("'t' is reserved for time and cannot name a parameter",
                         line, col);
    if (to_lower(name) == kHbarName)
      throw ReservedName("'" + name + "' is a reserved spelling of hbar (use lowercase 'hbar')",
                         line, col);
    return {TokKind::Ident, span, std::move(name)};
  }

  std::string_view src_;
};

const std::vector<std::string> kAtomExpected = {
    "x", "p", "i", "hbar", "identifier", "number", "'('", "'['"};

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src), toks_(Lexer(src).lex()) {}

  ExprAst run() {
    ExprAst e = parse_expr();
    if (peek().kind != TokKind::End) fail({"operator", "end of input"});
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& advance() { return toks_[pos_++]; }
  bool at(TokKind k) const { return peek().kind == k; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    auto [line, col] = line_col(src_, peek().span.begin);
    std::string got =
        peek().kind == TokKind::End ? "end of input" : "'" + peek().text + "'";
    throw ParseError("unexpected " + got, line, col, std::move(expected));
  }

  void expect(TokKind k, const std::string& what) {
    if (!at(k)) fail({what});
    ++pos_;
  }

  ExprAst parse_expr() {
    ExprAst first = parse_term();
    if (!at(TokKind::Plus) && !at(TokKind::Minus)) return first;
    ExprAst sum;
    sum.kind = AstKind::Sum;
    sum.span.begin = first.span.begin;
    sum.children.push_back(std::move(first));
    sum.ops.push_back('+');
    while (at(TokKind::Plus) || at(TokKind::Minus)) {
      char op = advance().text[0];
      ExprAst next = parse_term();
      sum.span.end = next.span.end;
      sum.children.push_back(std::move(next));
      sum.ops.push_back(op);
    }
    return sum;
  }

  ExprAst parse_term() {
    ExprAst first = parse_unary();
    if (!at(TokKind::Star) && !at(TokKind::Slash)) return first;
    ExprAst prod;
    prod.kind = AstKind::Product;
    prod.span.begin = first.span.begin;
    prod.children.push_back(std::move(first));
    prod.ops.push_back('*');
    while (at(TokKind::Star) || at(TokKind::Slash)) {
      char op = advance().text[0];
      ExprAst next = parse_unary();
      prod.span.end = next.span.end;
      prod.children.push_back(std::move(next));
      prod.ops.push_back(op);
    }
    return prod;
  }

  ExprAst parse_unary() {
    if (at(TokKind::Minus)) {
      const Token& minus = advance();
      ExprAst neg;
      neg.kind = AstKind::Neg;
      neg.span.begin = minus.span.begin;
      ExprAst inner = parse_unary();
      neg.span.end = inner.span.end;
      neg.children.push_back(std::move(inner));
      return neg;
    }
    return parse_power();
  }

  ExprAst parse_power() {
    ExprAst base = parse_atom();
    if (!at(TokKind::Caret)) return base;
    advance();
    bool negative = false;
    if (at(TokKind::Minus)) {
      advance();
      negative = true;
    }
    if (!at(TokKind::Number)) fail({"integer exponent"});
    const Token& num = advance();
    ExprAst power;
    power.kind = AstKind::Power;
    power.span = {base.span.begin, num.span.end};
    power.exponent = std::stoi(num.text);
    if (negative) power.exponent = -power.exponent;
    power.children.push_back(std::move(base));
    return power;
  }

  ExprAst parse_atom() {
    ExprAst node;
    switch (peek().kind) {
      case TokKind::GenX:
        node.kind = AstKind::GenX;
        node.span = advance().span;
        return node;
      case TokKind::GenP:
        node.kind = AstKind::GenP;
        node.span = advance().span;
        return node;
      case TokKind::ImagUnit:
        node.kind = AstKind::ImagUnit;
        node.span = advance().span;
        return node;
      case TokKind::Hbar:
        node.kind = AstKind::Param;
        node.name = kHbarName;
        node.span = advance().span;
        return node;
      case TokKind::Ident: {
        const Token& tok = advance();
        node.kind = AstKind::Param;
        node.name = tok.text;
        node.span = tok.span;
        return node;
      }
      case TokKind::Number: {
        const Token& tok = advance();
        node.kind = AstKind::RationalLit;
        node.value = rational_from_string(tok.text);
        node.span = tok.span;
        return node;
      }
      case TokKind::LParen: {
        const Token& open = advance();
        node.kind = AstKind::Paren;
        node.children.push_back(parse_expr());
        if (!at(TokKind::RParen)) fail({"')'"});
        node.span = {open.span.begin, advance().span.end};
        return node;
      }
      case TokKind::LBracket: {
        const Token& open = advance();
        node.kind = AstKind::Commutator;
        node.children.push_back(parse_expr());
        if (!at(TokKind::Comma)) fail({"','"});
        advance();
        node.children.push_back(parse_expr());
        if (!at(TokKind::RBracket)) fail({"']'"});
        node.span = {open.span.begin, advance().span.end};
        return node;
      }
      default:
        fail(kAtomExpected);
    }
  }

  std::string_view src_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

[[noreturn]] void rethrow_with_span(const Error& err, std::string_view src,
                                    const SourceSpan& span, bool monomial) {
  auto [line, col] = line_col(src, span.begin);
  std::string msg = std::string(err.what()) + " (at line " +
                    std::to_string(line) + ", column " + std::to_string(col) +
                    ")";
  if (monomial) throw NotMonomialDivisor(msg);
  throw DivisionByZero(msg);
}

// Requires the divisor to be a single-term scalar; anything else is the
// NotMonomialDivisor case, pointed at the denominator span.
Coefficient scalar_value(const NCPoly& poly, std::string_view src,
                         const SourceSpan& span) {
  if (!poly.is_scalar()) {
    auto [line, col] = line_col(src, span.begin);
    throw NotMonomialDivisor(
        "denominator contains x or p; exact division needs a scalar "
        "parameter monomial (at line " +
        std::to_string(line) + ", column " + std::to_string(col) + ")");
  }
  return poly.scalar_part();
}

NCPoly divide_with_span(const NCPoly& numerator, const Coefficient& divisor,
                        std::string_view src, const SourceSpan& span) {
  try {
    return scalar_div(numerator, divisor);
  } catch (const NotMonomialDivisor& e) {
    rethrow_with_span(e, src, span, true);
  } catch (const DivisionByZero& e) {
    rethrow_with_span(e, src, span, false);
  }
}

}  // namespace

ExprAst parse(std::string_view src) { return Parser(src).run(); }

NCPoly lower(const ExprAst& ast, std::string_view src) {
  switch (ast.kind) {
    case AstKind::Sum: {
      NCPoly out;
      for (std::size_t j = 0; j < ast.children.size(); ++j) {
        NCPoly part = lower(ast.children[j], src);
        out = ast.ops[j] == '-' ? out - part : out + part;
      }
      return out;
    }
    case AstKind::Product: {
      NCPoly out = lower(ast.children[0], src);
      for (std::size_t j = 1; j < ast.children.size(); ++j) {
        const ExprAst& rhs = ast.children[j];
        if (ast.ops[j] == '*') {
          out = out * lower(rhs, src);
        } else {
          Coefficient divisor = scalar_value(lower(rhs, src), src, rhs.span);
          out = divide_with_span(out, divisor, src, rhs.span);
        }
      }
      return out;
    }
    case AstKind::Power: {
      NCPoly base = lower(ast.children[0], src);
      if (ast.exponent >= 0)
        return pow(base, static_cast<unsigned>(ast.exponent));
      Coefficient c =
          scalar_value(base, src, ast.children[0].span)
              .pow(static_cast<unsigned>(-ast.exponent));
      return divide_with_span(NCPoly::one(), c, src, ast.span);
    }
    case AstKind::Neg:
      return -lower(ast.children[0], src);
    case AstKind::Commutator:
      return commutator(lower(ast.children[0], src),
                        lower(ast.children[1], src));
    case AstKind::GenX:
      return NCPoly::x();
    case AstKind::GenP:
      return NCPoly::p();
    case AstKind::ImagUnit:
      return NCPoly::constant(Coefficient::imag_unit());
    case AstKind::Param:
      return NCPoly::constant(Coefficient::param(ast.name));
    case AstKind::RationalLit:
      return NCPoly::constant(Coefficient::rational(ast.value));
    case AstKind::Paren:
      return lower(ast.children[0], src);
  }
  throw Error("unhandled AST node");
}

NCPoly parse_poly(std::string_view src) { return lower(parse(src), src); }

unsigned structural_degree(const ExprAst& ast) {
  switch (ast.kind) {
    case AstKind::Sum: {
      unsigned deg = 0;
      for (const ExprAst& child : ast.children)
        deg = std::max(deg, structural_degree(child));
      return deg;
    }
    case AstKind::Product: {
      unsigned deg = 0;
      for (std::size_t j = 0; j < ast.children.size(); ++j)
        if (ast.ops[j] == '*') deg += structural_degree(ast.children[j]);
      return deg;
    }
    case AstKind::Power:
      if (ast.exponent <= 0) return 0;
      return static_cast<unsigned>(ast.exponent) *
             structural_degree(ast.children[0]);
    case AstKind::Neg:
    case AstKind::Paren:
      return structural_degree(ast.children[0]);
    case AstKind::Commutator:
      return structural_degree(ast.children[0]) +
             structural_degree(ast.children[1]);
    case AstKind::GenX:
    case AstKind::GenP:
      return 1;
    case AstKind::ImagUnit:
    case AstKind::Param:
    case AstKind::RationalLit:
      return 0;
  }
  return 0;
}

}  // namespace ncps
