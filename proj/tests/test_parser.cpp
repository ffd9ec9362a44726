#include "ncps/parser.hpp"

#include "ncps/random_poly.hpp"
#include "ncps/render.hpp"
#include "support/seeded_main.hpp"

using namespace ncps;

namespace {
const Coefficient IH = Coefficient::i_hbar();
}

TEST_CASE("oscillator hamiltonian parses and lowers") {
  NCPoly h = parse_poly("p^2/(2*m) + (m*omega^2/2)*x^2");
  NCPoly kinetic =
      NCPoly::monomial(0, 2, Coefficient::rational(make_rational(1, 2)) *
                                 Coefficient::param("m", -1));
  NCPoly potential = NCPoly::monomial(
      2, 0, Coefficient::rational(make_rational(1, 2)) *
                Coefficient::param("m") * Coefficient::param("omega", 2));
  CHECK(h == kinetic + potential);
}

TEST_CASE("commutator syntax parses to a Commutator node") {
  ExprAst ast = parse("[x,p]");
  REQUIRE(ast.kind == AstKind::Commutator);
  REQUIRE(ast.children.size() == 2);
  CHECK(ast.children[0].kind == AstKind::GenX);
  CHECK(ast.children[1].kind == AstKind::GenP);
  CHECK(lower(ast) == NCPoly::constant(IH));
  CHECK(structural_degree(ast) == 2);
}

TEST_CASE("dangling operator reports position and expectations") {
  try {
    parse("x*");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 3);
    CHECK_FALSE(e.expected().empty());
  }
}

TEST_CASE("parse errors carry multi-line positions") {
  try {
    parse("x +\n p *");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 5);
  }
}

TEST_CASE("lowering examples") {
  CHECK(parse_poly("p*x") == NCPoly::monomial(1, 1) - NCPoly::constant(IH));
  CHECK(parse_poly("[x,[x,p]]").is_zero());
  CHECK(parse_poly("x^2/2 - x^2/2").is_zero());
}

TEST_CASE("reserved names are rejected with positions") {
  CHECK_THROWS_AS(parse("2*t"), ReservedName);
  CHECK_THROWS_AS(parse("HBAR"), ReservedName);
  CHECK_THROWS_AS(parse("Hbar + x"), ReservedName);
  // x, p, i, hbar lex as keywords, so they can never become parameters
  CHECK(parse("i*hbar").kind == AstKind::Product);
}

TEST_CASE("division is restricted to scalar monomials, span in message") {
  try {
    parse_poly("p^2/(x+1)");
    FAIL("expected NotMonomialDivisor");
  } catch (const NotMonomialDivisor& e) {
    CHECK(std::string(e.what()).find("column 6") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_poly("x/(m+1)"), NotMonomialDivisor);
  CHECK_THROWS_AS(parse_poly("x/0"), DivisionByZero);
  CHECK_THROWS_AS(parse_poly("x^-1"), NotMonomialDivisor);
  CHECK_THROWS_AS(parse_poly("(1+m)^-1"), NotMonomialDivisor);
  // negative powers of scalar monomials are Laurent exponents
  CHECK(parse_poly("m^-2") ==
        NCPoly::constant(Coefficient::param("m", -2)));
  CHECK(parse_poly("(2*m)^-1") ==
        NCPoly::constant(Coefficient::rational(make_rational(1, 2)) *
                         Coefficient::param("m", -1)));
}

TEST_CASE("power binds tighter than product, product tighter than sum") {
  CHECK(parse_poly("2*x^2") == NCPoly::monomial(2, 0, Coefficient::integer(2)));
  CHECK(parse_poly("1+2*3") == NCPoly::constant(Coefficient::integer(7)));
  CHECK(parse_poly("-x^2") == -NCPoly::monomial(2, 0));
  CHECK(parse_poly("(1+2)*3") == NCPoly::constant(Coefficient::integer(9)));
}

TEST_CASE("render: pinned forms") {
  CHECK(render(NCPoly::constant(IH)) == "i*hbar");
  CHECK(render(NCPoly::zero()) == "0");
  CHECK(render(NCPoly::monomial(
            0, 1, IH * Coefficient::param("m", -1))) == "i*hbar*m^-1*p");
  CHECK(render(parse_poly("p*x")) == "x*p - i*hbar");
  CHECK(render(NCPoly::monomial(
            1, 0, Coefficient::rational(make_rational(3, 2)) *
                      Coefficient::imag_unit() * Coefficient::hbar(2) *
                      Coefficient::param("m", -1))) ==
        "(3/2)*i*hbar^2*m^-1*x");
  CHECK(render(-NCPoly::x()) == "-x");
  CHECK(render(NCPoly::one()) == "1");
  CHECK(render(NCPoly::constant(Coefficient::rational(make_rational(3, 4)))) ==
        "3/4");
}

TEST_CASE("render orders terms by (degree, a, b) descending") {
  NCPoly f = NCPoly::one() + NCPoly::x() + NCPoly::p() +
             NCPoly::monomial(1, 1) + NCPoly::monomial(0, 2);
  CHECK(render(f) == "x*p + p^2 + x + p + 1");
}

TEST_CASE("rendering is deterministic for equal polynomials") {
  NCPoly built_forward = parse_poly("x*p + m*x - i*hbar");
  NCPoly built_backward = parse_poly("-i*hbar + m*x + x*p");
  REQUIRE(built_forward == built_backward);
  CHECK(render(built_forward) == render(built_backward));
}

TEST_CASE("round-trip: lower(parse(render(F))) == F for 500 random polys") {
  RandomPolyGen gen(testsupport::seed);
  for (int j = 0; j < 500; ++j) {
    NCPoly f = gen.rich_poly(5);
    std::string text = render(f);
    CHECK(parse_poly(text) == f);
  }
}

TEST_CASE("json schema round-trips and is stable") {
  NCPoly f = parse_poly("(3/2)*i*hbar^2*m^-1*x - 2*p^2");
  nlohmann::json doc = poly_to_json(f);
  REQUIRE(doc.contains("terms"));
  for (const auto& term : doc["terms"]) {
    REQUIRE(term.contains("a"));
    REQUIRE(term.contains("b"));
    REQUIRE(term.contains("coeff"));
    for (const auto& part : term["coeff"]) {
      REQUIRE(part.contains("re"));
      REQUIRE(part.contains("im"));
      REQUIRE(part.contains("params"));
      CHECK(part["re"].is_string());
      CHECK(part["im"].is_string());
    }
  }
  CHECK(poly_from_json(doc) == f);

  RandomPolyGen gen(testsupport::seed + 1);
  for (int j = 0; j < 100; ++j) {
    NCPoly g = gen.rich_poly(4);
    CHECK(poly_from_json(poly_to_json(g)) == g);
  }
}

TEST_CASE("paren nodes preserve grouping spans") {
  ExprAst ast = parse("(x + p)");
  REQUIRE(ast.kind == AstKind::Paren);
  CHECK(ast.span.begin == 0);
  CHECK(ast.span.end == 7);
}

TEST_CASE("structural degree tracks intermediate growth") {
  CHECK(structural_degree(parse("x^2*p^3")) == 5);
  CHECK(structural_degree(parse("[x^2,[x,p]]")) == 4);
  CHECK(structural_degree(parse("i*hbar")) == 0);
  CHECK(structural_degree(parse("p^2/(2*m)")) == 2);
}
