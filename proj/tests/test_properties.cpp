// Property suites for the algebra: canonical-form uniqueness, the closed
// product formula against naive rewriting, commutator identities, and the
// classical correspondence. All randomness flows from --seed.

#include <vector>

#include "ncps/ncpoly.hpp"
#include "ncps/random_poly.hpp"
#include "support/seeded_main.hpp"

using namespace ncps;

namespace {

const NCPoly X = NCPoly::x();
const NCPoly P = NCPoly::p();
const Coefficient IH = Coefficient::i_hbar();

std::vector<Gen> word_from_mask(unsigned length, unsigned mask) {
  std::vector<Gen> word(length);
  for (unsigned j = 0; j < length; ++j)
    word[j] = (mask >> j) & 1u ? Gen::P : Gen::X;
  return word;
}

NCPoly fold_mul(const std::vector<Gen>& word) {
  NCPoly out = NCPoly::one();
  for (Gen g : word) out = out * (g == Gen::X ? X : P);
  return out;
}

}  // namespace

TEST_CASE("product formula agrees with naive rewriting on all words <= 8") {
  for (unsigned length = 1; length <= 8; ++length) {
    for (unsigned mask = 0; mask < (1u << length); ++mask) {
      std::vector<Gen> word = word_from_mask(length, mask);
      CHECK(fold_mul(word) == normal_order(word));
    }
  }
}

TEST_CASE("normal ordering is idempotent on canonical monomials") {
  for (unsigned length = 1; length <= 8; ++length) {
    for (unsigned mask = 0; mask < (1u << length); ++mask) {
      NCPoly reduced = normal_order(word_from_mask(length, mask));
      for (const auto& [key, coeff] : reduced.terms()) {
        std::vector<Gen> canonical(key.a, Gen::X);
        canonical.insert(canonical.end(), key.b, Gen::P);
        CHECK(normal_order(canonical, coeff) == NCPoly::monomial(key.a, key.b, coeff));
      }
    }
  }
}

TEST_CASE("multiplication is associative") {
  RandomPolyGen gen(testsupport::seed);
  for (int j = 0; j < 60; ++j) {
    NCPoly a = gen.poly(4);
    NCPoly b = gen.poly(4);
    NCPoly c = gen.poly(4);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("commutator algebra: antisymmetry, bilinearity, Leibniz, Jacobi") {
  RandomPolyGen gen(testsupport::seed + 1);
  for (int j = 0; j < 50; ++j) {
    NCPoly a = gen.poly(5);
    NCPoly b = gen.poly(5);
    NCPoly c = gen.poly(5);

    CHECK(commutator(a, b) == -commutator(b, a));
    CHECK(commutator(a, b + c) == commutator(a, b) + commutator(a, c));
    CHECK(commutator(a, b * c) ==
          commutator(a, b) * c + b * commutator(a, c));
    CHECK((commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) +
           commutator(c, commutator(a, b)))
              .is_zero());
  }
}

TEST_CASE("hbar grading: commutators of hbar-free inputs are O(hbar)") {
  RandomPolyGen gen(testsupport::seed + 2);
  for (int j = 0; j < 60; ++j) {
    NCPoly a = gen.poly(5);
    NCPoly b = gen.poly(5);
    REQUIRE(a.hbar_free());
    REQUIRE(b.hbar_free());
    NCPoly comm = commutator(a, b);
    for (const auto& [key, coeff] : comm.terms())
      for (const auto& [mono, z] : coeff.terms())
        CHECK(mono.exponent(kHbarName) >= 1);
  }
}

TEST_CASE("derivative-commutator duality") {
  RandomPolyGen gen(testsupport::seed + 3);
  for (int j = 0; j < 60; ++j) {
    NCPoly f = gen.poly(6);
    CHECK(commutator(X, f) == partial_p(f) * IH);
    CHECK(commutator(P, f) == -(partial_x(f) * IH));
  }
}

TEST_CASE("poisson correspondence via the classical limit") {
  RandomPolyGen gen(testsupport::seed + 4);
  for (int j = 0; j < 60; ++j) {
    NCPoly f = gen.poly(5);
    NCPoly g = gen.poly(5);
    CHECK(classical_limit(scalar_div(commutator(f, g), IH)) ==
          poisson_bracket(classical_limit(f), classical_limit(g)));
  }
}

TEST_CASE("mixed partials commute") {
  RandomPolyGen gen(testsupport::seed + 5);
  for (int j = 0; j < 40; ++j) {
    NCPoly f = gen.rich_poly(5);
    CHECK(partial_x(partial_p(f)) == partial_p(partial_x(f)));
  }
}

TEST_CASE("commutator degree bound deg[A,B] <= degA + degB - 2") {
  RandomPolyGen gen(testsupport::seed + 6);
  for (int j = 0; j < 60; ++j) {
    NCPoly a = gen.poly(5);
    NCPoly b = gen.poly(5);
    NCPoly comm = commutator(a, b);
    if (comm.is_zero() || a.is_zero() || b.is_zero()) continue;
    CHECK(comm.total_degree() + 2 <= a.total_degree() + b.total_degree());
  }
}
