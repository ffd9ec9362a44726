#pragma once

#include <compare>
#include <map>
#include <span>

#include "ncps/coefficient.hpp"

namespace ncps {

/// Generator symbols of the algebra.
enum class Gen : unsigned char { X, P };

/// Exponent pair of a canonical monomial x^a p^b.
struct MonoKey {
  unsigned a = 0;
  unsigned b = 0;
  auto operator<=>(const MonoKey&) const = default;
  unsigned total_degree() const { return a + b; }
};

/// Non-commutative polynomial in normal order: every monomial is x^a p^b
/// with all x factors left of all p factors. The map from exponent pairs to
/// nonzero Coefficients is the unique canonical form, so equality of maps is
/// equality in the algebra. Immutable in practice: all operations return new
/// values.
class NCPoly {
 public:
  NCPoly() = default;

  static NCPoly zero() { return {}; }
  static NCPoly one() { return constant(Coefficient::one()); }
  static NCPoly x() { return monomial(1, 0); }
  static NCPoly p() { return monomial(0, 1); }
  static NCPoly constant(const Coefficient& c);
  static NCPoly monomial(unsigned a, unsigned b,
                         const Coefficient& c = Coefficient::one());

  const std::map<MonoKey, Coefficient>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True when the polynomial is a scalar (no x or p factors).
  bool is_scalar() const;
  /// Coefficient of the x^0 p^0 term (zero if absent).
  Coefficient scalar_part() const;
  unsigned total_degree() const;
  bool hbar_free() const;
  int min_hbar_exponent() const;

  void add_term(MonoKey key, const Coefficient& c);

  NCPoly operator-() const;
  NCPoly operator+(const NCPoly& other) const;
  NCPoly operator-(const NCPoly& other) const;
  /// The Weyl-algebra product, reduced to canonical form with the closed
  /// formula (x^a p^b)(x^c p^d) =
  ///   sum_k (-i hbar)^k k! C(b,k) C(c,k) x^{a+c-k} p^{b+d-k}.
  NCPoly operator*(const NCPoly& other) const;
  NCPoly operator*(const Coefficient& scale) const;
  NCPoly& operator+=(const NCPoly& other);

  bool operator==(const NCPoly& other) const = default;

 private:
  std::map<MonoKey, Coefficient> terms_;
};

/// Normal-orders a word of generators times a coefficient by repeatedly
/// rewriting adjacent p x into x p - i hbar. Independent of the closed
/// product formula used by operator*.
NCPoly normal_order(std::span<const Gen> word,
                    const Coefficient& c = Coefficient::one());

/// [A, B] = AB - BA.
NCPoly commutator(const NCPoly& a, const NCPoly& b);

/// Formal partial derivatives on the canonical form:
/// x^a p^b -> a x^{a-1} p^b and x^a p^b -> b x^a p^{b-1}.
NCPoly partial_x(const NCPoly& f);
NCPoly partial_p(const NCPoly& f);

/// Drops every term carrying hbar^k with k >= 1. Throws NegativeHbarPower
/// if any term carries hbar^{-k}.
NCPoly classical_limit(const NCPoly& f);

/// {F, G} = dF/dx dG/dp - dG/dx dF/dp with commutative products.
/// Throws NotClassical unless both inputs are hbar-free.
NCPoly poisson_bracket(const NCPoly& f, const NCPoly& g);

/// Exact division by a nonzero single-term scalar; parameter exponents may
/// go negative (Laurent), operator exponents never change.
NCPoly scalar_div(const NCPoly& f, const Coefficient& divisor);

NCPoly pow(const NCPoly& base, unsigned exponent);

}  // namespace ncps
