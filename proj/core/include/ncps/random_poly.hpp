#pragma once

#include <cstdint>
#include <random>

#include "ncps/ncpoly.hpp"

namespace ncps {

/// Seeded generator of random polynomials for property suites and the
/// verifier. Draws integers directly from mt19937_64 output (no std
/// distributions) so a given seed reproduces the same polynomials on any
/// platform.
class RandomPolyGen {
 public:
  explicit RandomPolyGen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t next_u64() { return rng_(); }
  int int_in(int lo, int hi);
  bool chance(unsigned one_in);

  /// hbar-free polynomial: each monomial of total degree <= max_degree is
  /// kept with probability 1/3, with a nonzero integer coefficient in
  /// [-coeff_bound, coeff_bound].
  NCPoly poly(unsigned max_degree, int coeff_bound = 16);

  /// Same, restricted to powers of x (a potential V(x)).
  NCPoly poly_in_x(unsigned max_degree, int coeff_bound = 16);

  /// Polynomial exercising the full coefficient ring: rational and imaginary
  /// parts, Laurent parameter monomials. For serialization round-trips.
  NCPoly rich_poly(unsigned max_degree);

 private:
  Coefficient rich_coefficient();
  std::mt19937_64 rng_;
};

}  // namespace ncps
