#pragma once

#include <vector>

#include "ncps/ncpoly.hpp"

namespace ncps {

/// Exact coefficients grow factorially with the order; the cap keeps
/// desk-scale runs in seconds.
inline constexpr unsigned kDefaultSeriesOrder = 8;
inline constexpr unsigned kMaxSeriesOrder = 64;

/// Taylor data of a Heisenberg-evolved observable:
/// F(t) = sum_k t^k / k! * terms[k], terms[0] = observable and
/// terms[k+1] = [terms[k], hamiltonian] / (i hbar).
struct EvolutionSeries {
  NCPoly observable;
  NCPoly hamiltonian;
  unsigned order = 0;
  std::vector<NCPoly> terms;  // size order + 1
};

/// Iterates F -> [F, H]/(i hbar) exactly. Once a term vanishes all later
/// terms are zero and are filled in without further products. Requires
/// order <= kMaxSeriesOrder; a division leaving a negative hbar power
/// (impossible for hbar-free H) raises NegativeHbarPower.
EvolutionSeries heisenberg_series(const NCPoly& observable,
                                  const NCPoly& hamiltonian, unsigned order);

/// The unique derivation D with D(x) = dH/dp, D(p) = -dH/dx, D(scalar) = 0,
/// extended by linearity and the non-commutative product rule. Computed per
/// canonical monomial by expanding the product rule across each factor and
/// re-normal-ordering; it never forms a commutator, which makes it an
/// independent route to the evolution law.
NCPoly leibniz_derivative(const NCPoly& observable, const NCPoly& hamiltonian);

}  // namespace ncps
