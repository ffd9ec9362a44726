#include "ncps/evolution.hpp"

namespace ncps {

EvolutionSeries heisenberg_series(const NCPoly& observable,
                                  const NCPoly& hamiltonian, unsigned order) {
  if (order > kMaxSeriesOrder)
    throw Error("series order " + std::to_string(order) + " exceeds cap " +
                std::to_string(kMaxSeriesOrder));
  EvolutionSeries series;
  series.observable = observable;
  series.hamiltonian = hamiltonian;
  series.order = order;
  series.terms.reserve(order + 1);
  series.terms.push_back(observable);
  const Coefficient i_hbar = Coefficient::i_hbar();
  for (unsigned k = 0; k < order; ++k) {
    const NCPoly& prev = series.terms.back();
    if (prev.is_zero()) {
      series.terms.push_back(NCPoly::zero());
      continue;
    }
    NCPoly next = scalar_div(commutator(prev, hamiltonian), i_hbar);
    if (next.min_hbar_exponent() < 0)
      throw NegativeHbarPower(
          "evolution term " + std::to_string(k + 1) +
          " carries a negative hbar power; hamiltonian is not hbar-free");
    series.terms.push_back(std::move(next));
  }
  return series;
}

NCPoly leibniz_derivative(const NCPoly& observable,
                          const NCPoly& hamiltonian) {
  const NCPoly dx = partial_p(hamiltonian);        // D(x), classical xdot
  const NCPoly dp = -partial_x(hamiltonian);       // D(p), classical pdot
  NCPoly out;
  for (const auto& [key, coeff] : observable.terms()) {
    // Product rule over x^a p^b: sum_j x^j D(x) x^{a-1-j} p^b
    //                          + sum_j x^a p^j D(p) p^{b-1-j}.
    NCPoly derived;
    for (unsigned j = 0; j < key.a; ++j) {
      NCPoly piece = NCPoly::monomial(j, 0) * dx *
                     NCPoly::monomial(key.a - 1 - j, key.b);
      derived += piece;
    }
    for (unsigned j = 0; j < key.b; ++j) {
      NCPoly piece = NCPoly::monomial(key.a, j) * dp *
                     NCPoly::monomial(0, key.b - 1 - j);
      derived += piece;
    }
    out += derived * coeff;
  }
  return out;
}

}  // namespace ncps
