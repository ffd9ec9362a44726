#include "ncps/fock.hpp"

#include <cmath>

namespace ncps {

namespace {
constexpr std::complex<double> kImag{0.0, 1.0};
}

ParamAssignment::ParamAssignment() {
  values_ = {{"hbar", 1.0}, {"m", 1.0}, {"omega", 1.0}};
}

void ParamAssignment::set(const std::string& name, double value) {
  if (!std::isfinite(value) || value == 0.0)
    throw Error("parameter " + name + " must be finite and nonzero");
  values_[name] = value;
}

double ParamAssignment::get(const std::string& name) const {
  auto it = values_.find(name);
  if (it == values_.end()) throw MissingParam("parameter not assigned: " + name);
  return it->second;
}

bool ParamAssignment::has(const std::string& name) const {
  return values_.contains(name);
}

Eigen::MatrixXcd FockRep::monomial_matrix(unsigned a, unsigned b) const {
  std::scoped_lock lock(cache_->mutex);
  auto it = cache_->products.find({a, b});
  if (it != cache_->products.end()) return it->second;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(dim_, dim_);
  for (unsigned j = 0; j < a; ++j) m = m * x_;
  for (unsigned j = 0; j < b; ++j) m = m * p_;
  cache_->products.emplace(std::make_pair(a, b), m);
  return m;
}

FockRep build_fock_rep(unsigned dim, const ParamAssignment& params) {
  if (dim < 2 || dim > kMaxFockDim)
    throw BadDimension("fock dimension must be in [2, " +
                       std::to_string(kMaxFockDim) + "], got " +
                       std::to_string(dim));
  const double hbar = params.get("hbar");
  const double m = params.get("m");
  const double omega = params.get("omega");

  Eigen::MatrixXcd lowering = Eigen::MatrixXcd::Zero(dim, dim);
  for (unsigned n = 1; n < dim; ++n)
    lowering(n - 1, n) = std::sqrt(static_cast<double>(n));
  Eigen::MatrixXcd raising = lowering.adjoint();

  FockRep rep;
  rep.dim_ = dim;
  rep.params_ = params;
  rep.x_ = std::sqrt(hbar / (2.0 * m * omega)) * (lowering + raising);
  rep.p_ = kImag * std::sqrt(m * omega * hbar / 2.0) * (raising - lowering);
  return rep;
}

std::complex<double> eval_coefficient(const Coefficient& coeff,
                                      const ParamAssignment& params) {
  std::complex<double> total = 0.0;
  for (const auto& [mono, z] : coeff.terms()) {
    double scale = 1.0;
    for (const auto& [name, exp] : mono.exponents())
      scale *= std::pow(params.get(name), exp);
    total += std::complex<double>(z.re.get_d(), z.im.get_d()) * scale;
  }
  return total;
}

Eigen::MatrixXcd to_matrix(const NCPoly& poly, const FockRep& rep) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(rep.dim(), rep.dim());
  for (const auto& [key, coeff] : poly.terms()) {
    std::complex<double> value = eval_coefficient(coeff, rep.params());
    out += value * rep.monomial_matrix(key.a, key.b);
  }
  return out;
}

CheckOutcome check_identity(const NCPoly& lhs, const NCPoly& rhs,
                            const FockRep& rep, double tol,
                            unsigned degree_hint) {
  unsigned g = std::max({lhs.total_degree(), rhs.total_degree(), degree_hint});
  if (rep.dim() < g + 2)
    throw DegreeTooHigh("trusted block for degree " + std::to_string(g) +
                        " is empty at dimension " + std::to_string(rep.dim()));
  unsigned trusted = rep.dim() - g;
  Eigen::MatrixXcd diff = to_matrix(lhs, rep) - to_matrix(rhs, rep);
  double deviation =
      diff.topLeftCorner(trusted, trusted).cwiseAbs().maxCoeff();
  return {deviation <= tol, deviation, trusted};
}

}  // namespace ncps
