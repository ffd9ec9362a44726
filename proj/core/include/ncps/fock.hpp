#pragma once

#include <Eigen/Dense>
#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "ncps/ncpoly.hpp"

namespace ncps {

inline constexpr unsigned kDefaultFockDim = 64;
inline constexpr unsigned kMaxFockDim = 256;
inline constexpr double kDefaultOracleTol = 1e-8;

/// Numeric values for every parameter appearing in expressions under test.
/// hbar, m and omega default to 1. Values must be finite and nonzero.
class ParamAssignment {
 public:
  ParamAssignment();

  void set(const std::string& name, double value);
  double get(const std::string& name) const;  // throws MissingParam
  bool has(const std::string& name) const;
  const std::map<std::string, double>& values() const { return values_; }

 private:
  std::map<std::string, double> values_;
};

struct CheckOutcome {
  bool pass = false;
  double max_deviation = 0.0;
  unsigned trusted_dim = 0;
};

/// Truncated matrix model of x and p on a D-dimensional Fock basis, built
/// from the ladder operator a|n> = sqrt(n)|n-1>. Hermitian by construction;
/// truncation error lives only in the bottom-right corner, so the top-left
/// (D-g) block is exact for operators of total degree up to g.
class FockRep {
 public:
  unsigned dim() const { return dim_; }
  const Eigen::MatrixXcd& x_matrix() const { return x_; }
  const Eigen::MatrixXcd& p_matrix() const { return p_; }
  const ParamAssignment& params() const { return params_; }

  /// X^a P^b, memoized; safe to call concurrently.
  Eigen::MatrixXcd monomial_matrix(unsigned a, unsigned b) const;

 private:
  friend FockRep build_fock_rep(unsigned dim, const ParamAssignment& params);
  FockRep() = default;

  unsigned dim_ = 0;
  Eigen::MatrixXcd x_;
  Eigen::MatrixXcd p_;
  ParamAssignment params_;
  struct Cache {
    std::mutex mutex;
    std::map<std::pair<unsigned, unsigned>, Eigen::MatrixXcd> products;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Throws BadDimension unless 2 <= dim <= 256, MissingParam if hbar, m or
/// omega are unassigned.
FockRep build_fock_rep(unsigned dim, const ParamAssignment& params = {});

std::complex<double> eval_coefficient(const Coefficient& coeff,
                                      const ParamAssignment& params);

/// Evaluation homomorphism: c * x^a p^b -> num(c) * X^a * P^b, summed.
Eigen::MatrixXcd to_matrix(const NCPoly& poly, const FockRep& rep);

/// Compares both sides on the trusted top-left block of size
/// D - max(deg lhs, deg rhs, degree_hint); pass iff the max-abs entry
/// difference is <= tol. Throws DegreeTooHigh when the block has dim < 2.
CheckOutcome check_identity(const NCPoly& lhs, const NCPoly& rhs,
                            const FockRep& rep, double tol,
                            unsigned degree_hint = 0);

}  // namespace ncps
