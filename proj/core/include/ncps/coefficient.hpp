#pragma once

#include <map>
#include <string>

#include "ncps/rational.hpp"

namespace ncps {

inline constexpr const char* kHbarName = "hbar";

/// Laurent monomial in commuting parameters: name -> nonzero exponent.
/// The empty map is the unit monomial. "hbar" is the reserved name for
/// Planck's constant; "x", "p", "i" and "t" are never valid parameter names.
class ParamMonomial {
 public:
  ParamMonomial() = default;

  static ParamMonomial of(const std::string& name, int exponent = 1);
  static bool valid_name(const std::string& name);

  const std::map<std::string, int>& exponents() const { return exponents_; }
  int exponent(const std::string& name) const;
  bool is_unit() const { return exponents_.empty(); }

  ParamMonomial operator*(const ParamMonomial& other) const;
  ParamMonomial inverse() const;
  ParamMonomial pow(int k) const;

  bool operator==(const ParamMonomial& other) const = default;
  bool operator<(const ParamMonomial& other) const {
    return exponents_ < other.exponents_;
  }

 private:
  std::map<std::string, int> exponents_;
};

/// Exact scalar: finite sum of GaussianRational * ParamMonomial terms.
/// Zero terms are never stored; the empty sum is the unique zero.
class Coefficient {
 public:
  Coefficient() = default;

  static Coefficient integer(long n);
  static Coefficient rational(const Rational& q);
  static Coefficient complex(const GaussianRational& z);
  static Coefficient imag_unit();
  static Coefficient hbar(int exponent = 1);
  static Coefficient i_hbar();
  static Coefficient param(const std::string& name, int exponent = 1);
  static Coefficient term(const ParamMonomial& m, const GaussianRational& z);
  static Coefficient one() { return integer(1); }

  const std::map<ParamMonomial, GaussianRational>& terms() const {
    return terms_;
  }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool single_term() const { return terms_.size() == 1; }

  /// True when every term has hbar exponent 0.
  bool hbar_free() const;
  int min_hbar_exponent() const;

  void add_term(const ParamMonomial& m, const GaussianRational& z);

  Coefficient operator-() const;
  Coefficient operator+(const Coefficient& other) const;
  Coefficient operator-(const Coefficient& other) const;
  Coefficient operator*(const Coefficient& other) const;
  /// Exact division; the divisor must be a nonzero single-term scalar.
  /// Throws NotMonomialDivisor or DivisionByZero otherwise.
  Coefficient operator/(const Coefficient& divisor) const;
  Coefficient& operator+=(const Coefficient& other);

  Coefficient pow(unsigned k) const;

  bool operator==(const Coefficient& other) const = default;

 private:
  std::map<ParamMonomial, GaussianRational> terms_;
};

}  // namespace ncps
