#pragma once

#include <gmpxx.h>

#include <string>

#include "ncps/errors.hpp"

namespace ncps {

/// Arbitrary-precision rational, kept canonical (lowest terms, positive
/// denominator) by GMP.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
Rational rational_from_string(const std::string& text);
std::string to_string(const Rational& value);

/// Complex number with rational real and imaginary parts.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(Rational real) : re(std::move(real)), im(0) {}
  GaussianRational(Rational real, Rational imag)
      : re(std::move(real)), im(std::move(imag)) {}
  GaussianRational(long real) : re(real), im(0) {}

  static GaussianRational unit_i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_one() const { return re == 1 && im == 0; }

  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational operator+(const GaussianRational& o) const {
    return {re + o.re, im + o.im};
  }
  GaussianRational operator-(const GaussianRational& o) const {
    return {re - o.re, im - o.im};
  }
  GaussianRational operator*(const GaussianRational& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussianRational operator/(const GaussianRational& o) const {
    if (o.is_zero()) throw DivisionByZero("division by zero coefficient");
    Rational norm = o.re * o.re + o.im * o.im;
    return {(re * o.re + im * o.im) / norm, (im * o.re - re * o.im) / norm};
  }

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    *this = *this * o;
    return *this;
  }

  bool operator==(const GaussianRational& o) const {
    return re == o.re && im == o.im;
  }
};

}  // namespace ncps
