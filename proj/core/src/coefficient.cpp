#include "ncps/coefficient.hpp"

#include <cctype>

namespace ncps {

bool ParamMonomial::valid_name(const std::string& name) {
  if (name.empty()) return false;
  if (name == "x" || name == "p" || name == "i" || name == "t") return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_')
    return false;
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  // Any case variant of "hbar" other than the exact spelling is reserved.
  if (name != kHbarName) {
    std::string lowered = name;
    for (char& c : lowered) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (lowered == kHbarName) return false;
  }
  return true;
}

ParamMonomial ParamMonomial::of(const std::string& name, int exponent) {
  if (!valid_name(name)) throw Error("invalid parameter name: " + name);
  ParamMonomial m;
  if (exponent != 0) m.exponents_[name] = exponent;
  return m;
}

int ParamMonomial::exponent(const std::string& name) const {
  auto it = exponents_.find(name);
  return it == exponents_.end() ? 0 : it->second;
}

ParamMonomial ParamMonomial::operator*(const ParamMonomial& other) const {
  ParamMonomial out = *this;
  for (const auto& [name, exp] : other.exponents_) {
    int merged = out.exponent(name) + exp;
    if (merged == 0)
      out.exponents_.erase(name);
    else
      out.exponents_[name] = merged;
  }
  return out;
}

ParamMonomial ParamMonomial::inverse() const {
  ParamMonomial out;
  for (const auto& [name, exp] : exponents_) out.exponents_[name] = -exp;
  return out;
}

ParamMonomial ParamMonomial::pow(int k) const {
  ParamMonomial out;
  if (k == 0) return out;
  for (const auto& [name, exp] : exponents_) out.exponents_[name] = exp * k;
  return out;
}

Coefficient Coefficient::integer(long n) {
  return term(ParamMonomial(), GaussianRational(n));
}

Coefficient Coefficient::rational(const Rational& q) {
  return term(ParamMonomial(), GaussianRational(q));
}

Coefficient Coefficient::complex(const GaussianRational& z) {
  return term(ParamMonomial(), z);
}

Coefficient Coefficient::imag_unit() {
  return term(ParamMonomial(), GaussianRational::unit_i());
}

Coefficient Coefficient::hbar(int exponent) {
  return term(ParamMonomial::of(kHbarName, exponent), GaussianRational(1));
}

Coefficient Coefficient::i_hbar() {
  return term(ParamMonomial::of(kHbarName), GaussianRational::unit_i());
}

Coefficient Coefficient::param(const std::string& name, int exponent) {
  return term(ParamMonomial::of(name, exponent), GaussianRational(1));
}

Coefficient Coefficient::term(const ParamMonomial& m,
                              const GaussianRational& z) {
  Coefficient c;
  c.add_term(m, z);
  return c;
}

bool Coefficient::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.is_unit() &&
         terms_.begin()->second.is_one();
}

bool Coefficient::hbar_free() const {
  for (const auto& [mono, z] : terms_)
    if (mono.exponent(kHbarName) != 0) return false;
  return true;
}

int Coefficient::min_hbar_exponent() const {
  int lowest = 0;
  bool first = true;
  for (const auto& [mono, z] : terms_) {
    int e = mono.exponent(kHbarName);
    if (first || e < lowest) lowest = e;
    first = false;
  }
  return lowest;
}

void Coefficient::add_term(const ParamMonomial& m, const GaussianRational& z) {
  if (z.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, z);
  if (!inserted) {
    it->second += z;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Coefficient Coefficient::operator-() const {
  Coefficient out;
  for (const auto& [mono, z] : terms_) out.terms_.emplace(mono, -z);
  return out;
}

Coefficient Coefficient::operator+(const Coefficient& other) const {
  Coefficient out = *this;
  for (const auto& [mono, z] : other.terms_) out.add_term(mono, z);
  return out;
}

Coefficient Coefficient::operator-(const Coefficient& other) const {
  Coefficient out = *this;
  for (const auto& [mono, z] : other.terms_) out.add_term(mono, -z);
  return out;
}

Coefficient Coefficient::operator*(const Coefficient& other) const {
  Coefficient out;
  for (const auto& [ma, za] : terms_)
    for (const auto& [mb, zb] : other.terms_) out.add_term(ma * mb, za * zb);
  return out;
}

Coefficient Coefficient::operator/(const Coefficient& divisor) const {
  if (divisor.is_zero()) throw DivisionByZero("division by zero");
  if (!divisor.single_term())
    throw NotMonomialDivisor(
        "divisor must be a single-term scalar, got a sum of " +
        std::to_string(divisor.terms_.size()) + " terms");
  const auto& [dm, dz] = *divisor.terms_.begin();
  ParamMonomial inv = dm.inverse();
  Coefficient out;
  for (const auto& [mono, z] : terms_) out.add_term(mono * inv, z / dz);
  return out;
}

Coefficient& Coefficient::operator+=(const Coefficient& other) {
  for (const auto& [mono, z] : other.terms_) add_term(mono, z);
  return *this;
}

Coefficient Coefficient::pow(unsigned k) const {
  Coefficient out = one();
  for (unsigned j = 0; j < k; ++j) out = out * *this;
  return out;
}

}  // namespace ncps
