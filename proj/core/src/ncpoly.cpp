#include "ncps/ncpoly.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace ncps {

namespace {

// (-i hbar)^k as a Coefficient. NCPS_MUTATION_FLIP_IHBAR is a test-only
// fault injection that flips the sign to (+i hbar)^k.
Coefficient minus_i_hbar_pow(unsigned k) {
#ifdef NCPS_MUTATION_FLIP_IHBAR
  GaussianRational unit = GaussianRational::unit_i();
#else
  GaussianRational unit = -GaussianRational::unit_i();
#endif
  GaussianRational phase(1);
  for (unsigned j = 0; j < k; ++j) phase *= unit;
  if (k == 0) return Coefficient::complex(phase);
  return Coefficient::term(ParamMonomial::of(kHbarName, static_cast<int>(k)),
                           phase);
}

// k! C(b,k) C(c,k) with arbitrary-precision integers.
Rational reorder_weight(unsigned b, unsigned c, unsigned k) {
  mpz_class w;
  mpz_fac_ui(w.get_mpz_t(), k);
  mpz_class bin;
  mpz_bin_uiui(bin.get_mpz_t(), b, k);
  w *= bin;
  mpz_bin_uiui(bin.get_mpz_t(), c, k);
  w *= bin;
  return Rational(w);
}

}  // namespace

NCPoly NCPoly::constant(const Coefficient& c) { return monomial(0, 0, c); }

NCPoly NCPoly::monomial(unsigned a, unsigned b, const Coefficient& c) {
  NCPoly out;
  out.add_term({a, b}, c);
  return out;
}

bool NCPoly::is_scalar() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first == MonoKey{0, 0});
}

Coefficient NCPoly::scalar_part() const {
  auto it = terms_.find({0, 0});
  return it == terms_.end() ? Coefficient() : it->second;
}

unsigned NCPoly::total_degree() const {
  unsigned deg = 0;
  for (const auto& [key, c] : terms_) deg = std::max(deg, key.total_degree());
  return deg;
}

bool NCPoly::hbar_free() const {
  for (const auto& [key, c] : terms_)
    if (!c.hbar_free()) return false;
  return true;
}

int NCPoly::min_hbar_exponent() const {
  int lowest = 0;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    int e = c.min_hbar_exponent();
    if (first || e < lowest) lowest = e;
    first = false;
  }
  return lowest;
}

void NCPoly::add_term(MonoKey key, const Coefficient& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NCPoly NCPoly::operator-() const {
  NCPoly out;
  for (const auto& [key, c] : terms_) out.terms_.emplace(key, -c);
  return out;
}

NCPoly NCPoly::operator+(const NCPoly& other) const {
  NCPoly out = *this;
  out += other;
  return out;
}

NCPoly NCPoly::operator-(const NCPoly& other) const {
  NCPoly out = *this;
  for (const auto& [key, c] : other.terms_) out.add_term(key, -c);
  return out;
}

NCPoly NCPoly::operator*(const NCPoly& other) const {
  NCPoly out;
  for (const auto& [lhs, cl] : terms_) {
    for (const auto& [rhs, cr] : other.terms_) {
      Coefficient pair = cl * cr;
      unsigned kmax = std::min(lhs.b, rhs.a);
      for (unsigned k = 0; k <= kmax; ++k) {
        Coefficient c =
            pair * minus_i_hbar_pow(k) *
            Coefficient::rational(reorder_weight(lhs.b, rhs.a, k));
        out.add_term({lhs.a + rhs.a - k, lhs.b + rhs.b - k}, c);
      }
    }
  }
  return out;
}

NCPoly NCPoly::operator*(const Coefficient& scale) const {
  NCPoly out;
  for (const auto& [key, c] : terms_) out.add_term(key, c * scale);
  return out;
}

NCPoly& NCPoly::operator+=(const NCPoly& other) {
  for (const auto& [key, c] : other.terms_) add_term(key, c);
  return *this;
}

NCPoly normal_order(std::span<const Gen> word, const Coefficient& c) {
  NCPoly out;
  if (c.is_zero()) return out;
  std::vector<std::pair<Coefficient, std::vector<Gen>>> work;
  work.emplace_back(c, std::vector<Gen>(word.begin(), word.end()));
  while (!work.empty()) {
    auto [coeff, w] = std::move(work.back());
    work.pop_back();
    std::size_t misplaced = w.size();
    for (std::size_t j = 0; j + 1 < w.size(); ++j) {
      if (w[j] == Gen::P && w[j + 1] == Gen::X) {
        misplaced = j;
        break;
      }
    }
    if (misplaced == w.size()) {
      unsigned a = 0;
      for (Gen g : w) a += g == Gen::X ? 1u : 0u;
      out.add_term({a, static_cast<unsigned>(w.size()) - a}, coeff);
      continue;
    }
    // p x -> x p - i hbar, applied to the leftmost inversion.
    std::vector<Gen> swapped = w;
    std::swap(swapped[misplaced], swapped[misplaced + 1]);
    std::vector<Gen> contracted;
    contracted.reserve(w.size() - 2);
    contracted.insert(contracted.end(), w.begin(),
                      w.begin() + static_cast<std::ptrdiff_t>(misplaced));
    contracted.insert(contracted.end(),
                      w.begin() + static_cast<std::ptrdiff_t>(misplaced) + 2,
                      w.end());
    work.emplace_back(coeff * -Coefficient::i_hbar(), std::move(contracted));
    work.emplace_back(std::move(coeff), std::move(swapped));
  }
  return out;
}

NCPoly commutator(const NCPoly& a, const NCPoly& b) { return a * b - b * a; }

NCPoly partial_x(const NCPoly& f) {
  NCPoly out;
  for (const auto& [key, c] : f.terms()) {
    if (key.a == 0) continue;
    out.add_term({key.a - 1, key.b},
                 c * Coefficient::integer(static_cast<long>(key.a)));
  }
  return out;
}

NCPoly partial_p(const NCPoly& f) {
  NCPoly out;
  for (const auto& [key, c] : f.terms()) {
    if (key.b == 0) continue;
    out.add_term({key.a, key.b - 1},
                 c * Coefficient::integer(static_cast<long>(key.b)));
  }
  return out;
}

NCPoly classical_limit(const NCPoly& f) {
  NCPoly out;
  for (const auto& [key, c] : f.terms()) {
    for (const auto& [mono, z] : c.terms()) {
      int h = mono.exponent(kHbarName);
      if (h < 0)
        throw NegativeHbarPower(
            "classical limit undefined: term carries hbar^" +
            std::to_string(h));
      if (h == 0) out.add_term(key, Coefficient::term(mono, z));
    }
  }
  return out;
}

namespace {

// Plain commutative product (exponent addition); only ever applied to
// classical polynomials, where reordering corrections vanish.
NCPoly mul_commutative(const NCPoly& a, const NCPoly& b) {
  NCPoly out;
  for (const auto& [lhs, cl] : a.terms())
    for (const auto& [rhs, cr] : b.terms())
      out.add_term({lhs.a + rhs.a, lhs.b + rhs.b}, cl * cr);
  return out;
}

}  // namespace

NCPoly poisson_bracket(const NCPoly& f, const NCPoly& g) {
  if (!f.hbar_free() || !g.hbar_free())
    throw NotClassical(
        "poisson bracket requires classical (hbar-free) inputs; apply the "
        "classical limit first");
  return mul_commutative(partial_x(f), partial_p(g)) -
         mul_commutative(partial_x(g), partial_p(f));
}

NCPoly scalar_div(const NCPoly& f, const Coefficient& divisor) {
  if (divisor.is_zero()) throw DivisionByZero("division by zero");
  if (!divisor.single_term())
    throw NotMonomialDivisor(
        "divisor must be a single-term scalar, got a sum of " +
        std::to_string(divisor.terms().size()) + " terms");
  NCPoly out;
  for (const auto& [key, c] : f.terms()) out.add_term(key, c / divisor);
  return out;
}

NCPoly pow(const NCPoly& base, unsigned exponent) {
  NCPoly out = NCPoly::one();
  for (unsigned j = 0; j < exponent; ++j) out = out * base;
  return out;
}

}  // namespace ncps
