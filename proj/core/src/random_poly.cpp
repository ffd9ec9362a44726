#include "ncps/random_poly.hpp"

namespace ncps {

namespace {
const char* const kRichParams[] = {"hbar", "m", "omega", "alpha"};
}

int RandomPolyGen::int_in(int lo, int hi) {
  auto width = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(next_u64() % width);
}

bool RandomPolyGen::chance(unsigned one_in) { return next_u64() % one_in == 0; }

NCPoly RandomPolyGen::poly(unsigned max_degree, int coeff_bound) {
  NCPoly out;
  for (unsigned a = 0; a <= max_degree; ++a) {
    for (unsigned b = 0; a + b <= max_degree; ++b) {
      if (!chance(3)) continue;
      int c = int_in(-coeff_bound, coeff_bound - 1);
      if (c >= 0) ++c;  // skip zero, keep the range symmetric
      out.add_term({a, b}, Coefficient::integer(c));
    }
  }
  return out;
}

NCPoly RandomPolyGen::poly_in_x(unsigned max_degree, int coeff_bound) {
  NCPoly out;
  for (unsigned a = 0; a <= max_degree; ++a) {
    if (!chance(2)) continue;
    int c = int_in(-coeff_bound, coeff_bound - 1);
    if (c >= 0) ++c;
    out.add_term({a, 0}, Coefficient::integer(c));
  }
  return out;
}

Coefficient RandomPolyGen::rich_coefficient() {
  ParamMonomial mono;
  for (const char* name : kRichParams) {
    if (!chance(3)) continue;
    int exp = int_in(-3, 3);
    if (exp == 0) exp = 1;
    mono = mono * ParamMonomial::of(name, exp);
  }
  Rational re(int_in(-9, 9), 1 + static_cast<unsigned>(int_in(0, 3)));
  re.canonicalize();
  Rational im(0);
  if (chance(2)) {
    im = Rational(int_in(-9, 9), 1 + static_cast<unsigned>(int_in(0, 3)));
    im.canonicalize();
  }
  return Coefficient::term(mono, GaussianRational(re, im));
}

NCPoly RandomPolyGen::rich_poly(unsigned max_degree) {
  NCPoly out;
  for (unsigned a = 0; a <= max_degree; ++a) {
    for (unsigned b = 0; a + b <= max_degree; ++b) {
      if (!chance(2)) continue;
      Coefficient c = rich_coefficient();
      if (chance(3)) c += rich_coefficient();
      out.add_term({a, b}, c);
    }
  }
  return out;
}

}  // namespace ncps
