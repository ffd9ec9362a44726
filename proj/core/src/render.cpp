#include "ncps/render.hpp"

#include <algorithm>
#include <vector>

namespace ncps {

namespace {

struct Atom {
  MonoKey key;
  const ParamMonomial* mono;
  bool imag;       // carries a factor i
  Rational value;  // signed real or imaginary part
};

// (deg, a, b) descending, then monomial order, real part before imaginary.
bool atom_before(const Atom& l, const Atom& r) {
  unsigned dl = l.key.total_degree();
  unsigned dr = r.key.total_degree();
  if (dl != dr) return dl > dr;
  if (l.key.a != r.key.a) return l.key.a > r.key.a;
  if (l.key.b != r.key.b) return l.key.b > r.key.b;
  if (!(*l.mono == *r.mono)) return *l.mono < *r.mono;
  return !l.imag && r.imag;
}

std::vector<Atom> flatten(const NCPoly& poly) {
  std::vector<Atom> atoms;
  for (const auto& [key, coeff] : poly.terms()) {
    for (const auto& [mono, z] : coeff.terms()) {
      if (z.re != 0) atoms.push_back({key, &mono, false, z.re});
      if (z.im != 0) atoms.push_back({key, &mono, true, z.im});
    }
  }
  std::sort(atoms.begin(), atoms.end(), atom_before);
  return atoms;
}

std::string atom_text(const Atom& atom) {
  std::vector<std::string> factors;
  if (atom.imag) factors.push_back("i");
  for (const auto& [name, exp] : atom.mono->exponents()) {
    factors.push_back(exp == 1 ? name : name + "^" + std::to_string(exp));
  }
  if (atom.key.a > 0)
    factors.push_back(atom.key.a == 1 ? "x"
                                      : "x^" + std::to_string(atom.key.a));
  if (atom.key.b > 0)
    factors.push_back(atom.key.b == 1 ? "p"
                                      : "p^" + std::to_string(atom.key.b));

  Rational mag = abs(atom.value);
  std::string out;
  if (factors.empty()) {
    out = mag.get_str();
  } else {
    if (mag != 1) {
      out = mag.get_den() == 1 ? mag.get_str() : "(" + mag.get_str() + ")";
      out += "*";
    }
    for (std::size_t j = 0; j < factors.size(); ++j) {
      if (j > 0) out += "*";
      out += factors[j];
    }
  }
  return out;
}

std::string render_text(const NCPoly& poly) {
  std::vector<Atom> atoms = flatten(poly);
  if (atoms.empty()) return "0";
  std::string out;
  for (std::size_t j = 0; j < atoms.size(); ++j) {
    bool negative = atoms[j].value < 0;
    if (j == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += atom_text(atoms[j]);
  }
  return out;
}

}  // namespace

std::string render(const NCPoly& poly, RenderFormat format) {
  if (format == RenderFormat::Json) return poly_to_json(poly).dump();
  return render_text(poly);
}

nlohmann::json poly_to_json(const NCPoly& poly) {
  // Same (deg, a, b)-descending order as the text form.
  std::vector<std::pair<MonoKey, const Coefficient*>> entries;
  for (const auto& [key, coeff] : poly.terms()) entries.push_back({key, &coeff});
  std::sort(entries.begin(), entries.end(), [](const auto& l, const auto& r) {
    unsigned dl = l.first.total_degree();
    unsigned dr = r.first.total_degree();
    if (dl != dr) return dl > dr;
    if (l.first.a != r.first.a) return l.first.a > r.first.a;
    return l.first.b > r.first.b;
  });

  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [key, coeff] : entries) {
    nlohmann::json parts = nlohmann::json::array();
    for (const auto& [mono, z] : coeff->terms()) {
      nlohmann::json params = nlohmann::json::object();
      for (const auto& [name, exp] : mono.exponents()) params[name] = exp;
      parts.push_back({{"re", z.re.get_str()},
                       {"im", z.im.get_str()},
                       {"params", params}});
    }
    terms.push_back({{"a", key.a}, {"b", key.b}, {"coeff", parts}});
  }
  return {{"terms", terms}};
}

NCPoly poly_from_json(const nlohmann::json& doc) {
  NCPoly out;
  for (const auto& term : doc.at("terms")) {
    unsigned a = term.at("a").get<unsigned>();
    unsigned b = term.at("b").get<unsigned>();
    Coefficient c;
    for (const auto& part : term.at("coeff")) {
      ParamMonomial mono;
      for (const auto& [name, exp] : part.at("params").items())
        mono = mono * ParamMonomial::of(name, exp.get<int>());
      c.add_term(mono,
                 GaussianRational(
                     rational_from_string(part.at("re").get<std::string>()),
                     rational_from_string(part.at("im").get<std::string>())));
    }
    out.add_term({a, b}, c);
  }
  return out;
}

}  // namespace ncps
