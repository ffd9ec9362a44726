#include "ncps/verifier.hpp"

#include <cstdio>
#include <functional>

#include "ncps/fock.hpp"
#include "ncps/evolution.hpp"
#include "ncps/random_poly.hpp"
#include "ncps/render.hpp"

namespace ncps {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::string format_deviation(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", value);
  return buf;
}

// Runs one check: accumulates symbolic comparisons plus the numeric
// double-entry over the same pairs when the oracle is on.
class CheckContext {
 public:
  CheckContext(std::string id, std::uint64_t sub_seed, const FockRep* rep)
      : rep_(rep), gen_(sub_seed) {
    check_.id = std::move(id);
    check_.pass = true;
    check_.seed = sub_seed;
  }

  RandomPolyGen& gen() { return gen_; }

  void expect_equal(const NCPoly& lhs, const NCPoly& rhs,
                    const std::string& context) {
    if (check_.pass && !(lhs == rhs)) {
      check_.pass = false;
      check_.detail = context + ": lhs = " + render(lhs) +
                      "; rhs = " + render(rhs) +
                      "; difference = " + render(lhs - rhs);
    }
    if (rep_ != nullptr) run_oracle(lhs, rhs);
  }

  void expect_zero(const NCPoly& value, const std::string& context) {
    expect_equal(value, NCPoly::zero(), context);
  }

  Check finish() {
    if (rep_ != nullptr) check_.oracle = oracle_;
    return std::move(check_);
  }

 private:
  void run_oracle(const NCPoly& lhs, const NCPoly& rhs) {
    CheckOutcome outcome = check_identity(lhs, rhs, *rep_, kDefaultOracleTol);
    oracle_.pass = oracle_.pass && outcome.pass;
    oracle_.max_deviation = std::max(oracle_.max_deviation, outcome.max_deviation);
    oracle_.trusted_dim = oracle_.trusted_dim == 0
                              ? outcome.trusted_dim
                              : std::min(oracle_.trusted_dim, outcome.trusted_dim);
    if (!outcome.pass && check_.pass) {
      check_.pass = false;
      check_.detail = "numeric oracle deviation " +
                      format_deviation(outcome.max_deviation) + " for lhs = " +
                      render(lhs) + "; rhs = " + render(rhs);
    }
  }

  Check check_;
  OracleOutcome oracle_;
  const FockRep* rep_;
  RandomPolyGen gen_;
};

NCPoly kinetic_term() {
  return scalar_div(NCPoly::monomial(0, 2),
                    Coefficient::param("m") * Coefficient::integer(2));
}

void check_eq2(CheckContext& ctx) {
  const Gen px[] = {Gen::P, Gen::X};
  const Gen xp[] = {Gen::X, Gen::P};
  const Gen xx[] = {Gen::X, Gen::X};
  const Gen pp[] = {Gen::P, Gen::P};
  // Rewriting route: normal_order(px) + i hbar = normal_order(xp).
  ctx.expect_equal(normal_order(px) + NCPoly::constant(Coefficient::i_hbar()),
                   normal_order(xp), "px rewrite");
  // Product route: [x, p] = i hbar, [x, x] = [p, p] = 0.
  ctx.expect_equal(commutator(NCPoly::x(), NCPoly::p()),
                   NCPoly::constant(Coefficient::i_hbar()), "[x,p]");
  ctx.expect_zero(commutator(NCPoly::x(), NCPoly::x()), "[x,x]");
  ctx.expect_zero(commutator(NCPoly::p(), NCPoly::p()), "[p,p]");
  ctx.expect_equal(normal_order(xx), NCPoly::monomial(2, 0), "xx word");
  ctx.expect_equal(normal_order(pp), NCPoly::monomial(0, 2), "pp word");
}

void check_eq4(CheckContext& ctx, unsigned cases) {
  NCPoly kinetic = kinetic_term();
  NCPoly expected = NCPoly::monomial(
      0, 1, Coefficient::i_hbar() * Coefficient::param("m", -1));
  ctx.expect_equal(commutator(NCPoly::x(), kinetic), expected,
                   "[x, p^2/(2m)]");
  for (unsigned j = 0; j < cases; ++j) {
    NCPoly h = kinetic + ctx.gen().poly_in_x(6);
    ctx.expect_equal(commutator(NCPoly::x(), h),
                     partial_p(h) * Coefficient::i_hbar(),
                     "case " + std::to_string(j));
  }
}

void check_eq5(CheckContext& ctx, unsigned cases, unsigned degree_cap) {
  for (unsigned j = 0; j < cases; ++j) {
    NCPoly h = ctx.gen().poly(degree_cap);
    ctx.expect_equal(commutator(NCPoly::x(), h),
                     partial_p(h) * Coefficient::i_hbar(),
                     "case " + std::to_string(j));
  }
}

void check_eq6(CheckContext& ctx, unsigned cases, unsigned degree_cap) {
  const NCPoly x = NCPoly::x();
  const NCPoly p = NCPoly::p();
  for (unsigned j = 0; j < cases; ++j) {
    NCPoly h = ctx.gen().poly(degree_cap);
    ctx.expect_zero(commutator(h, commutator(x, p)) +
                        commutator(x, commutator(p, h)) +
                        commutator(p, commutator(h, x)),
                    "literal case " + std::to_string(j));
  }
  for (unsigned j = 0; j < cases; ++j) {
    NCPoly a = ctx.gen().poly(degree_cap);
    NCPoly b = ctx.gen().poly(degree_cap);
    NCPoly c = ctx.gen().poly(degree_cap);
    ctx.expect_zero(commutator(a, commutator(b, c)) +
                        commutator(b, commutator(c, a)) +
                        commutator(c, commutator(a, b)),
                    "random triple " + std::to_string(j));
  }
}

void check_eq7(CheckContext& ctx, unsigned cases, unsigned degree_cap) {
  for (unsigned j = 0; j < cases; ++j) {
    NCPoly h = ctx.gen().poly(degree_cap);
    ctx.expect_zero(commutator(partial_p(h), NCPoly::p()) +
                        commutator(NCPoly::x(), -partial_x(h)),
                    "case " + std::to_string(j));
  }
}

void check_eq8(CheckContext& ctx, unsigned cases, unsigned degree_cap) {
  const NCPoly x = NCPoly::x();
  const NCPoly p = NCPoly::p();
  const Coefficient i_hbar = Coefficient::i_hbar();
  for (unsigned j = 0; j < cases; ++j) {
    NCPoly h = ctx.gen().poly(degree_cap);
    NCPoly inner_x = commutator(p, h) + partial_x(h) * i_hbar;
    NCPoly inner_p = commutator(h, x) + partial_p(h) * i_hbar;
    ctx.expect_zero(commutator(x, inner_x) + commutator(p, inner_p),
                    "case " + std::to_string(j));
  }
}

void check_eq9(CheckContext& ctx, unsigned cases, unsigned degree_cap) {
  for (unsigned j = 0; j < cases; ++j) {
    NCPoly h = ctx.gen().poly(degree_cap);
    ctx.expect_equal(commutator(NCPoly::p(), h),
                     -(partial_x(h) * Coefficient::i_hbar()),
                     "case " + std::to_string(j));
  }
}

void check_eq10(CheckContext& ctx) {
  for (unsigned a = 0; a <= 8; ++a) {
    for (unsigned b = 0; a + b <= 8; ++b) {
      NCPoly f = NCPoly::monomial(a, b);
      NCPoly h = ctx.gen().poly(4);
      ctx.expect_equal(leibniz_derivative(f, h) * Coefficient::i_hbar(),
                       commutator(f, h),
                       "x^" + std::to_string(a) + " p^" + std::to_string(b));
    }
  }
}

void check_eq11(CheckContext& ctx, unsigned cases, unsigned degree_cap) {
  for (unsigned j = 0; j < cases; ++j) {
    NCPoly f = ctx.gen().poly(degree_cap);
    NCPoly h = ctx.gen().poly(degree_cap);
    ctx.expect_equal(leibniz_derivative(f, h),
                     scalar_div(commutator(f, h), Coefficient::i_hbar()),
                     "case " + std::to_string(j));
  }
}

void check_poisson(CheckContext& ctx, unsigned cases, unsigned degree_cap) {
  for (unsigned j = 0; j < cases; ++j) {
    NCPoly f = ctx.gen().poly(degree_cap);
    NCPoly g = ctx.gen().poly(degree_cap);
    ctx.expect_equal(
        classical_limit(scalar_div(commutator(f, g), Coefficient::i_hbar())),
        poisson_bracket(f, g), "case " + std::to_string(j));
  }
}

void check_area(CheckContext& ctx) {
  NCPoly antisym = NCPoly::x() * NCPoly::p() - NCPoly::p() * NCPoly::x();
  ctx.expect_equal(scalar_div(antisym, Coefficient::integer(2)),
                   NCPoly::constant(Coefficient::i_hbar() /
                                    Coefficient::integer(2)),
                   "(xp - px)/2");
}

}  // namespace

bool CheckReport::pass() const {
  for (const Check& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string CheckReport::to_text() const {
  std::string out;
  for (const Check& c : checks) {
    out += c.id;
    out += c.pass ? ": pass" : ": FAIL";
    if (c.oracle) {
      out += " (oracle ";
      out += c.oracle->pass ? "pass" : "FAIL";
      out += ", max dev " + format_deviation(c.oracle->max_deviation) +
             ", trusted " + std::to_string(c.oracle->trusted_dim) + ")";
    }
    if (!c.detail.empty()) out += "\n  " + c.detail;
    out += "\n";
  }
  out += "overall: ";
  out += pass() ? "pass" : "FAIL";
  out += " (seed " + std::to_string(seed) + ", degree " +
         std::to_string(degree_cap) + ", cases " + std::to_string(cases) +
         ", oracle " + (with_oracle ? "on" : "off") + ")\n";
  return out;
}

nlohmann::json CheckReport::to_json() const {
  nlohmann::json check_list = nlohmann::json::array();
  for (const Check& c : checks) {
    nlohmann::json entry = {{"id", c.id},
                            {"status", c.pass ? "pass" : "fail"}};
    if (!c.detail.empty()) entry["detail"] = c.detail;
    if (c.oracle)
      entry["oracle"] = {{"status", c.oracle->pass ? "pass" : "fail"},
                         {"max_deviation", c.oracle->max_deviation},
                         {"trusted_dim", c.oracle->trusted_dim}};
    check_list.push_back(entry);
  }
  return {{"seed", seed}, {"checks", check_list}, {"pass", pass()}};
}

CheckReport verify_paper(const VerifyOptions& options) {
  if (options.degree_cap > 8)
    throw Error("degree cap must be <= 8, got " +
                std::to_string(options.degree_cap));
  if (options.cases < 1) throw Error("cases must be >= 1");

  CheckReport report;
  report.seed = options.seed;
  report.degree_cap = options.degree_cap;
  report.cases = options.cases;
  report.with_oracle = options.with_oracle;

  std::optional<FockRep> rep;
  if (options.with_oracle) rep = build_fock_rep(kDefaultFockDim);
  const FockRep* rep_ptr = rep ? &*rep : nullptr;

  const unsigned cap = options.degree_cap;
  const unsigned cases = options.cases;
  const std::function<void(CheckContext&)> bodies[] = {
      [&](CheckContext& c) { check_eq2(c); },
      [&](CheckContext& c) { check_eq4(c, cases); },
      [&](CheckContext& c) { check_eq5(c, cases, cap); },
      [&](CheckContext& c) { check_eq6(c, cases, cap); },
      [&](CheckContext& c) { check_eq7(c, cases, cap); },
      [&](CheckContext& c) { check_eq8(c, cases, cap); },
      [&](CheckContext& c) { check_eq9(c, cases, cap); },
      [&](CheckContext& c) { check_eq10(c); },
      [&](CheckContext& c) { check_eq11(c, cases, cap); },
      [&](CheckContext& c) { check_poisson(c, cases, cap); },
      [&](CheckContext& c) { check_area(c); },
  };

  for (std::size_t j = 0; j < kCheckIds.size(); ++j) {
    CheckContext ctx(kCheckIds[j], splitmix64(options.seed + j), rep_ptr);
    bodies[j](ctx);
    report.checks.push_back(ctx.finish());
  }
  return report;
}

}  // namespace ncps
