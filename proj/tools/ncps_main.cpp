// ncps - exact symbolic algebra in the non-commutative phase space
// [x, p] = i hbar, with a numeric Fock-matrix cross-check.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "ncps/evolution.hpp"
#include "ncps/fock.hpp"
#include "ncps/parser.hpp"
#include "ncps/render.hpp"
#include "ncps/verifier.hpp"

namespace {

using ncps::NCPoly;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> read_expression_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ncps::Error("cannot open file: " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    lines.push_back(line);
  }
  return lines;
}

// Positional expressions, or one expression per line of --file.
std::vector<std::string> gather_expressions(std::vector<std::string> args,
                                            const std::string& file,
                                            std::size_t expected) {
  if (!file.empty()) {
    if (!args.empty())
      throw ncps::Error(
          "give expressions either as arguments or via --file, not both");
    args = read_expression_file(file);
  }
  if (expected > 0 && args.size() != expected)
    throw ncps::Error("expected " + std::to_string(expected) +
                      " expression(s), got " + std::to_string(args.size()));
  if (args.empty()) throw ncps::Error("no expressions given");
  return args;
}

std::vector<std::string> provided(const std::vector<std::string*>& slots,
                                  const std::vector<CLI::Option*>& opts) {
  std::vector<std::string> out;
  for (std::size_t j = 0; j < slots.size(); ++j)
    if (opts[j]->count() > 0) out.push_back(*slots[j]);
  return out;
}

void print_poly(const NCPoly& poly, bool json) {
  std::cout << ncps::render(poly, json ? ncps::RenderFormat::Json
                                       : ncps::RenderFormat::Text)
            << "\n";
}

ncps::ParamAssignment parse_params(const std::string& spec) {
  ncps::ParamAssignment params;
  if (spec.empty()) return params;
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t comma = spec.find(',', start);
    std::string item = spec.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    std::size_t eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw ncps::Error("bad --params entry '" + item + "', want name=value");
    std::string name = item.substr(0, eq);
    if (!ncps::ParamMonomial::valid_name(name))
      throw ncps::Error("invalid parameter name: " + name);
    params.set(name, std::stod(item.substr(eq + 1)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return params;
}

int run(int argc, char** argv) {
  CLI::App app{"exact symbolic algebra in the non-commutative phase space "
               "[x,p] = i*hbar"};
  app.require_subcommand(1);

  bool json = false;
  bool text = false;

  // Expressions are single-value positionals: CLI11 would otherwise expand
  // a bracketed commutator like "[x,p]" as a comma-separated list.
  std::string expr_a;
  std::string expr_b;
  std::string file;

  auto add_format_flags = [&](CLI::App* sub) {
    auto* j = sub->add_flag("--json", json, "emit JSON instead of text");
    sub->add_flag("--text", text, "emit text (the default)")->excludes(j);
  };

  auto* normalize = app.add_subcommand(
      "normalize", "parse, reduce to normal order and print");
  auto* normalize_a = normalize->add_option("expr", expr_a, "expression");
  normalize->add_option("--file", file, "read one expression per line");
  add_format_flags(normalize);

  auto* comm =
      app.add_subcommand("comm", "commutator [A, B] of two expressions");
  auto* comm_a = comm->add_option("exprA", expr_a, "left expression");
  auto* comm_b = comm->add_option("exprB", expr_b, "right expression");
  comm->add_option("--file", file, "read one expression per line");
  add_format_flags(comm);

  auto* poisson = app.add_subcommand(
      "poisson", "classical projection followed by the Poisson bracket");
  auto* poisson_a = poisson->add_option("exprA", expr_a, "left expression");
  auto* poisson_b = poisson->add_option("exprB", expr_b, "right expression");
  poisson->add_option("--file", file, "read one expression per line");
  add_format_flags(poisson);

  auto* evolve = app.add_subcommand(
      "evolve", "Heisenberg evolution series of an observable");
  std::string observable_src;
  std::string hamiltonian_src;
  unsigned order = ncps::kDefaultSeriesOrder;
  evolve->add_option("--observable", observable_src, "observable F(x,p)")
      ->required();
  evolve->add_option("--hamiltonian", hamiltonian_src, "hbar-free H(x,p)")
      ->required();
  evolve->add_option("--order", order, "series order (max 64)");
  add_format_flags(evolve);

  auto* verify = app.add_subcommand(
      "verify-paper", "replay the derivation chain; exit 0 iff all checks pass");
  ncps::VerifyOptions verify_opts;
  verify->add_option("--seed", verify_opts.seed, "random seed");
  verify->add_option("--cases", verify_opts.cases, "random cases per check");
  verify->add_option("--degree", verify_opts.degree_cap,
                     "degree cap for random polynomials (max 8)");
  verify->add_flag("--oracle", verify_opts.with_oracle,
                   "also run the numeric matrix oracle on every identity");
  add_format_flags(verify);

  auto* oracle = app.add_subcommand(
      "oracle", "numeric check of one identity on a truncated Fock basis");
  unsigned dim = ncps::kDefaultFockDim;
  double tol = ncps::kDefaultOracleTol;
  std::string params_spec;
  std::string check_spec;
  oracle->add_option("--dim", dim, "Fock dimension (2..256)");
  oracle->add_option("--tol", tol, "max-abs tolerance on the trusted block");
  oracle->add_option("--params", params_spec, "numeric values, k=v,...");
  oracle->add_option("--check", check_spec, "identity \"<lhs> == <rhs>\"")
      ->required();
  add_format_flags(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the usage message
    return kExitUsage;
  }

  if (normalize->parsed()) {
    for (const std::string& src : gather_expressions(
             provided({&expr_a}, {normalize_a}), file, 0))
      print_poly(ncps::parse_poly(src), json);
    return kExitPass;
  }

  if (comm->parsed()) {
    auto sides = gather_expressions(
        provided({&expr_a, &expr_b}, {comm_a, comm_b}), file, 2);
    print_poly(ncps::commutator(ncps::parse_poly(sides[0]),
                                ncps::parse_poly(sides[1])),
               json);
    return kExitPass;
  }

  if (poisson->parsed()) {
    auto sides = gather_expressions(
        provided({&expr_a, &expr_b}, {poisson_a, poisson_b}), file, 2);
    NCPoly f = ncps::classical_limit(ncps::parse_poly(sides[0]));
    NCPoly g = ncps::classical_limit(ncps::parse_poly(sides[1]));
    print_poly(ncps::poisson_bracket(f, g), json);
    return kExitPass;
  }

  if (evolve->parsed()) {
    NCPoly observable = ncps::parse_poly(observable_src);
    NCPoly hamiltonian = ncps::parse_poly(hamiltonian_src);
    if (!hamiltonian.hbar_free())
      throw ncps::Error("the hamiltonian must be hbar-free");
    ncps::EvolutionSeries series =
        ncps::heisenberg_series(observable, hamiltonian, order);
    if (json) {
      nlohmann::json terms = nlohmann::json::array();
      for (const NCPoly& term : series.terms)
        terms.push_back(ncps::poly_to_json(term));
      std::cout << nlohmann::json{{"order", series.order}, {"terms", terms}}
                << "\n";
    } else {
      for (const NCPoly& term : series.terms)
        std::cout << ncps::render(term) << "\n";
    }
    return kExitPass;
  }

  if (verify->parsed()) {
    ncps::CheckReport report = ncps::verify_paper(verify_opts);
    if (json)
      std::cout << report.to_json().dump() << "\n";
    else
      std::cout << report.to_text();
    return report.pass() ? kExitPass : kExitCheckFailed;
  }

  if (oracle->parsed()) {
    std::size_t sep = check_spec.find("==");
    if (sep == std::string::npos ||
        check_spec.find("==", sep + 2) != std::string::npos)
      throw ncps::Error("--check wants exactly one \"<lhs> == <rhs>\"");
    std::string lhs_src = check_spec.substr(0, sep);
    std::string rhs_src = check_spec.substr(sep + 2);
    ncps::ExprAst lhs_ast = ncps::parse(lhs_src);
    ncps::ExprAst rhs_ast = ncps::parse(rhs_src);
    unsigned hint = std::max(ncps::structural_degree(lhs_ast),
                             ncps::structural_degree(rhs_ast));
    ncps::FockRep rep = ncps::build_fock_rep(dim, parse_params(params_spec));
    ncps::CheckOutcome outcome = ncps::check_identity(
        ncps::lower(lhs_ast, lhs_src), ncps::lower(rhs_ast, rhs_src), rep,
        tol, hint);
    if (json) {
      std::cout << nlohmann::json{{"pass", outcome.pass},
                                  {"max_deviation", outcome.max_deviation},
                                  {"trusted_dim", outcome.trusted_dim}}
                << "\n";
    } else {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.3e", outcome.max_deviation);
      std::cout << (outcome.pass ? "pass" : "FAIL") << ": max deviation "
                << buf << " on " << outcome.trusted_dim << "x"
                << outcome.trusted_dim << " trusted block\n";
    }
    return outcome.pass ? kExitPass : kExitCheckFailed;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ncps::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
