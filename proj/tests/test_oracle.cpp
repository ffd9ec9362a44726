#include "ncps/fock.hpp"

#include "ncps/parser.hpp"
#include "ncps/random_poly.hpp"
#include "support/seeded_main.hpp"

using namespace ncps;

namespace {
constexpr std::complex<double> kI{0.0, 1.0};
}

TEST_CASE("2x2 rep matches the hand-computed commutator") {
  FockRep rep = build_fock_rep(2);
  Eigen::MatrixXcd comm = rep.x_matrix() * rep.p_matrix() -
                          rep.p_matrix() * rep.x_matrix();
  CHECK(std::abs(comm(0, 0) - kI) < 1e-12);
  CHECK(std::abs(comm(1, 1) + kI) < 1e-12);
  CHECK(std::abs(comm(0, 1)) < 1e-12);
  CHECK(std::abs(comm(1, 0)) < 1e-12);
}

TEST_CASE("X and P are hermitian") {
  for (unsigned dim : {2u, 16u, 64u}) {
    FockRep rep = build_fock_rep(dim);
    CHECK((rep.x_matrix() - rep.x_matrix().adjoint()).cwiseAbs().maxCoeff() <
          1e-12);
    CHECK((rep.p_matrix() - rep.p_matrix().adjoint()).cwiseAbs().maxCoeff() <
          1e-12);
  }
}

TEST_CASE("truncation error stays in the bottom-right corner") {
  FockRep rep = build_fock_rep(64);
  Eigen::MatrixXcd defect = rep.x_matrix() * rep.p_matrix() -
                            rep.p_matrix() * rep.x_matrix() -
                            kI * Eigen::MatrixXcd::Identity(64, 64);
  // worst probe degree: everything but the last row/column is exact
  CHECK(defect.topLeftCorner(63, 63).cwiseAbs().maxCoeff() <= 1e-9);
  CHECK(defect.topLeftCorner(56, 56).cwiseAbs().maxCoeff() <= 1e-9);
  // the corner itself carries the truncation artifact -i*hbar*D
  CHECK(std::abs(defect(63, 63)) > 1.0);
}

TEST_CASE("dimension and parameter validation") {
  CHECK_THROWS_AS(build_fock_rep(1), BadDimension);
  CHECK_THROWS_AS(build_fock_rep(0), BadDimension);
  CHECK_THROWS_AS(build_fock_rep(257), BadDimension);
  CHECK_THROWS_AS(ParamAssignment().set("m", 0.0), Error);
  CHECK_THROWS_AS(ParamAssignment().get("undefined_name"), MissingParam);
}

TEST_CASE("to_matrix: scalars, the px product, zero") {
  FockRep rep = build_fock_rep(16);
  unsigned dim = rep.dim();

  Eigen::MatrixXcd ih = to_matrix(NCPoly::constant(Coefficient::i_hbar()), rep);
  CHECK((ih - kI * Eigen::MatrixXcd::Identity(dim, dim)).cwiseAbs().maxCoeff() <
        1e-12);

  // x p - i hbar equals the matrix product P X on the trusted block
  NCPoly px = NCPoly::p() * NCPoly::x();
  Eigen::MatrixXcd sym = to_matrix(px, rep);
  Eigen::MatrixXcd direct = rep.p_matrix() * rep.x_matrix();
  CHECK((sym - direct).topLeftCorner(dim - 2, dim - 2).cwiseAbs().maxCoeff() <
        1e-10);

  CHECK(to_matrix(NCPoly::zero(), rep).cwiseAbs().maxCoeff() == 0.0);

  NCPoly with_param = NCPoly::constant(Coefficient::param("k_unassigned"));
  CHECK_THROWS_AS(to_matrix(with_param, rep), MissingParam);
}

TEST_CASE("check_identity on the derived [x^2, p^2] identity") {
  FockRep rep = build_fock_rep(64);
  NCPoly lhs = commutator(parse_poly("x^2"), parse_poly("p^2"));
  NCPoly rhs = parse_poly("4*i*hbar*x*p + 2*hbar^2");
  CheckOutcome outcome = check_identity(lhs, rhs, rep, 1e-8, 4);
  CHECK(outcome.pass);
  CHECK(outcome.trusted_dim == 60);
}

TEST_CASE("check_identity trusted block follows the structural degree") {
  FockRep rep = build_fock_rep(16);
  NCPoly lhs = commutator(NCPoly::x(), NCPoly::p());
  NCPoly rhs = NCPoly::constant(Coefficient::i_hbar());
  CheckOutcome outcome = check_identity(lhs, rhs, rep, 1e-8, 2);
  CHECK(outcome.pass);
  CHECK(outcome.trusted_dim == 14);

  // the deliberately false identity [x,p] = 0 must fail by about hbar
  CheckOutcome bad = check_identity(lhs, NCPoly::zero(), rep, 1e-8, 2);
  CHECK_FALSE(bad.pass);
  CHECK(bad.max_deviation == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("check_identity rejects degrees that empty the trusted block") {
  FockRep rep = build_fock_rep(4);
  NCPoly big = NCPoly::monomial(2, 1);
  CHECK_THROWS_AS(check_identity(big, big, rep, 1e-8), DegreeTooHigh);
}

TEST_CASE("homomorphism: symbolic product matches matrix product") {
  FockRep rep = build_fock_rep(64);
  RandomPolyGen gen(testsupport::seed);
  double worst = 0.0;
  for (int j = 0; j < 200; ++j) {
    NCPoly a = gen.poly(3);
    NCPoly b = gen.poly(3);
    Eigen::MatrixXcd lhs = to_matrix(a * b, rep);
    Eigen::MatrixXcd rhs = to_matrix(a, rep) * to_matrix(b, rep);
    double dev = (lhs - rhs).topLeftCorner(58, 58).cwiseAbs().maxCoeff();
    worst = std::max(worst, dev);
    CHECK(dev <= 1e-8);
  }
  MESSAGE("worst homomorphism deviation: ", worst);
}

TEST_CASE("oracle sensitivity: a 1e-6 perturbation trips the eq2 check") {
  FockRep rep = build_fock_rep(64);
  NCPoly lhs = commutator(NCPoly::x(), NCPoly::p());
  NCPoly rhs = NCPoly::constant(Coefficient::i_hbar()) +
               NCPoly::constant(Coefficient::rational(make_rational(1, 1000000)));
  CheckOutcome outcome = check_identity(lhs, rhs, rep, 1e-8, 2);
  CHECK_FALSE(outcome.pass);
  CHECK(outcome.max_deviation == doctest::Approx(1e-6).epsilon(1e-3));
}

TEST_CASE("parameter values feed the evaluation") {
  ParamAssignment params;
  params.set("m", 2.0);
  params.set("hbar", 0.5);
  FockRep rep = build_fock_rep(32, params);
  // [x, p^2/(2m)] = i hbar p / m holds for any parameter values
  NCPoly lhs = commutator(NCPoly::x(), parse_poly("p^2/(2*m)"));
  NCPoly rhs = parse_poly("i*hbar*m^-1*p");
  CheckOutcome outcome = check_identity(lhs, rhs, rep, 1e-10, 3);
  CHECK(outcome.pass);
}
