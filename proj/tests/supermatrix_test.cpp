#include "doctest.h"
#include "oracles.hpp"

#include "superweyl/axioms.hpp"
#include "superweyl/clifford.hpp"
#include "superweyl/realizations.hpp"
#include "superweyl/supermatrix.hpp"

using namespace superweyl;
using oracle::q;

TEST_SUITE("supermatrix") {

TEST_CASE("identity and elementary products") {
  RandomAlgebra gen(21);
  for (int n = 0; n < 20; ++n) {
    WeylMatrix a = gen.matrix(2, 2, n % 2 ? Parity::Odd : Parity::Even);
    CHECK(mat_mul(a, WeylMatrix::identity(2, 2)) == a);
    CHECK(mat_mul(WeylMatrix::identity(2, 2), a) == a);
  }
  ScalarMatrix e12 = ScalarMatrix::elementary(2, 1, 0, 1), e21 = ScalarMatrix::elementary(2, 1, 1, 0);
  CHECK(mat_mul(e12, e21) == ScalarMatrix::elementary(2, 1, 0, 0));
}

TEST_CASE("entry products keep their order") {
  WeylMatrix a(1, 1), b(1, 1);
  a(0, 0) = WeylElement::d();
  b(0, 0) = WeylElement::t();
  WeylMatrix ab = mat_mul(a, b);
  CHECK(ab(0, 0) == WeylElement(1) + WeylElement::monomial(1, 1));
}

TEST_CASE("odd N = 1 generator squares to zero") {
  WeylMatrix x = rho_pm(xi(1), +1, 1);
  CHECK(x(1, 0) == WeylElement::t());
  CHECK(mat_mul(x, x).is_zero());
}

TEST_CASE("parity blocks") {
  WeylMatrix m(2, 1);
  CHECK(m.block(0, 1) == 0);
  CHECK(m.block(0, 2) == 1);
  CHECK(m.block(2, 0) == -1);
  CHECK(m.block(2, 2) == 0);
  CHECK(m.parity() == Parity::Even);
  m(2, 0) = WeylElement(1);
  CHECK(m.parity() == Parity::Odd);
  m(0, 0) = WeylElement(1);
  CHECK(m.parity() == Parity::Mixed);
}

TEST_CASE("parity decomposition") {
  Sl2Triple s = sl2_generators(1);
  auto [e0, o0] = parity_decompose(s.h);
  CHECK(e0 == s.h);
  CHECK(o0.is_zero());
  WeylMatrix x = rho_pm(xi(1), +1, 1);
  auto [e1, o1] = parity_decompose(x);
  CHECK(e1.is_zero());
  CHECK(o1 == x);
  auto [e2, o2] = parity_decompose(s.h + x);
  CHECK(e2 == s.h);
  CHECK(o2 == x);
  CHECK(e2 + o2 == s.h + x);
}

TEST_CASE("superbracket sign rule") {
  // odd elementary matrices anticommute into the diagonal
  ScalarMatrix u = ScalarMatrix::elementary(1, 1, 0, 1), l = ScalarMatrix::elementary(1, 1, 1, 0);
  CHECK(superbracket(u, l) == ScalarMatrix::identity(1, 1));
  CHECK(superbracket(u, u).is_zero());
  RandomAlgebra gen(22);
  for (int n = 0; n < 20; ++n) {
    WeylMatrix a = gen.matrix(2, 2, Parity::Even);
    CHECK(superbracket(a, a).is_zero());
    WeylMatrix b = gen.matrix(2, 2, Parity::Odd);
    CHECK(superbracket(a, b) == -superbracket(b, a));
    WeylMatrix c = gen.matrix(2, 2, Parity::Odd);
    CHECK(superbracket(b, c) == superbracket(c, b));
  }
}

TEST_CASE("sl2 relations") {
  for (int N = 1; N <= 4; ++N) {
    Sl2Triple s = sl2_generators(N);
    CHECK(superbracket(s.e, s.f) == s.h);
    CHECK(superbracket(s.h, s.e) == s.e * GaussianRational(2));
    CHECK(superbracket(s.h, s.f) == s.f * GaussianRational(-2));
  }
}

TEST_CASE("K2 L_1 with L_2") {
  CHECK(superbracket(k2_field("L", 1), k2_field("L", 2)) == k2_field("L", 3));
}

TEST_CASE("shape mismatch") {
  CHECK_THROWS_AS(mat_mul(WeylMatrix(1, 1), WeylMatrix(2, 2)), std::invalid_argument);
  CHECK_THROWS_AS(WeylMatrix(1, 1) + WeylMatrix(1, 2), std::invalid_argument);
}

TEST_CASE("promotion and left multiplication") {
  ScalarMatrix s = ScalarMatrix::elementary(1, 1, 0, 1, q(3));
  WeylMatrix w = promote(s);
  CHECK(w(0, 1) == WeylElement(3));
  WeylMatrix lw = left_multiply(WeylElement::d(), promote(ScalarMatrix::identity(1, 1)));
  CHECK(lw(0, 0) == WeylElement::d());
  CHECK(lw(1, 0).is_zero());
}

}
