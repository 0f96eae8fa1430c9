#include "doctest.h"
#include "oracles.hpp"

#include "superweyl/symbols.hpp"
#include "superweyl/weyl.hpp"

#include <random>

using namespace superweyl;
using oracle::q;

namespace {

SymbolElement mono(int a, int b, GrassmannWord w = {}, GaussianRational c = 1) {
  return SymbolElement::monomial(a, b, w, c);
}

const GrassmannWord kX1{bit(1), 0}, kE1{0, bit(1)};

}  // namespace

TEST_SUITE("symbols") {

TEST_CASE("Poisson brackets by hand") {
  CHECK(poisson_bracket(mono(0, 1), mono(1, 0)) == SymbolElement(1));
  CHECK(poisson_bracket(mono(0, 0, kX1), mono(0, 0, kE1)) == SymbolElement(1));
  CHECK(poisson_bracket(mono(2, 1), mono(3, 1)) == mono(4, 1));
  for (int n = -3; n <= 3; ++n)
    for (int m = -3; m <= 3; ++m)
      CHECK(poisson_bracket(mono(n + 1, 1), mono(m + 1, 1)) == mono(n + m + 1, 1, {}, GaussianRational(m - n)));
}

TEST_CASE("degree") {
  CHECK(lie_degree({4, 1, {}}) == 0);
  CHECK(lie_degree({-1, -1, {bit(1) | bit(2), bit(1) | bit(2)}}) == 0);
  CHECK(lie_degree({0, 2, {}}) == 1);
  CHECK(lie_degree({0, 0, kE1}) == -1);
}

TEST_CASE("composition by hand") {
  CHECK(compose_truncated(mono(1, 0), mono(1, 0), -8) == mono(2, 0));
  SymbolElement r = compose_truncated(mono(0, 1), mono(1, 0), -8);
  CHECK(r.is_exact());
  CHECK(r == mono(1, 1) + SymbolElement(1));
  SymbolElement tail = compose_truncated(mono(0, -1), mono(-1, 0), -3);
  CHECK_FALSE(tail.is_exact());
  CHECK(tail.valid_from() == -3);
  SymbolElement expected = mono(-1, -1) + mono(-2, -2) + mono(-3, -3, {}, 2);
  expected.truncate(-3);
  CHECK(tail == expected);
}

TEST_CASE("composition of differential symbols is the Weyl product") {
  // t^a tau^k corresponds to t^a d^k; the composition formula must reproduce
  // the normal-ordered product.
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> e(-3, 3), k(0, 3), c(-4, 4);
  for (int n = 0; n < 100; ++n) {
    SymbolElement x, y;
    WeylElement wx, wy;
    for (int i = 0; i < 2; ++i) {
      int a = e(rng), b = k(rng), cc = c(rng);
      x += mono(a, b, {}, cc);
      wx += WeylElement::monomial(a, b, cc);
      int a2 = e(rng), b2 = k(rng), c2 = c(rng);
      y += mono(a2, b2, {}, c2);
      wy += WeylElement::monomial(a2, b2, c2);
    }
    SymbolElement p = compose_truncated(x, y, -8);
    REQUIRE(p.is_exact());
    WeylElement w = weyl_mul(wx, wy);
    SymbolElement back;
    for (const auto& t : w.terms()) back += mono(t.a, t.k, {}, t.c);
    CHECK(p == back);
  }
}

TEST_CASE("composition is associative above the floor") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> e(-2, 2), k(-1, 2), c(-3, 3), w(0, 3);
  auto word = [&] {
    int m = w(rng);
    return GrassmannWord{static_cast<std::uint32_t>(m & 1 ? bit(1) : 0), static_cast<std::uint32_t>(m & 2 ? bit(1) : 0)};
  };
  for (int n = 0; n < 40; ++n) {
    int a1 = e(rng), b1 = k(rng), c1 = c(rng);
    SymbolElement x = mono(a1, b1, word(), c1);
    int a2 = e(rng), b2 = k(rng), c2 = c(rng);
    SymbolElement y = mono(a2, b2, word(), c2);
    int a3 = e(rng), b3 = k(rng), c3 = c(rng);
    SymbolElement z = mono(a3, b3, word(), c3);
    SymbolElement lhs = compose_truncated(compose_truncated(x, y, -10), z, -10);
    SymbolElement rhs = compose_truncated(x, compose_truncated(y, z, -10), -10);
    CHECK(equal_modulo_floor(lhs.restricted(-6), rhs.restricted(-6)));
  }
}

TEST_CASE("deformed bracket") {
  CHECK(p1_bracket(mono(0, 1), mono(1, 0), -8) == SymbolElement(1));
  SymbolElement a = mono(2, 1) + mono(-1, 0, {bit(1), bit(1)}, 3);
  CHECK(p1_bracket(a, a, -8).is_zero());
  SymbolElement x = mono(0, 0, kX1), e = mono(0, 0, kE1);
  CHECK(p1_bracket(x, e, -8) == SymbolElement(1));
}

TEST_CASE("truncation bookkeeping") {
  SymbolElement x = mono(0, -1) + mono(0, -5) + mono(0, 2);
  SymbolElement t = x;
  t.truncate(-3);
  CHECK_FALSE(t.is_exact());
  CHECK(t.min_tau() == -1);
  CHECK(t.max_tau() == 2);
  CHECK(x.restricted(0) == mono(0, 2));
  CHECK(equal_modulo_floor(x, t));
  CHECK_FALSE(x == t);
}

TEST_CASE("tau inverse composition") {
  SymbolElement r = tau_inverse_compose(mono(2, 0), -8);
  // tau^-1 t^2 = t^2 tau^-1 - 2 t tau^-2 + 2 tau^-3
  SymbolElement expected = mono(2, -1) + mono(1, -2, {}, -2) + mono(0, -3, {}, 2);
  CHECK(r == expected);
}

TEST_CASE("derivatives carry Grassmann signs") {
  GrassmannWord w{bit(1) | bit(2), 0};
  CHECK(d_xi(mono(0, 0, w), 1) == mono(0, 0, {bit(2), 0}));
  CHECK(d_xi(mono(0, 0, w), 2) == mono(0, 0, {bit(1), 0}, -1));
  CHECK(d_t(mono(3, 1)) == mono(2, 1, {}, 3));
  CHECK(d_tau(mono(3, 2)) == mono(3, 1, {}, 2));
}

TEST_CASE("sp symbol generators") {
  auto g1 = sp_symbol_generators(1);
  REQUIRE(g1.size() == 4);
  CHECK(g1[0].symbol == mono(1, 0, kX1));
  auto g2 = sp_symbol_generators(2);
  REQUIRE(g2.size() == 8);
  // t xi_1 + 1/2 tau^-1 (eta_1 xi_1 + eta_2 xi_2) xi_1 = t xi_1 - 1/2 tau^-1 xi_1 xi_2 eta_2
  SymbolElement expected = mono(1, 0, kX1) + mono(0, -1, {bit(1) | bit(2), bit(2)}, q(-1, 2));
  CHECK(g2[0].symbol == expected);
  for (int N = 1; N <= 3; ++N)
    for (const auto& g : sp_symbol_generators(N)) {
      CHECK(g.symbol.parity() == 1);
      for (const auto& [t, c] : g.symbol.terms()) CHECK(lie_degree(t) == 0);
    }
}

}
