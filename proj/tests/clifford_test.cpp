#include "doctest.h"
#include "oracles.hpp"

#include "superweyl/clifford.hpp"
#include "superweyl/generation.hpp"

#include <random>
#include <set>

using namespace superweyl;
using oracle::q;

namespace {

using Kind = SoElement::Kind;

std::vector<Generator> generators(int N) {
  std::vector<Generator> g;
  for (int i = 1; i <= N; ++i) {
    g.push_back(xi(i));
    g.push_back(eta(i));
  }
  return g;
}

// {g, h} in the Clifford algebra: 1 for (xi_i, eta_i) in either order.
int anti(Generator g, Generator h) { return g.kind != h.kind && g.index == h.index ? 1 : 0; }

CliffordElement gen(Generator g) { return CliffordElement::generator(g); }

// iota(g ^ h) through the basis elements and antisymmetry.
CliffordElement iota_wedge(Generator g, Generator h) {
  if (g == h) return {};
  if (g.kind == h.kind) {
    Kind k = g.kind == GenKind::Xi ? Kind::XiXi : Kind::EtaEta;
    if (g.index < h.index) return iota({k, g.index, h.index});
    return iota({k, h.index, g.index}) * GaussianRational(-1);
  }
  if (g.kind == GenKind::Xi) return iota({Kind::XiEta, g.index, h.index});
  return iota({Kind::XiEta, h.index, g.index}) * GaussianRational(-1);
}

// The Grassmann algebra on N generators as mask -> coefficient; xi_i by left
// multiplication, eta_i by the left derivative.
using Vec = std::map<std::uint32_t, GaussianRational>;

Vec act(Generator g, const Vec& v) {
  Vec out;
  for (const auto& [m, c] : v) {
    bool has = (m & bit(g.index)) != 0;
    int sign = __builtin_popcount(m & (bit(g.index) - 1)) % 2 ? -1 : 1;
    if (g.kind == GenKind::Xi && !has) out[m | bit(g.index)] += c * GaussianRational(sign);
    if (g.kind == GenKind::Eta && has) out[m & ~bit(g.index)] += c * GaussianRational(sign);
  }
  return out;
}

ScalarMatrix oracle_matrix(Generator g, int N) {
  GrassmannBasis b = grassmann_basis(N);
  int size = 1 << N;
  ScalarMatrix out(b.half, size - b.half);
  for (int c = 0; c < size; ++c) {
    Vec v{{b.mask[c], GaussianRational(b.sign[c])}};
    for (const auto& [m, x] : act(g, v)) {
      if (x.is_zero()) continue;
      int r = b.index_of(m);
      out(r, c) += x * GaussianRational(b.sign[r]);
    }
  }
  return out;
}

CliffordElement random_element(std::mt19937_64& rng, int N) {
  std::uniform_int_distribution<int> len(0, 4), pick(0, 2 * N - 1), coef(-3, 3);
  auto gens = generators(N);
  CliffordElement x;
  for (int t = 0; t < 2; ++t) {
    std::vector<Generator> w;
    int l = len(rng);
    for (int i = 0; i < l; ++i) w.push_back(gens[static_cast<std::size_t>(pick(rng))]);
    int c = coef(rng);
    x += clifford_word(w) * GaussianRational(c);
  }
  return x;
}

}  // namespace

TEST_SUITE("clifford") {

TEST_CASE("products by hand") {
  CHECK(clifford_mul(gen(eta(1)), gen(xi(1))) == CliffordElement(1) - clifford_word({xi(1), eta(1)}));
  CHECK(clifford_mul(gen(xi(1)), gen(xi(1))).is_zero());
  CHECK(clifford_mul(gen(eta(1)), clifford_word({xi(1), xi(2)})) ==
        gen(xi(2)) + clifford_word({xi(1), xi(2), eta(1)}));
  CHECK(clifford_word({xi(2), xi(1)}) == clifford_word({xi(1), xi(2)}) * GaussianRational(-1));
}

TEST_CASE("generator relations") {
  for (int N = 1; N <= 4; ++N)
    for (Generator g : generators(N))
      for (Generator h : generators(N))
        CHECK(clifford_bracket(gen(g), gen(h)) == CliffordElement(GaussianRational(anti(g, h))));
}

TEST_CASE("associativity") {
  std::mt19937_64 rng(31);
  for (int n = 0; n < 100; ++n) {
    auto x = random_element(rng, 3), y = random_element(rng, 3), z = random_element(rng, 3);
    CHECK(clifford_mul(clifford_mul(x, y), z) == clifford_mul(x, clifford_mul(y, z)));
  }
}

TEST_CASE("iota values") {
  CHECK(iota({Kind::XiEta, 1, 1}) == clifford_word({xi(1), eta(1)}) - CliffordElement(q(1, 2)));
  CHECK(iota({Kind::Central}) == CliffordElement(1));
  CHECK(iota({Kind::Xi, 2}) == gen(xi(2)));
  CHECK(iota({Kind::XiXi, 1, 2}) == clifford_word({xi(1), xi(2)}));
  CHECK_THROWS_AS(iota({Kind::XiXi, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(iota({Kind::Eta, 0}), std::invalid_argument);
  CHECK(clifford_bracket(iota({Kind::XiEta, 1, 1}), gen(xi(1))) == gen(xi(1)));
}

TEST_CASE("iota preserves the abstract bracket") {
  for (int N = 1; N <= 3; ++N) {
    auto gens = generators(N);
    for (Generator g : gens)
      for (Generator h : gens) {
        CliffordElement x = iota_wedge(g, h);
        if (x.is_zero()) continue;
        for (Generator v : gens) {
          CliffordElement expected = gen(g) * GaussianRational(anti(h, v)) - gen(h) * GaussianRational(anti(g, v));
          CHECK(clifford_bracket(x, gen(v)) == expected);
        }
        for (Generator c : gens)
          for (Generator d : gens) {
            CliffordElement y = iota_wedge(c, d);
            if (y.is_zero()) continue;
            CliffordElement expected = iota_wedge(g, d) * GaussianRational(anti(h, c)) -
                                       iota_wedge(h, d) * GaussianRational(anti(g, c)) +
                                       iota_wedge(c, g) * GaussianRational(anti(h, d)) -
                                       iota_wedge(c, h) * GaussianRational(anti(g, d));
            CHECK(clifford_bracket(x, y) == expected);
          }
      }
    for (Generator v : gens)
      for (Generator w : gens) CHECK(clifford_bracket(gen(v), gen(w)) == iota({Kind::Central}) * GaussianRational(anti(v, w)));
  }
}

TEST_CASE("so basis size") {
  for (int N = 1; N <= 4; ++N) CHECK(so_basis(N).size() == static_cast<std::size_t>(N * (2 * N - 1)));
}

TEST_CASE("Grassmann bases") {
  for (int N = 1; N <= 5; ++N) {
    GrassmannBasis b = grassmann_basis(N);
    CHECK(b.half == 1 << (N - 1));
    std::set<std::uint32_t> seen(b.mask.begin(), b.mask.end());
    CHECK(seen.size() == static_cast<std::size_t>(1 << N));
    for (int i = 0; i < (1 << N); ++i) {
      CHECK(b.index_of(b.mask[i]) == i);
      CHECK((__builtin_popcount(b.mask[i]) % 2 == 1) == (i >= b.half));
    }
  }
}

TEST_CASE("rho on generators matches the Grassmann oracle") {
  ScalarMatrix x1 = rho_matrix(gen(xi(1)), 1);
  CHECK(x1 == ScalarMatrix::elementary(1, 1, 1, 0));
  CHECK(rho_matrix(gen(eta(1)), 1) == ScalarMatrix::elementary(1, 1, 0, 1));
  for (int N = 1; N <= 4; ++N)
    for (Generator g : generators(N)) CHECK(rho_matrix(gen(g), N) == oracle_matrix(g, N));
}

TEST_CASE("rho is multiplicative") {
  std::mt19937_64 rng(32);
  for (int N = 1; N <= 4; ++N)
    for (int n = 0; n < 25; ++n) {
      auto x = random_element(rng, N), y = random_element(rng, N);
      CHECK(rho_matrix(clifford_mul(x, y), N) == mat_mul(rho_matrix(x, N), rho_matrix(y, N)));
    }
}

TEST_CASE("rho plus minus for N = 1") {
  WeylMatrix xp = rho_pm(xi(1), +1, 1);
  CHECK(xp(1, 0) == WeylElement::t());
  CHECK(xp(0, 1).is_zero());
  WeylMatrix em = rho_pm(eta(1), -1, 1);
  CHECK(em(0, 1) == WeylElement::d() - WeylElement::monomial(-1, 0, q(1, 2)));
  WeylMatrix ep = rho_pm(eta(1), +1, 1);
  CHECK(ep(0, 1) == parse_weyl("t*d*t - 1/2*t"));
  CHECK(ep(0, 1) == WeylElement::monomial(2, 1) + WeylElement::monomial(1, 0, q(1, 2)));
  CHECK(rho_pm(xi(1), -1, 1)(1, 0) == WeylElement::t(-1));
}

TEST_CASE("spo basis") {
  for (int N = 1; N <= 4; ++N) {
    auto basis = spo_basis(N);
    int even = 0, odd = 0;
    for (const auto& m : basis) (m.matrix.parity() == Parity::Odd ? odd : even)++;
    CHECK(even == 3 + N * (2 * N - 1));
    CHECK(odd == 4 * N);
  }
}

TEST_CASE("loop elements") {
  for (int N = 1; N <= 3; ++N) {
    auto basis = so_basis(N);
    for (const auto& x : basis)
      CHECK(loop_so_element(x, 0, N) == promote(rho_matrix(iota(x), N)));
    for (const auto& x : basis)
      for (const auto& y : basis)
        for (int n : {-1, 2})
          for (int m : {-2, 1}) {
            WeylMatrix expected =
                left_multiply(WeylElement::t(n + m), promote(rho_matrix(clifford_bracket(iota(x), iota(y)), N)));
            CHECK(superbracket(loop_so_element(x, n, N), loop_so_element(y, m, N)) == expected);
          }
  }
}

TEST_CASE("N = 4 loop element against rho(eta_3)^+") {
  for (int n = -3; n <= 3; ++n) {
    WeylMatrix lhs = superbracket(loop_so_element({Kind::EtaEta, 1, 2}, n, 4), rho_pm(eta(3), +1, 4));
    CHECK(lhs == e_plus(1, 8, WeylElement::monomial(n + 1, 0, GaussianRational(n))));
  }
}

}
