#include "doctest.h"
#include "oracles.hpp"

#include "superweyl/clifford.hpp"
#include "superweyl/realizations.hpp"

#include <functional>

// V^mu = t^mu Q(i)[t, t^-1] (x) Lambda(xi) with the field symbols acting as
// operators: tau is d/dt, tau^-1 o (...) an antiderivative, xi_i left
// multiplication and eta_i the left derivative. The symbols below are written
// out independently of the library; only the comparison goes through
// module_action.

using namespace superweyl;
using oracle::q;

namespace {

using GR = GaussianRational;

struct KeyLess {
  bool operator()(const std::pair<GR, std::uint32_t>& x, const std::pair<GR, std::uint32_t>& y) const {
    auto c = compare(x.first, y.first);
    if (c != 0) return c < 0;
    return x.second < y.second;
  }
};

// (t-exponent, xi mask) -> coefficient
using Func = std::map<std::pair<GR, std::uint32_t>, GR, KeyLess>;

void put(Func& f, const GR& s, std::uint32_t mask, const GR& c) {
  if (c.is_zero()) return;
  GR& slot = f[{s, mask}];
  slot += c;
  if (slot.is_zero()) f.erase({s, mask});
}

Func gen_act(Generator g, const Func& f) {
  Func out;
  for (const auto& [key, c] : f) {
    auto [s, m] = key;
    bool has = (m & bit(g.index)) != 0;
    GR sign = __builtin_popcount(m & (bit(g.index) - 1)) % 2 ? GR(-1) : GR(1);
    if (g.kind == GenKind::Xi && !has) put(out, s, m | bit(g.index), c * sign);
    if (g.kind == GenKind::Eta && has) put(out, s, m & ~bit(g.index), c * sign);
  }
  return out;
}

// One piece c * [integral o] t^a tau^b word.
struct Piece {
  bool integral = false;
  int a = 0;
  int b = 0;
  std::vector<Generator> word;
  GR c = 1;
};

Func act(const std::vector<Piece>& symbol, const Func& f) {
  Func out;
  for (const auto& p : symbol) {
    Func g = f;
    for (auto it = p.word.rbegin(); it != p.word.rend(); ++it) g = gen_act(*it, g);
    Func h;
    for (const auto& [key, c] : g) {
      auto [s, m] = key;
      GR coef = c * p.c;
      GR e = s;
      if (p.b == 1) {
        coef *= e;
        e -= GR(1);
      }
      e += GR(p.a);
      if (p.integral) {
        e += GR(1);
        coef /= e;
      }
      put(h, e, m, coef);
    }
    for (const auto& [key, c] : h) put(out, key.first, key.second, c);
  }
  return out;
}

Piece tau(int a, std::vector<Generator> w, GR c = 1) { return {false, a, 1, std::move(w), c}; }
Piece plain(int a, std::vector<Generator> w, GR c = 1) { return {false, a, 0, std::move(w), c}; }
Piece integ(int a, std::vector<Generator> w, GR c = 1) { return {true, a, 0, std::move(w), c}; }

std::vector<Piece> k4hat_symbol(const std::string& f, int n) {
  auto x1 = xi(1), x2 = xi(2), e1 = eta(1), e2 = eta(2);
  GR gn(n);
  if (f == "L") return {tau(n + 1, {})};
  if (f == "Q") return {tau(n + 1, {e1, e2})};
  if (f == "G^0") return {integ(n - 1, {x1, x2})};
  if (f == "G^3") return {integ(n - 1, {x1, x2, e1, e2}, gn), plain(n, {})};
  for (int i : {1, 2}) {
    std::string s = "^" + std::to_string(i);
    if (f == "X" + s) return {tau(n + 1, {eta(i)})};
    if (f == "Y" + s) return {plain(n, {xi(i)})};
    if (f == "Z" + s) return {plain(n, {e1, e2, xi(i)})};
    if (f == "G" + s) return {integ(n - 1, {x1, x2, eta(i)})};
    for (int j : {1, 2})
      if (f == "R^{" + std::to_string(j) + std::to_string(i) + "}") return {plain(n, {eta(j), xi(i)})};
  }
  FAIL("no symbol for ", f);
  return {};
}

std::vector<Piece> ck6_symbol(const std::string& f, int n) {
  GR gn(n);
  if (f == "L") return {tau(n + 1, {})};
  if (f == "I") return {tau(n + 1, {eta(1), eta(2), eta(3)})};
  const int cycles[3][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};
  for (const auto& c : cycles) {
    int i = c[0], j = c[1], k = c[2];
    std::string s = "^" + std::to_string(i);
    if (f == "G" + s) return {tau(n + 1, {eta(i)})};
    if (f == "G~" + s) return {plain(n, {xi(i)}), integ(n - 1, {xi(i), xi(j), eta(j)}, -gn)};
    if (f == "T" + s)
      return {plain(n, {eta(j), xi(j)}, -1), plain(n, {eta(k), xi(k)}, -1),
              integ(n - 1, {xi(j), xi(k), eta(j), eta(k)}, gn), plain(n, {})};
    if (f == "S" + s)
      return {plain(n, {eta(i), eta(j), xi(j)}, -1), plain(n, {eta(i), eta(k), xi(k)}, -1),
              integ(n - 1, {xi(j), xi(k), eta(i), eta(j), eta(k)}, gn), plain(n, {eta(i)})};
    if (f == "S~" + s) return {integ(n - 1, {xi(j), xi(i), eta(j)}), integ(n - 1, {xi(k), xi(i), eta(k)}, -1)};
    if (f == "I" + s) return {integ(n - 1, {xi(j), xi(k), eta(i)})};
  }
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      if (i == j) continue;
      int k = 6 - i - j;
      std::string s = "^{" + std::to_string(i) + std::to_string(j) + "}";
      if (f == "T" + s) return {plain(n, {eta(i), xi(j)}), integ(n - 1, {xi(k), xi(j), eta(k), eta(i)}, -gn)};
      if (i < j && f == "J" + s) return {tau(n + 1, {eta(i), eta(j)})};
      if (i < j && f == "J~" + s) return {integ(n - 1, {xi(i), xi(j)})};
    }
  FAIL("no symbol for ", f);
  return {};
}

// A basis vector as (xi mask, scale) with value scale(s) * t^s * xi_mask, s = m + mu.
struct BasisShape {
  std::uint32_t mask;
  std::function<GR(const GR&)> scale;
};

std::map<std::string, BasisShape> shapes(Algebra a) {
  auto one = [](const GR&) { return GR(1); };
  auto inv = [](const GR& s) { return s.inverse(); };
  auto minus_inv = [](const GR& s) { return -s.inverse(); };
  if (a == Algebra::K4hat)
    return {{"v^0", {0, one}}, {"v^1", {bit(1), one}}, {"v^2", {bit(2), one}}, {"v^3", {bit(1) | bit(2), inv}}};
  // vh^i = t^s / s xi_j xi_k for the cycle (i, j, k)
  return {{"v^1", {bit(1), one}},         {"v^2", {bit(2), one}},         {"v^3", {bit(3), one}},
          {"v^4", {0, one}},              {"vh^1", {bit(2) | bit(3), inv}}, {"vh^2", {bit(1) | bit(3), minus_inv}},
          {"vh^3", {bit(1) | bit(2), inv}}, {"vh^4", {bit(1) | bit(2) | bit(3), minus_inv}}};
}

ModuleVector oracle_action(Algebra a, const std::string& f, int n, const GR& mu, int label, int m) {
  auto sh = shapes(a);
  const auto& basis = module_basis(a);
  const BasisShape& src = sh.at(basis[static_cast<std::size_t>(label)]);
  GR s = GR(m) + mu;
  Func v;
  put(v, s, src.mask, src.scale(s));
  Func image = act(a == Algebra::K4hat ? k4hat_symbol(f, n) : ck6_symbol(f, n), v);
  ModuleVector out{a, mu, {}};
  for (const auto& [key, c] : image) {
    auto [e, mask] = key;
    GR shift = e - mu;
    REQUIRE(shift.is_real());
    REQUIRE(shift.re().get_den() == 1);
    int target_m = static_cast<int>(shift.re().get_num().get_si());
    bool found = false;
    for (std::size_t l = 0; l < basis.size(); ++l) {
      const BasisShape& t = sh.at(basis[l]);
      if (t.mask != mask) continue;
      out.add(static_cast<int>(l), target_m, c / t.scale(e));
      found = true;
    }
    REQUIRE(found);
  }
  return out;
}

}  // namespace

TEST_SUITE("realizations") {

TEST_CASE("module action derived from the symbols acting on V^mu") {
  for (Algebra a : {Algebra::K4hat, Algebra::CK6})
    for (const GR& mu : {q(1, 2), q(1, 3), q(-2, 5)})
      for (const auto& f : families(a))
        for (int n = -2; n <= 2; ++n)
          for (int l = 0; l < static_cast<int>(module_basis(a).size()); ++l)
            for (int m = -2; m <= 2; ++m) {
              INFO(algebra_name(a), " ", f.name, " n=", n, " on ", module_basis(a)[static_cast<std::size_t>(l)],
                   " m=", m, " mu=", mu.to_string());
              CHECK(module_action(a, f.name, n, basis_vector(a, mu, l, m)) == oracle_action(a, f.name, n, mu, l, m));
            }
}

}
