#include "doctest.h"
#include "oracles.hpp"

#include "superweyl/realizations.hpp"

#include <algorithm>
#include <set>

using namespace superweyl;
using oracle::q;

namespace {

int label_index(Algebra a, const std::string& label) {
  const auto& b = module_basis(a);
  auto it = std::find(b.begin(), b.end(), label);
  REQUIRE(it != b.end());
  return static_cast<int>(it - b.begin());
}

// One action rule: field(source_m) = c * [factor] * target_{m+n}.
struct Rule {
  std::string field;
  std::string source;
  std::string target;
  CoefKind kind;
  int c;
};

using K = CoefKind;

const std::vector<Rule> kK4Rules = {
    {"L", "v^0", "v^0", K::MMu, 1},       {"L", "v^1", "v^1", K::MMu, 1},
    {"L", "v^2", "v^2", K::MMu, 1},       {"L", "v^3", "v^3", K::NMMu, 1},
    {"X^1", "v^1", "v^0", K::MMu, 1},     {"X^2", "v^2", "v^0", K::MMu, 1},
    {"X^1", "v^3", "v^2", K::Const, 1},   {"X^2", "v^3", "v^1", K::Const, -1},
    {"Q", "v^3", "v^0", K::Const, -1},    {"Y^1", "v^0", "v^1", K::Const, 1},
    {"Y^2", "v^0", "v^2", K::Const, 1},   {"Y^1", "v^2", "v^3", K::NMMu, 1},
    {"Y^2", "v^1", "v^3", K::NMMu, -1},   {"R^{11}", "v^0", "v^0", K::Const, 1},
    {"R^{22}", "v^0", "v^0", K::Const, 1}, {"R^{11}", "v^2", "v^2", K::Const, 1},
    {"R^{22}", "v^1", "v^1", K::Const, 1}, {"R^{12}", "v^1", "v^2", K::Const, -1},
    {"R^{21}", "v^2", "v^1", K::Const, -1}, {"Z^1", "v^2", "v^0", K::Const, -1},
    {"Z^2", "v^1", "v^0", K::Const, 1},   {"G^0", "v^0", "v^3", K::Const, 1},
    {"G^1", "v^1", "v^3", K::Const, 1},   {"G^2", "v^2", "v^3", K::Const, 1},
    {"G^3", "v^0", "v^0", K::Const, 1},   {"G^3", "v^1", "v^1", K::Const, 1},
    {"G^3", "v^2", "v^2", K::Const, 1},   {"G^3", "v^3", "v^3", K::Const, 1},
};

// The cycle (1, 2, 3) at i = 1. G~^1 on v^2 lands in vh^3: an odd field
// must map the odd v^2 to an even vector.
const std::vector<Rule> kCk6Rules = {
    {"L", "v^1", "v^1", K::MMu, 1},          {"L", "v^2", "v^2", K::MMu, 1},
    {"L", "v^3", "v^3", K::MMu, 1},          {"L", "v^4", "v^4", K::MMu, 1},
    {"L", "vh^1", "vh^1", K::NMMu, 1},       {"L", "vh^2", "vh^2", K::NMMu, 1},
    {"L", "vh^3", "vh^3", K::NMMu, 1},       {"L", "vh^4", "vh^4", K::NMMu, 1},
    {"G^1", "v^1", "v^4", K::MMu, 1},        {"G^1", "vh^4", "vh^1", K::NMMu, -1},
    {"G^1", "vh^3", "v^2", K::Const, 1},     {"G^1", "vh^2", "v^3", K::Const, -1},
    {"G~^1", "v^4", "v^1", K::Const, 1},     {"G~^1", "vh^1", "vh^4", K::Const, -1},
    {"G~^1", "v^3", "vh^2", K::NMMu, -1},    {"G~^1", "v^2", "vh^3", K::MMu, 1},
    {"T^{12}", "v^1", "v^2", K::Const, -1},  {"T^{12}", "vh^2", "vh^1", K::Const, 1},
    {"T^1", "v^1", "v^1", K::Const, -1},     {"T^1", "v^4", "v^4", K::Const, -1},
    {"T^1", "vh^1", "vh^1", K::Const, 1},    {"T^1", "vh^4", "vh^4", K::Const, 1},
    {"S^1", "v^1", "v^4", K::Const, -1},     {"S^1", "vh^4", "vh^1", K::Const, -1},
    {"S~^1", "v^3", "vh^2", K::Const, -1},   {"S~^1", "v^2", "vh^3", K::Const, -1},
    {"I^1", "v^1", "vh^1", K::Const, 1},     {"I", "vh^4", "v^4", K::Const, 1},
    {"J^{12}", "vh^3", "v^4", K::Const, -1}, {"J^{12}", "vh^4", "v^3", K::Const, 1},
    {"J~^{12}", "v^4", "vh^3", K::Const, 1}, {"J~^{12}", "v^3", "vh^4", K::Const, -1},
};

GaussianRational factor(K kind, int n, int m, const GaussianRational& mu) {
  if (kind == K::MMu) return GaussianRational(m) + mu;
  if (kind == K::NMMu) return GaussianRational(n + m) + mu;
  return 1;
}

void check_rules(Algebra a, const std::vector<Rule>& rules) {
  std::set<std::string> fields;
  for (const auto& r : rules) fields.insert(r.field);
  for (const GaussianRational& mu : {q(1, 2), q(0), q(-7, 3)})
    for (const auto& f : fields)
      for (const auto& label : module_basis(a))
        for (int n = -2; n <= 2; ++n)
          for (int m = -2; m <= 2; ++m) {
            ModuleVector expected{a, mu, {}};
            for (const auto& r : rules)
              if (r.field == f && r.source == label)
                expected.add(label_index(a, r.target), m + n, GaussianRational(r.c) * factor(r.kind, n, m, mu));
            ModuleVector got = module_action(a, f, n, basis_vector(a, mu, label_index(a, label), m));
            INFO(f, " on ", label, " n=", n, " m=", m);
            CHECK(got == expected);
          }
}

// The matrix of a field acting on t^{m+mu} placed in the source slot; every
// entry t^a d^k with a - k = n contributes a falling factorial.
ModuleVector matrix_action(Algebra a, const std::string& f, int n, const GaussianRational& mu, int source, int m) {
  WeylMatrix x = field_matrix(a, f, n);
  ModuleVector out{a, mu, {}};
  for (int r = 0; r < x.size(); ++r)
    for (const auto& t : x(r, source).terms()) {
      REQUIRE(t.a - t.k == n);
      out.add(r, m + n, t.c * oracle::falling(GaussianRational(m) + mu, t.k));
    }
  return out;
}

}  // namespace

TEST_SUITE("realizations") {

TEST_CASE("family registry") {
  CHECK(families(Algebra::K2).size() == 4);
  CHECK(families(Algebra::K4hat).size() == 16);
  CHECK(families(Algebra::CK6).size() == 32);
  CHECK(algebra_rank(Algebra::CK6) == 3);
  CHECK(parse_algebra("k4HAT") == Algebra::K4hat);
  CHECK_THROWS_AS(parse_algebra("K8"), std::invalid_argument);
  CHECK_THROWS_AS(field_matrix(Algebra::K2, "Q", 0), std::invalid_argument);
  for (Algebra a : {Algebra::K2, Algebra::K4hat, Algebra::CK6})
    for (const auto& f : families(a))
      for (int n = -2; n <= 2; ++n) {
        WeylMatrix x = field_matrix(a, f.name, n);
        CHECK(x.respects_declared_parity());
        CHECK_FALSE(x.is_zero());
      }
}

TEST_CASE("K2 matrices") {
  WeylMatrix l0 = k2_field("L", 0);
  CHECK(l0(0, 0) == WeylElement::monomial(1, 1));
  CHECK(l0(1, 1) == WeylElement::monomial(1, 1));
  CHECK(l0(0, 1).is_zero());
  for (int n = -3; n <= 3; ++n) {
    WeylMatrix g = k2_field("G~", n);
    CHECK(g == WeylMatrix::elementary(1, 1, 1, 0, WeylElement::t(n)));
  }
}

TEST_CASE("K2 Virasoro by hand") {
  for (int n = -3; n <= 3; ++n)
    for (int m = -3; m <= 3; ++m)
      CHECK(superbracket(k2_field("L", n), k2_field("L", m)) == k2_field("L", n + m) * GaussianRational(m - n));
}

TEST_CASE("K4hat central element") {
  CHECK(k4hat_field("G^3", 0) == WeylMatrix::identity(2, 2));
  CHECK(k4hat_field("G^3", 2) == left_multiply(WeylElement::t(2), WeylMatrix::identity(2, 2)));
}

TEST_CASE("K4hat module action rules") { check_rules(Algebra::K4hat, kK4Rules); }

TEST_CASE("CK6 module action rules") { check_rules(Algebra::CK6, kCk6Rules); }

TEST_CASE("module action agrees with the matrices acting on t^(m+mu)") {
  for (Algebra a : {Algebra::K4hat, Algebra::CK6})
    for (const GaussianRational& mu : {q(1, 2), q(0), q(5, 3)})
      for (const auto& f : families(a))
        for (int n = -2; n <= 2; ++n)
          for (int s = 0; s < static_cast<int>(module_basis(a).size()); ++s)
            for (int m = -2; m <= 2; ++m) {
              INFO(f.name, " n=", n, " source=", s, " m=", m);
              CHECK(module_action(a, f.name, n, basis_vector(a, mu, s, m)) == matrix_action(a, f.name, n, mu, s, m));
            }
}

TEST_CASE("module parameter validation") {
  CHECK_THROWS_AS(module_action(Algebra::K4hat, "L", 0, basis_vector(Algebra::K4hat, q(1), 0, 0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(module_basis(Algebra::K2), std::invalid_argument);
  CHECK_THROWS_AS(module_action(Algebra::CK6, "L", 0, basis_vector(Algebra::K4hat, q(1, 2), 0, 0)),
                  std::invalid_argument);
}

TEST_CASE("odd sp generators through the fields") {
  for (Algebra a : {Algebra::K2, Algebra::K4hat, Algebra::CK6}) {
    auto ids = spo_in_fields(a);
    CHECK(ids.size() == static_cast<std::size_t>(4 * algebra_rank(a)));
    for (const auto& id : ids) {
      INFO(algebra_name(a), " ", id.label);
      CHECK(id.lhs == id.rhs);
    }
  }
}

TEST_CASE("sigma carries Poisson brackets to supermatrix brackets") {
  for (const auto& f : families(Algebra::K2))
    for (const auto& g : families(Algebra::K2))
      for (int n = -2; n <= 2; ++n)
        for (int k = -2; k <= 2; ++k) {
          SymbolElement b = poisson_bracket(field_symbol(Algebra::K2, f.name, n), field_symbol(Algebra::K2, g.name, k));
          INFO(f.name, n, " ", g.name, k);
          CHECK(sigma_k2(b) == superbracket(k2_field(f.name, n), k2_field(g.name, k)));
        }
  for (const auto& f : families(Algebra::K2))
    CHECK(sigma_k2(field_symbol(Algebra::K2, f.name, 1)) == k2_field(f.name, 1));
  CHECK_THROWS_AS(sigma_k2(SymbolElement::monomial(0, 2)), std::invalid_argument);
}

TEST_CASE("field symbols") {
  for (const auto& f : families(Algebra::K2))
    for (int n = -2; n <= 2; ++n) {
      SymbolElement s = field_symbol(Algebra::K2, f.name, n);
      for (const auto& [t, c] : s.terms()) CHECK(lie_degree(t) == 0);
    }
  for (Algebra a : {Algebra::K2, Algebra::K4hat, Algebra::CK6})
    for (const auto& f : families(a))
      for (int n = -2; n <= 2; ++n) {
        SymbolElement s = field_symbol(a, f.name, n);
        CHECK(s.parity() == (f.parity == Parity::Odd ? 1 : 0));
        CHECK(s.max_tau() <= 1);
      }
  CHECK(field_symbol(Algebra::K4hat, "G^3", 0) == SymbolElement(1));
}

}
